#ifndef HEAPLAB_BOUNDARY_HPP
#define HEAPLAB_BOUNDARY_HPP

#include <utility>
#include <vector>

#include "heaplab/heap.hpp"

namespace heaplab {

/// Coefficient field for rank computations: characteristic 0 (exact
/// integer elimination) or a prime field.
class FieldChoice {
public:
    static FieldChoice rationals() { return FieldChoice(0); }
    static FieldChoice prime(int p);

    int characteristic() const { return char_; }
    bool is_rational() const { return char_ == 0; }

private:
    explicit FieldChoice(int c) : char_(c) {}
    int char_;
};

/// The boundary map of a heap. Generators of the source are the
/// consecutive equally labelled pairs (x, y): x < y, same label, no equally
/// labelled vertex strictly between. The x-th column has a unit entry at
/// every w with x < w < y whose label is concurrent to the ends' label.
struct BoundaryMap {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;   // sorted lexicographically
    std::vector<std::vector<int>> columns;    // supports, ascending vertex ids

    /// Dense vertex_count x edges matrix of 0/1 entries.
    std::vector<std::vector<long long>> dense() const;
};

BoundaryMap boundary_map(const Heap& e);

/// Rank over the exact integers (fraction-free Bareiss elimination).
/// Throws std::overflow_error if intermediate values leave the safe range.
int rank_exact(std::vector<std::vector<long long>> m);
/// Rank over the field with p elements.
int rank_mod_p(std::vector<std::vector<long long>> m, int p);

int rank(const BoundaryMap& d, const FieldChoice& field);
int kernel_dim(const BoundaryMap& d, const FieldChoice& field);
int kernel_dim(const Heap& e, const FieldChoice& field = FieldChoice::rationals());

/// ker = 0 for the boundary map of e.
bool is_acyclic(const Heap& e, const FieldChoice& field = FieldChoice::rationals());
/// Acyclic, and still acyclic after deleting any single vertex.
bool is_strongly_acyclic(const Heap& e, const FieldChoice& field = FieldChoice::rationals());

} // namespace heaplab

#endif
