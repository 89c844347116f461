#ifndef HEAPLAB_PROPS_HPP
#define HEAPLAB_PROPS_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "heaplab/heap.hpp"

namespace heaplab {

struct DescentSets {
    std::vector<int> left;   // minimal vertices
    std::vector<int> right;  // maximal vertices
};

DescentSets descents(const Heap& e);

/// A chain x1 < x2 < ... < xt as canonical vertex ids.
using Chain = std::vector<int>;

/// All balanced convex chains of lengths 2 and 3, sorted lexicographically
/// by vertex sequence. Length 2: equal end labels, empty open interval.
/// Length 3: equal end labels, a differently labelled middle vertex that is
/// the entire open interval.
std::vector<Chain> balanced_convex_chains(const Heap& e);

/// No balanced convex chain of length 2 or 3; equivalently, the open
/// interval between any two equally labelled comparable vertices contains
/// at least two vertices.
bool has_p2(const Heap& e);

/// Removes x2..xt of a balanced convex chain, i.e. keeps everything except
/// the chain's tail. Throws std::invalid_argument unless `chain` really is
/// a balanced convex chain of length >= 2 in `e`.
Heap contract(const Heap& e, const Chain& chain);

enum class Exposure : unsigned { none = 0, plus = 1, minus = 2, both = 3 };

/// Whether deleting v uncovers a new extremal vertex with a different
/// label: `plus` requires v maximal and a new maximal vertex in E - v,
/// `minus` requires v minimal and a new minimal vertex.
Exposure exposes(const Heap& e, int v);

/// Shared memo for dismantlability searches, keyed by Heap::key(). Owned
/// by the caller (no global state) and only valid for heaps over a single
/// structure.
struct P1Cache {
    std::unordered_map<std::string, bool> known;
};

/// Dismantlability: some sequence of exposing single-vertex deletions
/// reaches a trivial heap.
bool has_p1(const Heap& e);
bool has_p1(const Heap& e, P1Cache& cache);

struct P1Result {
    bool dismantlable = false;
    /// Vertex removed at each step, numbered in the heap from which it is
    /// removed (heaps are recanonicalized between steps). The sequence ends
    /// as soon as a trivial heap is reached, so it may be empty.
    std::vector<int> removals;
};

/// As has_p1, but returns a replayable removal sequence as certificate.
P1Result p1_search(const Heap& e);

} // namespace heaplab

#endif
