#ifndef HEAPLAB_TL_HPP
#define HEAPLAB_TL_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "heaplab/props.hpp"

namespace heaplab {

/// A scaled heap monomial delta^m * E in the quotient algebra where a heap
/// equals delta times its contraction along a balanced convex 2-chain, and
/// equals its contraction along a balanced convex 3-chain whose middle
/// vertex is labelled differently.
struct TLMonomial {
    long long delta_exponent = 0;
    Heap heap;

    /// e.g. "delta^1 * (1 3)"; the empty heap renders as "1".
    std::string to_string() const;
};

/// Rewrites to the unique normal form delta^m * G with G a P2 heap. Applies
/// the first balanced convex 2-chain in lexicographic vertex order, else
/// the first admissible 3-chain, until none remain.
TLMonomial tl_reduce(const Heap& e);

/// Same normal form via uniformly random rule choices; used to exercise
/// confluence.
TLMonomial tl_reduce_randomized(const Heap& e, std::mt19937_64& rng);

/// Whether a heap represents a monomial basis element of the quotient
/// (exactly the P2 heaps).
bool in_monomial_basis(const Heap& e);
/// Whether a scaled monomial is itself a basis element: no delta factor and
/// a P2 heap.
bool is_basis_monomial(const TLMonomial& m);

struct DeletionEntry {
    int vertex = 0;                 // deleted vertex, canonical id in the input heap
    long long delta_exponent = 0;   // m in the normal form of the deletion
    std::string reduced_word;       // canonical word of the reduced heap
    bool basis = false;             // delta_exponent == 0
};

/// Reduces every single-vertex deletion E(a) of a P2 heap to normal form.
/// Throws std::invalid_argument if `e` lacks P2.
std::vector<DeletionEntry> deletion_test(const Heap& e);

} // namespace heaplab

#endif
