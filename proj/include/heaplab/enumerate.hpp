#ifndef HEAPLAB_ENUMERATE_HPP
#define HEAPLAB_ENUMERATE_HPP

#include <cstdint>
#include <functional>

#include "heaplab/heap.hpp"

namespace heaplab {

struct EnumerationSpec {
    StructurePtr structure;
    int max_vertices = 8;
    std::uint64_t max_heaps = 0;        // 0 = unlimited
    double time_budget_seconds = 0.0;   // 0 = unlimited
};

enum class EnumerationStatus { complete, heap_budget_exceeded, time_budget_exceeded };

/// Visits every heap over the structure with at most max_vertices vertices
/// exactly once, starting with the empty heap, in a fixed deterministic
/// order (depth first over factorization layer sequences). The visitor may
/// return false to stop early, which still reports a complete status.
EnumerationStatus enumerate_heaps(const EnumerationSpec& spec,
                                  const std::function<bool(const Heap&)>& visit);

std::uint64_t count_heaps(const StructurePtr& structure, int max_vertices);

} // namespace heaplab

#endif
