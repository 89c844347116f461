#ifndef HEAPLAB_FAMILIES_HPP
#define HEAPLAB_FAMILIES_HPP

#include "heaplab/structure.hpp"

namespace heaplab {

/// Path with pieces "1".."n" and edges between consecutive numbers.
StructurePtr make_path(int n);
/// Complete graph on pieces "1".."n".
StructurePtr make_complete(int n);
/// Cycle g1 - g2 - ... - gn - g1 (n >= 3).
StructurePtr make_cycle(int n);
/// Star: center "c" adjacent to leaves "x1".."xk".
StructurePtr make_star(int leaves);
/// Tree with one valency-3 vertex "c" and arms of lengths p, q, r >= 1,
/// named "a1..", "b1..", "d1.." outward from the center.
StructurePtr make_gamma(int p, int q, int r);
/// The 7-vertex tree with branch point c, neighbours b, d, f, and outer
/// vertices a, e, g attached to b, d, f respectively.
StructurePtr make_affine_e6();
/// K4 minus the edge between pieces "1" and "3".
StructurePtr make_diamond();
/// Triangle on pieces "6", "7", "8" with "5" pendant on "6".
StructurePtr make_paw();

} // namespace heaplab

#endif
