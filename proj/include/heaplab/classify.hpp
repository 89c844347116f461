#ifndef HEAPLAB_CLASSIFY_HPP
#define HEAPLAB_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "heaplab/heap.hpp"
#include "heaplab/structure.hpp"

namespace heaplab {

enum class Family { path_a, complete, type_d, type_e, affine_a, affine_e6, non_r };

enum class NonRReason {
    triangle_incomplete,      // contains a triangle but is not complete
    even_cycle,               // is a cycle with an even number of pieces
    circuit_not_pure_cycle,   // contains a circuit but is not a cycle
    two_branch_points,        // tree with two or more branch points
    valency_ge_4,             // tree with a vertex of valency >= 4
    contains_gamma_1_3_3,     // tree, one branch point, second arm length >= 3
    contains_gamma_2_2_3,     // tree, one branch point, arms 2, 2, >= 3
};

std::string to_string(NonRReason reason);

struct FamilyTag {
    Family family = Family::non_r;
    int nodes = 0;
    std::optional<NonRReason> reason;

    bool is_regular() const { return family != Family::non_r; }
    /// "A3", "K4", "D5", "E6", "AffineA4" (a 5-cycle), "AffineE6",
    /// "NonR(even_cycle)".
    std::string to_string() const;
};

struct Component {
    std::vector<int> pieces;   // parent piece indices, ascending
    StructurePtr structure;    // induced structure, parent names
};

/// Components of the concurrency graph, ordered by smallest piece index.
std::vector<Component> connected_components(const StructurePtr& s);

/// Classifies a nonempty connected structure.
FamilyTag classify_component(const ConcurrencyStructure& s);

struct ClassifiedComponent {
    Component component;
    FamilyTag tag;
};

std::vector<ClassifiedComponent> classify(const StructurePtr& s);

/// Every component regular.
bool has_property_r(const StructurePtr& s);

/// A concrete heap with property P2 but not P1, as factor layers of piece
/// names together with the realized heap over the full structure.
struct Witness {
    std::vector<std::vector<std::string>> layers;
    Heap heap;

    std::string word() const;
};

/// Builds and verifies a witness for a non-regular component; the shape of
/// the construction depends on tag.reason. Throws std::invalid_argument for
/// regular tags and std::logic_error if the constructed heap fails the
/// P2-and-not-P1 verification.
Witness nonregular_witness(const StructurePtr& full, const Component& comp, const FamilyTag& tag);

} // namespace heaplab

#endif
