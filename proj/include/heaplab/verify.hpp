#ifndef HEAPLAB_VERIFY_HPP
#define HEAPLAB_VERIFY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "heaplab/boundary.hpp"
#include "heaplab/enumerate.hpp"

namespace heaplab {

struct VerificationReport {
    std::string suite;
    std::string structure_signature;
    int max_vertices = 0;
    std::string status;                               // enumeration status
    std::vector<std::uint64_t> heaps_by_size;         // index = vertex count
    std::map<std::string, std::uint64_t> counters;
    std::map<std::string, std::string> notes;

    struct Violation {
        std::string word;       // canonical word of the offending heap
        std::string detail;
    };
    std::vector<Violation> violations;
    double wall_ms = 0.0;

    bool passed() const { return violations.empty(); }
    /// Canonical JSON: key-sorted, and without timing unless requested, so
    /// identical runs serialize byte-identically.
    nlohmann::json to_json(bool include_timing = false) const;
    std::string text_summary() const;
};

/// Checks, for every enumerated heap, the implications that hold over any
/// structure: strongly acyclic implies P2, and P1 implies acyclic.
VerificationReport check_universal_implications(const EnumerationSpec& spec,
                                                const FieldChoice& field = FieldChoice::rationals());

/// Classifies the structure first. For a regular structure, checks on every
/// enumerated heap that P2 and strong acyclicity coincide, that P2 implies
/// P1, that P1 implies acyclicity, and that every deletion from a P2 heap
/// reduces with no delta factor. Acyclic heaps without P1 exist over most
/// regular structures (e.g. at 6 vertices on the 4-piece path), so that
/// converse is only counted, never flagged. For a non-regular structure,
/// finds a P2-but-not-P1 heap within the bound, or failing that verifies
/// the constructed witness for each non-regular component.
VerificationReport check_regularity(const EnumerationSpec& spec,
                                    const FieldChoice& field = FieldChoice::rationals());

/// Checks dim ker of each enumerated heap against delta exponent plus
/// dim ker of its reduced P2 heap.
VerificationReport check_kernel_identity(const EnumerationSpec& spec,
                                         const FieldChoice& field = FieldChoice::rationals());

/// Dispatch by suite name: "universal", "regularity" or "kernel".
VerificationReport run_suite(const std::string& name, const EnumerationSpec& spec,
                             const FieldChoice& field = FieldChoice::rationals());

} // namespace heaplab

#endif
