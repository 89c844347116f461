#include "heaplab/verify.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "heaplab/classify.hpp"
#include "heaplab/props.hpp"
#include "heaplab/tl.hpp"

namespace heaplab {

namespace {

const char* status_name(EnumerationStatus s) {
    switch (s) {
        case EnumerationStatus::complete: return "complete";
        case EnumerationStatus::heap_budget_exceeded: return "heap_budget_exceeded";
        case EnumerationStatus::time_budget_exceeded: return "time_budget_exceeded";
    }
    return "unknown";
}

struct SuiteRun {
    VerificationReport report;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    SuiteRun(const std::string& suite, const EnumerationSpec& spec) {
        report.suite = suite;
        report.structure_signature = spec.structure->signature();
        report.max_vertices = spec.max_vertices;
        report.heaps_by_size.assign(static_cast<std::size_t>(std::max(spec.max_vertices, 0)) + 1, 0);
    }

    void saw(const Heap& h) {
        ++report.counters["heaps"];
        ++report.heaps_by_size[static_cast<std::size_t>(h.size())];
    }

    void violation(const Heap& h, const std::string& detail) {
        if (report.violations.size() < 100)
            report.violations.push_back({h.canonical_word(), detail});
        ++report.counters["violations"];
    }

    VerificationReport finish(EnumerationStatus status) {
        report.status = status_name(status);
        std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - started;
        report.wall_ms = elapsed.count();
        return std::move(report);
    }
};

} // namespace

nlohmann::json VerificationReport::to_json(bool include_timing) const {
    nlohmann::json j;
    j["suite"] = suite;
    j["structure"] = structure_signature;
    j["max_vertices"] = max_vertices;
    j["status"] = status;
    j["passed"] = passed();
    j["heaps_by_size"] = heaps_by_size;
    j["counters"] = counters;
    j["notes"] = notes;
    auto vs = nlohmann::json::array();
    for (const auto& v : violations) vs.push_back({{"word", v.word}, {"detail", v.detail}});
    j["violations"] = vs;
    if (include_timing) j["wall_ms"] = wall_ms;
    return j;
}

std::string VerificationReport::text_summary() const {
    std::ostringstream os;
    os << "suite " << suite << ": " << (passed() ? "pass" : "FAIL") << " [" << status << "] heaps="
       << (counters.count("heaps") ? counters.at("heaps") : 0);
    for (const auto& [k, v] : counters)
        if (k != "heaps") os << ' ' << k << '=' << v;
    for (const auto& [k, v] : notes) os << ' ' << k << '=' << v;
    for (const auto& v : violations) os << "\n  violation: " << v.detail << " [" << v.word << "]";
    os << '\n';
    return os.str();
}

VerificationReport check_universal_implications(const EnumerationSpec& spec, const FieldChoice& field) {
    SuiteRun run("universal", spec);
    P1Cache p1_cache;
    EnumerationStatus status = enumerate_heaps(spec, [&](const Heap& h) {
        run.saw(h);
        const bool p2 = has_p2(h);
        const bool p1 = has_p1(h, p1_cache);
        const bool ac = is_acyclic(h, field);
        const bool sa = ac && is_strongly_acyclic(h, field);
        if (p2) ++run.report.counters["p2_heaps"];
        if (p1) ++run.report.counters["p1_heaps"];
        if (ac) ++run.report.counters["acyclic_heaps"];
        if (sa) ++run.report.counters["strongly_acyclic_heaps"];
        if (sa && !p2) run.violation(h, "strongly acyclic heap without P2");
        if (p1 && !ac) run.violation(h, "P1 heap that is not acyclic");
        return true;
    });
    return run.finish(status);
}

VerificationReport check_regularity(const EnumerationSpec& spec, const FieldChoice& field) {
    SuiteRun run("regularity", spec);
    auto classified = classify(spec.structure);
    {
        std::ostringstream os;
        for (std::size_t i = 0; i < classified.size(); ++i) {
            if (i) os << ' ';
            os << classified[i].tag.to_string();
        }
        run.report.notes["classification"] = os.str();
    }
    const bool regular = has_property_r(spec.structure);
    run.report.notes["property_r"] = regular ? "true" : "false";

    if (regular) {
        P1Cache p1_cache;
        EnumerationStatus status = enumerate_heaps(spec, [&](const Heap& h) {
            run.saw(h);
            const bool p2 = has_p2(h);
            const bool p1 = has_p1(h, p1_cache);
            const bool ac = is_acyclic(h, field);
            const bool sa = ac && is_strongly_acyclic(h, field);
            if (p2) ++run.report.counters["p2_heaps"];
            if (p2 && !p1) run.violation(h, "P2 heap without P1 over a regular structure");
            if (p2 != sa) run.violation(h, p2 ? "P2 heap that is not strongly acyclic"
                                              : "strongly acyclic heap without P2");
            if (p1 && !ac) run.violation(h, "P1 heap that is not acyclic");
            // Acyclicity does not imply P1, not even over regular structures
            // (smallest examples appear at 6 vertices on the 4-piece path).
            // Record the count; it is data, not a failure.
            if (ac && !p1) ++run.report.counters["acyclic_not_p1_heaps"];
            if (p2) {
                for (const auto& entry : deletion_test(h))
                    if (!entry.basis) {
                        std::ostringstream os;
                        os << "deletion of vertex " << entry.vertex << " reduced to delta^"
                           << entry.delta_exponent << " * (" << entry.reduced_word << ")";
                        run.violation(h, os.str());
                        break;
                    }
            }
            return true;
        });
        return run.finish(status);
    }

    P1Cache p1_cache;
    bool found = false;
    EnumerationStatus status = enumerate_heaps(spec, [&](const Heap& h) {
        run.saw(h);
        if (has_p2(h)) {
            ++run.report.counters["p2_heaps"];
            if (!has_p1(h, p1_cache)) {
                found = true;
                run.report.notes["found_p2_not_p1"] = h.canonical_word();
                if (!has_p2(h.doubled()))
                    run.violation(h, "P2 heap without P1 whose double lacks P2");
                return false;
            }
        }
        return true;
    });
    if (!found) {
        for (const auto& c : classified) {
            if (c.tag.is_regular()) continue;
            try {
                Witness w = nonregular_witness(spec.structure, c.component, c.tag);
                ++run.report.counters["witnesses_verified"];
                run.report.notes["witness_" + c.tag.to_string()] = w.word();
            } catch (const std::exception& ex) {
                run.report.violations.push_back({"", std::string("witness construction failed: ") + ex.what()});
                ++run.report.counters["violations"];
            }
        }
        if (run.report.counters["witnesses_verified"] == 0 && run.report.passed())
            run.report.violations.push_back(
                {"", "non-regular structure but no witness found or constructed"});
    }
    return run.finish(status);
}

VerificationReport check_kernel_identity(const EnumerationSpec& spec, const FieldChoice& field) {
    SuiteRun run("kernel", spec);
    EnumerationStatus status = enumerate_heaps(spec, [&](const Heap& h) {
        run.saw(h);
        TLMonomial nf = tl_reduce(h);
        const int lhs = kernel_dim(h, field);
        const int rhs = static_cast<int>(nf.delta_exponent) + kernel_dim(nf.heap, field);
        auto& max_m = run.report.counters["max_delta_exponent"];
        max_m = std::max<std::uint64_t>(max_m, static_cast<std::uint64_t>(nf.delta_exponent));
        if (lhs != rhs) {
            std::ostringstream os;
            os << "dim ker = " << lhs << " but normal form gives " << nf.delta_exponent << " + "
               << kernel_dim(nf.heap, field) << " (" << nf.to_string() << ")";
            run.violation(h, os.str());
        }
        return true;
    });
    return run.finish(status);
}

VerificationReport run_suite(const std::string& name, const EnumerationSpec& spec, const FieldChoice& field) {
    if (name == "universal") return check_universal_implications(spec, field);
    if (name == "regularity") return check_regularity(spec, field);
    if (name == "kernel") return check_kernel_identity(spec, field);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

} // namespace heaplab
