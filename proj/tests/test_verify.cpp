#include "doctest.h"

#include <stdexcept>

#include "heaplab/boundary.hpp"
#include "heaplab/families.hpp"
#include "heaplab/props.hpp"
#include "heaplab/verify.hpp"

using namespace heaplab;

namespace {

EnumerationSpec spec_for(const StructurePtr& s, int max_vertices) {
    EnumerationSpec spec;
    spec.structure = s;
    spec.max_vertices = max_vertices;
    return spec;
}

} // namespace

TEST_CASE("universal suite over the three piece path") {
    auto r = check_universal_implications(spec_for(make_path(3), 5));
    CHECK(r.passed());
    CHECK(r.status == "complete");
    CHECK(r.counters.at("heaps") == 232);
    CHECK(r.heaps_by_size == std::vector<std::uint64_t>{1, 3, 8, 21, 55, 144});
    CHECK(r.counters.at("p2_heaps") == r.counters.at("strongly_acyclic_heaps"));
    CHECK(r.counters.at("p1_heaps") == r.counters.at("acyclic_heaps"));
}

TEST_CASE("regularity suite on a regular structure") {
    auto r = check_regularity(spec_for(make_path(3), 5));
    CHECK(r.passed());
    CHECK(r.notes.at("classification") == "A3");
    CHECK(r.notes.at("property_r") == "true");
    CHECK(r.counters.at("heaps") == 232);
}

TEST_CASE("acyclicity does not imply P1, even over a regular structure") {
    auto s = make_path(4);
    Heap h = Heap::from_word(s, "1 3 2 3 2 4");
    CHECK(h.size() == 6);
    CHECK(is_acyclic(h));
    CHECK_FALSE(has_p1(h));
    CHECK_FALSE(has_p2(h));

    // The regularity suite records such heaps without flagging them: the
    // suite's assertions start from P2 or P1, never from acyclicity alone.
    auto r = check_regularity(spec_for(s, 8));
    CHECK(r.passed());
    CHECK(r.notes.at("classification") == "A4");
    CHECK(r.counters.at("acyclic_not_p1_heaps") == 40);
    auto r5 = check_regularity(spec_for(s, 5));
    CHECK(r5.passed());
    CHECK(r5.counters.count("acyclic_not_p1_heaps") == 0);
}

TEST_CASE("regularity suite finds a P2 heap without P1") {
    auto r = check_regularity(spec_for(make_cycle(4), 4));
    CHECK(r.passed());
    CHECK(r.notes.at("property_r") == "false");
    CHECK(r.notes.at("found_p2_not_p1") == "g1 g3 g2 g4");
}

TEST_CASE("regularity suite falls back to a constructed witness") {
    auto r = check_regularity(spec_for(make_cycle(4), 3));
    CHECK(r.passed());
    CHECK(r.counters.at("witnesses_verified") == 1);
    CHECK(r.notes.at("witness_NonR(even_cycle)") == "g1 g3 g2 g4");
}

TEST_CASE("kernel suite over small structures") {
    for (const auto& s : {make_path(3), make_cycle(4)}) {
        auto r = check_kernel_identity(spec_for(s, 5));
        CHECK(r.passed());
        CHECK(r.counters.count("max_delta_exponent") == 1);
    }
}

TEST_CASE("suite dispatch") {
    auto spec = spec_for(make_path(2), 3);
    CHECK(run_suite("universal", spec).suite == "universal");
    CHECK(run_suite("regularity", spec).suite == "regularity");
    CHECK(run_suite("kernel", spec).suite == "kernel");
    CHECK_THROWS_AS(run_suite("nope", spec), std::invalid_argument);
}

TEST_CASE("reports serialize canonically") {
    auto r = check_universal_implications(spec_for(make_path(3), 4));
    auto j = r.to_json();
    CHECK(j["suite"] == "universal");
    CHECK(j["passed"] == true);
    CHECK(j["structure"] == "pieces[1 2 3] conc[1-2 2-3]");
    CHECK(j["heaps_by_size"] == std::vector<std::uint64_t>{1, 3, 8, 21, 55});
    CHECK(!j.contains("wall_ms"));
    CHECK(r.to_json(true).contains("wall_ms"));
    // identical runs serialize byte for byte
    auto again = check_universal_implications(spec_for(make_path(3), 4));
    CHECK(j.dump() == again.to_json().dump());
}

TEST_CASE("violations flip a report to failing") {
    VerificationReport r;
    r.suite = "universal";
    r.status = "complete";
    CHECK(r.passed());
    r.violations.push_back({"1 1", "example defect"});
    CHECK(!r.passed());
    CHECK(r.text_summary().find("FAIL") != std::string::npos);
    CHECK(r.text_summary().find("example defect") != std::string::npos);
    auto j = r.to_json();
    CHECK(j["passed"] == false);
    CHECK(j["violations"].size() == 1);
    CHECK(j["violations"][0]["word"] == "1 1");
}
