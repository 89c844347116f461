#include "doctest.h"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "heaplab/boundary.hpp"
#include "heaplab/families.hpp"

using namespace heaplab;

namespace {

Heap w(const StructurePtr& s, std::string_view word) { return Heap::from_word(s, word); }

Heap random_heap(std::mt19937_64& rng, const StructurePtr& s, int len) {
    std::uniform_int_distribution<int> pick(0, s->piece_count() - 1);
    std::vector<int> letters;
    for (int i = 0; i < len; ++i) letters.push_back(pick(rng));
    return Heap::from_letters(s, letters);
}

// independent rank oracle over GF(2), rows as bitmasks
int rank_gf2(const std::vector<std::vector<long long>>& m) {
    std::vector<std::uint64_t> rows;
    for (const auto& r : m) {
        std::uint64_t bits = 0;
        for (std::size_t j = 0; j < r.size(); ++j)
            if (r[j] & 1) bits |= std::uint64_t(1) << j;
        rows.push_back(bits);
    }
    int rank = 0;
    for (int col = 0; col < 64; ++col) {
        std::uint64_t mask = std::uint64_t(1) << col;
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < rows.size() && !(rows[pivot] & mask)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != static_cast<std::size_t>(rank) && (rows[i] & mask))
                rows[i] ^= rows[static_cast<std::size_t>(rank)];
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("field choice validation") {
    CHECK(FieldChoice::rationals().characteristic() == 0);
    CHECK(FieldChoice::rationals().is_rational());
    CHECK(FieldChoice::prime(2).characteristic() == 2);
    CHECK(FieldChoice::prime(97).characteristic() == 97);
    CHECK_THROWS_AS(FieldChoice::prime(1), std::invalid_argument);
    CHECK_THROWS_AS(FieldChoice::prime(4), std::invalid_argument);
    CHECK_THROWS_AS(FieldChoice::prime(-3), std::invalid_argument);
}

TEST_CASE("boundary map of the five letter example") {
    auto s = make_path(3);
    BoundaryMap d = boundary_map(w(s, "1 3 2 1 3"));
    CHECK(d.vertex_count == 5);
    CHECK(d.edges == std::vector<std::pair<int, int>>{{0, 3}, {1, 4}});
    CHECK(d.columns == std::vector<std::vector<int>>{{2}, {2}});
    // two equal columns: one dimensional kernel, so not acyclic
    CHECK(kernel_dim(d, FieldChoice::rationals()) == 1);
    CHECK(!is_acyclic(w(s, "1 3 2 1 3")));

    auto m = d.dense();
    REQUIRE(m.size() == 5);
    REQUIRE(m[0].size() == 2);
    CHECK(m[2] == std::vector<long long>{1, 1});
    CHECK(m[0] == std::vector<long long>{0, 0});
}

TEST_CASE("small boundary map cases") {
    auto s = make_path(3);
    CHECK(boundary_map(w(s, "1 3")).edges.empty());
    CHECK(is_acyclic(w(s, "")));
    CHECK(is_strongly_acyclic(w(s, "1 3")));

    // one edge whose column is the indicator of the middle vertex
    BoundaryMap d = boundary_map(w(s, "1 2 1"));
    CHECK(d.edges == std::vector<std::pair<int, int>>{{0, 2}});
    CHECK(d.columns == std::vector<std::vector<int>>{{1}});
    CHECK(is_acyclic(w(s, "1 2 1")));

    // deleting the middle vertex leaves an edge with an empty interval
    CHECK(!is_strongly_acyclic(w(s, "1 2 1")));
    CHECK(!is_acyclic(w(s, "1 1")));

    // edges only span consecutive equal labels: no (0,4) pair here
    CHECK(boundary_map(w(s, "1 2 1 2 1")).edges ==
          std::vector<std::pair<int, int>>{{0, 2}, {1, 3}, {2, 4}});
}

TEST_CASE("strong acyclicity checks every single deletion") {
    auto s = make_path(3);
    CHECK(is_strongly_acyclic(w(s, "2 1 3 2")));
    CHECK(is_strongly_acyclic(w(s, "")));
    CHECK(is_strongly_acyclic(w(s, "2")));
}

TEST_CASE("rank agrees across fields and implementations") {
    std::mt19937_64 rng(17);
    for (const auto& st : {make_path(3), make_cycle(4), make_diamond(), make_affine_e6()})
        for (int round = 0; round < 60; ++round) {
            Heap e = random_heap(rng, st, 9);
            BoundaryMap d = boundary_map(e);
            auto m = d.dense();
            int r0 = rank_exact(m);
            CHECK(r0 == rank_gf2(m));
            CHECK(r0 == rank_mod_p(m, 2));
            CHECK(r0 == rank_mod_p(m, 1000003));
            CHECK(kernel_dim(d, FieldChoice::rationals()) ==
                  static_cast<int>(d.edges.size()) - r0);
            CHECK(kernel_dim(e, FieldChoice::rationals()) ==
                  kernel_dim(e, FieldChoice::prime(2)));
        }
}

TEST_CASE("columns live inside their edge interval") {
    std::mt19937_64 rng(19);
    for (const auto& st : {make_cycle(5), make_paw()})
        for (int round = 0; round < 60; ++round) {
            Heap e = random_heap(rng, st, 8);
            BoundaryMap d = boundary_map(e);
            for (std::size_t j = 0; j < d.edges.size(); ++j) {
                auto [x, y] = d.edges[j];
                CHECK(e.label(x) == e.label(y));
                CHECK(e.less(x, y));
                for (int v : d.columns[j]) {
                    CHECK(e.less(x, v));
                    CHECK(e.less(v, y));
                    CHECK(e.structure()->concurrent(e.label(v), e.label(x)));
                }
            }
        }
}
