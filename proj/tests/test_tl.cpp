#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "heaplab/boundary.hpp"
#include "heaplab/families.hpp"
#include "heaplab/tl.hpp"

using namespace heaplab;

namespace {

Heap w(const StructurePtr& s, std::string_view word) { return Heap::from_word(s, word); }

Heap random_heap(std::mt19937_64& rng, const StructurePtr& s, int len) {
    std::uniform_int_distribution<int> pick(0, s->piece_count() - 1);
    std::vector<int> letters;
    for (int i = 0; i < len; ++i) letters.push_back(pick(rng));
    return Heap::from_letters(s, letters);
}

} // namespace

TEST_CASE("generator relations") {
    auto s = make_path(3);
    TLMonomial ss = tl_reduce(w(s, "2 2"));
    CHECK(ss.delta_exponent == 1);
    CHECK(ss.heap == w(s, "2"));
    CHECK(ss.to_string() == "delta^1 * (2)");

    TLMonomial sts = tl_reduce(w(s, "1 2 1"));
    CHECK(sts.delta_exponent == 0);
    CHECK(sts.heap == w(s, "1"));
    CHECK(sts.to_string() == "delta^0 * (1)");
}

TEST_CASE("normal form of the five letter example") {
    auto s = make_path(3);
    TLMonomial m = tl_reduce(w(s, "1 3 2 1 3"));
    CHECK(m.delta_exponent == 1);
    CHECK(m.heap == w(s, "1 3"));
    CHECK(m.to_string() == "delta^1 * (1 3)");
    CHECK(tl_reduce(w(s, "")).to_string() == "delta^0 * 1");
}

TEST_CASE("a P2 heap is already in normal form") {
    auto s = make_path(3);
    for (auto word : {"", "2", "1 3", "2 1 3 2", "1 2 3"}) {
        TLMonomial m = tl_reduce(w(s, word));
        CHECK(m.delta_exponent == 0);
        CHECK(m.heap == w(s, word));
        CHECK(in_monomial_basis(m.heap));
        CHECK(is_basis_monomial(m));
    }
    CHECK(!is_basis_monomial(tl_reduce(w(s, "2 2"))));
    CHECK(!in_monomial_basis(w(s, "2 2")));
}

TEST_CASE("reduction invariants on random heaps") {
    std::mt19937_64 rng(23);
    for (const auto& st : {make_path(3), make_cycle(4), make_diamond(), make_affine_e6()})
        for (int round = 0; round < 80; ++round) {
            Heap e = random_heap(rng, st, 10);
            TLMonomial m = tl_reduce(e);
            CHECK(has_p2(m.heap));
            CHECK(m.delta_exponent >= 0);
            // every delta came from a 2-chain (one vertex), every other step
            // removed two vertices
            CHECK((e.size() - m.heap.size() - m.delta_exponent) % 2 == 0);
            CHECK(e.size() - m.heap.size() >= m.delta_exponent);
        }
}

TEST_CASE("randomized rule order reaches the same normal form") {
    std::mt19937_64 rng(29);
    for (const auto& st : {make_path(3), make_cycle(4), make_affine_e6()})
        for (int round = 0; round < 60; ++round) {
            Heap e = random_heap(rng, st, 10);
            TLMonomial ref = tl_reduce(e);
            for (int k = 0; k < 4; ++k) {
                TLMonomial alt = tl_reduce_randomized(e, rng);
                CHECK(alt.delta_exponent == ref.delta_exponent);
                CHECK(alt.heap == ref.heap);
            }
        }
}

TEST_CASE("deletion test over a path keeps every deletion in the basis") {
    auto s = make_path(3);
    Heap e = w(s, "2 1 3 2");
    auto entries = deletion_test(e);
    REQUIRE(entries.size() == 4);
    for (const auto& en : entries) {
        CHECK(en.delta_exponent == 0);
        CHECK(en.basis);
    }
    CHECK_THROWS_AS(deletion_test(w(s, "2 2")), std::invalid_argument);
}

TEST_CASE("deletion test detects a non basis deletion") {
    Heap e = w(make_diamond(), "1 3 2 4 1 3");
    REQUIRE(has_p2(e));
    auto entries = deletion_test(e);
    REQUIRE(entries.size() == 6);
    // deleting the 4 leaves two balanced chains through the middle 2
    const auto& mid = entries[3];
    CHECK(mid.vertex == 3);
    CHECK(mid.delta_exponent == 1);
    CHECK(mid.reduced_word == "1 3");
    CHECK(!mid.basis);
}

TEST_CASE("kernel dimension matches the normal form") {
    std::mt19937_64 rng(31);
    for (const auto& st : {make_path(3), make_cycle(4)})
        for (int round = 0; round < 40; ++round) {
            Heap e = random_heap(rng, st, 8);
            TLMonomial m = tl_reduce(e);
            CHECK(kernel_dim(e, FieldChoice::rationals()) ==
                  m.delta_exponent + kernel_dim(m.heap, FieldChoice::rationals()));
        }
}
