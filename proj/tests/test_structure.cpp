#include "doctest.h"

#include <stdexcept>

#include "heaplab/families.hpp"
#include "heaplab/structure.hpp"

using namespace heaplab;

TEST_CASE("natural order on piece names") {
    CHECK(natural_less("2", "10"));
    CHECK(!natural_less("10", "2"));
    CHECK(natural_less("g2", "g10"));
    CHECK(natural_less("a", "b"));
    CHECK(natural_less("g1", "x1"));
    CHECK(!natural_less("a", "a"));
    // equal numeric value: fewer digits first, so the order is total
    bool ordered = natural_less("g1", "g01") || natural_less("g01", "g1");
    CHECK(ordered);
}

TEST_CASE("structure validation") {
    CHECK_THROWS_AS(make_structure({"a", "a"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_structure({"a"}, {{"a", "b"}}), std::invalid_argument);
    auto s = make_structure({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}, {"b", "c"}});
    CHECK(s->piece_count() == 3);
    CHECK(s->edges().size() == 2);   // symmetric duplicates collapse
}

TEST_CASE("concurrency is reflexive, commutation is its complement") {
    auto s = make_structure({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
    CHECK(s->concurrent(0, 0));
    CHECK(s->concurrent(0, 1));
    CHECK(s->concurrent(1, 0));
    CHECK(!s->concurrent(0, 2));
    CHECK(!s->adjacent(0, 0));
    CHECK(s->commute(0, 2));
    CHECK(!s->commute(0, 0));
    CHECK(!s->commute(0, 1));
}

TEST_CASE("neighbors and valency") {
    auto s = make_star(4);
    CHECK(s->piece_name(0) == "c");
    CHECK(s->valency(0) == 4);
    CHECK(s->valency(1) == 1);
    CHECK(s->neighbors(0).size() == 4);
}

TEST_CASE("signature is stable and order independent in the pairs") {
    auto s1 = make_structure({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
    auto s2 = make_structure({"1", "2", "3"}, {{"3", "2"}, {"2", "1"}});
    CHECK(s1->signature() == s2->signature());
    CHECK(*s1 == *s2);
    CHECK(s1->signature() == "pieces[1 2 3] conc[1-2 2-3]");
}

TEST_CASE("family constructors have the expected shapes") {
    CHECK(make_path(5)->edges().size() == 4);
    CHECK(make_complete(4)->edges().size() == 6);
    CHECK(make_cycle(6)->edges().size() == 6);
    CHECK(make_gamma(1, 1, 2)->piece_count() == 5);   // D5: center plus arms 1,1,2
    CHECK(make_gamma(1, 2, 3)->piece_count() == 7);   // E7: center plus arms 1,2,3
    CHECK(make_affine_e6()->piece_count() == 7);
    CHECK(make_diamond()->edges().size() == 5);
    CHECK(make_paw()->edges().size() == 4);
}
