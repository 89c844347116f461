#include "doctest.h"

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "heaplab/enumerate.hpp"
#include "heaplab/families.hpp"

using namespace heaplab;

namespace {

// Counts heaps by vertex count through the inverted clique series: with
// c_k the number of k-subsets of pairwise commuting pieces, the series
// sum_k (-1)^k c_k t^k is the inverse of the heap counting series.
std::vector<std::int64_t> series_counts(const StructurePtr& s, int max_n) {
    const int n = s->piece_count();
    std::vector<std::int64_t> mu(static_cast<std::size_t>(n) + 1, 0);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool commuting = true;
        for (int i = 0; i < n && commuting; ++i)
            for (int j = i + 1; j < n && commuting; ++j)
                if ((mask >> i & 1) && (mask >> j & 1) && s->concurrent(i, j))
                    commuting = false;
        if (!commuting) continue;
        int size = 0;
        for (int i = 0; i < n; ++i) size += mask >> i & 1;
        mu[static_cast<std::size_t>(size)] += (size % 2 == 0) ? 1 : -1;
    }
    std::vector<std::int64_t> h(static_cast<std::size_t>(max_n) + 1, 0);
    h[0] = 1;
    for (int k = 1; k <= max_n; ++k) {
        std::int64_t acc = 0;
        for (int j = 1; j <= std::min(k, n); ++j)
            acc -= mu[static_cast<std::size_t>(j)] * h[static_cast<std::size_t>(k - j)];
        h[static_cast<std::size_t>(k)] = acc;
    }
    return h;
}

std::vector<std::int64_t> enumerated_counts(const StructurePtr& s, int max_n) {
    std::vector<std::int64_t> by_size(static_cast<std::size_t>(max_n) + 1, 0);
    EnumerationSpec spec;
    spec.structure = s;
    spec.max_vertices = max_n;
    EnumerationStatus st = enumerate_heaps(spec, [&](const Heap& h) {
        ++by_size[static_cast<std::size_t>(h.size())];
        return true;
    });
    CHECK(st == EnumerationStatus::complete);
    return by_size;
}

} // namespace

TEST_CASE("counts by size match the inverted clique series") {
    CHECK(enumerated_counts(make_path(3), 6) ==
          std::vector<std::int64_t>{1, 3, 8, 21, 55, 144, 377});
    CHECK(enumerated_counts(make_complete(3), 5) ==
          std::vector<std::int64_t>{1, 3, 9, 27, 81, 243});

    for (const auto& s : {make_path(4), make_cycle(4), make_cycle(5), make_diamond(),
                          make_paw(), make_star(4), make_affine_e6()})
        CHECK(enumerated_counts(s, 6) == series_counts(s, 6));
}

TEST_CASE("counts by size match distinct canonical words over all short words") {
    for (const auto& s : {make_path(2), make_path(3), make_complete(3)}) {
        const int n = s->piece_count();
        auto by_size = enumerated_counts(s, 5);
        for (int len = 0; len <= 5; ++len) {
            std::uint64_t total = 1;
            for (int i = 0; i < len; ++i) total *= static_cast<std::uint64_t>(n);
            std::unordered_set<std::string> distinct;
            std::vector<int> word(static_cast<std::size_t>(len));
            for (std::uint64_t code = 0; code < total; ++code) {
                std::uint64_t c = code;
                for (int i = 0; i < len; ++i) {
                    word[static_cast<std::size_t>(i)] = static_cast<int>(c % n);
                    c /= static_cast<std::uint64_t>(n);
                }
                distinct.insert(Heap::from_letters(s, word).canonical_word());
            }
            CHECK(static_cast<std::int64_t>(distinct.size()) ==
                  by_size[static_cast<std::size_t>(len)]);
        }
    }
}

TEST_CASE("every heap appears exactly once, starting from the empty heap") {
    auto s = make_cycle(5);
    std::unordered_set<std::string> seen;
    std::vector<std::string> words;
    bool first = true;
    EnumerationSpec spec;
    spec.structure = s;
    spec.max_vertices = 5;
    enumerate_heaps(spec, [&](const Heap& h) {
        if (first) {
            CHECK(h.empty());
            first = false;
        }
        CHECK(seen.insert(h.key()).second);
        words.push_back(h.canonical_word());
        h.check_axioms();
        return true;
    });
    CHECK(seen.size() == static_cast<std::size_t>(count_heaps(s, 5)));

    // the visiting order is deterministic
    std::vector<std::string> again;
    enumerate_heaps(spec, [&](const Heap& h) {
        again.push_back(h.canonical_word());
        return true;
    });
    CHECK(words == again);
}

TEST_CASE("budgets and early stop") {
    EnumerationSpec spec;
    spec.structure = make_complete(4);
    spec.max_vertices = 10;

    spec.max_heaps = 100;
    std::uint64_t visited = 0;
    EnumerationStatus st = enumerate_heaps(spec, [&](const Heap&) {
        ++visited;
        return true;
    });
    CHECK(st == EnumerationStatus::heap_budget_exceeded);
    CHECK(visited <= 100);

    spec.max_heaps = 0;
    spec.time_budget_seconds = 1e-9;
    st = enumerate_heaps(spec, [&](const Heap&) { return true; });
    CHECK(st == EnumerationStatus::time_budget_exceeded);

    spec.time_budget_seconds = 0.0;
    visited = 0;
    st = enumerate_heaps(spec, [&](const Heap&) {
        ++visited;
        return visited < 7;   // visitor stops the walk
    });
    CHECK(st == EnumerationStatus::complete);
    CHECK(visited == 7);
}
