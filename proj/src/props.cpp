#include "heaplab/props.hpp"

#include <algorithm>
#include <stdexcept>

namespace heaplab {

DescentSets descents(const Heap& e) {
    return {e.minimal_vertices(), e.maximal_vertices()};
}

std::vector<Chain> balanced_convex_chains(const Heap& e) {
    std::vector<Chain> out;
    const int n = e.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!e.less(x, y) || e.label(x) != e.label(y)) continue;
            auto between = e.open_interval(x, y);
            if (between.empty()) out.push_back({x, y});
            else if (between.size() == 1 && e.label(between[0]) != e.label(x))
                out.push_back({x, between[0], y});
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool has_p2(const Heap& e) {
    const int n = e.size();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (e.label(x) == e.label(y) && e.less(x, y) && e.open_interval_size(x, y, 2) < 2)
                return false;
    return true;
}

Heap contract(const Heap& e, const Chain& chain) {
    if (chain.size() < 2) throw std::invalid_argument("chain must have length at least 2");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!e.less(chain[i], chain[i + 1])) throw std::invalid_argument("not a chain");
    if (e.label(chain.front()) != e.label(chain.back()))
        throw std::invalid_argument("chain is not balanced");
    auto between = e.open_interval(chain.front(), chain.back());
    if (between.size() + 2 != chain.size()) throw std::invalid_argument("chain is not convex");
    std::vector<int> keep;
    keep.reserve(static_cast<std::size_t>(e.size()));
    for (int v = 0; v < e.size(); ++v)
        if (std::find(chain.begin() + 1, chain.end(), v) == chain.end()) keep.push_back(v);
    return e.subheap(keep);
}

Exposure exposes(const Heap& e, int v) {
    const int n = e.size();
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(n) - 1);
    for (int u = 0; u < n; ++u)
        if (u != v) rest.push_back(u);
    const auto sub = e.subheap_order(rest);
    const int m = n - 1;
    unsigned flags = 0;

    bool v_maximal = true, v_minimal = true;
    for (int u = 0; u < n; ++u) {
        if (e.less(v, u)) v_maximal = false;
        if (e.less(u, v)) v_minimal = false;
    }
    for (int i = 0; i < m && flags != 3; ++i) {
        int b = rest[static_cast<std::size_t>(i)];
        if (e.label(b) == e.label(v)) continue;
        if (v_maximal && !(flags & 1)) {
            bool was_maximal = true, now_maximal = true;
            for (int u = 0; u < n && was_maximal; ++u)
                if (e.less(b, u)) was_maximal = false;
            for (int j = 0; j < m && now_maximal; ++j)
                if (sub[static_cast<std::size_t>(i) * m + j]) now_maximal = false;
            if (now_maximal && !was_maximal) flags |= 1;
        }
        if (v_minimal && !(flags & 2)) {
            bool was_minimal = true, now_minimal = true;
            for (int u = 0; u < n && was_minimal; ++u)
                if (e.less(u, b)) was_minimal = false;
            for (int j = 0; j < m && now_minimal; ++j)
                if (sub[static_cast<std::size_t>(j) * m + i]) now_minimal = false;
            if (now_minimal && !was_minimal) flags |= 2;
        }
    }
    return static_cast<Exposure>(flags);
}

namespace {

// Deletion candidates in canonical order: vertices whose removal exposes,
// minimal ones first, each listed once.
std::vector<int> exposing_vertices(const Heap& e) {
    std::vector<int> out;
    std::vector<char> taken(static_cast<std::size_t>(e.size()), 0);
    for (int v : e.minimal_vertices())
        if (static_cast<unsigned>(exposes(e, v)) & 2) {
            out.push_back(v);
            taken[static_cast<std::size_t>(v)] = 1;
        }
    for (int v : e.maximal_vertices())
        if (!taken[static_cast<std::size_t>(v)] && (static_cast<unsigned>(exposes(e, v)) & 1))
            out.push_back(v);
    return out;
}

bool p1_rec(const Heap& e, P1Cache& cache) {
    if (e.layers().size() <= 1) return true;
    const std::string k = e.key();
    if (auto it = cache.known.find(k); it != cache.known.end()) return it->second;
    bool ok = false;
    for (int v : exposing_vertices(e)) {
        if (p1_rec(e.delete_vertex(v), cache)) {
            ok = true;
            break;
        }
    }
    cache.known.emplace(k, ok);
    return ok;
}

bool p1_path(const Heap& e, P1Cache& cache, std::vector<int>& path) {
    if (e.layers().size() <= 1) return true;
    const std::string k = e.key();
    if (auto it = cache.known.find(k); it != cache.known.end() && !it->second) return false;
    for (int v : exposing_vertices(e)) {
        path.push_back(v);
        if (p1_path(e.delete_vertex(v), cache, path)) {
            cache.known.emplace(k, true);
            return true;
        }
        path.pop_back();
    }
    cache.known.emplace(k, false);
    return false;
}

} // namespace

bool has_p1(const Heap& e) {
    P1Cache cache;
    return has_p1(e, cache);
}

bool has_p1(const Heap& e, P1Cache& cache) {
    return p1_rec(e, cache);
}

P1Result p1_search(const Heap& e) {
    P1Cache cache;
    P1Result r;
    r.dismantlable = p1_path(e, cache, r.removals);
    if (!r.dismantlable) r.removals.clear();
    return r;
}

} // namespace heaplab
