#include "heaplab/boundary.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace heaplab {

FieldChoice FieldChoice::prime(int p) {
    if (p < 2) throw std::invalid_argument("characteristic must be a prime");
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("characteristic must be a prime");
    return FieldChoice(p);
}

BoundaryMap boundary_map(const Heap& e) {
    BoundaryMap d;
    const int n = e.size();
    d.vertex_count = n;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (e.label(x) != e.label(y) || !e.less(x, y)) continue;
            bool consecutive = true;
            for (int w = 0; w < n && consecutive; ++w)
                if (e.label(w) == e.label(x) && e.less(x, w) && e.less(w, y)) consecutive = false;
            if (consecutive) d.edges.emplace_back(x, y);
        }
    std::sort(d.edges.begin(), d.edges.end());
    d.columns.reserve(d.edges.size());
    for (const auto& [x, y] : d.edges) {
        std::vector<int> support;
        for (int w = 0; w < n; ++w)
            if (e.less(x, w) && e.less(w, y) &&
                e.structure()->concurrent(e.label(w), e.label(x)))
                support.push_back(w);
        d.columns.push_back(std::move(support));
    }
    return d;
}

std::vector<std::vector<long long>> BoundaryMap::dense() const {
    std::vector<std::vector<long long>> m(static_cast<std::size_t>(vertex_count),
                                          std::vector<long long>(edges.size(), 0));
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (int w : columns[c]) m[static_cast<std::size_t>(w)][c] = 1;
    return m;
}

int rank_exact(std::vector<std::vector<long long>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    constexpr long long limit = 1LL << 62;
    long long prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                __int128 num = static_cast<__int128>(m[r][c]) * m[i][j] -
                               static_cast<__int128>(m[i][c]) * m[r][j];
                __int128 q = num / prev;
                if (q > limit || q < -limit) throw std::overflow_error("rank_exact: entry overflow");
                m[i][j] = static_cast<long long>(q);
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

int rank_mod_p(std::vector<std::vector<long long>> m, int p) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (auto& row : m)
        for (auto& x : row) x = ((x % p) + p) % p;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        long long inv = 1, base = m[r][c] % p, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            long long f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
        }
        ++r;
    }
    return static_cast<int>(r);
}

int rank(const BoundaryMap& d, const FieldChoice& field) {
    if (d.edges.empty()) return 0;
    auto m = d.dense();
    return field.is_rational() ? rank_exact(std::move(m)) : rank_mod_p(std::move(m), field.characteristic());
}

int kernel_dim(const BoundaryMap& d, const FieldChoice& field) {
    return static_cast<int>(d.edges.size()) - rank(d, field);
}

int kernel_dim(const Heap& e, const FieldChoice& field) {
    return kernel_dim(boundary_map(e), field);
}

bool is_acyclic(const Heap& e, const FieldChoice& field) {
    return kernel_dim(e, field) == 0;
}

bool is_strongly_acyclic(const Heap& e, const FieldChoice& field) {
    if (!is_acyclic(e, field)) return false;
    for (int v = 0; v < e.size(); ++v)
        if (!is_acyclic(e.delete_vertex(v), field)) return false;
    return true;
}

} // namespace heaplab
