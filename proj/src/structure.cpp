#include "heaplab/structure.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace heaplab {

bool natural_less(std::string_view a, std::string_view b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        char ca = a[i], cb = b[j];
        bool da = std::isdigit(static_cast<unsigned char>(ca)) != 0;
        bool db = std::isdigit(static_cast<unsigned char>(cb)) != 0;
        if (da && db) {
            std::size_t ia = i, jb = j;
            while (ia < a.size() && std::isdigit(static_cast<unsigned char>(a[ia]))) ++ia;
            while (jb < b.size() && std::isdigit(static_cast<unsigned char>(b[jb]))) ++jb;
            std::string_view ra = a.substr(i, ia - i);
            std::string_view rb = b.substr(j, jb - j);
            std::string_view va = ra.substr(std::min(ra.find_first_not_of('0'), ra.size() - 1));
            std::string_view vb = rb.substr(std::min(rb.find_first_not_of('0'), rb.size() - 1));
            if (va.size() != vb.size()) return va.size() < vb.size();
            if (va != vb) return va < vb;
            if (ra.size() != rb.size()) return ra.size() < rb.size();
            i = ia;
            j = jb;
        } else {
            if (ca != cb) return static_cast<unsigned char>(ca) < static_cast<unsigned char>(cb);
            ++i;
            ++j;
        }
    }
    return (a.size() - i) < (b.size() - j);
}

ConcurrencyStructure::ConcurrencyStructure(
    std::vector<std::string> pieces,
    const std::vector<std::pair<std::string, std::string>>& concurrent_pairs,
    std::vector<std::string>* warnings)
    : n_(static_cast<int>(pieces.size())), pieces_(std::move(pieces)) {
    std::unordered_map<std::string_view, int> index;
    index.reserve(pieces_.size());
    for (int p = 0; p < n_; ++p) {
        auto [it, fresh] = index.emplace(pieces_[static_cast<std::size_t>(p)], p);
        (void)it;
        if (!fresh)
            throw std::invalid_argument("duplicate piece '" + pieces_[static_cast<std::size_t>(p)] + "'");
    }
    adj_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
    for (const auto& [na, nb] : concurrent_pairs) {
        auto ia = index.find(na);
        if (ia == index.end()) throw std::invalid_argument("unknown piece '" + na + "' in concurrency pair");
        auto ib = index.find(nb);
        if (ib == index.end()) throw std::invalid_argument("unknown piece '" + nb + "' in concurrency pair");
        int a = ia->second, b = ib->second;
        if (a == b) {
            if (warnings) warnings->push_back("ignoring reflexive concurrency pair '" + na + " " + nb + "'");
            continue;
        }
        adj_[static_cast<std::size_t>(a) * n_ + b] = 1;
        adj_[static_cast<std::size_t>(b) * n_ + a] = 1;
    }
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (adj_[static_cast<std::size_t>(a) * n_ + b]) edges_.emplace_back(a, b);
    rank_.resize(static_cast<std::size_t>(n_));
    std::vector<int> order(static_cast<std::size_t>(n_));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return natural_less(pieces_[static_cast<std::size_t>(a)], pieces_[static_cast<std::size_t>(b)]);
    });
    for (int pos = 0; pos < n_; ++pos) rank_[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;
}

int ConcurrencyStructure::piece_index(std::string_view name) const {
    for (int p = 0; p < n_; ++p)
        if (pieces_[static_cast<std::size_t>(p)] == name) return p;
    return -1;
}

int ConcurrencyStructure::require_piece(std::string_view name) const {
    int p = piece_index(name);
    if (p < 0) throw std::invalid_argument("unknown piece '" + std::string(name) + "'");
    return p;
}

std::vector<int> ConcurrencyStructure::neighbors(int p) const {
    std::vector<int> out;
    for (int q = 0; q < n_; ++q)
        if (adjacent(p, q)) out.push_back(q);
    return out;
}

int ConcurrencyStructure::valency(int p) const {
    int d = 0;
    for (int q = 0; q < n_; ++q)
        if (adjacent(p, q)) ++d;
    return d;
}

std::string ConcurrencyStructure::signature() const {
    std::ostringstream os;
    os << "pieces[";
    for (int p = 0; p < n_; ++p) {
        if (p) os << ' ';
        os << pieces_[static_cast<std::size_t>(p)];
    }
    os << "] conc[";
    bool first = true;
    for (const auto& [a, b] : edges_) {
        if (!first) os << ' ';
        first = false;
        os << pieces_[static_cast<std::size_t>(a)] << '-' << pieces_[static_cast<std::size_t>(b)];
    }
    os << ']';
    return os.str();
}

bool ConcurrencyStructure::operator==(const ConcurrencyStructure& other) const {
    return pieces_ == other.pieces_ && adj_ == other.adj_;
}

StructurePtr make_structure(std::vector<std::string> pieces,
                            const std::vector<std::pair<std::string, std::string>>& concurrent_pairs,
                            std::vector<std::string>* warnings) {
    return std::make_shared<const ConcurrencyStructure>(std::move(pieces), concurrent_pairs, warnings);
}

} // namespace heaplab
