#include "heaplab/heap.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace heaplab {

namespace {

std::size_t idx(int u, int v, int n) {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v);
}

} // namespace

Heap::Heap(StructurePtr structure) : structure_(std::move(structure)) {
    if (!structure_) throw std::invalid_argument("heap requires a structure");
}

Heap::Heap(StructurePtr structure, std::vector<int> labels, std::vector<std::uint8_t> closed_order)
    : structure_(std::move(structure)), labels_(std::move(labels)) {
    if (!structure_) throw std::invalid_argument("heap requires a structure");
    canonicalize(std::move(closed_order));
}

std::vector<std::uint8_t> Heap::transitive_closure(int n, std::vector<std::uint8_t> rel) {
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (rel[idx(i, k, n)])
                for (int j = 0; j < n; ++j)
                    if (rel[idx(k, j, n)]) rel[idx(i, j, n)] = 1;
    return rel;
}

void Heap::canonicalize(std::vector<std::uint8_t> closed_order) {
    const int n = static_cast<int>(labels_.size());
    const ConcurrencyStructure& s = *structure_;
    layers_.clear();
    if (n == 0) {
        less_.clear();
        return;
    }

    // Peel minimal vertices layer by layer; after each peel the order on the
    // survivors is regenerated from their concurrent-label pairs, which is
    // exactly the subheap order.
    std::vector<std::vector<int>> layers;
    std::vector<std::uint8_t> alive(static_cast<std::size_t>(n), 1);
    std::vector<std::uint8_t> cur = closed_order;
    int remaining = n;
    while (remaining > 0) {
        std::vector<int> mins;
        for (int v = 0; v < n; ++v) {
            if (!alive[static_cast<std::size_t>(v)]) continue;
            bool minimal = true;
            for (int u = 0; u < n && minimal; ++u)
                if (alive[static_cast<std::size_t>(u)] && cur[idx(u, v, n)]) minimal = false;
            if (minimal) mins.push_back(v);
        }
        if (mins.empty()) throw std::logic_error("cyclic relation passed to heap construction");
        for (int v : mins) alive[static_cast<std::size_t>(v)] = 0;
        remaining -= static_cast<int>(mins.size());
        layers.push_back(std::move(mins));
        if (remaining > 0) {
            std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * n, 0);
            for (int u = 0; u < n; ++u) {
                if (!alive[static_cast<std::size_t>(u)]) continue;
                for (int v = 0; v < n; ++v)
                    if (alive[static_cast<std::size_t>(v)] && cur[idx(u, v, n)] &&
                        s.concurrent(labels_[static_cast<std::size_t>(u)], labels_[static_cast<std::size_t>(v)]))
                        rel[idx(u, v, n)] = 1;
            }
            cur = transitive_closure(n, std::move(rel));
        }
    }

    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (auto& layer : layers) {
        std::sort(layer.begin(), layer.end(), [&](int a, int b) {
            return s.label_less(labels_[static_cast<std::size_t>(a)], labels_[static_cast<std::size_t>(b)]);
        });
        order.insert(order.end(), layer.begin(), layer.end());
    }
    std::vector<int> new_id(static_cast<std::size_t>(n));
    for (int pos = 0; pos < n; ++pos) new_id[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;

    std::vector<int> labels(static_cast<std::size_t>(n));
    std::vector<std::uint8_t> less(static_cast<std::size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u) {
        labels[static_cast<std::size_t>(new_id[static_cast<std::size_t>(u)])] = labels_[static_cast<std::size_t>(u)];
        for (int v = 0; v < n; ++v)
            if (closed_order[idx(u, v, n)])
                less[idx(new_id[static_cast<std::size_t>(u)], new_id[static_cast<std::size_t>(v)], n)] = 1;
    }
    layers_.reserve(layers.size());
    int next = 0;
    for (const auto& layer : layers) {
        std::vector<int> ids(layer.size());
        std::iota(ids.begin(), ids.end(), next);
        next += static_cast<int>(layer.size());
        layers_.push_back(std::move(ids));
    }
    labels_ = std::move(labels);
    less_ = std::move(less);
}

Heap Heap::from_letters(StructurePtr structure, const std::vector<int>& letters) {
    if (!structure) throw std::invalid_argument("heap requires a structure");
    const int n = static_cast<int>(letters.size());
    for (int l : letters)
        if (l < 0 || l >= structure->piece_count()) throw std::invalid_argument("letter index out of range");
    std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (structure->concurrent(letters[static_cast<std::size_t>(i)], letters[static_cast<std::size_t>(j)]))
                rel[idx(i, j, n)] = 1;
    return Heap(std::move(structure), letters, transitive_closure(n, std::move(rel)));
}

Heap Heap::from_word(StructurePtr structure, std::span<const std::string> letters) {
    if (!structure) throw std::invalid_argument("heap requires a structure");
    std::vector<int> ids;
    ids.reserve(letters.size());
    for (const auto& name : letters) ids.push_back(structure->require_piece(name));
    return from_letters(std::move(structure), ids);
}

Heap Heap::from_word(StructurePtr structure, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> letters;
    std::string tok;
    while (in >> tok) letters.push_back(tok);
    return from_word(std::move(structure), std::span<const std::string>(letters));
}

Heap Heap::trivial(StructurePtr structure, const std::vector<int>& pieces) {
    if (!structure) throw std::invalid_argument("heap requires a structure");
    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (std::size_t j = i + 1; j < pieces.size(); ++j)
            if (structure->concurrent(pieces[i], pieces[j]))
                throw std::invalid_argument("trivial heap labels must be pairwise non-concurrent");
    const int n = static_cast<int>(pieces.size());
    return Heap(std::move(structure), pieces, std::vector<std::uint8_t>(static_cast<std::size_t>(n) * n, 0));
}

Heap Heap::from_layers(StructurePtr structure, const std::vector<std::vector<int>>& layer_pieces) {
    if (!structure) throw std::invalid_argument("heap requires a structure");
    std::vector<int> labels;
    std::vector<int> layer_of;
    for (std::size_t k = 0; k < layer_pieces.size(); ++k) {
        const auto& layer = layer_pieces[k];
        for (std::size_t i = 0; i < layer.size(); ++i)
            for (std::size_t j = i + 1; j < layer.size(); ++j)
                if (structure->concurrent(layer[i], layer[j]))
                    throw std::invalid_argument("layer labels must be pairwise non-concurrent");
        for (int p : layer) {
            if (p < 0 || p >= structure->piece_count()) throw std::invalid_argument("letter index out of range");
            labels.push_back(p);
            layer_of.push_back(static_cast<int>(k));
        }
    }
    const int n = static_cast<int>(labels.size());
    std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (layer_of[static_cast<std::size_t>(u)] < layer_of[static_cast<std::size_t>(v)] &&
                structure->concurrent(labels[static_cast<std::size_t>(u)], labels[static_cast<std::size_t>(v)]))
                rel[idx(u, v, n)] = 1;
    return Heap(std::move(structure), std::move(labels), transitive_closure(n, std::move(rel)));
}

int Heap::layer_of(int v) const {
    for (std::size_t k = 0; k < layers_.size(); ++k)
        for (int u : layers_[k])
            if (u == v) return static_cast<int>(k);
    throw std::out_of_range("vertex out of range");
}

std::vector<Heap> Heap::factors() const {
    std::vector<Heap> out;
    out.reserve(layers_.size());
    for (const auto& layer : layers_) {
        std::vector<int> pieces;
        pieces.reserve(layer.size());
        for (int v : layer) pieces.push_back(label(v));
        out.push_back(trivial(structure_, pieces));
    }
    return out;
}

std::string Heap::canonical_word() const {
    std::ostringstream os;
    for (int v = 0; v < size(); ++v) {
        if (v) os << ' ';
        os << label_name(v);
    }
    return os.str();
}

std::string Heap::factor_string() const {
    if (empty()) return "1";
    std::ostringstream os;
    for (const auto& layer : layers_) {
        os << '(';
        for (std::size_t i = 0; i < layer.size(); ++i) {
            if (i) os << ' ';
            os << label_name(layer[i]);
        }
        os << ')';
    }
    return os.str();
}

std::string Heap::key() const {
    std::string k;
    k.reserve(labels_.size());
    for (int l : labels_) k.push_back(static_cast<char>(static_cast<unsigned char>(l)));
    return k;
}

std::vector<int> Heap::minimal_vertices() const {
    std::vector<int> out;
    const int n = size();
    for (int v = 0; v < n; ++v) {
        bool minimal = true;
        for (int u = 0; u < n && minimal; ++u)
            if (less(u, v)) minimal = false;
        if (minimal) out.push_back(v);
    }
    return out;
}

std::vector<int> Heap::maximal_vertices() const {
    std::vector<int> out;
    const int n = size();
    for (int v = 0; v < n; ++v) {
        bool maximal = true;
        for (int u = 0; u < n && maximal; ++u)
            if (less(v, u)) maximal = false;
        if (maximal) out.push_back(v);
    }
    return out;
}

std::vector<int> Heap::open_interval(int u, int v) const {
    std::vector<int> out;
    for (int w = 0; w < size(); ++w)
        if (less(u, w) && less(w, v)) out.push_back(w);
    return out;
}

int Heap::open_interval_size(int u, int v, int cap) const {
    int count = 0;
    for (int w = 0; w < size(); ++w)
        if (less(u, w) && less(w, v) && ++count >= cap) return cap;
    return count;
}

Heap Heap::compose(const Heap& right) const {
    if (*structure_ != *right.structure_)
        throw std::invalid_argument("compose requires heaps over the same structure");
    const int n1 = size(), n2 = right.size(), n = n1 + n2;
    std::vector<int> labels = labels_;
    labels.insert(labels.end(), right.labels_.begin(), right.labels_.end());
    std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * n, 0);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n1; ++v)
            if (less(u, v)) rel[idx(u, v, n)] = 1;
    for (int u = 0; u < n2; ++u)
        for (int v = 0; v < n2; ++v)
            if (right.less(u, v)) rel[idx(n1 + u, n1 + v, n)] = 1;
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v)
            if (structure_->concurrent(label(u), right.label(v))) rel[idx(u, n1 + v, n)] = 1;
    return Heap(structure_, std::move(labels), transitive_closure(n, std::move(rel)));
}

std::vector<std::uint8_t> Heap::subheap_order(std::span<const int> keep) const {
    const int m = static_cast<int>(keep.size());
    std::vector<std::uint8_t> rel(static_cast<std::size_t>(m) * m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (less(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]) &&
                structure_->concurrent(label(keep[static_cast<std::size_t>(i)]), label(keep[static_cast<std::size_t>(j)])))
                rel[idx(i, j, m)] = 1;
    return transitive_closure(m, std::move(rel));
}

Heap Heap::subheap(std::span<const int> keep) const {
    std::vector<int> labels;
    labels.reserve(keep.size());
    for (int v : keep) {
        if (v < 0 || v >= size()) throw std::out_of_range("vertex out of range");
        labels.push_back(label(v));
    }
    return Heap(structure_, std::move(labels), subheap_order(keep));
}

Heap Heap::delete_vertex(int v) const {
    if (v < 0 || v >= size()) throw std::out_of_range("vertex out of range");
    std::vector<int> keep;
    keep.reserve(static_cast<std::size_t>(size()) - 1);
    for (int u = 0; u < size(); ++u)
        if (u != v) keep.push_back(u);
    return subheap(keep);
}

Heap Heap::opposite() const {
    const int n = size();
    std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (less(v, u)) rel[idx(u, v, n)] = 1;
    return Heap(structure_, labels_, std::move(rel));
}

Heap Heap::doubled() const {
    if (layers_.size() <= 1) return *this;
    std::vector<std::vector<int>> prefix;
    prefix.reserve(layers_.size() - 1);
    for (std::size_t k = layers_.size(); k-- > 1;) {
        std::vector<int> pieces;
        pieces.reserve(layers_[k].size());
        for (int v : layers_[k]) pieces.push_back(label(v));
        prefix.push_back(std::move(pieces));
    }
    return from_layers(structure_, prefix).compose(*this);
}

void Heap::check_axioms() const {
    const int n = size();
    const ConcurrencyStructure& s = *structure_;
    for (int u = 0; u < n; ++u) {
        if (less(u, u)) throw std::logic_error("order is not irreflexive");
        for (int v = 0; v < n; ++v) {
            if (less(u, v) && less(v, u)) throw std::logic_error("order is not antisymmetric");
            for (int w = 0; w < n; ++w)
                if (less(u, v) && less(v, w) && !less(u, w)) throw std::logic_error("order is not transitive");
        }
    }
    std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u != v && s.concurrent(label(u), label(v)) && !comparable(u, v))
                throw std::logic_error("concurrent labels on incomparable vertices");
            if (less(u, v) && s.concurrent(label(u), label(v))) rel[idx(u, v, n)] = 1;
        }
    if (transitive_closure(n, std::move(rel)) != less_)
        throw std::logic_error("order is not generated by its concurrent-label pairs");

    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> layer_index(static_cast<std::size_t>(n), -1);
    for (std::size_t k = 0; k < layers_.size(); ++k)
        for (int v : layers_[k]) {
            if (v < 0 || v >= n) throw std::logic_error("layer vertex out of range");
            layer_index[static_cast<std::size_t>(v)] = static_cast<int>(k);
        }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (less(u, v) && layer_index[static_cast<std::size_t>(u)] >= layer_index[static_cast<std::size_t>(v)])
                throw std::logic_error("order does not respect the layering");
    int expected = 0;
    for (std::size_t k = 0; k < layers_.size(); ++k) {
        const auto& layer = layers_[k];
        if (layer.empty()) throw std::logic_error("empty factorization layer");
        for (std::size_t i = 0; i < layer.size(); ++i) {
            int v = layer[i];
            if (v != expected++) throw std::logic_error("vertices are not numbered by layer");
            if (i && !s.label_less(label(layer[i - 1]), label(v)))
                throw std::logic_error("layer is not sorted by label");
            seen[static_cast<std::size_t>(v)] = 1;
            for (std::size_t j = i + 1; j < layer.size(); ++j)
                if (s.concurrent(label(v), label(layer[j])))
                    throw std::logic_error("factorization layer is not independent");
            if (k > 0) {
                bool covered = false;
                for (int u : layers_[k - 1])
                    if (less(u, v) && s.concurrent(label(u), label(v))) covered = true;
                if (!covered) throw std::logic_error("layer vertex has no support in the previous layer");
            } else {
                for (int u = 0; u < n; ++u)
                    if (less(u, v)) throw std::logic_error("first layer vertex is not minimal");
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[static_cast<std::size_t>(v)]) throw std::logic_error("layers do not cover all vertices");
}

bool operator==(const Heap& a, const Heap& b) {
    if (a.structure_ != b.structure_ && *a.structure_ != *b.structure_) return false;
    return a.labels_ == b.labels_ && a.less_ == b.less_;
}

} // namespace heaplab
