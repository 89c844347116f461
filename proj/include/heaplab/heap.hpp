#ifndef HEAPLAB_HEAP_HPP
#define HEAPLAB_HEAP_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "heaplab/structure.hpp"

namespace heaplab {

/// A finite labelled poset over a concurrency structure:
///   * vertices carrying concurrent labels are comparable, and
///   * the order is the transitive closure of its concurrent-label pairs.
///
/// Every instance is stored in canonical form. Vertices are numbered
/// 0..size()-1 by factorization layer and, within a layer, by natural name
/// order of the labels, so equal heaps have equal vertex labellings and
/// equal order matrices. Instances are immutable; every operation returns
/// a new heap.
class Heap {
public:
    /// The empty heap.
    explicit Heap(StructurePtr structure);

    /// Heap of a word: one vertex per letter, letters given as piece indices.
    static Heap from_letters(StructurePtr structure, const std::vector<int>& letters);
    /// Heap of a word given as piece names.
    static Heap from_word(StructurePtr structure, std::span<const std::string> letters);
    /// Heap of a whitespace-separated word.
    static Heap from_word(StructurePtr structure, std::string_view text);
    /// Trivial heap: unordered vertices with pairwise non-concurrent labels.
    /// Throws std::invalid_argument if two labels are concurrent or repeated.
    static Heap trivial(StructurePtr structure, const std::vector<int>& pieces);
    /// Composite of trivial heaps, one per entry of `layer_pieces`.
    static Heap from_layers(StructurePtr structure, const std::vector<std::vector<int>>& layer_pieces);

    int size() const { return static_cast<int>(labels_.size()); }
    bool empty() const { return labels_.empty(); }
    const StructurePtr& structure() const { return structure_; }

    int label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
    const std::string& label_name(int v) const { return structure_->piece_name(label(v)); }
    const std::vector<int>& labels() const { return labels_; }

    /// Strict order.
    bool less(int u, int v) const { return less_[static_cast<std::size_t>(u) * labels_.size() + v] != 0; }
    bool comparable(int u, int v) const { return u != v && (less(u, v) || less(v, u)); }

    /// Unique factorization into trivial heaps, as lists of canonical
    /// vertex ids. Layer k of vertex v is its factor index.
    const std::vector<std::vector<int>>& layers() const { return layers_; }
    int layer_of(int v) const;
    /// The factors as standalone trivial heaps, left to right.
    std::vector<Heap> factors() const;

    /// Canonical word: labels of vertices 0,1,...,size()-1 as piece indices.
    std::vector<int> letters() const { return labels_; }
    /// Canonical word as space-separated piece names. Complete invariant:
    /// two heaps over equal structures are equal iff their words agree.
    std::string canonical_word() const;
    /// Factorized rendering, e.g. "(1 3)(2)(1 3)"; "1" for the empty heap.
    std::string factor_string() const;
    /// Compact invariant: one byte per vertex (requires < 256 pieces).
    std::string key() const;

    std::vector<int> minimal_vertices() const;
    std::vector<int> maximal_vertices() const;
    /// {w : u < w < v} in vertex order.
    std::vector<int> open_interval(int u, int v) const;
    /// |{w : u < w < v}|, counting past `cap` suppressed (any value >= cap
    /// returns cap).
    int open_interval_size(int u, int v, int cap) const;

    /// Stacks `right` on top of this heap.
    Heap compose(const Heap& right) const;
    /// Subheap on a vertex subset: order is regenerated from the
    /// concurrent-label pairs among the kept vertices, so it can be coarser
    /// than the restriction of the ambient order.
    Heap subheap(std::span<const int> keep) const;
    Heap delete_vertex(int v) const;
    /// Same vertices and labels with the order reversed.
    Heap opposite() const;
    /// For E = T1 ... Tp, the composite Tp ... T2 T1 T2 ... Tp.
    Heap doubled() const;

    /// Order matrix of the subheap on `keep`, indexed by position in `keep`.
    std::vector<std::uint8_t> subheap_order(std::span<const int> keep) const;

    /// Verifies both heap axioms and the stored factorization; throws
    /// std::logic_error on any violation.
    void check_axioms() const;

    friend bool operator==(const Heap& a, const Heap& b);
    friend bool operator!=(const Heap& a, const Heap& b) { return !(a == b); }

private:
    Heap(StructurePtr structure, std::vector<int> labels, std::vector<std::uint8_t> closed_order);

    static std::vector<std::uint8_t> transitive_closure(int n, std::vector<std::uint8_t> rel);
    void canonicalize(std::vector<std::uint8_t> closed_order);

    StructurePtr structure_;
    std::vector<int> labels_;
    std::vector<std::uint8_t> less_;          // size n*n, canonical indexing
    std::vector<std::vector<int>> layers_;
};

} // namespace heaplab

#endif
