#ifndef HEAPLAB_STRUCTURE_HPP
#define HEAPLAB_STRUCTURE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace heaplab {

/// Numeric-aware lexicographic order on piece names: maximal digit runs
/// compare by value, everything else bytewise, so "g2" < "g10".
bool natural_less(std::string_view a, std::string_view b);

/// A finite alphabet of pieces together with a symmetric concurrency
/// relation. Reflexivity is implicit: concurrent(p, p) is always true and
/// reflexive pairs are never stored. Two distinct pieces that are not
/// concurrent commute in the associated commutation monoid.
///
/// Immutable after construction; shared freely between heaps.
class ConcurrencyStructure {
public:
    /// Builds a normalized structure. Duplicate pairs are merged and
    /// reflexive pairs are dropped (a note is appended to `warnings` when
    /// given). Throws std::invalid_argument on duplicate piece names or on
    /// a pair mentioning an undeclared piece.
    ConcurrencyStructure(std::vector<std::string> pieces,
                         const std::vector<std::pair<std::string, std::string>>& concurrent_pairs,
                         std::vector<std::string>* warnings = nullptr);

    int piece_count() const { return n_; }
    const std::vector<std::string>& pieces() const { return pieces_; }
    const std::string& piece_name(int p) const { return pieces_.at(static_cast<std::size_t>(p)); }

    /// Index of a declared piece, or -1.
    int piece_index(std::string_view name) const;
    /// Index of a declared piece; throws std::invalid_argument naming the token.
    int require_piece(std::string_view name) const;

    /// The concurrency relation, including the implicit diagonal.
    bool concurrent(int a, int b) const { return a == b || adj_[static_cast<std::size_t>(a) * n_ + b] != 0; }
    /// Edge of the concurrency graph (distinct concurrent pieces).
    bool adjacent(int a, int b) const { return a != b && adj_[static_cast<std::size_t>(a) * n_ + b] != 0; }
    /// Complementary relation: distinct pieces that are free to commute.
    bool commute(int a, int b) const { return a != b && adj_[static_cast<std::size_t>(a) * n_ + b] == 0; }

    /// Concurrency-graph edges as index pairs (i < j), in index order.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::vector<int> neighbors(int p) const;
    int valency(int p) const;

    /// Position of piece p when all names are sorted with natural_less.
    int natural_rank(int p) const { return rank_[static_cast<std::size_t>(p)]; }
    bool label_less(int a, int b) const { return natural_rank(a) < natural_rank(b); }

    /// Canonical one-line description, used as a stable identifier in reports.
    std::string signature() const;

    bool operator==(const ConcurrencyStructure& other) const;
    bool operator!=(const ConcurrencyStructure& other) const { return !(*this == other); }

private:
    int n_ = 0;
    std::vector<std::string> pieces_;
    std::vector<std::uint8_t> adj_;            // n*n symmetric, zero diagonal
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> rank_;
};

using StructurePtr = std::shared_ptr<const ConcurrencyStructure>;

/// Convenience wrapper around the validating constructor.
StructurePtr make_structure(std::vector<std::string> pieces,
                            const std::vector<std::pair<std::string, std::string>>& concurrent_pairs,
                            std::vector<std::string>* warnings = nullptr);

} // namespace heaplab

#endif
