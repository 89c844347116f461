#include "heaplab/tl.hpp"

#include <sstream>
#include <stdexcept>

namespace heaplab {

namespace {

struct Rewrite {
    Chain chain;
    bool doubles_delta;   // length-2 rule contributes a delta factor
};

std::vector<Rewrite> applicable_rewrites(const Heap& e) {
    std::vector<Rewrite> out;
    for (const auto& chain : balanced_convex_chains(e)) {
        if (chain.size() == 2) out.push_back({chain, true});
        else if (e.label(chain[1]) != e.label(chain[0])) out.push_back({chain, false});
    }
    return out;
}

} // namespace

std::string TLMonomial::to_string() const {
    std::ostringstream os;
    os << "delta^" << delta_exponent << " * " << heap.factor_string();
    return os.str();
}

TLMonomial tl_reduce(const Heap& e) {
    TLMonomial m{0, e};
    for (;;) {
        auto rewrites = applicable_rewrites(m.heap);
        if (rewrites.empty()) return m;
        const Rewrite* pick = &rewrites.front();
        for (const auto& r : rewrites)
            if (r.doubles_delta && !pick->doubles_delta) {
                pick = &r;
                break;
            }
        if (pick->doubles_delta) ++m.delta_exponent;
        m.heap = contract(m.heap, pick->chain);
    }
}

TLMonomial tl_reduce_randomized(const Heap& e, std::mt19937_64& rng) {
    TLMonomial m{0, e};
    for (;;) {
        auto rewrites = applicable_rewrites(m.heap);
        if (rewrites.empty()) return m;
        std::uniform_int_distribution<std::size_t> pick(0, rewrites.size() - 1);
        const Rewrite& r = rewrites[pick(rng)];
        if (r.doubles_delta) ++m.delta_exponent;
        m.heap = contract(m.heap, r.chain);
    }
}

bool in_monomial_basis(const Heap& e) {
    return has_p2(e);
}

bool is_basis_monomial(const TLMonomial& m) {
    return m.delta_exponent == 0 && has_p2(m.heap);
}

std::vector<DeletionEntry> deletion_test(const Heap& e) {
    if (!has_p2(e)) throw std::invalid_argument("deletion_test requires a P2 heap");
    std::vector<DeletionEntry> out;
    out.reserve(static_cast<std::size_t>(e.size()));
    for (int v = 0; v < e.size(); ++v) {
        TLMonomial m = tl_reduce(e.delete_vertex(v));
        out.push_back({v, m.delta_exponent, m.heap.canonical_word(), m.delta_exponent == 0});
    }
    return out;
}

} // namespace heaplab
