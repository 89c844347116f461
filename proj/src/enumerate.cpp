#include "heaplab/enumerate.hpp"

#include <bit>
#include <chrono>
#include <stdexcept>
#include <vector>

namespace heaplab {

namespace {

struct Driver {
    const EnumerationSpec& spec;
    const std::function<bool(const Heap&)>& visit;
    std::vector<std::uint32_t> indep;   // nonempty independent sets, ascending
    std::vector<std::uint32_t> ball;    // per piece: itself and its neighbours
    std::vector<std::vector<int>> layers;
    std::uint64_t visited = 0;
    std::chrono::steady_clock::time_point started;
    EnumerationStatus status = EnumerationStatus::complete;
    bool stopped = false;

    bool budget_ok() {
        if (spec.max_heaps && visited >= spec.max_heaps) {
            status = EnumerationStatus::heap_budget_exceeded;
            return false;
        }
        if (spec.time_budget_seconds > 0 && (visited & 1023) == 0) {
            std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
            if (elapsed.count() > spec.time_budget_seconds) {
                status = EnumerationStatus::time_budget_exceeded;
                return false;
            }
        }
        return true;
    }

    // Emits the heap of the current layer stack; false stops the walk.
    bool emit() {
        ++visited;
        Heap h = layers.empty() ? Heap(spec.structure) : Heap::from_layers(spec.structure, layers);
        if (!visit(h)) {
            stopped = true;
            return false;
        }
        return true;
    }

    bool walk(std::uint32_t prev_mask, int total) {
        for (std::uint32_t t : indep) {
            const int sz = std::popcount(t);
            if (total + sz > spec.max_vertices) continue;
            if (prev_mask) {
                bool covered = true;
                for (std::uint32_t rest = t; rest && covered; rest &= rest - 1) {
                    int b = std::countr_zero(rest);
                    if (!(ball[static_cast<std::size_t>(b)] & prev_mask)) covered = false;
                }
                if (!covered) continue;
            }
            if (!budget_ok()) return false;
            std::vector<int> pieces;
            pieces.reserve(static_cast<std::size_t>(sz));
            for (std::uint32_t rest = t; rest; rest &= rest - 1) pieces.push_back(std::countr_zero(rest));
            layers.push_back(std::move(pieces));
            bool keep_going = emit() && walk(t, total + sz);
            layers.pop_back();
            if (!keep_going) return false;
        }
        return true;
    }
};

} // namespace

EnumerationStatus enumerate_heaps(const EnumerationSpec& spec,
                                  const std::function<bool(const Heap&)>& visit) {
    const auto& s = spec.structure;
    if (!s) throw std::invalid_argument("enumeration requires a structure");
    const int n = s->piece_count();
    if (n > 20) throw std::invalid_argument("enumeration supports at most 20 pieces");

    Driver d{spec, visit, {}, {}, {}, 0, std::chrono::steady_clock::now(),
             EnumerationStatus::complete, false};
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) {
            if (!(mask & (1u << a))) continue;
            for (int b = a + 1; b < n && ok; ++b)
                if ((mask & (1u << b)) && s->adjacent(a, b)) ok = false;
        }
        if (ok) d.indep.push_back(mask);
    }
    d.ball.resize(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        std::uint32_t m = 1u << p;
        for (int q = 0; q < n; ++q)
            if (s->adjacent(p, q)) m |= 1u << q;
        d.ball[static_cast<std::size_t>(p)] = m;
    }

    if (spec.max_vertices < 0) return EnumerationStatus::complete;
    if (!d.budget_ok()) return d.status;
    if (!d.emit()) return d.status;
    if (spec.max_vertices > 0) d.walk(0, 0);
    return d.status;
}

std::uint64_t count_heaps(const StructurePtr& structure, int max_vertices) {
    EnumerationSpec spec;
    spec.structure = structure;
    spec.max_vertices = max_vertices;
    std::uint64_t count = 0;
    enumerate_heaps(spec, [&](const Heap&) {
        ++count;
        return true;
    });
    return count;
}

} // namespace heaplab
