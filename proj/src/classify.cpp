#include "heaplab/classify.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "heaplab/props.hpp"

namespace heaplab {

namespace {

// A connected component viewed through local indices 0..size()-1, kept in
// ascending parent-index order.
struct View {
    const ConcurrencyStructure* s = nullptr;
    std::vector<int> pieces;

    int size() const { return static_cast<int>(pieces.size()); }
    int parent(int i) const { return pieces[static_cast<std::size_t>(i)]; }
    const std::string& name(int i) const { return s->piece_name(parent(i)); }
    bool adj(int i, int j) const { return s->adjacent(parent(i), parent(j)); }
    bool nat_less(int i, int j) const { return s->label_less(parent(i), parent(j)); }

    std::vector<int> neighbors(int i) const {
        std::vector<int> out;
        for (int j = 0; j < size(); ++j)
            if (adj(i, j)) out.push_back(j);
        return out;
    }
    int valency(int i) const { return static_cast<int>(neighbors(i).size()); }
    int edge_count() const {
        int m = 0;
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j)
                if (adj(i, j)) ++m;
        return m;
    }
    bool has_triangle() const {
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j)
                for (int k = j + 1; k < size(); ++k)
                    if (adj(i, j) && adj(j, k) && adj(i, k)) return true;
        return false;
    }
    int nat_min(const std::vector<int>& candidates) const {
        int best = candidates.at(0);
        for (int c : candidates)
            if (nat_less(c, best)) best = c;
        return best;
    }
    std::vector<int> nat_sorted(std::vector<int> v) const {
        std::sort(v.begin(), v.end(), [&](int a, int b) { return nat_less(a, b); });
        return v;
    }
};

View component_view(const ConcurrencyStructure& s) {
    View v;
    v.s = &s;
    v.pieces.resize(static_cast<std::size_t>(s.piece_count()));
    for (int i = 0; i < s.piece_count(); ++i) v.pieces[static_cast<std::size_t>(i)] = i;
    return v;
}

bool is_connected(const View& v) {
    if (v.size() == 0) return false;
    std::vector<char> seen(static_cast<std::size_t>(v.size()), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int count = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        ++count;
        for (int w : v.neighbors(u))
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
    }
    return count == v.size();
}

// Shortest path between two vertices, optionally excluding the direct edge.
std::vector<int> bfs_path(const View& v, int from, int to, bool skip_direct_edge) {
    std::vector<int> prev(static_cast<std::size_t>(v.size()), -1);
    std::deque<int> queue{from};
    prev[static_cast<std::size_t>(from)] = from;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == to) break;
        for (int w : v.neighbors(u)) {
            if (skip_direct_edge && u == from && w == to) continue;
            if (prev[static_cast<std::size_t>(w)] < 0) {
                prev[static_cast<std::size_t>(w)] = u;
                queue.push_back(w);
            }
        }
    }
    std::vector<int> path;
    if (prev[static_cast<std::size_t>(to)] < 0) return path;
    for (int u = to; u != from; u = prev[static_cast<std::size_t>(u)]) path.push_back(u);
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
}

// First shortest circuit, as a vertex list in cyclic order.
std::vector<int> shortest_cycle(const View& v) {
    std::vector<int> best;
    for (int i = 0; i < v.size(); ++i)
        for (int j = i + 1; j < v.size(); ++j) {
            if (!v.adj(i, j)) continue;
            auto path = bfs_path(v, i, j, true);
            if (path.empty()) continue;
            if (best.empty() || path.size() < best.size()) best = path;
        }
    return best;
}

// The three paths leaving a valency-3 vertex of a tree with no other branch
// point, each listed outward from the center.
std::vector<std::vector<int>> arms_from(const View& v, int center) {
    std::vector<std::vector<int>> arms;
    for (int w : v.neighbors(center)) {
        std::vector<int> arm{w};
        int prev = center, cur = w;
        for (;;) {
            int next = -1;
            for (int u : v.neighbors(cur))
                if (u != prev) next = u;
            if (next < 0) break;
            arm.push_back(next);
            prev = cur;
            cur = next;
        }
        arms.push_back(std::move(arm));
    }
    std::sort(arms.begin(), arms.end(), [&](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return v.nat_less(a[0], b[0]);
    });
    return arms;
}

} // namespace

std::string to_string(NonRReason reason) {
    switch (reason) {
        case NonRReason::triangle_incomplete: return "triangle_incomplete";
        case NonRReason::even_cycle: return "even_cycle";
        case NonRReason::circuit_not_pure_cycle: return "circuit_not_pure_cycle";
        case NonRReason::two_branch_points: return "two_branch_points";
        case NonRReason::valency_ge_4: return "valency_ge_4";
        case NonRReason::contains_gamma_1_3_3: return "contains_gamma_1_3_3";
        case NonRReason::contains_gamma_2_2_3: return "contains_gamma_2_2_3";
    }
    return "unknown";
}

std::string FamilyTag::to_string() const {
    switch (family) {
        case Family::path_a: return "A" + std::to_string(nodes);
        case Family::complete: return "K" + std::to_string(nodes);
        case Family::type_d: return "D" + std::to_string(nodes);
        case Family::type_e: return "E" + std::to_string(nodes);
        case Family::affine_a: return "AffineA" + std::to_string(nodes - 1);
        case Family::affine_e6: return "AffineE6";
        case Family::non_r: break;
    }
    return "NonR(" + (reason ? heaplab::to_string(*reason) : std::string("unknown")) + ")";
}

std::vector<Component> connected_components(const StructurePtr& s) {
    const int n = s->piece_count();
    std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
    int comps = 0;
    for (int p = 0; p < n; ++p) {
        if (comp_of[static_cast<std::size_t>(p)] >= 0) continue;
        std::deque<int> queue{p};
        comp_of[static_cast<std::size_t>(p)] = comps;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w = 0; w < n; ++w)
                if (s->adjacent(u, w) && comp_of[static_cast<std::size_t>(w)] < 0) {
                    comp_of[static_cast<std::size_t>(w)] = comps;
                    queue.push_back(w);
                }
        }
        ++comps;
    }
    std::vector<Component> out(static_cast<std::size_t>(comps));
    for (int p = 0; p < n; ++p) out[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(p)])].pieces.push_back(p);
    for (auto& comp : out) {
        std::vector<std::string> names;
        names.reserve(comp.pieces.size());
        for (int p : comp.pieces) names.push_back(s->piece_name(p));
        std::vector<std::pair<std::string, std::string>> conc;
        for (std::size_t i = 0; i < comp.pieces.size(); ++i)
            for (std::size_t j = i + 1; j < comp.pieces.size(); ++j)
                if (s->adjacent(comp.pieces[i], comp.pieces[j]))
                    conc.emplace_back(s->piece_name(comp.pieces[i]), s->piece_name(comp.pieces[j]));
        comp.structure = make_structure(std::move(names), conc);
    }
    return out;
}

FamilyTag classify_component(const ConcurrencyStructure& s) {
    View v = component_view(s);
    const int n = v.size();
    if (n == 0) throw std::invalid_argument("cannot classify an empty component");
    if (!is_connected(v)) throw std::invalid_argument("classify_component requires a connected structure");

    if (n <= 2) return {Family::path_a, n, std::nullopt};
    const int m = v.edge_count();
    if (m == n * (n - 1) / 2) return {Family::complete, n, std::nullopt};
    if (v.has_triangle()) return {Family::non_r, n, NonRReason::triangle_incomplete};

    if (m >= n) {
        bool pure_cycle = true;
        for (int i = 0; i < n; ++i)
            if (v.valency(i) != 2) pure_cycle = false;
        if (!pure_cycle) return {Family::non_r, n, NonRReason::circuit_not_pure_cycle};
        if (n % 2 == 0) return {Family::non_r, n, NonRReason::even_cycle};
        return {Family::affine_a, n, std::nullopt};
    }

    std::vector<int> branch;
    int max_valency = 0;
    for (int i = 0; i < n; ++i) {
        int d = v.valency(i);
        max_valency = std::max(max_valency, d);
        if (d >= 3) branch.push_back(i);
    }
    if (branch.empty()) return {Family::path_a, n, std::nullopt};
    if (branch.size() >= 2) return {Family::non_r, n, NonRReason::two_branch_points};
    if (max_valency >= 4) return {Family::non_r, n, NonRReason::valency_ge_4};

    auto arms = arms_from(v, branch[0]);
    const std::size_t p = arms[0].size(), q = arms[1].size(), r = arms[2].size();
    if (q == 1) return {Family::type_d, n, std::nullopt};
    if (q == 2 && p == 1) return {Family::type_e, n, std::nullopt};
    if (p == 2 && q == 2 && r == 2) return {Family::affine_e6, n, std::nullopt};
    if (p == 2 && q == 2) return {Family::non_r, n, NonRReason::contains_gamma_2_2_3};
    return {Family::non_r, n, NonRReason::contains_gamma_1_3_3};
}

std::vector<ClassifiedComponent> classify(const StructurePtr& s) {
    std::vector<ClassifiedComponent> out;
    for (auto& comp : connected_components(s)) {
        FamilyTag tag = classify_component(*comp.structure);
        out.push_back({std::move(comp), tag});
    }
    return out;
}

bool has_property_r(const StructurePtr& s) {
    for (const auto& c : classify(s))
        if (!c.tag.is_regular()) return false;
    return true;
}

std::string Witness::word() const {
    std::string out;
    for (const auto& layer : layers)
        for (const auto& name : layer) {
            if (!out.empty()) out += ' ';
            out += name;
        }
    return out;
}

namespace {

using Layers = std::vector<std::vector<int>>;   // local indices

Layers triangle_witness(const View& v) {
    const int n = v.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    const int sub[4] = {i, j, k, l};
                    int deg[4] = {0, 0, 0, 0};
                    int edges = 0;
                    for (int a = 0; a < 4; ++a)
                        for (int b = a + 1; b < 4; ++b)
                            if (v.adj(sub[a], sub[b])) {
                                ++edges;
                                ++deg[a];
                                ++deg[b];
                            }
                    if (edges == 5) {
                        // K4 minus an edge; the missing pair plays 1 and 3.
                        std::vector<int> ends, mids;
                        for (int a = 0; a < 4; ++a) (deg[a] == 2 ? ends : mids).push_back(sub[a]);
                        ends = v.nat_sorted(ends);
                        mids = v.nat_sorted(mids);
                        int one = ends[0], three = ends[1], two = mids[0], four = mids[1];
                        return {{one, three}, {two}, {four}, {one, three}};
                    }
                    if (edges == 4) {
                        // Paw: pendant vertex 5 attached to 6 on triangle 6,7,8.
                        int five = -1, six = -1;
                        std::vector<int> others;
                        for (int a = 0; a < 4; ++a) {
                            if (deg[a] == 1) five = sub[a];
                            else if (deg[a] == 3) six = sub[a];
                            else others.push_back(sub[a]);
                        }
                        if (five < 0 || six < 0 || !v.adj(five, six)) continue;
                        others = v.nat_sorted(others);
                        int seven = others[0], eight = others[1];
                        return {{five, eight}, {six}, {seven}, {eight}, {six}, {five, seven}};
                    }
                }
    throw std::logic_error("triangle witness: no diamond or paw found");
}

std::vector<int> cycle_order(const View& v) {
    std::vector<int> all(static_cast<std::size_t>(v.size()));
    for (int i = 0; i < v.size(); ++i) all[static_cast<std::size_t>(i)] = i;
    int start = v.nat_min(all);
    auto nbrs = v.neighbors(start);
    int second = v.nat_less(nbrs[0], nbrs[1]) ? nbrs[0] : nbrs[1];
    std::vector<int> order{start, second};
    int prev = start, cur = second;
    while (static_cast<int>(order.size()) < v.size()) {
        for (int u : v.neighbors(cur))
            if (u != prev) {
                order.push_back(u);
                prev = cur;
                cur = u;
                break;
            }
    }
    return order;
}

Layers even_cycle_witness(const View& v) {
    auto g = cycle_order(v);
    Layers layers(2);
    for (std::size_t i = 0; i < g.size(); ++i) layers[i % 2].push_back(g[i]);
    return layers;
}

Layers circuit_witness(const View& v) {
    auto cycle = shortest_cycle(v);
    if (cycle.size() < 4) throw std::logic_error("circuit witness: no chordless circuit of length >= 4");
    std::vector<char> on_cycle(static_cast<std::size_t>(v.size()), 0);
    for (int u : cycle) on_cycle[static_cast<std::size_t>(u)] = 1;
    std::vector<int> attachments;
    for (int u = 0; u < v.size(); ++u) {
        if (on_cycle[static_cast<std::size_t>(u)]) continue;
        for (int w : cycle)
            if (v.adj(u, w)) {
                attachments.push_back(u);
                break;
            }
    }
    if (attachments.empty()) throw std::logic_error("circuit witness: circuit has no attachment");
    int x = v.nat_min(attachments);
    std::vector<int> anchors;
    for (int w : cycle)
        if (v.adj(x, w)) anchors.push_back(w);
    int g1 = v.nat_min(anchors);
    std::rotate(cycle.begin(), std::find(cycle.begin(), cycle.end(), g1), cycle.end());
    // Two orientations; pick the one whose second vertex is naturally
    // smaller.
    if (v.nat_less(cycle.back(), cycle[1])) {
        std::reverse(cycle.begin() + 1, cycle.end());
    }
    const int k = static_cast<int>(cycle.size());
    Layers layers;
    layers.push_back({x, cycle[static_cast<std::size_t>(k - 1)]});
    for (int i = 0; i < k; ++i) layers.push_back({cycle[static_cast<std::size_t>(i)]});
    layers.push_back({cycle[0]});
    layers.push_back({x, cycle[1]});
    return layers;
}

Layers two_branch_witness(const View& v, const std::vector<int>& branch) {
    auto sorted = v.nat_sorted(branch);
    int c = sorted[0], c2 = sorted[1];
    auto path = bfs_path(v, c, c2, false);
    std::vector<int> xs, ys;
    for (int u : v.neighbors(c))
        if (u != path[1]) xs.push_back(u);
    for (int u : v.neighbors(c2))
        if (u != path[path.size() - 2]) ys.push_back(u);
    xs = v.nat_sorted(xs);
    ys = v.nat_sorted(ys);
    Layers layers;
    layers.push_back({xs[0], xs[1]});
    for (int g : path) layers.push_back({g});
    layers.push_back({ys[0], ys[1]});
    return layers;
}

Layers star_witness(const View& v) {
    std::vector<int> centers;
    for (int i = 0; i < v.size(); ++i)
        if (v.valency(i) >= 4) centers.push_back(i);
    int c = v.nat_min(centers);
    auto xs = v.nat_sorted(v.neighbors(c));
    return {{xs[0], xs[1]}, {c}, {xs[2], xs[3]}};
}

Layers gamma133_witness(const View& v, int center) {
    auto arms = arms_from(v, center);
    int x = arms.at(0).at(0);
    int c = arms.at(1).at(0), b = arms.at(1).at(1), a = arms.at(1).at(2);
    int e = arms.at(2).at(0), f = arms.at(2).at(1), g = arms.at(2).at(2);
    int d = center;
    return {{a, c, x}, {b, d}, {c, e}, {d, f}, {x, e, g}};
}

Layers gamma223_witness(const View& v, int center) {
    auto arms = arms_from(v, center);
    int c = center;
    int d = arms.at(0).at(0), e = arms.at(0).at(1);
    int f = arms.at(1).at(0), g = arms.at(1).at(1);
    int b = arms.at(2).at(0), a = arms.at(2).at(1), x = arms.at(2).at(2);
    return {{x, b, f}, {a, c}, {b, d}, {c, e}, {d, f}, {c, g}, {b, f}, {a, c}, {x, b, d}};
}

} // namespace

Witness nonregular_witness(const StructurePtr& full, const Component& comp, const FamilyTag& tag) {
    if (tag.is_regular() || !tag.reason)
        throw std::invalid_argument("witness generation requires a non-regular tag");
    View v;
    v.s = full.get();
    v.pieces = comp.pieces;

    Layers local;
    switch (*tag.reason) {
        case NonRReason::triangle_incomplete:
            local = triangle_witness(v);
            break;
        case NonRReason::even_cycle:
            local = even_cycle_witness(v);
            break;
        case NonRReason::circuit_not_pure_cycle:
            local = circuit_witness(v);
            break;
        case NonRReason::two_branch_points: {
            std::vector<int> branch;
            for (int i = 0; i < v.size(); ++i)
                if (v.valency(i) >= 3) branch.push_back(i);
            local = two_branch_witness(v, branch);
            break;
        }
        case NonRReason::valency_ge_4:
            local = star_witness(v);
            break;
        case NonRReason::contains_gamma_1_3_3:
        case NonRReason::contains_gamma_2_2_3: {
            int center = -1;
            for (int i = 0; i < v.size(); ++i)
                if (v.valency(i) >= 3) center = i;
            if (center < 0) throw std::logic_error("gamma witness: no branch point");
            local = *tag.reason == NonRReason::contains_gamma_1_3_3 ? gamma133_witness(v, center)
                                                                    : gamma223_witness(v, center);
            break;
        }
    }

    Layers parent(local.size());
    Witness w{{}, Heap(full)};
    for (std::size_t k = 0; k < local.size(); ++k) {
        auto sorted = v.nat_sorted(local[k]);
        std::vector<std::string> names;
        for (int i : sorted) {
            parent[k].push_back(v.parent(i));
            names.push_back(v.name(i));
        }
        w.layers.push_back(std::move(names));
    }
    w.heap = Heap::from_layers(full, parent);
    if (!has_p2(w.heap)) throw std::logic_error("witness verification failed: heap lacks P2");
    if (has_p1(w.heap)) throw std::logic_error("witness verification failed: heap has P1");
    return w;
}

} // namespace heaplab
