#include "couponkit/extend.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "couponkit/generators.hpp"

namespace couponkit {

std::vector<std::pair<int, int>> ExtensionState::a_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < static_cast<int>(a_mate.size()); ++v)
        if (a_mate[v] > v) out.emplace_back(v, a_mate[v]);
    return out;
}

ExtensionState make_extension_state(const Graph& g, const Coloring& s_coloring,
                                    const OneTwoFactor& f) {
    if (s_coloring.size() != g.n())
        throw std::invalid_argument("extension: coloring size mismatch");
    std::vector<int> uncolored;
    for (int v = 0; v < g.n(); ++v)
        if (!s_coloring.is_set(v)) uncolored.push_back(v);
    auto rep = verify_factor(g, f, uncolored);
    if (!rep.ok)
        throw std::invalid_argument("extension: factor does not span the uncolored vertices: " +
                                    (rep.problems.empty() ? "" : rep.problems.front()));
    // Every S-vertex must already see both colors inside S.
    for (int v = 0; v < g.n(); ++v) {
        if (!s_coloring.is_set(v)) continue;
        bool saw[2] = {false, false};
        for (int w : g.neighbors(v))
            if (s_coloring.is_set(w)) saw[s_coloring.get(w)] = true;
        if (!saw[0] || !saw[1])
            throw std::invalid_argument("extension: seed is not a coupon coloring of G[S]");
    }
    OneTwoFactor norm = normalize_factor(f);
    ExtensionState state{g, s_coloring, std::vector<int>(g.n(), -1)};
    for (const auto& comp : norm.components) {
        if (!comp.is_edge())
            throw std::invalid_argument("extension: factor has an odd cycle after normalization");
        state.a_mate[comp.vertices[0]] = comp.vertices[1];
        state.a_mate[comp.vertices[1]] = comp.vertices[0];
    }
    return state;
}

bool validate_good_walk(const ExtensionState& state, const GoodWalk& walk) {
    const Graph& g = state.graph;
    const auto& vs = walk.verts;
    const int k = walk.steps();
    if (k < 3 || k % 2 == 0) return false;  // first edge leaves S, last re-enters
    if (!state.in_s(walk.start()) || !state.in_s(walk.end())) return false;
    std::set<std::pair<int, int>> non_a_edges;
    for (int i = 0; i + 1 <= k; ++i) {
        int a = vs[i], b = vs[i + 1];
        if (!g.has_edge(a, b)) return false;
        if (i % 2 == 0) {
            // odd (1-based) step: non-A, must not repeat
            if (state.a_mate[a] == b) return false;
            if (!non_a_edges.emplace(std::min(a, b), std::max(a, b)).second) return false;
        } else {
            if (state.a_mate[a] != b) return false;
        }
    }
    for (int i = 1; i < k; ++i)
        if (state.in_s(vs[i])) return false;
    return true;
}

namespace {

struct WalkSearch {
    const ExtensionState& state;
    const Graph& g;
    std::set<std::pair<int, int>> used;
    std::vector<int> verts;

    explicit WalkSearch(const ExtensionState& s) : state(s), g(s.graph) {}

    bool take_non_a(int from, int to) {
        auto key = std::make_pair(std::min(from, to), std::max(from, to));
        if (used.count(key)) return false;
        used.insert(key);
        verts.push_back(to);
        if (state.in_s(to)) return true;  // terminating edge
        // Forced A-step to the partner, then branch again.
        int mate = state.a_mate[to];
        verts.push_back(mate);
        if (branch(mate)) return true;
        verts.pop_back();
        verts.pop_back();
        used.erase(key);
        return false;
    }

    bool branch(int from) {
        for (int w : g.neighbors(from)) {
            if (state.a_mate[from] == w) continue;
            if (take_non_a(from, w)) return true;
        }
        return false;
    }
};

}  // namespace

GoodWalk find_good_walk(const ExtensionState& state, int u, int v) {
    if (!state.in_s(u) || state.in_s(v) || !state.graph.has_edge(u, v))
        throw std::invalid_argument("find_good_walk: need an edge from S to its complement");
    WalkSearch search(state);
    search.verts.push_back(u);
    if (!search.take_non_a(u, v))
        throw std::logic_error("find_good_walk: no walk back into S; a precondition was broken");
    return GoodWalk{std::move(search.verts)};
}

namespace {

// Sets v to c; an existing equal color is a no-op, a different one is a
// broken contract.
void put(Coloring& c, int v, int color) {
    if (!c.is_set(v)) c.set(v, color);
    else if (c.get(v) != color)
        throw std::logic_error("color_walk: would recolor vertex " + std::to_string(v));
}

}  // namespace

void color_walk(ExtensionState& state, const GoodWalk& walk) {
    // Only shape checks here: a walk stays replayable after its vertices are
    // colored, when the full state validation no longer applies.
    const int k = walk.steps();
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("color_walk: walk length must be odd and >= 3");
    for (int i = 0; i < k; ++i)
        if (!state.graph.has_edge(walk.verts[i], walk.verts[i + 1]))
            throw std::invalid_argument("color_walk: walk uses a non-edge");
    if (!state.in_s(walk.start()) || !state.in_s(walk.end()))
        throw std::invalid_argument("color_walk: walk endpoints must be colored");
    Coloring& c = state.coloring;
    const int t = walk.pairs();
    put(c, walk.y(1), 1 - c.get(walk.start()));
    for (int i = 2; i <= t; ++i)
        if (!c.is_set(walk.y(i))) c.set(walk.y(i), 1 - c.get(walk.y(i - 1)));
    put(c, walk.x(t), 1 - c.get(walk.end()));
    for (int j = t - 1; j >= 1; --j)
        if (!c.is_set(walk.x(j))) c.set(walk.x(j), 1 - c.get(walk.x(j + 1)));
    for (int i = 1; i <= t; ++i) {
        state.a_mate[walk.x(i)] = -1;
        state.a_mate[walk.y(i)] = -1;
    }
}

Coloring extend_coloring_bipartite(const Graph& g, const Coloring& s_coloring,
                                   const OneTwoFactor& f, const WalkObserver& observer) {
    if (!is_bipartite(g).parts)
        throw std::invalid_argument("extend_coloring_bipartite: graph is not bipartite");
    if (!is_connected(g))
        throw std::invalid_argument("extend_coloring_bipartite: graph is not connected");
    if (!validate_cubic(g).ok)
        throw std::invalid_argument("extend_coloring_bipartite: graph is not cubic");
    ExtensionState state = make_extension_state(g, s_coloring, f);
    while (!state.coloring.is_total()) {
        int bu = -1, bv = -1;
        for (int u = 0; u < g.n() && bu == -1; ++u) {
            if (!state.in_s(u)) continue;
            for (int v : g.neighbors(u))
                if (!state.in_s(v)) {
                    bu = u;
                    bv = v;
                    break;
                }
        }
        if (bu == -1)
            throw std::logic_error("extend_coloring_bipartite: no edge leaves S");
        GoodWalk walk = find_good_walk(state, bu, bv);
        if (!validate_good_walk(state, walk))
            throw std::logic_error("extend_coloring_bipartite: found walk fails validation");
        if (observer) observer(state, walk);
        color_walk(state, walk);
    }
    if (!verify_coupon(g, state.coloring).is_coupon)
        throw std::logic_error("extend_coloring_bipartite: result failed verification");
    return state.coloring;
}

Coloring extend_coloring(const Graph& g, const Coloring& s_coloring, const OneTwoFactor& f,
                         const WalkObserver& observer) {
    if (s_coloring.is_total()) {
        if (!verify_coupon(g, s_coloring).is_coupon)
            throw std::invalid_argument("extend_coloring: total seed is not a coupon coloring");
        return s_coloring;
    }
    if (is_bipartite(g).parts) return extend_coloring_bipartite(g, s_coloring, f, observer);
    if (!is_connected(g)) throw std::invalid_argument("extend_coloring: graph is not connected");

    DoubleCoverMap cover = double_cover(g);
    Coloring seed(cover.graph.n());
    for (int v = 0; v < g.n(); ++v)
        if (s_coloring.is_set(v)) {
            seed.set(cover.up(v), s_coloring.get(v));
            seed.set(cover.down(v), s_coloring.get(v));
        }
    Coloring cc = extend_coloring_bipartite(cover.graph, seed, lift_factor(f, cover), observer);
    Coloring out(g.n());
    for (int v = 0; v < g.n(); ++v) out.set(v, cc.get(cover.up(v)));
    if (!verify_coupon(g, out).is_coupon)
        throw std::logic_error("extend_coloring: projected coloring failed verification");
    return out;
}

namespace {

Bipartition restrict_parts(const Bipartition& parts, const InducedSubgraph& sub) {
    Bipartition out;
    out.side.resize(sub.new_to_old.size());
    for (size_t i = 0; i < sub.new_to_old.size(); ++i)
        out.side[i] = parts.side[sub.new_to_old[i]];
    return out;
}

OneTwoFactor matching_as_factor(const Matching& m, const InducedSubgraph& sub) {
    OneTwoFactor f;
    for (auto [a, b] : m.edges)
        f.components.push_back(OneTwoFactor::edge(sub.new_to_old[a], sub.new_to_old[b]));
    return f;
}

}  // namespace

Coloring color_cubic_with_c4(const Graph& g, const WalkObserver& observer) {
    if (!validate_cubic(g).ok) throw std::invalid_argument("color_cubic_with_c4: not cubic");
    if (!is_connected(g)) throw std::invalid_argument("color_cubic_with_c4: not connected");
    auto c4 = find_cycle(g, 4);
    if (!c4) throw std::invalid_argument("color_cubic_with_c4: no 4-cycle");
    const auto& cyc = *c4;

    auto bip = is_bipartite(g);
    if (bip.parts) {
        Coloring seed(g.n());
        seed.set(cyc[0], 0);
        seed.set(cyc[1], 0);
        seed.set(cyc[2], 1);
        seed.set(cyc[3], 1);
        InducedSubgraph rest = remove_vertices(g, cyc);
        auto pm = perfect_matching_or_witness(rest.graph, restrict_parts(*bip.parts, rest));
        if (!std::holds_alternative<Matching>(pm))
            throw std::logic_error("color_cubic_with_c4: complement of the 4-cycle has no "
                                   "perfect matching");
        return extend_coloring_bipartite(g, seed, matching_as_factor(std::get<Matching>(pm), rest),
                                         observer);
    }

    // Non-bipartite: the 4-cycle lifts to two disjoint 4-cycles in the double
    // cover; seed one of them and extend there.
    DoubleCoverMap cover = double_cover(g);
    std::vector<int> c1 = {cover.up(cyc[0]), cover.down(cyc[1]), cover.up(cyc[2]),
                           cover.down(cyc[3])};
    Coloring seed(cover.graph.n());
    seed.set(c1[0], 0);
    seed.set(c1[1], 0);
    seed.set(c1[2], 1);
    seed.set(c1[3], 1);
    Bipartition cover_parts;
    cover_parts.side.assign(cover.graph.n(), 0);
    for (int v = 0; v < g.n(); ++v) cover_parts.side[cover.down(v)] = 1;
    InducedSubgraph rest = remove_vertices(cover.graph, c1);
    auto pm = perfect_matching_or_witness(rest.graph, restrict_parts(cover_parts, rest));
    if (!std::holds_alternative<Matching>(pm))
        throw std::logic_error("color_cubic_with_c4: cover minus the lifted 4-cycle has no "
                               "perfect matching");
    Coloring cc = extend_coloring_bipartite(cover.graph, seed,
                                            matching_as_factor(std::get<Matching>(pm), rest),
                                            observer);
    Coloring out(g.n());
    for (int v = 0; v < g.n(); ++v) out.set(v, cc.get(cover.up(v)));
    if (!verify_coupon(g, out).is_coupon)
        throw std::logic_error("color_cubic_with_c4: projected coloring failed verification");
    return out;
}

}  // namespace couponkit
