#include "couponkit/factors.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

namespace couponkit {

FactorComponent OneTwoFactor::edge(int u, int v) {
    return FactorComponent{{std::min(u, v), std::max(u, v)}};
}

FactorComponent OneTwoFactor::cycle(std::vector<int> verts) {
    if (verts.size() < 3) throw std::invalid_argument("factor cycle needs >= 3 vertices");
    return FactorComponent{std::move(verts)};
}

std::vector<std::pair<int, int>> OneTwoFactor::p2_edges() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& comp : components)
        if (comp.is_edge()) out.emplace_back(comp.vertices[0], comp.vertices[1]);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// Hopcroft-Karp state over an X/Y bipartition given by `parts`. mate[v] is
// the matched partner of v on either side, -1 if free.
struct HopcroftKarp {
    const Graph& g;
    std::vector<int> xs;
    std::vector<int> mate;
    std::vector<int> level;

    HopcroftKarp(const Graph& graph, const Bipartition& parts)
        : g(graph), xs(parts.side_vertices(0)), mate(graph.n(), -1), level(graph.n()) {}

    bool bfs_layers() {
        std::deque<int> q;
        std::fill(level.begin(), level.end(), kInf);
        for (int x : xs)
            if (mate[x] == -1) {
                level[x] = 0;
                q.push_back(x);
            }
        bool found_free = false;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int y : g.neighbors(x)) {
                int nx = mate[y];
                if (nx == -1) {
                    found_free = true;
                } else if (level[nx] == kInf) {
                    level[nx] = level[x] + 1;
                    q.push_back(nx);
                }
            }
        }
        return found_free;
    }

    bool augment(int x) {
        for (int y : g.neighbors(x)) {
            int nx = mate[y];
            if (nx == -1 || (level[nx] == level[x] + 1 && augment(nx))) {
                mate[x] = y;
                mate[y] = x;
                return true;
            }
        }
        level[x] = kInf;
        return false;
    }

    void run() {
        while (bfs_layers())
            for (int x : xs)
                if (mate[x] == -1) augment(x);
    }
};

void check_parts(const Graph& g, const Bipartition& parts) {
    if (static_cast<int>(parts.side.size()) != g.n())
        throw std::invalid_argument("bipartition size mismatch");
    for (auto [u, v] : g.edges())
        if (parts.side[u] == parts.side[v])
            throw std::invalid_argument("bipartition has a same-side edge");
}

Matching matching_from_mate(const std::vector<int>& mate) {
    Matching m;
    for (int v = 0; v < static_cast<int>(mate.size()); ++v)
        if (mate[v] > v) m.edges.emplace_back(v, mate[v]);
    return m;
}

// Alternating-reachability Hall violator grown from a free vertex: every
// reachable vertex on the opposite side is matched, and its partner joins the
// subset, so |S'| = |N(S')| + 1.
HallWitness hall_witness_from(const Graph& g, const std::vector<int>& mate, int root) {
    std::vector<char> in_subset(g.n(), 0), in_nbhd(g.n(), 0);
    std::deque<int> q{root};
    in_subset[root] = 1;
    HallWitness w;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : g.neighbors(x)) {
            if (in_nbhd[y]) continue;
            in_nbhd[y] = 1;
            int nx = mate[y];
            if (nx != -1 && !in_subset[nx]) {
                in_subset[nx] = 1;
                q.push_back(nx);
            }
        }
    }
    for (int v = 0; v < g.n(); ++v) {
        if (in_subset[v]) w.side_subset.push_back(v);
        if (in_nbhd[v]) w.neighborhood.push_back(v);
    }
    return w;
}

}  // namespace

Matching max_matching_bipartite(const Graph& g, const Bipartition& parts) {
    check_parts(g, parts);
    HopcroftKarp hk(g, parts);
    hk.run();
    return matching_from_mate(hk.mate);
}

std::variant<Matching, HallWitness> perfect_matching_or_witness(const Graph& g,
                                                                const Bipartition& parts) {
    check_parts(g, parts);
    HopcroftKarp hk(g, parts);
    hk.run();
    auto xs = parts.side_vertices(0);
    auto ys = parts.side_vertices(1);
    // Take the witness root from the larger side so unbalanced inputs fail
    // with a genuine violator; any deficiency leaves that side with a free
    // vertex.
    const auto& probe = xs.size() >= ys.size() ? xs : ys;
    for (int v : probe)
        if (hk.mate[v] == -1) return hall_witness_from(g, hk.mate, v);
    return matching_from_mate(hk.mate);
}

std::optional<OneTwoFactor> one_two_factor(const Graph& g) {
    const int n = g.n();
    if (n == 0) return OneTwoFactor{};
    DoubleCoverMap cover = double_cover(g);
    Bipartition parts;
    parts.side.assign(2 * n, 0);
    for (int i = 0; i < n; ++i) parts.side[cover.down(i)] = 1;
    auto res = perfect_matching_or_witness(cover.graph, parts);
    if (!std::holds_alternative<Matching>(res)) return std::nullopt;

    // A perfect matching of the cover selects one successor per base vertex:
    // u_i matched to w_j reads as i -> j. Every vertex has one successor and
    // one predecessor, so the selection decomposes into directed cycles;
    // 2-cycles are doubly-matched base edges.
    std::vector<int> succ(n, -1);
    for (auto [a, b] : std::get<Matching>(res).edges) {
        int up = cover.is_up(a) ? a : b;
        int down = cover.is_up(a) ? b : a;
        succ[cover.base(up)] = cover.base(down);
    }
    OneTwoFactor f;
    std::vector<char> done(n, 0);
    for (int s = 0; s < n; ++s) {
        if (done[s]) continue;
        if (succ[succ[s]] == s) {
            f.components.push_back(OneTwoFactor::edge(s, succ[s]));
            done[s] = done[succ[s]] = 1;
            continue;
        }
        std::vector<int> cyc;
        for (int v = s; !done[v]; v = succ[v]) {
            done[v] = 1;
            cyc.push_back(v);
        }
        f.components.push_back(OneTwoFactor::cycle(std::move(cyc)));
    }
    return f;
}

OneTwoFactor normalize_factor(const OneTwoFactor& f) {
    OneTwoFactor out;
    for (const auto& comp : f.components) {
        const auto& vs = comp.vertices;
        if (comp.is_edge() || vs.size() % 2 == 1) {
            out.components.push_back(comp);
            continue;
        }
        // Rotate the stored cycle so it starts at its smallest vertex, then
        // take alternate edges from there.
        auto lo = std::min_element(vs.begin(), vs.end());
        const size_t start = static_cast<size_t>(lo - vs.begin());
        for (size_t i = 0; i < vs.size(); i += 2) {
            int a = vs[(start + i) % vs.size()];
            int b = vs[(start + i + 1) % vs.size()];
            out.components.push_back(OneTwoFactor::edge(a, b));
        }
    }
    return out;
}

OneTwoFactor lift_factor(const OneTwoFactor& f, const DoubleCoverMap& cover) {
    OneTwoFactor out;
    for (const auto& comp : f.components) {
        const auto& vs = comp.vertices;
        if (comp.is_edge()) {
            out.components.push_back(OneTwoFactor::edge(cover.up(vs[0]), cover.down(vs[1])));
            out.components.push_back(OneTwoFactor::edge(cover.up(vs[1]), cover.down(vs[0])));
        } else if (vs.size() % 2 == 0) {
            std::vector<int> c1, c2;
            for (size_t i = 0; i < vs.size(); ++i) {
                c1.push_back(i % 2 == 0 ? cover.up(vs[i]) : cover.down(vs[i]));
                c2.push_back(i % 2 == 0 ? cover.down(vs[i]) : cover.up(vs[i]));
            }
            out.components.push_back(OneTwoFactor::cycle(std::move(c1)));
            out.components.push_back(OneTwoFactor::cycle(std::move(c2)));
        } else {
            // Odd cycle: go around twice, alternating copies.
            std::vector<int> c;
            for (size_t i = 0; i < 2 * vs.size(); ++i)
                c.push_back(i % 2 == 0 ? cover.up(vs[i % vs.size()]) : cover.down(vs[i % vs.size()]));
            out.components.push_back(OneTwoFactor::cycle(std::move(c)));
        }
    }
    return out;
}

FactorReport verify_factor(const Graph& g, const OneTwoFactor& f, const std::vector<int>& over) {
    FactorReport r;
    std::vector<char> expected(g.n(), 0), covered(g.n(), 0);
    for (int v : over) expected.at(v) = 1;
    for (const auto& comp : f.components) {
        const auto& vs = comp.vertices;
        if (vs.size() < 2) {
            r.problems.push_back("component with fewer than 2 vertices");
            continue;
        }
        for (int v : vs) {
            if (v < 0 || v >= g.n()) {
                r.problems.push_back("vertex " + std::to_string(v) + " out of range");
                continue;
            }
            if (covered[v]) r.problems.push_back("vertex " + std::to_string(v) + " covered twice");
            covered[v] = 1;
            if (!expected[v])
                r.problems.push_back("vertex " + std::to_string(v) + " outside the covered set");
        }
        if (comp.is_edge()) {
            if (!g.has_edge(vs[0], vs[1]))
                r.problems.push_back("edge component uses a non-edge");
        } else {
            for (size_t i = 0; i < vs.size(); ++i)
                if (!g.has_edge(vs[i], vs[(i + 1) % vs.size()])) {
                    r.problems.push_back("cycle component uses a non-edge");
                    break;
                }
        }
    }
    for (int v = 0; v < g.n(); ++v)
        if (expected[v] && !covered[v])
            r.problems.push_back("vertex " + std::to_string(v) + " not covered");
    r.ok = r.problems.empty();
    return r;
}

}  // namespace couponkit
