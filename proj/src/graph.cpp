#include "couponkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <stdexcept>

namespace couponkit {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    Graph g;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: self-loop");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& a = g.adj_[v];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw std::invalid_argument("graph: duplicate edge");
    }
    g.m_ = static_cast<int>(edges.size());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj_.at(u);
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::min_degree() const {
    int d = std::numeric_limits<int>::max();
    for (const auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
    return adj_.empty() ? 0 : d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Coloring Coloring::from_values(const std::vector<int>& values) {
    Coloring c(static_cast<int>(values.size()));
    for (int v = 0; v < c.size(); ++v) c.set(v, values[v]);
    return c;
}

void Coloring::set(int v, int color) {
    if (color != 0 && color != 1)
        throw std::invalid_argument("coloring: color must be 0 or 1");
    colors_.at(v) = static_cast<signed char>(color);
}

bool Coloring::is_total() const {
    return std::find(colors_.begin(), colors_.end(), kUnset) == colors_.end();
}

std::vector<int> Coloring::color_class(int color) const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (colors_[v] == color) out.push_back(v);
    return out;
}

std::vector<int> Bipartition::side_vertices(int s) const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(side.size()); ++v)
        if (side[v] == s) out.push_back(v);
    return out;
}

DegreeReport validate_cubic(const Graph& g) {
    DegreeReport r;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != 3) r.offending.push_back(v);
    r.ok = r.offending.empty();
    return r;
}

BipartiteResult is_bipartite(const Graph& g) {
    const int n = g.n();
    std::vector<signed char> side(n, -1);
    std::vector<int> parent(n, -1);
    BipartiteResult res;
    for (int root = 0; root < n; ++root) {
        if (side[root] != -1) continue;
        side[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (side[v] == -1) {
                    side[v] = static_cast<signed char>(1 - side[u]);
                    parent[v] = u;
                    q.push(v);
                } else if (side[v] == side[u]) {
                    // Odd closed walk: join the two BFS-tree paths at their
                    // lowest common ancestor to get a simple odd cycle.
                    std::vector<int> pu, pv;
                    for (int x = u; x != -1; x = parent[x]) pu.push_back(x);
                    for (int x = v; x != -1; x = parent[x]) pv.push_back(x);
                    std::reverse(pu.begin(), pu.end());
                    std::reverse(pv.begin(), pv.end());
                    size_t k = 0;
                    while (k + 1 < pu.size() && k + 1 < pv.size() && pu[k + 1] == pv[k + 1]) ++k;
                    std::vector<int> cycle(pu.begin() + k, pu.end());
                    for (size_t i = pv.size(); i-- > k + 1;) cycle.push_back(pv[i]);
                    res.odd_cycle = std::move(cycle);
                    return res;
                }
            }
        }
    }
    res.parts = Bipartition{std::move(side)};
    return res;
}

namespace {

std::vector<int> component_ids(const Graph& g, int& count) {
    std::vector<int> comp(g.n(), -1);
    count = 0;
    for (int root = 0; root < g.n(); ++root) {
        if (comp[root] != -1) continue;
        comp[root] = count;
        std::deque<int> q{root};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : g.neighbors(u))
                if (comp[v] == -1) {
                    comp[v] = count;
                    q.push_back(v);
                }
        }
        ++count;
    }
    return comp;
}

}  // namespace

bool is_connected(const Graph& g) {
    return component_count(g) <= 1;
}

int component_count(const Graph& g) {
    int count = 0;
    component_ids(g, count);
    return count;
}

int girth(const Graph& g) {
    // BFS from every root; a non-tree edge (u, w) seen at depth d closes a
    // cycle of length dist[u] + dist[w] + 1. The minimum over all roots is
    // exact for unweighted graphs.
    const int n = g.n();
    int best = kInfiniteGirth;
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[root] = 0;
        std::deque<int> q{root};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            if (best != kInfiniteGirth && 2 * dist[u] >= best) break;
            for (int w : g.neighbors(u)) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

namespace {

bool extend_cycle(const Graph& g, std::vector<int>& path, std::vector<char>& used, int len) {
    if (static_cast<int>(path.size()) == len)
        return g.has_edge(path.back(), path.front());
    for (int w : g.neighbors(path.back())) {
        if (used[w]) continue;
        used[w] = 1;
        path.push_back(w);
        if (extend_cycle(g, path, used, len)) return true;
        path.pop_back();
        used[w] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_cycle(const Graph& g, int len) {
    if (len < 3) throw std::invalid_argument("find_cycle: len must be >= 3");
    std::vector<char> used(g.n(), 0);
    for (int root = 0; root < g.n(); ++root) {
        std::vector<int> path{root};
        used[root] = 1;
        if (extend_cycle(g, path, used, len)) return path;
        used[root] = 0;
    }
    return std::nullopt;
}

namespace {

// Extends a chordless path; the closing vertex must see the root and nothing
// else in the path interior.
bool extend_chordless(const Graph& g, std::vector<int>& path, std::vector<char>& used, int r) {
    const int k = static_cast<int>(path.size());
    if (k == r) return g.has_edge(path.back(), path.front());
    for (int w : g.neighbors(path.back())) {
        if (used[w] || w < path.front()) continue;
        bool chord = false;
        for (int i = 0; i + 1 < k && !chord; ++i) {
            if (g.has_edge(w, path[i])) {
                // An edge back to the root is only allowed on the final vertex.
                chord = !(i == 0 && k == r - 1);
            }
        }
        if (chord) continue;
        used[w] = 1;
        path.push_back(w);
        if (extend_chordless(g, path, used, r)) return true;
        path.pop_back();
        used[w] = 0;
    }
    return false;
}

}  // namespace

bool contains_induced_cycle(const Graph& g, int r, int max_n) {
    if (r < 3) throw std::invalid_argument("contains_induced_cycle: r must be >= 3");
    if (g.n() > max_n)
        throw std::invalid_argument("contains_induced_cycle: graph exceeds size cap");
    if (r == 3) return find_cycle(g, 3).has_value();  // triangles are always induced
    std::vector<char> used(g.n(), 0);
    for (int root = 0; root < g.n(); ++root) {
        std::vector<int> path{root};
        used[root] = 1;
        if (extend_chordless(g, path, used, r)) return true;
        used[root] = 0;
    }
    return false;
}

bool is_good_vertex(const Graph& g, const Coloring& c, int v) {
    if (!c.is_total()) throw std::invalid_argument("is_good_vertex: partial coloring");
    if (g.degree(v) == 0) throw std::invalid_argument("is_good_vertex: isolated vertex");
    bool saw[2] = {false, false};
    for (int w : g.neighbors(v)) saw[c.get(w)] = true;
    return saw[0] && saw[1];
}

CouponReport verify_coupon(const Graph& g, const Coloring& c) {
    if (c.size() != g.n())
        throw std::invalid_argument("verify_coupon: coloring size mismatch");
    if (!c.is_total()) throw std::invalid_argument("verify_coupon: partial coloring");
    if (g.n() > 0 && g.min_degree() == 0)
        throw std::invalid_argument("verify_coupon: graph has an isolated vertex");
    CouponReport r;
    for (int v = 0; v < g.n(); ++v)
        if (!is_good_vertex(g, c, v)) r.bad_vertices.push_back(v);
    r.is_coupon = r.bad_vertices.empty();
    return r;
}

TdsPair tds_pair_from_coloring(const Graph& g, const Coloring& c) {
    if (!verify_coupon(g, c).is_coupon)
        throw std::invalid_argument("tds_pair_from_coloring: not a coupon coloring");
    return TdsPair{c.color_class(0), c.color_class(1)};
}

namespace {

bool totally_dominates(const Graph& g, const std::vector<int>& s) {
    std::vector<char> in(g.n(), 0);
    for (int v : s) in.at(v) = 1;
    for (int v = 0; v < g.n(); ++v) {
        bool dominated = false;
        for (int w : g.neighbors(v))
            if (in[w]) {
                dominated = true;
                break;
            }
        if (!dominated) return false;
    }
    return true;
}

}  // namespace

Coloring coloring_from_tds_pair(const Graph& g, const TdsPair& p) {
    std::vector<char> in0(g.n(), 0);
    for (int v : p.s0) in0.at(v) = 1;
    for (int v : p.s1)
        if (in0.at(v)) throw std::invalid_argument("coloring_from_tds_pair: sets intersect");
    if (!totally_dominates(g, p.s0) || !totally_dominates(g, p.s1))
        throw std::invalid_argument("coloring_from_tds_pair: set is not totally dominating");
    Coloring c(g.n());
    for (int v = 0; v < g.n(); ++v) c.set(v, 1);
    for (int v : p.s0) c.set(v, 0);
    return c;
}

InducedSubgraph remove_vertices(const Graph& g, const std::vector<int>& drop) {
    std::vector<char> dropped(g.n(), 0);
    for (int v : drop) dropped.at(v) = 1;
    InducedSubgraph out;
    out.old_to_new.assign(g.n(), -1);
    for (int v = 0; v < g.n(); ++v) {
        if (dropped[v]) continue;
        out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
        out.new_to_old.push_back(v);
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (!dropped[u] && !dropped[v])
            edges.emplace_back(out.old_to_new[u], out.old_to_new[v]);
    out.graph = Graph::from_edges(static_cast<int>(out.new_to_old.size()), edges);
    return out;
}

}  // namespace couponkit
