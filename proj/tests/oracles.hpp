// Test-only brute-force oracles, kept independent of the library code paths
// they are used to check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <vector>

#include "couponkit/graph.hpp"

namespace oracles {

// Girth by edge removal: for every edge (u,v), the shortest u-v path in
// G - uv plus the edge itself is a cycle; the minimum over all edges is the
// girth. Independent of the BFS-from-every-root production routine.
inline int girth_by_edge_removal(const couponkit::Graph& g) {
    int best = couponkit::kInfiniteGirth;
    for (auto [eu, ev] : g.edges()) {
        std::vector<int> dist(g.n(), -1);
        dist[eu] = 0;
        std::deque<int> q{eu};
        while (!q.empty()) {
            int a = q.front();
            q.pop_front();
            for (int b : g.neighbors(a)) {
                if (a == eu && b == ev) continue;
                if (a == ev && b == eu) continue;
                if (dist[b] == -1) {
                    dist[b] = dist[a] + 1;
                    q.push_back(b);
                }
            }
        }
        if (dist[ev] != -1) best = std::min(best, dist[ev] + 1);
    }
    return best;
}

// Maximum matching by branching on the first remaining edge.
inline int max_matching_size(const couponkit::Graph& g) {
    auto edges = g.edges();
    std::vector<char> used(g.n(), 0);
    auto rec = [&](auto&& self, size_t idx) -> int {
        while (idx < edges.size() && (used[edges[idx].first] || used[edges[idx].second])) ++idx;
        if (idx == edges.size()) return 0;
        auto [u, v] = edges[idx];
        int skip = self(self, idx + 1);
        used[u] = used[v] = 1;
        int take = 1 + self(self, idx + 1);
        used[u] = used[v] = 0;
        return std::max(skip, take);
    };
    return rec(rec, 0);
}

// {1,2}-factor existence by scanning all edge subsets: spanning, max degree
// two, and no path component (a degree-1 vertex's partner must also have
// degree 1). Only usable at small m.
inline bool has_one_two_factor(const couponkit::Graph& g) {
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    const int n = g.n();
    if (n == 0) return true;
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        std::vector<int> deg(n, 0);
        std::vector<int> partner(n, -1);
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            if (!((mask >> i) & 1)) continue;
            auto [u, v] = edges[i];
            if (++deg[u] > 2 || ++deg[v] > 2) ok = false;
            partner[u] = v;
            partner[v] = u;
        }
        if (!ok) continue;
        for (int v = 0; v < n && ok; ++v) {
            if (deg[v] == 0) ok = false;
            if (deg[v] == 1) {
                // find the unique chosen neighbor and require it to be 1-regular too
                int other = -1;
                for (int i = 0; i < m; ++i)
                    if ((mask >> i) & 1) {
                        if (edges[i].first == v) other = edges[i].second;
                        if (edges[i].second == v) other = edges[i].first;
                    }
                if (other == -1 || deg[other] != 1) ok = false;
            }
        }
        if (ok) return true;
    }
    return false;
}

// Bad-vertex count by plain re-scan, written without the library's Coloring
// type so it cross-checks both the enumerator and verify_coupon.
inline int count_bad(const couponkit::Graph& g, const std::vector<int>& colors) {
    int bad = 0;
    for (int v = 0; v < g.n(); ++v) {
        int seen0 = 0, seen1 = 0;
        for (int w : g.neighbors(v)) (colors[w] == 0 ? seen0 : seen1) = 1;
        if (!(seen0 && seen1)) ++bad;
    }
    return bad;
}

// Exhaustive minimum bad count over all 2^n colorings, plain order.
inline int min_bad_exhaustive(const couponkit::Graph& g) {
    const int n = g.n();
    int best = n + 1;
    std::vector<int> colors(n, 0);
    for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits) {
        for (int v = 0; v < n; ++v) colors[v] = static_cast<int>((bits >> v) & 1);
        best = std::min(best, count_bad(g, colors));
    }
    return best;
}

// Isomorphism by scanning all vertex permutations; fine up to n of about 8.
inline bool is_isomorphic(const couponkit::Graph& a, const couponkit::Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    std::vector<int> perm(a.n());
    for (int i = 0; i < a.n(); ++i) perm[i] = i;
    do {
        bool ok = true;
        for (int u = 0; u < a.n() && ok; ++u)
            for (int v : a.neighbors(u))
                if (!b.has_edge(perm[u], perm[v])) {
                    ok = false;
                    break;
                }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline bool is_total_dominating(const couponkit::Graph& g, const std::vector<int>& s) {
    std::vector<char> in(g.n(), 0);
    for (int v : s) in[v] = 1;
    for (int v = 0; v < g.n(); ++v) {
        bool hit = false;
        for (int w : g.neighbors(v)) hit = hit || in[w];
        if (!hit) return false;
    }
    return true;
}

}  // namespace oracles
