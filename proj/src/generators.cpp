#include "couponkit/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace couponkit {

namespace {

void append_block(std::vector<std::pair<int, int>>& edges, const Graph& block, int offset) {
    for (auto [u, v] : block.edges()) edges.emplace_back(u + offset, v + offset);
}

}  // namespace

Graph heawood() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 14; ++i) edges.emplace_back(std::min(i, (i + 1) % 14), std::max(i, (i + 1) % 14));
    for (int i = 0; i < 14; i += 2) edges.emplace_back(std::min(i, (i + 5) % 14), std::max(i, (i + 5) % 14));
    return Graph::from_edges(14, edges);
}

PortedGraph heawood_minus_e() {
    std::vector<std::pair<int, int>> edges;
    for (auto e : heawood().edges())
        if (e != std::pair<int, int>{0, 1}) edges.push_back(e);
    return PortedGraph{Graph::from_edges(14, edges), {{"u", 0}, {"v", 1}}};
}

PortedGraph gadget_K() {
    // t=0, x=1, y=2, z=3
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
    return PortedGraph{g, {{"t", 0}, {"x", 1}, {"y", 2}, {"z", 3}}};
}

Graph counterexample60() {
    const Graph block = heawood_minus_e().graph;
    std::vector<std::pair<int, int>> edges;
    int u[5], v[5];
    for (int i = 1; i <= 4; ++i) {
        int off = 14 * (i - 1);
        append_block(edges, block, off);
        u[i] = off;
        v[i] = off + 1;
    }
    const int t = 56, x = 57, y = 58, z = 59;
    edges.insert(edges.end(), {{t, x}, {x, y}, {x, z}, {y, z}});
    edges.emplace_back(v[1], t);
    edges.emplace_back(v[2], t);
    edges.emplace_back(u[3], y);
    edges.emplace_back(u[4], z);
    edges.emplace_back(u[1], u[2]);
    edges.emplace_back(v[3], v[4]);
    return Graph::from_edges(60, edges);
}

PortedGraph h1() {
    const PortedGraph block = heawood_minus_e();
    std::vector<std::pair<int, int>> edges;
    append_block(edges, block.graph, 0);
    const int z = 14;
    edges.emplace_back(block.port("u"), z);
    edges.emplace_back(block.port("v"), z);
    return PortedGraph{Graph::from_edges(15, edges), {{"deg2_a", z}}};
}

PortedGraph h2() {
    const PortedGraph block = heawood_minus_e();
    std::vector<std::pair<int, int>> edges;
    append_block(edges, block.graph, 0);
    append_block(edges, block.graph, 14);
    edges.emplace_back(block.port("u"), block.port("u") + 14);
    return PortedGraph{Graph::from_edges(28, edges),
                       {{"deg2_a", block.port("v")}, {"deg2_b", block.port("v") + 14}}};
}

PortedGraph h3() {
    const PortedGraph block = heawood_minus_e();
    std::vector<std::pair<int, int>> edges;
    append_block(edges, block.graph, 0);
    append_block(edges, block.graph, 14);
    edges.emplace_back(block.port("u"), block.port("u") + 14);
    const int z = 28;
    edges.emplace_back(block.port("v"), z);
    edges.emplace_back(block.port("v") + 14, z);
    return PortedGraph{Graph::from_edges(29, edges), {{"deg2_a", z}}};
}

Graph remark_graph(int r) {
    if (r < 3 || r % 4 == 0)
        throw std::invalid_argument("remark_graph: r must be >= 3 and not divisible by 4");
    if (r % 4 == 2) return double_cover(remark_graph(r / 2)).graph;

    // r odd: cycle v_1..v_r on vertices 0..r-1 (v_i = i-1), the head block
    // (h1 or h3) hanging off v_1, then (r-1)/2 copies of h2 attached to the
    // pairs (v_2,v_3), (v_4,v_5), ...
    const PortedGraph head = (r % 4 == 1) ? h1() : h3();
    const PortedGraph pair_block = h2();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < r; ++i) edges.emplace_back(std::min(i, (i + 1) % r), std::max(i, (i + 1) % r));
    int off = r;
    append_block(edges, head.graph, off);
    edges.emplace_back(0, off + head.port("deg2_a"));
    off += head.graph.n();
    for (int k = 1; k <= (r - 1) / 2; ++k) {
        append_block(edges, pair_block.graph, off);
        edges.emplace_back(2 * k - 1, off + pair_block.port("deg2_a"));
        edges.emplace_back(2 * k, off + pair_block.port("deg2_b"));
        off += pair_block.graph.n();
    }
    return Graph::from_edges(off, edges);
}

DoubleCoverMap double_cover(const Graph& g) {
    const int n = g.n();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * g.m());
    for (auto [i, j] : g.edges()) {
        edges.emplace_back(i, n + j);
        edges.emplace_back(j, n + i);
    }
    return DoubleCoverMap{Graph::from_edges(2 * n, edges), g};
}

Graph k4() {
    return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Graph k33() {
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < 3; ++x)
        for (int y = 3; y < 6; ++y) edges.emplace_back(x, y);
    return Graph::from_edges(6, edges);
}

Graph prism() {
    return Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5},
                                 {0, 3}, {1, 4}, {2, 5}});
}

Graph cube() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 8; ++i)
        for (int b = 0; b < 3; ++b)
            if (int j = i ^ (1 << b); i < j) edges.emplace_back(i, j);
    return Graph::from_edges(8, edges);
}

Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
        edges.emplace_back(std::min(5 + i, 5 + (i + 2) % 5), std::max(5 + i, 5 + (i + 2) % 5));
        edges.emplace_back(i, i + 5);
    }
    return Graph::from_edges(10, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph named(const std::string& name, int size, std::uint64_t seed) {
    if (name == "heawood") return heawood();
    if (name == "heawood-minus-e") return heawood_minus_e().graph;
    if (name == "gadget-k") return gadget_K().graph;
    if (name == "counterexample60") return counterexample60();
    if (name == "h1") return h1().graph;
    if (name == "h2") return h2().graph;
    if (name == "h3") return h3().graph;
    if (name == "remark") return remark_graph(size);
    if (name == "k4") return k4();
    if (name == "k33") return k33();
    if (name == "prism") return prism();
    if (name == "cube") return cube();
    if (name == "petersen") return petersen();
    if (name == "cycle") return cycle_graph(size);
    if (name == "path") return path_graph(size);
    if (name == "random") return random_cubic(size, seed);
    if (name == "random-connected") return random_cubic(size, seed, true);
    throw std::invalid_argument("named: unknown graph '" + name + "'");
}

namespace {

struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t bounded(std::uint64_t k) { return next() % k; }
};

}  // namespace

Graph random_cubic(int n, std::uint64_t seed, bool require_connected) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("random_cubic: n must be even and >= 4");
    constexpr int kMaxTries = 10000;
    SplitMix64 rng{seed};
    std::vector<int> points(3 * n);
    for (int attempt = 0; attempt < kMaxTries; ++attempt) {
        for (int i = 0; i < 3 * n; ++i) points[i] = i;
        for (int i = 3 * n - 1; i > 0; --i)
            std::swap(points[i], points[rng.bounded(static_cast<std::uint64_t>(i) + 1)]);
        std::vector<std::pair<int, int>> edges;
        edges.reserve(3 * n / 2);
        bool ok = true;
        for (int i = 0; ok && i < 3 * n; i += 2) {
            int u = points[i] / 3, v = points[i + 1] / 3;
            if (u == v) ok = false;
            else edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        if (!ok) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        Graph g = Graph::from_edges(n, edges);
        if (require_connected && !is_connected(g)) continue;
        return g;
    }
    throw std::runtime_error("random_cubic: retry cap exhausted");
}

}  // namespace couponkit
