#pragma once

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace couponkit {

// Simple undirected graph on vertices 0..n-1, adjacency lists sorted
// ascending. Immutable after construction; all operations on it are pure.
class Graph {
public:
    Graph() = default;

    // Builds a graph from an edge list. Throws std::invalid_argument on
    // self-loops, duplicate edges or out-of-range endpoints.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    bool has_edge(int u, int v) const;
    int min_degree() const;

    // Edges as (u, v) pairs with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

// Per-vertex color assignment over {0, 1} with an explicit unset state,
// so colorings can be built incrementally.
class Coloring {
public:
    static constexpr int kUnset = -1;

    Coloring() = default;
    explicit Coloring(int n) : colors_(n, kUnset) {}

    // Total coloring from 0/1 values.
    static Coloring from_values(const std::vector<int>& values);

    int size() const { return static_cast<int>(colors_.size()); }
    int get(int v) const { return colors_.at(v); }
    bool is_set(int v) const { return colors_.at(v) != kUnset; }
    void set(int v, int color);
    void unset(int v) { colors_.at(v) = kUnset; }
    bool is_total() const;

    // Vertices with the given color, ascending.
    std::vector<int> color_class(int color) const;

    bool operator==(const Coloring& other) const = default;

private:
    std::vector<signed char> colors_;
};

// Result of checking every vertex for the coupon property (both colors
// present in its open neighborhood).
struct CouponReport {
    std::vector<int> bad_vertices;  // sorted ascending
    bool is_coupon = false;         // true iff bad_vertices empty
};

// Two-sided vertex partition; side[v] is 0 (X) or 1 (Y).
struct Bipartition {
    std::vector<signed char> side;

    std::vector<int> side_vertices(int s) const;
};

// Outcome of the bipartiteness test: exactly one of the two members is set.
struct BipartiteResult {
    std::optional<Bipartition> parts;
    std::vector<int> odd_cycle;  // witness, in cycle order, when parts is empty
};

// Two disjoint total dominating sets.
struct TdsPair {
    std::vector<int> s0;
    std::vector<int> s1;
};

struct DegreeReport {
    bool ok = false;
    std::vector<int> offending;  // vertices with degree != 3, ascending
};

struct FactorReport {
    bool ok = false;
    std::vector<std::string> problems;
};

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

DegreeReport validate_cubic(const Graph& g);

BipartiteResult is_bipartite(const Graph& g);

bool is_connected(const Graph& g);
int component_count(const Graph& g);

// Length of a shortest cycle, kInfiniteGirth for forests.
int girth(const Graph& g);

// Some cycle of exactly `len` vertices, or nullopt. Deterministic: roots are
// tried in ascending order and paths extend by ascending neighbor id.
std::optional<std::vector<int>> find_cycle(const Graph& g, int len);

// True iff some r-subset induces exactly an r-cycle. Backtracking over
// chordless paths; refuses graphs larger than max_n.
bool contains_induced_cycle(const Graph& g, int r, int max_n = 150);

// True iff both colors appear among the neighbors of v. Requires a total
// coloring and a non-isolated vertex.
bool is_good_vertex(const Graph& g, const Coloring& c, int v);

// Classifies every vertex as good or bad under a total coloring.
CouponReport verify_coupon(const Graph& g, const Coloring& c);

// Splits a verified coupon coloring into its two color classes; each class
// is a total dominating set.
TdsPair tds_pair_from_coloring(const Graph& g, const Coloring& c);

// Colors s0 with 0, s1 with 1 and the uncovered remainder with 1. Validates
// that the pair is disjoint and both sets totally dominate.
Coloring coloring_from_tds_pair(const Graph& g, const TdsPair& p);

// Induced subgraph on V \ drop plus the monotone old->new id map (-1 for
// dropped vertices).
struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new;
    std::vector<int> new_to_old;
};

InducedSubgraph remove_vertices(const Graph& g, const std::vector<int>& drop);

}  // namespace couponkit
