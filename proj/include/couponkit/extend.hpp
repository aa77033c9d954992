#pragma once

#include <functional>
#include <vector>

#include "couponkit/factors.hpp"
#include "couponkit/graph.hpp"

namespace couponkit {

// Walk u, x_1, y_1, x_2, y_2, ..., w whose edges alternate between non-A
// edges (odd steps) and A edges (even steps), where A is the current set of
// matching edges on the uncolored vertices. The first and last edges are
// non-A and both endpoints lie in the colored set; non-A edges never repeat.
struct GoodWalk {
    std::vector<int> verts;

    int start() const { return verts.front(); }
    int end() const { return verts.back(); }
    int steps() const { return static_cast<int>(verts.size()) - 1; }  // k, odd
    int pairs() const { return (steps() - 1) / 2; }                   // t = (k-1)/2
    int x(int i) const { return verts.at(2 * i - 1); }                // i in 1..t
    int y(int i) const { return verts.at(2 * i); }
};

// Working state of the coloring extension: a partial coloring whose set
// vertices form S, plus the matching A covering the uncolored remainder
// (a_mate[v] is v's partner, -1 once colored).
struct ExtensionState {
    Graph graph;
    Coloring coloring;
    std::vector<int> a_mate;

    bool in_s(int v) const { return coloring.is_set(v); }
    std::vector<std::pair<int, int>> a_edges() const;
};

// Builds the state from a seed coloring and a {1,2}-factor of the uncolored
// vertices: normalizes the factor and requires the result to be a perfect
// matching of V \ S (bipartite hosts have no odd cycles to leave behind).
ExtensionState make_extension_state(const Graph& g, const Coloring& s_coloring,
                                    const OneTwoFactor& f);

// Checks the GoodWalk invariants against a state: odd step count, endpoints
// in S, interior outside S, alternation against a_mate, host edges only,
// pairwise distinct non-A edges.
bool validate_good_walk(const ExtensionState& state, const GoodWalk& walk);

// Depth-first search for a good walk whose first edge is uv and whose last
// edge re-enters S. A-steps are forced through a_mate; non-A edges are
// consumed globally and tried smallest neighbor first. Throws std::logic_error
// if no such walk exists (the hypotheses guarantee one).
GoodWalk find_good_walk(const ExtensionState& state, int u, int v);

// Applies the two coloring passes of a walk: forward over the y_i (y_1 gets
// 1-c(u), later uncolored y_i get 1-c(y_{i-1})), then backward over the x_j
// (x_t gets 1-c(w), earlier uncolored x_j get 1-c(x_{j+1})). Colored vertices
// are skipped; recoloring a vertex to a different value throws.
void color_walk(ExtensionState& state, const GoodWalk& walk);

using WalkObserver = std::function<void(const ExtensionState&, const GoodWalk&)>;

// Grows a seed coupon coloring of G[S] to all of a connected bipartite cubic
// graph, one good walk at a time, consuming a {1,2}-factor of V \ S. The
// observer, when given, sees every walk just before it is colored.
Coloring extend_coloring_bipartite(const Graph& g, const Coloring& s_coloring,
                                   const OneTwoFactor& f, const WalkObserver& observer = {});

// Same contract without the bipartite requirement: non-bipartite hosts are
// lifted to their double cover (seeding both copies of every colored vertex),
// extended there, and projected back through the up-copy.
Coloring extend_coloring(const Graph& g, const Coloring& s_coloring, const OneTwoFactor& f,
                         const WalkObserver& observer = {});

// End-to-end pipeline: find a 4-cycle, seed it 0,0,1,1, obtain a perfect
// matching of the rest (in the double cover when the host is non-bipartite)
// and extend. Throws std::invalid_argument when the graph is not connected
// cubic with a 4-cycle.
Coloring color_cubic_with_c4(const Graph& g, const WalkObserver& observer = {});

}  // namespace couponkit
