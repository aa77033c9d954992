#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "couponkit/graph.hpp"

namespace couponkit {

// Graph together with named attachment vertices ("ports").
struct PortedGraph {
    Graph graph;
    std::map<std::string, int> ports;

    int port(const std::string& label) const { return ports.at(label); }
};

// Bipartite double cover of a base graph: vertices split into an "up" copy
// u_i = i and a "down" copy w_i = n + i, with u_i ~ w_j iff v_i ~ v_j.
struct DoubleCoverMap {
    Graph graph;
    Graph origin;

    int up(int v) const { return v; }
    int down(int v) const { return origin.n() + v; }
    // Base vertex of a cover vertex.
    int base(int cv) const { return cv < origin.n() ? cv : cv - origin.n(); }
    bool is_up(int cv) const { return cv < origin.n(); }
};

// The Heawood graph on vertices 0..13: rim edges {i, i+1 mod 14} plus chords
// {i, i+5 mod 14} for even i.
Graph heawood();

// Heawood minus the edge {0,1}; ports "u" = 0 and "v" = 1 are the two
// degree-2 vertices.
PortedGraph heawood_minus_e();

// Four vertices t,x,y,z (= 0..3) with edges tx, xy, xz, yz.
PortedGraph gadget_K();

// The 60-vertex cubic counterexample: four Heawood-minus-edge blocks wired
// through the t/x/y/z gadget. Block i occupies vertices 14(i-1)..14i-1 with
// ports u_i = 14(i-1), v_i = 14(i-1)+1; the gadget is t=56, x=57, y=58, z=59.
Graph counterexample60();

// Blocks used by the induced-r-cycle family. Each exposes its degree-2
// attachment vertices as ports "deg2_a" (and "deg2_b" for h2).
PortedGraph h1();  // one block plus a joint vertex, order 15
PortedGraph h2();  // two blocks joined u-to-u, order 28
PortedGraph h3();  // two blocks joined u-to-u plus a joint vertex, order 29

// Connected cubic graph with an induced r-cycle and no 2-coupon coloring,
// for r >= 3 not divisible by 4. r = 1 (mod 4) hangs h1 plus h2 copies off
// an r-cycle, r = 3 (mod 4) uses h3 instead, and r = 2 (mod 4) is the double
// cover of the r/2 construction.
Graph remark_graph(int r);

DoubleCoverMap double_cover(const Graph& g);

Graph k4();
Graph k33();      // sides {0,1,2} and {3,4,5}
Graph prism();    // triangles {0,1,2}, {3,4,5}, rungs i ~ i+3
Graph cube();     // Q3: i ~ j iff i xor j is a power of two
Graph petersen(); // outer 0..4, inner 5..9, spokes i ~ i+5
Graph cycle_graph(int n);
Graph path_graph(int n);

// Lookup by name for the CLI; throws std::invalid_argument on unknown names.
// cycle/path/random consume the size argument.
Graph named(const std::string& name, int size = 0, std::uint64_t seed = 0);

// Random cubic graph via the pairing model with rejection of loops and
// multi-edges. The PRNG is splitmix64 seeded directly with `seed`, points are
// shuffled by a Fisher-Yates pass drawing bounded values as next() % k, so a
// given (n, seed) yields the same edge list everywhere. When require_connected
// is set, resampling continues until the graph is connected. Gives up with a
// std::runtime_error after 10000 attempts; rejection makes that astronomically
// unlikely for valid inputs.
Graph random_cubic(int n, std::uint64_t seed, bool require_connected = false);

}  // namespace couponkit
