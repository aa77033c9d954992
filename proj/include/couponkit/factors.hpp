#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "couponkit/graph.hpp"
#include "couponkit/generators.hpp"

namespace couponkit {

// Vertex-disjoint edge set; pairs stored (min, max), sorted.
struct Matching {
    std::vector<std::pair<int, int>> edges;
};

// Certificate that Hall's condition fails: |neighborhood| < |side_subset|.
struct HallWitness {
    std::vector<int> side_subset;
    std::vector<int> neighborhood;
};

// Spanning subgraph whose components are single edges or cycles.
struct FactorComponent {
    // Edge components have exactly two vertices; cycles have >= 3, listed in
    // cycle order.
    std::vector<int> vertices;

    bool is_edge() const { return vertices.size() == 2; }
};

struct OneTwoFactor {
    std::vector<FactorComponent> components;

    static FactorComponent edge(int u, int v);
    static FactorComponent cycle(std::vector<int> verts);

    // All edges of two-vertex components, (min, max) sorted.
    std::vector<std::pair<int, int>> p2_edges() const;
};

// Maximum-cardinality matching via Hopcroft-Karp layered augmentation.
Matching max_matching_bipartite(const Graph& g, const Bipartition& parts);

// Either a matching covering every vertex, or a subset of one side whose
// neighborhood is smaller than itself (a Hall violator). Unbalanced sides
// always yield a witness, extracted from the larger side.
std::variant<Matching, HallWitness> perfect_matching_or_witness(const Graph& g,
                                                                const Bipartition& parts);

// Spanning subgraph with every component an edge or a cycle, or nullopt when
// none exists. Computed as a perfect matching of the bipartite double cover:
// a base edge matched in both orientations projects to an edge component, the
// remaining matched pairs close into cycles.
std::optional<OneTwoFactor> one_two_factor(const Graph& g);

// Replaces every even cycle by its alternate-edge perfect matching, starting
// the alternation at the cycle's smallest vertex. Odd cycles and edges pass
// through unchanged.
OneTwoFactor normalize_factor(const OneTwoFactor& f);

// Lifts a factor of the base graph into the double cover: an edge {i,j}
// becomes the two edges {u_i,w_j}, {u_j,w_i}; an even cycle becomes two
// disjoint cycles of the same length; an odd cycle of length 2t+1 becomes a
// single cycle of length 4t+2.
OneTwoFactor lift_factor(const OneTwoFactor& f, const DoubleCoverMap& cover);

// Checks disjointness, exact coverage of `over`, host edges only, and cycle
// well-formedness.
FactorReport verify_factor(const Graph& g, const OneTwoFactor& f, const std::vector<int>& over);

}  // namespace couponkit
