#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "couponkit/graph.hpp"
#include "couponkit/generators.hpp"

namespace couponkit {

enum class SolveStatus { kSat, kUnsat, kUnknown };

struct SolveStats {
    std::uint64_t decisions = 0;
    std::uint64_t propagations = 0;
    double elapsed_seconds = 0.0;
};

struct SolveResult {
    SolveStatus status = SolveStatus::kUnknown;
    std::optional<Coloring> witness;  // present iff SAT, passes verify_coupon
    SolveStats stats;
};

struct SolveOptions {
    // Pin vertex 0 to color 0; sound because complementing a coupon coloring
    // yields a coupon coloring.
    bool fix_first = false;
    // Abort with kUnknown after this many decisions (0 = unlimited).
    std::uint64_t decision_budget = 0;
};

// Complete backtracking decision procedure for 2-coupon colorability. Each
// vertex contributes two at-least-one clauses over its neighborhood ("some
// neighbor is 0", "some neighbor is 1"); unit propagation runs on per-clause
// counters and branching picks the vertex appearing in the most nearly-violated
// clauses (ties by smallest id, value 0 before 1).
SolveResult decide(const Graph& g, const SolveOptions& opts = {});

struct EnumerationResult {
    int min_bad = 0;
    Coloring achiever;  // lexicographically smallest minimizer
    std::vector<std::uint64_t> histogram;  // colorings per bad-vertex count
    std::uint64_t scanned = 0;
};

// Exhaustive scan of all 2^n total colorings, reporting the exact minimum
// number of bad vertices. Only the half-space with color(0) = 0 is walked;
// complementation supplies the other half. Rejects n > limit_n.
EnumerationResult enumerate_min_bad(const Graph& g, int limit_n = 24);

struct Lemma2Report {
    bool ok = false;
    std::uint64_t qualifying = 0;  // colorings good outside {u, v}
    std::optional<Coloring> counterexample;
};

// Brute-force check of the same-color condition across a deleted edge: in
// every 2-coloring of h_minus_e whose only possibly-bad vertices are the
// ports u and v, port u must share the common color of v's two remaining
// neighbors, and symmetrically for v.
Lemma2Report check_lemma2(const PortedGraph& h_minus_e, const Graph& full_h);

struct TdsSolveResult {
    SolveStatus status = SolveStatus::kUnknown;
    std::optional<TdsPair> pair;  // present iff SAT
    SolveStats stats;
};

// Decides whether g splits into two vertex-disjoint total dominating sets by
// delegating to decide() and converting the witness coloring.
TdsSolveResult decide_equiv_tds(const Graph& g, const SolveOptions& opts = {});

}  // namespace couponkit
