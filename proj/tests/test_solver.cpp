#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "couponkit/generators.hpp"
#include "couponkit/graph.hpp"
#include "couponkit/solver.hpp"
#include "oracles.hpp"

using namespace couponkit;

TEST_CASE("decide on named graphs") {
    auto sat = decide(k33());
    REQUIRE(sat.status == SolveStatus::kSat);
    CHECK(verify_coupon(k33(), *sat.witness).is_coupon);

    CHECK(decide(heawood()).status == SolveStatus::kUnsat);
    CHECK(decide(cycle_graph(4)).status == SolveStatus::kSat);
    CHECK(decide(k4()).status == SolveStatus::kSat);
    CHECK(decide(cube()).status == SolveStatus::kSat);
    CHECK(decide(path_graph(3)).status == SolveStatus::kUnsat);
    CHECK(decide(path_graph(2)).status == SolveStatus::kUnsat);

    Graph iso = Graph::from_edges(2, {});
    CHECK_THROWS_AS(decide(iso), std::invalid_argument);
}

TEST_CASE("decide budget reports unknown") {
    SolveOptions opts;
    opts.decision_budget = 3;
    CHECK(decide(counterexample60(), opts).status == SolveStatus::kUnknown);
}

TEST_CASE("decide is deterministic and complement-symmetric") {
    for (int s = 1; s <= 20; ++s) {
        Graph g = random_cubic(12, s);
        SolveResult a = decide(g);
        SolveResult b = decide(g);
        CHECK(a.status == b.status);
        CHECK(a.stats.decisions == b.stats.decisions);
        CHECK(a.stats.propagations == b.stats.propagations);
        CHECK(a.witness == b.witness);

        SolveOptions pin;
        pin.fix_first = true;
        SolveResult c = decide(g, pin);
        CHECK(c.status == a.status);
        if (c.witness) CHECK(c.witness->get(0) == 0);
    }
}

TEST_CASE("decide agrees with exhaustive enumeration") {
    std::vector<Graph> corpus = {k4(), k33(), prism(), cube(), petersen(), heawood(),
                                 cycle_graph(4), cycle_graph(5), cycle_graph(7), path_graph(4)};
    for (int s = 1; s <= 15; ++s) corpus.push_back(random_cubic(12, s));
    for (int n : {16, 18, 20})  // a few above the usual corpus sizes
        for (int s = 1; s <= 2; ++s) corpus.push_back(random_cubic(n, 40 + s));
    for (const auto& g : corpus) {
        auto e = enumerate_min_bad(g);
        auto d = decide(g);
        CHECK(d.status == (e.min_bad == 0 ? SolveStatus::kSat : SolveStatus::kUnsat));
    }
}

TEST_CASE("enumerate_min_bad") {
    auto h = enumerate_min_bad(heawood());
    CHECK(h.min_bad == 2);
    CHECK(verify_coupon(heawood(), h.achiever).bad_vertices.size() == 2);
    std::uint64_t total = std::accumulate(h.histogram.begin(), h.histogram.end(), 0ULL);
    CHECK(total == (1ULL << 14));
    CHECK(h.histogram[0] == 0);
    CHECK(h.histogram[1] == 0);
    CHECK(h.histogram[2] > 0);

    CHECK(enumerate_min_bad(k4()).min_bad == 0);
    CHECK(enumerate_min_bad(cycle_graph(4)).min_bad == 0);
    CHECK(enumerate_min_bad(cycle_graph(5)).min_bad > 0);

    CHECK_THROWS_AS(enumerate_min_bad(counterexample60()), std::invalid_argument);
}

TEST_CASE("enumerate_min_bad matches the plain-order oracle") {
    std::vector<Graph> corpus = {k4(), cycle_graph(4), cycle_graph(5), path_graph(3),
                                 path_graph(5), prism(), k33()};
    for (int s = 1; s <= 10; ++s) corpus.push_back(random_cubic(8, s));
    for (const auto& g : corpus) {
        auto e = enumerate_min_bad(g);
        CHECK(e.min_bad == oracles::min_bad_exhaustive(g));
        std::vector<int> ac(g.n());
        for (int v = 0; v < g.n(); ++v) ac[v] = e.achiever.get(v);
        CHECK(oracles::count_bad(g, ac) == e.min_bad);
    }
}

TEST_CASE("enumerate achiever is the lexicographically smallest minimizer") {
    for (int s = 1; s <= 6; ++s) {
        Graph g = random_cubic(8, s);
        auto e = enumerate_min_bad(g);
        // plain scan in lexicographic bitstring order (vertex 0 most significant)
        const int n = g.n();
        std::vector<int> colors(n);
        bool found = false;
        for (std::uint64_t bits = 0; bits < (1ULL << n) && !found; ++bits) {
            for (int v = 0; v < n; ++v) colors[v] = static_cast<int>((bits >> (n - 1 - v)) & 1);
            if (oracles::count_bad(g, colors) == e.min_bad) {
                found = true;
                for (int v = 0; v < n; ++v) CHECK(colors[v] == e.achiever.get(v));
            }
        }
        CHECK(found);
    }
}

TEST_CASE("check_lemma2 canonical edge") {
    auto rep = check_lemma2(heawood_minus_e(), heawood());
    CHECK(rep.ok);
    CHECK(rep.qualifying > 0);
    CHECK_FALSE(rep.counterexample.has_value());
}

TEST_CASE("check_lemma2 rejects mismatched inputs") {
    CHECK_THROWS_AS(check_lemma2(heawood_minus_e(), k33()), std::invalid_argument);
    PortedGraph wrong = heawood_minus_e();
    wrong.ports["u"] = 2;  // {2,1} is not the deleted edge
    CHECK_THROWS_AS(check_lemma2(wrong, heawood()), std::invalid_argument);
}

TEST_CASE("check_lemma2 fails on a graph without the rigidity") {
    // On C4 minus {0,1} the qualifying colorings force c(0) != c(2), which is
    // exactly the opposite of the same-color condition.
    Graph c4 = cycle_graph(4);
    std::vector<std::pair<int, int>> rest;
    for (auto e : c4.edges())
        if (e != std::make_pair(0, 1)) rest.push_back(e);
    PortedGraph pm{Graph::from_edges(4, rest), {{"u", 0}, {"v", 1}}};
    auto rep = check_lemma2(pm, c4);
    CHECK_FALSE(rep.ok);
    CHECK(rep.qualifying > 0);
    CHECK(rep.counterexample.has_value());
}

TEST_CASE("decide_equiv_tds") {
    auto k = decide_equiv_tds(k33());
    REQUIRE(k.status == SolveStatus::kSat);
    REQUIRE(k.pair.has_value());
    CHECK(oracles::is_total_dominating(k33(), k.pair->s0));
    CHECK(oracles::is_total_dominating(k33(), k.pair->s1));

    auto c = decide_equiv_tds(cycle_graph(4));
    REQUIRE(c.status == SolveStatus::kSat);
    CHECK(c.pair->s0.size() + c.pair->s1.size() == 4);

    CHECK(decide_equiv_tds(heawood()).status == SolveStatus::kUnsat);
    CHECK_FALSE(decide_equiv_tds(heawood()).pair.has_value());
}

TEST_CASE("sat witnesses always verify on a corpus") {
    for (int s = 1; s <= 25; ++s) {
        Graph g = random_cubic(14, s);
        auto r = decide(g);
        if (r.status == SolveStatus::kSat)
            CHECK(verify_coupon(g, *r.witness).is_coupon);
        else
            CHECK(enumerate_min_bad(g).min_bad >= 1);
    }
}
