#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "couponkit/generators.hpp"
#include "couponkit/graph.hpp"
#include "oracles.hpp"

using namespace couponkit;

TEST_CASE("graph construction validates simplicity") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
    Graph g = Graph::from_edges(3, {{1, 2}, {0, 1}});
    CHECK(g.m() == 2);
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("validate_cubic") {
    CHECK(validate_cubic(heawood()).ok);
    CHECK(validate_cubic(counterexample60()).ok);
    auto rep = validate_cubic(cycle_graph(5));
    CHECK_FALSE(rep.ok);
    CHECK(rep.offending == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("is_bipartite") {
    auto h = is_bipartite(heawood());
    REQUIRE(h.parts.has_value());
    CHECK(h.parts->side_vertices(0).size() == 7);
    CHECK(h.parts->side_vertices(1).size() == 7);

    auto k = is_bipartite(k4());
    CHECK_FALSE(k.parts.has_value());
    REQUIRE(k.odd_cycle.size() == 3);  // K4's shortest odd cycle is a triangle
    for (size_t i = 0; i < k.odd_cycle.size(); ++i)
        CHECK(k4().has_edge(k.odd_cycle[i], k.odd_cycle[(i + 1) % k.odd_cycle.size()]));

    auto dc = is_bipartite(double_cover(k4()).graph);
    CHECK(dc.parts.has_value());
}

TEST_CASE("odd cycle witness and bipartition are exclusive and exhaustive") {
    std::vector<Graph> corpus = {heawood(), k4(), k33(), prism(), cube(), petersen(),
                                 cycle_graph(5), cycle_graph(6), path_graph(4),
                                 counterexample60()};
    for (int s = 1; s <= 10; ++s) corpus.push_back(random_cubic(10, s));
    for (const auto& g : corpus) {
        auto r = is_bipartite(g);
        if (r.parts) {
            CHECK(r.odd_cycle.empty());
            for (auto [u, v] : g.edges()) CHECK(r.parts->side[u] != r.parts->side[v]);
        } else {
            CHECK(r.odd_cycle.size() % 2 == 1);
            CHECK(r.odd_cycle.size() >= 3);
            std::set<int> uniq(r.odd_cycle.begin(), r.odd_cycle.end());
            CHECK(uniq.size() == r.odd_cycle.size());
            for (size_t i = 0; i < r.odd_cycle.size(); ++i)
                CHECK(g.has_edge(r.odd_cycle[i], r.odd_cycle[(i + 1) % r.odd_cycle.size()]));
        }
    }
}

TEST_CASE("girth matches the edge-removal oracle") {
    CHECK(girth(heawood()) == 6);
    CHECK(girth(k33()) == 4);
    CHECK(girth(petersen()) == 5);
    CHECK(girth(path_graph(5)) == kInfiniteGirth);
    std::vector<Graph> corpus = {heawood(), k4(), k33(), prism(), cube(), petersen(),
                                 cycle_graph(7), path_graph(3)};
    for (int s = 1; s <= 20; ++s) corpus.push_back(random_cubic(12, s));
    for (const auto& g : corpus) CHECK(girth(g) == oracles::girth_by_edge_removal(g));
}

TEST_CASE("find_cycle") {
    auto tri = find_cycle(counterexample60(), 3);
    REQUIRE(tri.has_value());
    CHECK(*tri == std::vector<int>{57, 58, 59});  // the gadget triangle x,y,z

    CHECK_FALSE(find_cycle(petersen(), 4).has_value());

    auto c4 = find_cycle(k33(), 4);
    REQUIRE(c4.has_value());
    CHECK(c4->size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(k33().has_edge((*c4)[i], (*c4)[(i + 1) % 4]));

    // whenever the girth is finite, a cycle of that length is present
    std::vector<Graph> corpus = {heawood(), k4(), k33(), prism(), cube(), petersen()};
    for (int s = 1; s <= 10; ++s) corpus.push_back(random_cubic(10, s));
    for (const auto& g : corpus) {
        int gi = girth(g);
        REQUIRE(gi != kInfiniteGirth);
        auto c = find_cycle(g, gi);
        REQUIRE(c.has_value());
        CHECK(static_cast<int>(c->size()) == gi);
    }
}

TEST_CASE("contains_induced_cycle") {
    CHECK(contains_induced_cycle(cycle_graph(7), 7));
    CHECK_FALSE(contains_induced_cycle(k4(), 4));
    CHECK(contains_induced_cycle(k33(), 4));
    CHECK_FALSE(contains_induced_cycle(k33(), 6));  // every 6-cycle of K33 has chords
    CHECK(contains_induced_cycle(heawood(), 6));
    CHECK_FALSE(contains_induced_cycle(heawood(), 7));  // bipartite, no odd cycles
    Graph big = Graph::from_edges(200, {{0, 1}});
    CHECK_THROWS_AS(contains_induced_cycle(big, 3), std::invalid_argument);
}

TEST_CASE("is_good_vertex") {
    Graph c4g = cycle_graph(4);
    Coloring half = Coloring::from_values({0, 0, 1, 1});
    for (int v = 0; v < 4; ++v) CHECK(is_good_vertex(c4g, half, v));

    Coloring zero = Coloring::from_values(std::vector<int>(14, 0));
    for (int v = 0; v < 14; ++v) CHECK_FALSE(is_good_vertex(heawood(), zero, v));

    CHECK(is_good_vertex(k4(), Coloring::from_values({0, 0, 1, 1}), 0));

    Coloring partial(4);
    partial.set(0, 1);
    CHECK_THROWS_AS(is_good_vertex(c4g, partial, 0), std::invalid_argument);
}

TEST_CASE("verify_coupon") {
    Coloring zero = Coloring::from_values(std::vector<int>(14, 0));
    auto rep = verify_coupon(heawood(), zero);
    CHECK_FALSE(rep.is_coupon);
    CHECK(rep.bad_vertices.size() == 14);

    Coloring k33c = Coloring::from_values({0, 1, 1, 0, 1, 1});
    CHECK(verify_coupon(k33(), k33c).is_coupon);

    auto alt = verify_coupon(cycle_graph(4), Coloring::from_values({0, 1, 0, 1}));
    CHECK(alt.bad_vertices == std::vector<int>{0, 1, 2, 3});

    Graph iso = Graph::from_edges(3, {{0, 1}});
    CHECK_THROWS_AS(verify_coupon(iso, Coloring::from_values({0, 1, 0})),
                    std::invalid_argument);
}

TEST_CASE("verify_coupon agrees with the independent bad-count scan") {
    for (int s = 1; s <= 10; ++s) {
        Graph g = random_cubic(10, s);
        for (std::uint64_t bits = 0; bits < 32; ++bits) {  // a slice of colorings
            std::vector<int> colors(10);
            for (int v = 0; v < 10; ++v) colors[v] = static_cast<int>((bits * 37 + 11) >> v & 1);
            auto rep = verify_coupon(g, Coloring::from_values(colors));
            CHECK(static_cast<int>(rep.bad_vertices.size()) == oracles::count_bad(g, colors));
        }
    }
}

TEST_CASE("tds pair <-> coloring") {
    Graph c = cycle_graph(4);
    auto p = tds_pair_from_coloring(c, Coloring::from_values({0, 0, 1, 1}));
    CHECK(p.s0 == std::vector<int>{0, 1});
    CHECK(p.s1 == std::vector<int>{2, 3});
    CHECK(oracles::is_total_dominating(c, p.s0));
    CHECK(oracles::is_total_dominating(c, p.s1));

    Coloring back = coloring_from_tds_pair(c, p);
    CHECK(back == Coloring::from_values({0, 0, 1, 1}));

    auto pk = tds_pair_from_coloring(k4(), Coloring::from_values({0, 0, 1, 1}));
    CHECK(pk.s0.size() == 2);
    CHECK(pk.s1.size() == 2);

    CHECK_THROWS_AS(tds_pair_from_coloring(c, Coloring::from_values({0, 1, 0, 1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(coloring_from_tds_pair(c, TdsPair{{0, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(coloring_from_tds_pair(c, TdsPair{{0}, {2}}), std::invalid_argument);
}

TEST_CASE("tds round trip stays a coupon coloring") {
    std::vector<std::pair<Graph, Coloring>> cases = {
        {cycle_graph(4), Coloring::from_values({0, 0, 1, 1})},
        {k33(), Coloring::from_values({0, 1, 1, 0, 1, 1})},
        {k4(), Coloring::from_values({0, 0, 1, 1})},
    };
    for (auto& [g, c] : cases) {
        REQUIRE(verify_coupon(g, c).is_coupon);
        Coloring round = coloring_from_tds_pair(g, tds_pair_from_coloring(g, c));
        CHECK(verify_coupon(g, round).is_coupon);
    }
}

TEST_CASE("uncovered vertices are recolored 1 by the pair conversion") {
    // {x1,y1} and {x2,y2} each totally dominate K33, leaving x3 and y3 out
    Graph g = k33();
    TdsPair p{{0, 3}, {1, 4}};
    REQUIRE(oracles::is_total_dominating(g, p.s0));
    REQUIRE(oracles::is_total_dominating(g, p.s1));
    Coloring c = coloring_from_tds_pair(g, p);
    CHECK(c == Coloring::from_values({0, 1, 1, 0, 1, 1}));
    CHECK(verify_coupon(g, c).is_coupon);
}

TEST_CASE("remove_vertices") {
    auto sub = remove_vertices(k33(), {0, 3, 1, 4});
    CHECK(sub.graph.n() == 2);
    CHECK(sub.graph.m() == 1);
    CHECK(sub.graph.has_edge(0, 1));
    CHECK(sub.new_to_old == std::vector<int>{2, 5});

    auto same = remove_vertices(heawood(), {});
    CHECK(same.graph == heawood());

    auto one = remove_vertices(heawood(), {5});
    CHECK(one.graph.n() == 13);
    CHECK(one.graph.m() == 18);

    // id map monotone
    for (size_t i = 1; i < one.new_to_old.size(); ++i)
        CHECK(one.new_to_old[i - 1] < one.new_to_old[i]);
}
