#include <random>

#include "doctest.h"
#include "fsk/bipartite.hpp"
#include "fsk/construction.hpp"
#include "fsk/freeness.hpp"
#include "oracles.hpp"

using namespace fsk;

TEST_CASE("named graphs") {
    struct Case {
        Graph g;
        std::size_t want;
    };
    const Case cases[] = {
        {Graph::complete_bipartite(3, 3), 6},
        {Graph::cycle(5), 3},
        {Graph::cycle(6), 3},
        {Graph(6), 6},
        {Graph::complete(7), 2},
        {Graph::path(7), 4},
        {Graph::petersen(), 4},
        {Graph(0), 0},
        {Graph(1), 1},
    };
    for (const Case& c : cases) {
        const BicliqueSearch r = max_induced_complete_bipartite(c.g);
        CAPTURE(c.g.vertex_count());
        CHECK(r.optimal);
        CHECK(r.best.size() == c.want);
        CHECK(r.upper_bound == c.want);
        CHECK(biclique_violations(c.g, r.best).empty());
        CHECK(oracle::max_biclique_size(c.g) == c.want);
    }
}

TEST_CASE("agrees with subset enumeration") {
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 150; ++round) {
        const std::size_t n = 1 + rng() % 14;
        const double p = 0.1 + 0.1 * static_cast<double>(rng() % 8);
        const Graph g = oracle::random_graph(n, p, rng);
        const BicliqueSearch r = max_induced_complete_bipartite(g);
        CAPTURE(n);
        CHECK(r.optimal);
        CHECK(r.best.size() == oracle::max_biclique_size(g));
        CHECK(biclique_violations(g, r.best).empty());
    }
}

TEST_CASE("twins are merged without losing the optimum") {
    // Every side of K_{10,10} is one twin class until the missing edge splits off 0 and 10.
    Graph g = Graph::complete_bipartite(10, 10);
    g.delete_edge(0, 10);
    const BicliqueSearch r = max_induced_complete_bipartite(g);
    CHECK(r.optimal);
    CHECK(r.best.size() == 19);
    CHECK(biclique_violations(g, r.best).empty());
}

TEST_CASE("violations are reported") {
    const Graph g = Graph::cycle(5);
    BicliqueResult r{VertexSet(5, {0, 2}), VertexSet(5, {1})};
    CHECK(biclique_violations(g, r).empty());
    r.b.insert(3);
    CHECK_FALSE(biclique_violations(g, r).empty());
    BicliqueResult overlap{VertexSet(5, {0}), VertexSet(5, {0, 1})};
    CHECK_FALSE(biclique_violations(g, overlap).empty());
    BicliqueResult inside{VertexSet(5, {0, 1}), VertexSet(5)};
    CHECK_FALSE(biclique_violations(g, inside).empty());
}

TEST_CASE("an exhausted budget still returns a valid answer and a sound bound") {
    std::mt19937_64 rng(8);
    for (int round = 0; round < 20; ++round) {
        const Graph g = oracle::random_graph(14, 0.5, rng);
        const std::size_t opt = oracle::max_biclique_size(g);
        const BicliqueSearch r = max_induced_complete_bipartite(g, 3);
        CHECK(biclique_violations(g, r.best).empty());
        CHECK(r.best.size() <= opt);
        CHECK(r.upper_bound >= opt);
        if (!r.optimal) CHECK(r.nodes >= 3);
    }
}

TEST_CASE("saturated n=64 member") {
    const ConstructionResult c = build_min_member(plan_layout(64, 2, 2, Rational(1, 2)));
    const Graph g = saturate(c.graph, 2, 2).graph;
    const BicliqueSearch r = max_induced_complete_bipartite(g);
    CHECK(r.optimal);
    CHECK(biclique_violations(g, r.best).empty());
    // X_{t^s} and Y_{t^s} are complete to each other: 20 vertices at least.
    CHECK(r.best.size() >= 20);
    CHECK(r.best.size() <= 48);
    CHECK(r.best.size() == 37);
}
