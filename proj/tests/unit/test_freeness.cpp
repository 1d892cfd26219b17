#include <algorithm>
#include <random>

#include "doctest.h"
#include "fsk/construction.hpp"
#include "fsk/freeness.hpp"
#include "fsk/pattern.hpp"
#include "oracles.hpp"

using namespace fsk;

namespace {

const Rational kHalf(1, 2);

struct Params {
    int s;
    int k;
};

}  // namespace

TEST_CASE("small hosts") {
    SUBCASE("K5 contains F_{2,1}") {
        const Graph g = Graph::complete(5);
        const FreenessResult r = is_fsk_free(g, 2, 1);
        CHECK_FALSE(r.free);
        REQUIRE(r.witness.has_value());
        CHECK(witness_violations(g, *r.witness).empty());
        CHECK(r.witness->hub_edge() == Edge{0, 1});
    }
    SUBCASE("C5 is too small for F_{2,2}") {
        CHECK(is_fsk_free(Graph::cycle(5), 2, 2).free);
        CHECK(is_fsk_free(Graph::cycle(5), 1, 2).free == false);
    }
    SUBCASE("the pattern contains itself at its own hub") {
        for (int s = 1; s <= 3; ++s)
            for (int k = 1; k <= 3; ++k) {
                const FskPattern p = build_fsk(s, k);
                CHECK(find_fsk_at_edge(p.graph, 0, 1, s, k).has_value());
                CHECK_FALSE(is_fsk_free(p.graph, s, k).free);
            }
    }
    SUBCASE("an edge inside one side of K_{4,4}") {
        Graph g = Graph::complete_bipartite(4, 4);
        CHECK(is_fsk_free(g, 2, 2).free);
        g.add_edge(0, 1);
        const FreenessResult r = is_fsk_free(g, 2, 2);
        CHECK_FALSE(r.free);
        CHECK(oracle::contains_fsk(g, 2, 2));
        REQUIRE(r.witness);
        CHECK(witness_violations(g, *r.witness).empty());
    }
}

TEST_CASE("bipartite hosts are free") {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 20; ++round) {
        const std::size_t left = 3 + rng() % 10;
        const std::size_t right = 3 + rng() % 10;
        Graph g = Graph::complete_bipartite(left, right);
        for (const Edge& e : g.edges())
            if (rng() % 4 == 0) g.delete_edge(e.first, e.second);
        CHECK(is_fsk_free(g, 2, 2).free);
        CHECK(is_fsk_free(g, 1, 1).free);
    }
}

TEST_CASE("minimum members are free and a same-index X-Y edge breaks that") {
    for (int n : {64, 100, 200}) {
        const ConstructionResult r = build_min_member(plan_layout(n, 2, 2, kHalf));
        CAPTURE(n);
        CHECK(is_fsk_free(r.graph, 2, 2).free);
        Graph g = r.graph;
        const Vertex x = r.layout.x_block(0).first();
        const Vertex y = r.layout.y_block(0).first();
        g.add_edge(x, y);
        const FreenessResult bad = is_fsk_free(g, 2, 2);
        CHECK_FALSE(bad.free);
        REQUIRE(bad.witness);
        CHECK(witness_violations(g, *bad.witness).empty());
    }
    const ConstructionResult r3 = build_min_member(plan_layout(300, 2, 3, kHalf));
    CHECK(is_fsk_free(r3.graph, 2, 3).free);
}

TEST_CASE("containment agrees with the embedding oracle") {
    std::mt19937_64 rng(17);
    const Params grid[] = {{1, 1}, {2, 1}, {3, 1}, {1, 2}, {2, 2}};
    for (const Params& p : grid) {
        for (int round = 0; round < 40; ++round) {
            const std::size_t n = 5 + rng() % 5;
            const double density = 0.2 + 0.1 * static_cast<double>(rng() % 6);
            const Graph g = oracle::random_graph(n, density, rng);
            CAPTURE(p.s);
            CAPTURE(p.k);
            const FreenessResult r = is_fsk_free(g, p.s, p.k);
            CHECK(r.free == !oracle::contains_fsk(g, p.s, p.k));
            if (r.witness) CHECK(witness_violations(g, *r.witness).empty());
        }
    }
}

TEST_CASE("a copy through a new pair agrees with the oracle") {
    std::mt19937_64 rng(23);
    const Params grid[] = {{2, 2}, {2, 1}, {1, 2}, {3, 1}, {2, 3}, {1, 3}};
    for (const Params& p : grid) {
        const std::size_t h = fsk_order(p.s, p.k);
        for (int round = 0; round < 12; ++round) {
            const std::size_t n = h + rng() % 3;
            const Graph g = oracle::random_graph(n, 0.35, rng);
            const FskSearcher searcher(g, p.s, p.k);
            for (Vertex x = 0; x < n; ++x)
                for (Vertex y = x + 1; y < n; ++y) {
                    if (g.has_edge(x, y)) continue;
                    const auto w = searcher.through(x, y);
                    CAPTURE(p.s);
                    CAPTURE(p.k);
                    CAPTURE(x);
                    CAPTURE(y);
                    CHECK(w.has_value() == oracle::creates_fsk(g, x, y, p.s, p.k));
                    if (w) {
                        CHECK(witness_violations(g, *w, Edge{x, y}).empty());
                        // The pair must be one of the copy's edges.
                        const auto nb = w->neighbors_in_copy(x);
                        CHECK(std::find(nb.begin(), nb.end(), y) != nb.end());
                    }
                    const auto hub = searcher.at_hub(x, y);
                    if (hub) {
                        CHECK(w.has_value());
                        CHECK(witness_violations(g, *hub, Edge{x, y}).empty());
                        CHECK(((hub->hub_edge() == Edge{x, y}) || (hub->hub_edge() == Edge{y, x})));
                    }
                }
        }
    }
}

TEST_CASE("witness checking rejects broken maps") {
    const FskPattern p = build_fsk(2, 2);
    WitnessCopy w{2, 2, {}};
    for (Vertex v = 0; v < p.order(); ++v) w.map.push_back(v);
    CHECK(witness_violations(p.graph, w).empty());
    CHECK(w.degree_in_copy(0) == 3);
    CHECK(w.degree_in_copy(2) == 2);

    Graph missing = p.graph;
    missing.delete_edge(0, 1);
    CHECK_FALSE(witness_violations(missing, w).empty());
    CHECK(witness_violations(missing, w, Edge{1, 0}).empty());

    WitnessCopy twice = w;
    twice.map[3] = twice.map[2];
    CHECK_FALSE(witness_violations(p.graph, twice).empty());
}

TEST_CASE("maximality") {
    SUBCASE("K_{8,8} for F_{2,2}") {
        const MaximalityResult r = is_maximal_fsk_free(Graph::complete_bipartite(8, 8), 2, 2);
        CHECK(r.maximal);
        CHECK(r.failing.empty());
    }
    SUBCASE("too few vertices for any copy") {
        const MaximalityResult r = is_maximal_fsk_free(Graph(7), 2, 2);
        CHECK_FALSE(r.maximal);
        CHECK(r.failing.size() == 21);
        CHECK(r.failing.front() == Edge{0, 1});
        CHECK(r.failing.back() == Edge{5, 6});
    }
    SUBCASE("the minimum member at n=64 is not maximal") {
        const ConstructionResult c = build_min_member(plan_layout(64, 2, 2, kHalf));
        const MaximalityResult r = is_maximal_fsk_free(c.graph, 2, 2);
        CHECK_FALSE(r.maximal);
        CHECK(r.failing.size() == 90);
        for (const Edge& e : r.failing) CHECK_FALSE(c.graph.has_edge(e.first, e.second));
        CHECK(std::is_sorted(r.failing.begin(), r.failing.end()));
    }
    SUBCASE("a host with a copy throws with the copy attached") {
        try {
            is_maximal_fsk_free(Graph::complete(5), 2, 1);
            FAIL("expected NotFskFree");
        } catch (const NotFskFree& e) {
            CHECK(witness_violations(Graph::complete(5), e.witness()).empty());
        }
    }
}

TEST_CASE("saturation") {
    SUBCASE("greedy triangle-free saturation of the empty graph is a star") {
        const SaturationResult r = saturate(Graph(8), 1, 1);
        CHECK(r.graph == Graph::complete_bipartite(1, 7));
        CHECK(r.added.size() == 7);
    }
    SUBCASE("result is free, maximal and a supergraph") {
        std::mt19937_64 rng(5);
        for (int round = 0; round < 10; ++round) {
            Graph g = Graph::complete_bipartite(5, 5);
            for (const Edge& e : g.edges())
                if (rng() % 3 == 0) g.delete_edge(e.first, e.second);
            const SaturationResult r = saturate(g, 2, 2);
            CHECK(is_fsk_free(r.graph, 2, 2).free);
            CHECK(is_maximal_fsk_free(r.graph, 2, 2).maximal);
            CHECK(r.graph.edge_count() == g.edge_count() + r.added.size());
            for (const Edge& e : g.edges()) CHECK(r.graph.has_edge(e.first, e.second));
            CHECK(saturate(r.graph, 2, 2).added.empty());
        }
    }
    SUBCASE("n=64 minimum member") {
        const ConstructionResult c = build_min_member(plan_layout(64, 2, 2, kHalf));
        const SaturationResult r = saturate(c.graph, 2, 2, {512, 4});
        CHECK(r.added.size() == 28);
        CHECK(r.graph.edge_count() == 712);
        CHECK(is_maximal_fsk_free(r.graph, 2, 2).maximal);
    }
    SUBCASE("a host with a copy throws") {
        CHECK_THROWS_AS(saturate(Graph::complete(4), 2, 1), NotFskFree);
    }
}

TEST_CASE("containment is monotone under adding edges") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 30; ++round) {
        Graph g = oracle::random_graph(9, 0.3, rng);
        bool was_free = is_fsk_free(g, 2, 1).free;
        for (int step = 0; step < 6; ++step) {
            const Vertex u = static_cast<Vertex>(rng() % 9);
            const Vertex v = static_cast<Vertex>(rng() % 9);
            if (u == v) continue;
            g.add_edge(u, v);
            const bool now = is_fsk_free(g, 2, 1).free;
            if (!was_free) CHECK_FALSE(now);
            was_free = now;
        }
    }
}

TEST_CASE("limits") {
    CHECK_THROWS_AS(is_fsk_free(Graph(513), 2, 2), SearchLimitExceeded);
    CHECK_NOTHROW(is_fsk_free(Graph(513), 2, 2, {1024, 1}));
    CHECK_THROWS_AS(is_fsk_free(Graph(20), 2, 2, {10, 1}), SearchLimitExceeded);
    CHECK_THROWS_AS(FskSearcher(Graph(5), 0, 2), std::invalid_argument);
}

TEST_CASE("results do not depend on the worker count") {
    std::mt19937_64 rng(101);
    for (int round = 0; round < 8; ++round) {
        const Graph g = oracle::random_graph(16, 0.3, rng);
        const FreenessResult one = is_fsk_free(g, 2, 2, {512, 1});
        const FreenessResult many = is_fsk_free(g, 2, 2, {512, 6});
        CHECK(one.free == many.free);
        if (one.witness && many.witness) CHECK(one.witness->map == many.witness->map);
    }
    Graph base = Graph::complete_bipartite(6, 6);
    base.delete_edge(0, 6);
    base.delete_edge(1, 7);
    const SaturationResult a = saturate(base, 2, 2, {512, 1});
    const SaturationResult b = saturate(base, 2, 2, {512, 5});
    CHECK(a.added == b.added);
}
