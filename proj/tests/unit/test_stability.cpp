#include <random>

#include "doctest.h"
#include "fsk/construction.hpp"
#include "fsk/freeness.hpp"
#include "fsk/pattern.hpp"
#include "fsk/stability.hpp"
#include "oracles.hpp"

using namespace fsk;

namespace {

// F_{2,2}: hub 0-1, paths 0-2-3-4-1 and 0-5-6-7-1.
Graph pattern_without(Vertex u, Vertex v) {
    Graph g = build_fsk(2, 2).graph;
    REQUIRE(g.delete_edge(u, v));
    return g;
}

PartitionUVT split(std::initializer_list<Vertex> u, std::initializer_list<Vertex> v, std::size_t n) {
    PartitionUVT p{VertexSet(n, u), VertexSet(n, v), VertexSet(n), 8};
    p.t = (p.u | p.v).complement();
    return p;
}

}  // namespace

TEST_CASE("classification of the pattern minus one edge") {
    SUBCASE("hub pair") {
        const Graph g = pattern_without(0, 1);
        const Classification c = classify_non_edge(g, split({0}, {1}, 8), 0, 1, 2, 2);
        CHECK(c.cls == OmegaClass::Omega2);
        CHECK(c.x_anchors == std::vector<Vertex>{2, 5});
        CHECK(c.y_anchors == std::vector<Vertex>{4, 7});
        CHECK(c.claim4);
        CHECK(witness_violations(g, c.witness, Edge{0, 1}).empty());
    }
    SUBCASE("two path vertices") {
        const Graph g = pattern_without(2, 3);
        const Classification c = classify_non_edge(g, split({2}, {3}, 8), 2, 3, 2, 2);
        CHECK(c.cls == OmegaClass::Omega1);
        CHECK(c.x_anchors == std::vector<Vertex>{0});
        CHECK(c.y_anchors == std::vector<Vertex>{4});
    }
    SUBCASE("hub and path vertex, every other hub neighbour in T") {
        const Graph g = pattern_without(0, 2);
        const Classification c = classify_non_edge(g, split({0}, {2}, 8), 0, 2, 2, 2);
        CHECK(c.cls == OmegaClass::Omega31);
        CHECK(c.x_anchors == std::vector<Vertex>{1, 5});
        CHECK(c.y_anchors == std::vector<Vertex>{3});
    }
    SUBCASE("hub and path vertex, one hub neighbour outside T") {
        const Graph g = pattern_without(0, 2);
        const Classification c = classify_non_edge(g, split({0}, {2, 5}, 8), 0, 2, 2, 2);
        CHECK(c.cls == OmegaClass::Omega33);
        CHECK(c.x_anchors == std::vector<Vertex>{1});
    }
    SUBCASE("mirrored: the hub vertex is on the V side") {
        const Graph g = pattern_without(0, 2);
        const Classification all = classify_non_edge(g, split({2}, {0}, 8), 2, 0, 2, 2);
        CHECK(all.cls == OmegaClass::Omega32);
        CHECK(all.y_anchors == std::vector<Vertex>{1, 5});
        const Classification some = classify_non_edge(g, split({2, 5}, {0}, 8), 2, 0, 2, 2);
        CHECK(some.cls == OmegaClass::Omega34);
    }
    SUBCASE("no anchors when the copy stays out of T") {
        const Graph g = pattern_without(2, 3);
        const Classification c = classify_non_edge(g, split({0, 2, 4, 6, 1}, {3, 5, 7}, 8), 2, 3, 2, 2);
        CHECK(c.cls == OmegaClass::Omega1);
        CHECK(c.x_anchors.empty());
        CHECK(c.y_anchors.empty());
        CHECK_FALSE(c.claim4);
    }
}

TEST_CASE("classification preconditions") {
    const Graph g = pattern_without(0, 1);
    CHECK_THROWS_AS(classify_non_edge(g, split({0}, {1}, 8), 1, 0, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(classify_non_edge(g, split({0}, {2}, 8), 0, 2, 2, 2), std::invalid_argument);
    // C8 plus the chord 0-3 has no copy of F_{2,2}.
    try {
        classify_non_edge(g, split({0}, {3}, 8), 0, 3, 2, 2);
        FAIL("expected NotMaximal");
    } catch (const NotMaximal& e) {
        CHECK(e.probe() == Edge{0, 3});
    }
    CHECK(omega_name(OmegaClass::Omega31) == "Omega31");
}

TEST_CASE("a complete bipartite core needs no deletion") {
    const Graph g = Graph::complete_bipartite(9, 9);
    PartitionUVT p{VertexSet(18), VertexSet(18), VertexSet(18), 8};
    for (Vertex v = 0; v < 9; ++v) p.u.insert(v);
    p.v = p.u.complement();
    const PipelineResult r = deletion_pipeline(g, p, 2, 2);
    CHECK(r.trace.steps.empty());
    CHECK(r.trace.core_size == 18);
    CHECK(r.core.a == p.u);
    CHECK(r.core.b == p.v);
    CHECK(trace_violations(r, p).empty());
}

TEST_CASE("pipeline on saturated random graphs") {
    std::mt19937_64 rng(606);
    std::size_t total_steps = 0;
    for (int round = 0; round < 6; ++round) {
        Graph g = Graph::complete_bipartite(7, 7);
        for (const Edge& e : g.edges())
            if (rng() % 3 == 0) g.delete_edge(e.first, e.second);
        const Graph sat = saturate(g, 2, 2).graph;
        const PartitionOutcome part = build_uvt_partition(sat, 8, rng());
        const PipelineResult r = deletion_pipeline(sat, part.partition, 2, 2);
        CAPTURE(round);
        CHECK(trace_violations(r, part.partition).empty());
        CHECK(biclique_violations(sat, r.core).empty());
        CHECK_FALSE(r.core.a.intersects(part.partition.t));
        CHECK(r.trace.core_size == r.core.size());
        CHECK(r.trace.core_size + r.trace.deleted_total + r.trace.t_size == sat.vertex_count());
        std::size_t bad = 0;
        for (const DeletionStep& s : r.trace.steps) {
            CHECK(s.deleted.size() == std::min(s.x_size, s.y_size));
            CHECK(s.deleted_u_side == (s.x_size <= s.y_size));
            if (!s.claim4) ++bad;
        }
        CHECK(bad == r.trace.claim4_violations);
        total_steps += r.trace.steps.size();
        const PipelineResult again = deletion_pipeline(sat, part.partition, 2, 2, {512, 4});
        CHECK(again.core.a == r.core.a);
        CHECK(again.core.b == r.core.b);
        CHECK(again.trace.steps.size() == r.trace.steps.size());
    }
    // Saturation closes every cross pair these small hosts leave in the core.
    CHECK(total_steps == 0);
}

TEST_CASE("deletion steps on hand-built hosts") {
    SUBCASE("hub pair: both candidate sets are singletons and the tie deletes x") {
        const Graph g = pattern_without(0, 1);
        const PartitionUVT p = split({0}, {1}, 8);
        const PipelineResult r = deletion_pipeline(g, p, 2, 2);
        REQUIRE(r.trace.steps.size() == 1);
        const DeletionStep& s = r.trace.steps[0];
        CHECK(s.probe == Edge{0, 1});
        CHECK(s.cls == OmegaClass::Omega2);
        CHECK(s.x_size == 1);
        CHECK(s.y_size == 1);
        CHECK(s.deleted_u_side);
        CHECK(s.deleted == std::vector<Vertex>{0});
        CHECK(r.core.a.empty());
        CHECK(r.core.b == VertexSet(8, {1}));
        CHECK(r.trace.deleted_total == 1);
        CHECK(trace_violations(r, p).empty());
    }
    SUBCASE("the smaller side is deleted") {
        // Twins 8, 9 of vertex 1 (neighbours 4 and 7) make Y = {1, 8, 9}.
        Graph g(10);
        for (const Edge& e : pattern_without(0, 1).edges()) g.add_edge(e.first, e.second);
        for (Vertex twin : {8, 9}) {
            g.add_edge(twin, 4);
            g.add_edge(twin, 7);
        }
        const PartitionUVT p = split({0}, {1, 8, 9}, 10);
        const PipelineResult r = deletion_pipeline(g, p, 2, 2);
        REQUIRE(r.trace.steps.size() == 1);
        CHECK(r.trace.steps[0].x_size == 1);
        CHECK(r.trace.steps[0].y_size == 3);
        CHECK(r.trace.steps[0].deleted_u_side);
        CHECK(r.core.b == VertexSet(10, {1, 8, 9}));
        CHECK(trace_violations(r, p).empty());
    }
    SUBCASE("a cross non-edge without a copy stops the pipeline") {
        const Graph g = pattern_without(0, 1);
        CHECK_THROWS_AS(deletion_pipeline(g, split({0}, {3}, 8), 2, 2), NotMaximal);
    }
}

TEST_CASE("saturated n=64 member") {
    const ConstructionResult c = build_min_member(plan_layout(64, 2, 2, Rational(1, 2)));
    const Graph g = saturate(c.graph, 2, 2).graph;
    const PartitionOutcome part = build_uvt_partition(g, 8);
    const PipelineResult r = deletion_pipeline(g, part.partition, 2, 2);
    CHECK(trace_violations(r, part.partition).empty());
    CHECK(r.trace.steps.empty());
    CHECK(r.trace.core_size == 20);
    const BoundReport b = bound_report(r.trace, 64, 2, 2, Rational(1, 2));
    CHECK(b.removed == 44);
    CHECK(b.within);
    CHECK(b.vacuous);
    CHECK(b.bound == Rational(32614907904));
    // alpha n^{-s/(s+1)} = 1/2 * 64^{-2/3} = 1/32 exactly.
    CHECK(b.epsilon_lo <= Rational(1, 32));
    CHECK(b.epsilon_hi >= Rational(1, 32));
}

TEST_CASE("bound arithmetic at n=256") {
    DeletionTrace t;
    t.n = 256;
    t.t_size = 30;
    t.deleted_total = 12;
    t.core_size = 214;
    const BoundReport b = bound_report(t, 256, 2, 2, Rational(1, 2));
    CHECK(b.bound == Rational(Integer("130459631616")));
    CHECK(b.removed == 42);
    CHECK(b.within);
    CHECK(b.vacuous);
    CHECK(b.margin == b.bound - 42);
    // epsilon^3 = alpha^3 / n^2.
    const Rational target(Integer(1), Integer(8) * 256 * 256);
    CHECK(b.epsilon_lo * b.epsilon_lo * b.epsilon_lo <= target);
    CHECK(b.epsilon_hi * b.epsilon_hi * b.epsilon_hi >= target);
    CHECK(b.epsilon_hi - b.epsilon_lo <= Rational(1, 1000));
}
