#include "fsk/bipartite.hpp"

#include <random>
#include <stdexcept>

namespace fsk {

std::string phase_name(PartitionPhase phase) {
    switch (phase) {
        case PartitionPhase::SameSide: return "same_side";
        case PartitionPhase::Peel: return "peel";
        case PartitionPhase::Greedy: return "greedy";
    }
    return "unknown";
}

std::vector<std::string> partition_violations(const Graph& g, const PartitionUVT& p) {
    const std::size_t n = g.vertex_count();
    if (p.u.universe() != n || p.v.universe() != n || p.t.universe() != n)
        return {"parts are not vertex sets of this graph"};
    std::vector<std::string> out;
    if (p.u.intersects(p.v) || p.u.intersects(p.t) || p.v.intersects(p.t)) out.push_back("parts overlap");
    if ((p.u | p.v | p.t) != g.all_vertices()) out.push_back("parts do not cover the vertex set");
    if (!is_independent(g, p.u)) out.push_back("U is not independent");
    if (!is_independent(g, p.v)) out.push_back("V is not independent");
    const auto h = static_cast<std::size_t>(p.h);
    p.t.for_each([&](Vertex x) {
        const std::size_t du = g.neighbors(x).count_common(p.u);
        const std::size_t dv = g.neighbors(x).count_common(p.v);
        if (du != 0 && du <= h)
            out.push_back("T vertex " + std::to_string(x) + " has " + std::to_string(du) + " neighbours in U");
        if (dv != 0 && dv <= h)
            out.push_back("T vertex " + std::to_string(x) + " has " + std::to_string(dv) + " neighbours in V");
    });
    return out;
}

namespace {

struct Cut {
    VertexSet side0;
    std::size_t crossing = 0;
};

// Flip vertices with more neighbours on their own side until none remain.
Cut local_max_cut(const Graph& g, std::mt19937_64& rng) {
    const std::size_t n = g.vertex_count();
    VertexSet side0(n);
    for (Vertex v = 0; v < n; ++v)
        if ((rng() & 1U) != 0) side0.insert(v);
    bool improved = true;
    while (improved) {
        improved = false;
        for (Vertex v = 0; v < n; ++v) {
            const std::size_t in0 = g.neighbors(v).count_common(side0);
            const std::size_t same = side0.contains(v) ? in0 : g.degree(v) - in0;
            if (2 * same > g.degree(v)) {
                if (side0.contains(v)) side0.erase(v);
                else side0.insert(v);
                improved = true;
            }
        }
    }
    const std::size_t crossing = edges_between(g, side0, g.all_vertices() - side0);
    return {side0, crossing};
}

class PartitionBuilder {
public:
    PartitionBuilder(const Graph& g, int h) : g_(g), h_(static_cast<std::size_t>(h)) {}

    PartitionOutcome run(std::uint64_t seed, int restarts) {
        const std::size_t n = g_.vertex_count();
        PartitionOutcome out;
        VertexSet side0(n);
        if (auto coloring = two_coloring(g_)) {
            side0 = *coloring;
            out.stats.started_bipartite = true;
        } else {
            std::mt19937_64 rng(seed);
            Cut best{VertexSet(n), 0};
            for (int r = 0; r < std::max(1, restarts); ++r) {
                Cut cut = local_max_cut(g_, rng);
                if (r == 0 || cut.crossing > best.crossing) best = std::move(cut);
            }
            side0 = best.side0;
        }
        if (n > 0 && !side0.contains(0)) side0 = side0.complement();
        u_ = side0;
        v_ = side0.complement();
        t_ = VertexSet(n);
        out.stats.cut_edges = edges_between(g_, u_, v_);

        split_same_side();
        bool changed = true;
        while (changed) {
            changed = peel();
            changed = greedy() || changed;
        }

        out.partition = {u_, v_, t_, static_cast<int>(h_)};
        out.trace = std::move(trace_);
        fill_stats(out.stats);
        return out;
    }

private:
    VertexSet& side_of(Vertex v) { return u_.contains(v) ? u_ : v_; }

    void move_to_t(PartitionPhase phase, Vertex trigger, const VertexSet& moved) {
        u_ -= moved;
        v_ -= moved;
        t_ |= moved;
        trace_.push_back({phase, trigger, moved.to_vector()});
    }

    void split_same_side() {
        const std::size_t n = g_.vertex_count();
        for (Vertex v = 0; v < n; ++v) {
            if (t_.contains(v)) continue;
            if (g_.neighbors(v).count_common(side_of(v)) >= h_ + 1)
                move_to_t(PartitionPhase::SameSide, v, VertexSet(n, {v}));
        }
        // Remaining same-side edges: evict the vertex with the most of them.
        for (;;) {
            Vertex worst = kNoVertex;
            std::size_t worst_count = 0;
            (u_ | v_).for_each([&](Vertex v) {
                const std::size_t c = g_.neighbors(v).count_common(side_of(v));
                if (c > worst_count) {
                    worst_count = c;
                    worst = v;
                }
            });
            if (worst == kNoVertex) return;
            move_to_t(PartitionPhase::SameSide, worst, VertexSet(n, {worst}));
        }
    }

    bool peel() {
        bool any = false;
        for (bool again = true; again;) {
            again = false;
            const VertexSet core = u_ | v_;
            for (Vertex v = core.first(); v != kNoVertex; v = core.next(v + 1)) {
                if (t_.contains(v)) continue;
                const VertexSet& other = u_.contains(v) ? v_ : u_;
                if (g_.neighbors(v).count_common(other) < h_) {
                    move_to_t(PartitionPhase::Peel, v, VertexSet(g_.vertex_count(), {v}));
                    again = any = true;
                }
            }
        }
        return any;
    }

    bool greedy() {
        bool any = false;
        for (bool again = true; again;) {
            again = false;
            for (Vertex x = t_.first(); x != kNoVertex; x = t_.next(x + 1)) {
                for (const VertexSet* side : {&u_, &v_}) {
                    const VertexSet hits = g_.neighbors(x) & *side;
                    const std::size_t d = hits.count();
                    if (d >= 1 && d <= h_) {
                        move_to_t(PartitionPhase::Greedy, x, hits);
                        again = any = true;
                    }
                }
            }
        }
        return any;
    }

    void fill_stats(PartitionStats& stats) const {
        const std::size_t n = g_.vertex_count();
        const VertexSet core = u_ | v_;
        std::size_t min_deg = 0;
        bool first = true;
        core.for_each([&](Vertex v) {
            const std::size_t d = g_.neighbors(v).count_common(u_.contains(v) ? v_ : u_);
            if (first || d < min_deg) min_deg = d;
            first = false;
        });
        stats.min_core_degree = min_deg;
        stats.degree_target = (Rational(1, 2) - Rational(1, 10 * static_cast<long long>(h_))) * Rational(n);
        stats.meets_degree_target = !core.empty() && Rational(min_deg) >= stats.degree_target;
    }

    const Graph& g_;
    std::size_t h_;
    VertexSet u_;
    VertexSet v_;
    VertexSet t_;
    std::vector<PartitionMove> trace_;
};

}  // namespace

PartitionOutcome build_uvt_partition(const Graph& g, int h, std::uint64_t seed, int restarts) {
    if (h < 1) throw std::invalid_argument("partition threshold h must be positive");
    return PartitionBuilder(g, h).run(seed, restarts);
}

}  // namespace fsk
