#include "fsk/stability.hpp"

#include <algorithm>
#include <stdexcept>

namespace fsk {

std::string omega_name(OmegaClass c) {
    switch (c) {
        case OmegaClass::Omega1: return "Omega1";
        case OmegaClass::Omega2: return "Omega2";
        case OmegaClass::Omega31: return "Omega31";
        case OmegaClass::Omega32: return "Omega32";
        case OmegaClass::Omega33: return "Omega33";
        case OmegaClass::Omega34: return "Omega34";
    }
    return "unknown";
}

NotMaximal::NotMaximal(Edge probe)
    : Error("graph is not maximal: adding " + std::to_string(probe.first) + "-" + std::to_string(probe.second) +
            " creates no copy"),
      probe_(probe) {}

namespace {

void check_probe(const Graph& g, const PartitionUVT& part, Vertex x, Vertex y) {
    if (x >= g.vertex_count() || y >= g.vertex_count()) throw std::out_of_range("probe vertex outside graph");
    if (!part.u.contains(x) || !part.v.contains(y)) throw std::invalid_argument("probe must run from U to V");
    if (g.has_edge(x, y)) throw std::invalid_argument("probe pair is already an edge");
}

Classification classify_with(const FskSearcher& searcher, const PartitionUVT& part, Vertex x, Vertex y) {
    std::optional<WitnessCopy> w = searcher.through(x, y);
    if (!w) throw NotMaximal({x, y});
    const int s = searcher.s();
    Classification c;
    c.witness = std::move(*w);
    const std::vector<Vertex> nx = c.witness.neighbors_in_copy(x);
    const std::vector<Vertex> ny = c.witness.neighbors_in_copy(y);
    for (Vertex v : nx)
        if (part.t.contains(v)) c.x_anchors.push_back(v);
    for (Vertex v : ny)
        if (part.t.contains(v)) c.y_anchors.push_back(v);
    std::sort(c.x_anchors.begin(), c.x_anchors.end());
    std::sort(c.y_anchors.begin(), c.y_anchors.end());
    c.claim4 = !c.x_anchors.empty() && !c.y_anchors.empty();

    const auto dx = static_cast<int>(nx.size());
    const auto dy = static_cast<int>(ny.size());
    const auto tx = static_cast<int>(c.x_anchors.size());
    const auto ty = static_cast<int>(c.y_anchors.size());
    if (dx == 2 && dy == 2) c.cls = OmegaClass::Omega1;
    else if (dx == s + 1 && dy == s + 1) c.cls = OmegaClass::Omega2;
    else if (dx == s + 1) c.cls = tx == s ? OmegaClass::Omega31 : OmegaClass::Omega33;
    else c.cls = ty == s ? OmegaClass::Omega32 : OmegaClass::Omega34;
    return c;
}

VertexSet anchored_set(const Graph& g, const VertexSet& side, const std::vector<Vertex>& anchors, Vertex fallback,
                       bool first_only) {
    if (anchors.empty()) return VertexSet(g.vertex_count(), {fallback});
    VertexSet out = side;
    for (Vertex a : anchors) {
        out &= g.neighbors(a);
        if (first_only) break;
    }
    return out;
}

}  // namespace

Classification classify_non_edge(const Graph& g, const PartitionUVT& part, Vertex x, Vertex y, int s, int k,
                                 const SearchLimits& limits) {
    check_probe(g, part, x, y);
    return classify_with(FskSearcher(g, s, k, limits), part, x, y);
}

PipelineResult deletion_pipeline(const Graph& g, const PartitionUVT& part, int s, int k, const SearchLimits& limits) {
    const std::size_t n = g.vertex_count();
    if (part.u.universe() != n || part.v.universe() != n || part.t.universe() != n)
        throw std::invalid_argument("partition does not match graph");
    const FskSearcher searcher(g, s, k, limits);
    VertexSet u = part.u;
    VertexSet v = part.v;
    DeletionTrace trace;
    trace.n = n;
    trace.t_size = part.t.count();

    for (;;) {
        Edge probe{kNoVertex, kNoVertex};
        for (Vertex x = u.first(); x != kNoVertex; x = u.next(x + 1)) {
            const Vertex y = (v - g.neighbors(x)).first();
            if (y != kNoVertex) {
                probe = {x, y};
                break;
            }
        }
        if (probe.first == kNoVertex) break;
        if (trace.steps.size() >= n) throw std::logic_error("deletion pipeline exceeded n steps");

        const auto [x, y] = probe;
        Classification c = classify_with(searcher, part, x, y);
        const bool first_only = c.cls == OmegaClass::Omega1;
        const VertexSet xs = anchored_set(g, u, c.x_anchors, x, first_only);
        const VertexSet ys = anchored_set(g, v, c.y_anchors, y, first_only);
        if (xs.empty() && ys.empty()) throw std::logic_error("both candidate sets empty for a witnessed non-edge");

        DeletionStep step;
        step.probe = probe;
        step.cls = c.cls;
        step.x_anchors = c.x_anchors;
        step.y_anchors = c.y_anchors;
        step.x_size = xs.count();
        step.y_size = ys.count();
        step.claim4 = c.claim4;
        step.deleted_u_side = step.x_size <= step.y_size;
        const VertexSet& gone = step.deleted_u_side ? xs : ys;
        step.deleted = gone.to_vector();
        u -= gone;
        v -= gone;
        trace.deleted_total += step.deleted.size();
        if (!c.claim4) ++trace.claim4_violations;
        trace.steps.push_back(std::move(step));
    }
    trace.core_size = u.count() + v.count();
    return {{u, v}, std::move(trace)};
}

std::vector<std::string> trace_violations(const PipelineResult& r, const PartitionUVT& part) {
    std::vector<std::string> out;
    const std::size_t n = part.t.universe();
    VertexSet seen(n);
    std::size_t total = 0;
    for (std::size_t i = 0; i < r.trace.steps.size(); ++i) {
        for (Vertex v : r.trace.steps[i].deleted) {
            if (seen.contains(v)) out.push_back("vertex " + std::to_string(v) + " deleted twice");
            if (part.t.contains(v)) out.push_back("step " + std::to_string(i) + " deletes T vertex " + std::to_string(v));
            if (r.core.a.contains(v) || r.core.b.contains(v))
                out.push_back("step " + std::to_string(i) + " deletes core vertex " + std::to_string(v));
            seen.insert(v);
        }
        total += r.trace.steps[i].deleted.size();
    }
    if (total != r.trace.deleted_total) out.push_back("deleted_total disagrees with the steps");
    if (r.trace.t_size + r.trace.deleted_total + r.core.size() != n)
        out.push_back("|T| + deleted + |core| != n");
    if (r.trace.steps.size() > n) out.push_back("more than n steps");
    return out;
}

BoundReport bound_report(const DeletionTrace& trace, int n, int s, int k, const Rational& alpha) {
    if (n < 1 || s < 1 || k < 1) throw std::invalid_argument("bound_report needs n, s, k >= 1");
    if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
    BoundReport r;
    r.t_size = trace.t_size;
    r.deleted_total = trace.deleted_total;
    r.removed = trace.t_size + trace.deleted_total;
    const Integer base = Integer(12) * s * k;
    r.bound = Rational(4 * pow(base, static_cast<unsigned>(s + 3))) * alpha * n;
    r.within = Rational(r.removed) <= r.bound;
    r.vacuous = r.bound >= n;
    r.margin = r.bound - Rational(r.removed);
    const RootBracket root = root_bracket(pow(Integer(n), static_cast<unsigned>(s)), static_cast<unsigned>(s + 1),
                                          Integer(1'000'000));
    r.epsilon_lo = alpha / root.hi;
    r.epsilon_hi = alpha / root.lo;
    return r;
}

}  // namespace fsk
