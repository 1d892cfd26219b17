#include "fsk/bipartite.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fsk {

std::vector<std::string> biclique_violations(const Graph& g, const BicliqueResult& r) {
    const std::size_t n = g.vertex_count();
    if (r.a.universe() != n || r.b.universe() != n) return {"sides are not vertex sets of this graph"};
    std::vector<std::string> out;
    if (r.a.intersects(r.b)) out.push_back("sides overlap at vertex " + std::to_string((r.a & r.b).first()));
    auto check_side = [&](const VertexSet& side, const char* name) {
        side.for_each([&](Vertex v) {
            const Vertex u = (g.neighbors(v) & side).next(v + 1);
            if (u != kNoVertex)
                out.push_back(std::string("edge ") + std::to_string(v) + "-" + std::to_string(u) + " inside side " +
                              name);
        });
    };
    check_side(r.a, "a");
    check_side(r.b, "b");
    r.a.for_each([&](Vertex v) {
        const Vertex u = (r.b - g.neighbors(v)).first();
        if (u != kNoVertex)
            out.push_back("missing cross edge " + std::to_string(v) + "-" + std::to_string(u));
    });
    return out;
}

namespace {

struct TwinClasses {
    Graph graph;                             // one vertex per class
    std::vector<std::size_t> weight;
    std::vector<std::vector<Vertex>> members;
};

TwinClasses twin_classes(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::map<std::vector<VertexSet::Word>, std::size_t> index;
    std::vector<std::size_t> class_of(n);
    TwinClasses tc;
    for (Vertex v = 0; v < n; ++v) {
        const auto words = g.neighbors(v).words();
        const auto [it, fresh] = index.try_emplace({words.begin(), words.end()}, tc.members.size());
        if (fresh) tc.members.emplace_back();
        tc.members[it->second].push_back(v);
        class_of[v] = it->second;
    }
    const std::size_t c = tc.members.size();
    tc.graph = Graph(c);
    for (std::size_t i = 0; i < c; ++i) {
        tc.weight.push_back(tc.members[i].size());
        g.neighbors(tc.members[i].front()).for_each([&](Vertex u) {
            if (class_of[u] > i) tc.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(class_of[u]));
        });
    }
    return tc;
}

class BicliqueSolver {
public:
    BicliqueSolver(const TwinClasses& tc, std::uint64_t budget)
        : g_(tc.graph), weight_(tc.weight), budget_(budget), c_(tc.graph.vertex_count()) {
        order_.resize(c_);
        for (Vertex v = 0; v < c_; ++v) order_[v] = v;
        // Degree counts the underlying vertices, so heavy neighbourhoods go first.
        std::vector<std::size_t> deg(c_, 0);
        for (Vertex v = 0; v < c_; ++v) g_.neighbors(v).for_each([&](Vertex u) { deg[v] += weight_[u]; });
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex x, Vertex y) { return deg[x] > deg[y]; });
        best_a_ = VertexSet(c_);
        best_b_ = VertexSet(c_);
    }

    void run() {
        VertexSet a(c_), b(c_);
        const VertexSet all = VertexSet::full(c_);
        search(a, b, 0, all, all);
    }

    std::uint64_t nodes() const { return nodes_; }
    bool stopped() const { return stopped_; }
    std::size_t best_weight() const { return best_weight_; }
    std::size_t open_bound() const { return open_bound_; }
    const VertexSet& best_a() const { return best_a_; }
    const VertexSet& best_b() const { return best_b_; }

private:
    std::size_t weight_of(const VertexSet& s) const {
        std::size_t w = 0;
        s.for_each([&](Vertex v) { w += weight_[v]; });
        return w;
    }

    // Greedy matching in the conflict graph on the candidates: two
    // candidates conflict when no side assignment admits both. Each matched
    // pair loses at least its lighter weight.
    std::size_t conflict_reduction(const VertexSet& ca, const VertexSet& cb, const VertexSet& cand) const {
        VertexSet open = cand;
        VertexSet compat(c_);
        std::size_t reduction = 0;
        for (Vertex u = open.first(); u != kNoVertex; u = open.next(u + 1)) {
            const VertexSet& nu = g_.neighbors(u);
            compat.clear();
            if (ca.contains(u)) {
                compat |= ca - nu;
                compat |= cb & nu;
            }
            if (cb.contains(u)) {
                compat |= cb - nu;
                compat |= ca & nu;
            }
            VertexSet conflict = open - compat;
            conflict.erase(u);
            const Vertex v = conflict.next(u + 1);
            if (v == kNoVertex) continue;
            reduction += std::min(weight_[u], weight_[v]);
            open.erase(v);
        }
        return reduction;
    }

    void search(VertexSet& a, VertexSet& b, std::size_t current, const VertexSet& ca, const VertexSet& cb) {
        if (++nodes_ > budget_) {
            stopped_ = true;
            open_bound_ = std::max(open_bound_, current + weight_of(ca | cb));
            return;
        }
        if (current > best_weight_) {
            best_weight_ = current;
            best_a_ = a;
            best_b_ = b;
        }
        const VertexSet cand = ca | cb;
        if (cand.empty()) return;
        const std::size_t bound = current + weight_of(cand) - conflict_reduction(ca, cb, cand);
        if (bound <= best_weight_) return;

        Vertex v = kNoVertex;
        for (Vertex o : order_)
            if (cand.contains(o)) {
                v = o;
                break;
            }
        const VertexSet& nv = g_.neighbors(v);
        const bool root = a.empty() && b.empty();

        if (ca.contains(v)) {
            a.insert(v);
            VertexSet next_a = ca - nv;
            next_a.erase(v);
            search(a, b, current + weight_[v], next_a, cb & nv);
            a.erase(v);
            if (stopped_) return note_open(bound);
        }
        if (cb.contains(v) && !root) {
            b.insert(v);
            VertexSet next_b = cb - nv;
            next_b.erase(v);
            search(a, b, current + weight_[v], ca & nv, next_b);
            b.erase(v);
            if (stopped_) return note_open(bound);
        }
        VertexSet rest_a = ca;
        VertexSet rest_b = cb;
        rest_a.erase(v);
        rest_b.erase(v);
        search(a, b, current, rest_a, rest_b);
        if (stopped_) note_open(bound);
    }

    void note_open(std::size_t bound) { open_bound_ = std::max(open_bound_, bound); }

    const Graph& g_;
    const std::vector<std::size_t>& weight_;
    std::uint64_t budget_;
    std::size_t c_;
    std::vector<Vertex> order_;
    std::uint64_t nodes_ = 0;
    bool stopped_ = false;
    std::size_t best_weight_ = 0;
    std::size_t open_bound_ = 0;
    VertexSet best_a_;
    VertexSet best_b_;
};

}  // namespace

BicliqueSearch max_induced_complete_bipartite(const Graph& g, std::uint64_t budget) {
    const std::size_t n = g.vertex_count();
    const TwinClasses tc = twin_classes(g);
    BicliqueSolver solver(tc, budget);
    solver.run();

    BicliqueSearch out;
    out.best = {VertexSet(n), VertexSet(n)};
    solver.best_a().for_each([&](Vertex c) {
        for (Vertex v : tc.members[c]) out.best.a.insert(v);
    });
    solver.best_b().for_each([&](Vertex c) {
        for (Vertex v : tc.members[c]) out.best.b.insert(v);
    });
    out.nodes = solver.nodes();
    out.optimal = !solver.stopped();
    out.upper_bound = out.optimal ? solver.best_weight() : std::max(solver.best_weight(), solver.open_bound());
    return out;
}

}  // namespace fsk
