#include "fsk/graph.hpp"

#include <deque>
#include <stdexcept>
#include <string>

namespace fsk {

Graph::Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

Graph Graph::complete(std::size_t n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::complete_bipartite(std::size_t left, std::size_t right) {
    Graph g(left + right);
    for (Vertex u = 0; u < left; ++u)
        for (Vertex v = 0; v < right; ++v) g.add_edge(u, static_cast<Vertex>(left + v));
    return g;
}

Graph Graph::cycle(std::size_t n) {
    Graph g(n);
    if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
    return g;
}

Graph Graph::path(std::size_t n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::petersen() {
    Graph g(10);
    for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(i, i + 5);                // spokes
        g.add_edge(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return g;
}

void Graph::check_vertex(Vertex v) const {
    if (v >= adj_.size())
        throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " +
                                std::to_string(adj_.size()));
}

bool Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed (vertex " + std::to_string(u) + ")");
    if (adj_[u].contains(v)) return false;
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++edges_;
    return true;
}

bool Graph::delete_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (!adj_[u].contains(v)) return false;
    adj_[u].erase(v);
    adj_[v].erase(u);
    --edges_;
    return true;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < adj_.size(); ++u)
        for (Vertex v = adj_[u].next(u + 1); v != kNoVertex; v = adj_[u].next(v + 1)) out.emplace_back(u, v);
    return out;
}

std::size_t Graph::edges_within(const VertexSet& s) const {
    std::size_t twice = 0;
    s.for_each([&](Vertex v) { twice += adj_[v].count_common(s); });
    return twice / 2;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    InducedSubgraph out;
    out.new_to_old = s.to_vector();
    out.old_to_new.assign(g.vertex_count(), kNoVertex);
    for (Vertex i = 0; i < out.new_to_old.size(); ++i) out.old_to_new[out.new_to_old[i]] = i;
    out.graph = Graph(out.new_to_old.size());
    for (Vertex i = 0; i < out.new_to_old.size(); ++i) {
        const VertexSet& row = g.neighbors(out.new_to_old[i]);
        for (Vertex j = i + 1; j < out.new_to_old.size(); ++j)
            if (row.contains(out.new_to_old[j])) out.graph.add_edge(i, j);
    }
    return out;
}

std::size_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.intersects(b)) throw std::invalid_argument("edges_between requires disjoint sets");
    std::size_t total = 0;
    a.for_each([&](Vertex u) { total += g.neighbors(u).count_common(b); });
    return total;
}

std::vector<Edge> non_edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.intersects(b)) throw std::invalid_argument("non_edges_between requires disjoint sets");
    std::vector<Edge> out;
    VertexSet missing(g.vertex_count());
    a.for_each([&](Vertex u) {
        missing.assign_andnot(b, g.neighbors(u));
        missing.for_each([&](Vertex v) { out.emplace_back(u, v); });
    });
    return out;
}

std::optional<VertexSet> two_coloring(const Graph& g, const VertexSet& within) {
    const std::size_t n = g.vertex_count();
    std::vector<int> side(n, -1);
    VertexSet zero(n);
    std::deque<Vertex> queue;
    for (Vertex root = within.first(); root != kNoVertex; root = within.next(root + 1)) {
        if (side[root] != -1) continue;
        side[root] = 0;
        zero.insert(root);
        queue.push_back(root);
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            const VertexSet nbrs = g.neighbors(u) & within;
            bool odd = false;
            nbrs.for_each([&](Vertex v) {
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    if (side[v] == 0) zero.insert(v);
                    queue.push_back(v);
                } else if (side[v] == side[u]) {
                    odd = true;
                }
            });
            if (odd) return std::nullopt;
        }
    }
    return zero;
}

std::optional<VertexSet> two_coloring(const Graph& g) { return two_coloring(g, g.all_vertices()); }

bool is_independent(const Graph& g, const VertexSet& s) {
    for (Vertex v = s.first(); v != kNoVertex; v = s.next(v + 1))
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

}  // namespace fsk
