#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fsk/vertex_set.hpp"

namespace fsk {

using Edge = std::pair<Vertex, Vertex>;

// Undirected simple graph on vertices 0..n-1 stored as one neighbor bitset per
// vertex. Edges change only through add_edge/delete_edge, which keep the
// rows symmetric and loop-free.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);
    Graph(std::size_t n, std::span<const Edge> edges);

    static Graph complete(std::size_t n);
    static Graph complete_bipartite(std::size_t left, std::size_t right);
    static Graph cycle(std::size_t n);
    static Graph path(std::size_t n);
    static Graph petersen();

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edges_; }

    bool has_edge(Vertex u, Vertex v) const { return adj_.at(u).contains(v); }
    const VertexSet& neighbors(Vertex v) const { return adj_.at(v); }
    std::size_t degree(Vertex v) const { return adj_.at(v).count(); }

    // Both return whether the edge set changed. Loops are rejected.
    bool add_edge(Vertex u, Vertex v);
    bool delete_edge(Vertex u, Vertex v);

    VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }

    // Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    // Number of edges with both ends in s.
    std::size_t edges_within(const VertexSet& s) const;

    friend bool operator==(const Graph& a, const Graph& b) = default;

private:
    void check_vertex(Vertex v) const;

    std::vector<VertexSet> adj_;
    std::size_t edges_ = 0;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> new_to_old;
    std::vector<Vertex> old_to_new;  // kNoVertex for vertices outside the set
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Number of edges between two disjoint sets.
std::size_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);

// Pairs (u, v), u in a, v in b, uv not an edge, ordered by (u, v).
// Throws std::invalid_argument when a and b overlap.
std::vector<Edge> non_edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);

// Side assignment of a proper 2-coloring of g[within], or nullopt when g[within]
// has an odd cycle. Each component's smallest vertex gets side 0; the returned
// set holds the side-0 vertices.
std::optional<VertexSet> two_coloring(const Graph& g, const VertexSet& within);
std::optional<VertexSet> two_coloring(const Graph& g);

bool is_independent(const Graph& g, const VertexSet& s);

}  // namespace fsk
