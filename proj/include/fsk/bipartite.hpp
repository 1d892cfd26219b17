#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsk/graph.hpp"
#include "fsk/rational.hpp"

namespace fsk {

// Vertex classes of an induced complete bipartite subgraph. Either side may
// be empty (an independent set is K_{a,0}).
struct BicliqueResult {
    VertexSet a;
    VertexSet b;

    std::size_t size() const { return a.count() + b.count(); }
};

// Problems with r as an induced complete bipartite subgraph of g: overlapping
// sides, an edge inside a side, a missing cross edge. Empty means valid.
std::vector<std::string> biclique_violations(const Graph& g, const BicliqueResult& r);

struct BicliqueSearch {
    BicliqueResult best;
    bool optimal = false;
    std::uint64_t nodes = 0;
    // Proven upper bound on the optimum; equals best.size() when optimal.
    std::size_t upper_bound = 0;
};

// Exact branch and bound. Vertices with identical neighbourhoods are merged
// into weighted classes first, since an optimum can always take whole classes.
// Stops after `budget` nodes with optimal = false.
BicliqueSearch max_induced_complete_bipartite(const Graph& g, std::uint64_t budget = 100'000'000);

// Disjoint U, V, T covering V(G).
struct PartitionUVT {
    VertexSet u;
    VertexSet v;
    VertexSet t;
    int h = 0;
};

// Violations of: disjoint cover, U and V independent, and every T vertex
// having 0 or >= h+1 neighbours in U (and likewise in V).
std::vector<std::string> partition_violations(const Graph& g, const PartitionUVT& p);

enum class PartitionPhase {
    SameSide,  // vertex with too many neighbours on its own side
    Peel,      // core vertex with fewer than h neighbours across
    Greedy,    // neighbours of a T vertex with 1..h neighbours on one side
};

std::string phase_name(PartitionPhase phase);

struct PartitionMove {
    PartitionPhase phase = PartitionPhase::SameSide;
    Vertex trigger = kNoVertex;
    std::vector<Vertex> moved;  // vertices sent to T
};

struct PartitionStats {
    bool started_bipartite = false;  // initial sides came from a proper 2-colouring
    std::size_t cut_edges = 0;       // edges across the initial bipartition
    std::size_t min_core_degree = 0;  // minimum degree of G[U, V]; 0 when the core is empty
    Rational degree_target;           // (1/2 - 1/(10h)) n
    bool meets_degree_target = false;
};

struct PartitionOutcome {
    PartitionUVT partition;
    std::vector<PartitionMove> trace;
    PartitionStats stats;
};

// Starting bipartition: the 2-colouring when g is bipartite, otherwise a
// seeded local-search max cut followed by moving vertices with >= h+1
// same-side neighbours (then the worst remaining offenders) to T until both
// sides are independent. Then, to a fixpoint, core vertices with fewer than
// h neighbours across are moved to T, and while some T vertex has between 1
// and h neighbours in U (or V) those neighbours are moved to T.
PartitionOutcome build_uvt_partition(const Graph& g, int h, std::uint64_t seed = 1, int restarts = 8);

using Path = std::vector<Vertex>;

// True iff p is a path in g: distinct vertices, consecutive ones adjacent.
bool is_path(const Graph& g, const Path& p);

// A u-v path with exactly `length` edges whose interior avoids w, by
// exhaustive search. g must be bipartite; a length whose parity disagrees with
// the sides of u and v throws std::invalid_argument.
std::optional<Path> find_parity_path(const Graph& g, Vertex u, Vertex v, int length, const VertexSet& w);

struct LongPathResult {
    std::optional<Path> path;
    // e(G) > (L-2) n / 2, where the search is constructive and cannot miss.
    bool density_guarantee = false;
    bool budget_exhausted = false;
};

// A path on at least min_vertices vertices. In the dense regime the path is
// built by peeling low-degree vertices and rotating a maximal path into a
// cycle until it is long enough; otherwise a depth-first search bounded by
// `budget` extension steps.
LongPathResult find_long_path(const Graph& g, int min_vertices, std::uint64_t budget = 10'000'000);

// Cuts `count` vertex-disjoint subpaths with `each_length` edges out of an
// alternating path, each starting and ending in `side`, scanning left to
// right. Throws std::invalid_argument when the path is too short (stating the
// shortfall) or each_length is odd.
std::vector<Path> truncate_into_disjoint_paths(const Path& path, int count, int each_length, const VertexSet& side);

}  // namespace fsk
