#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fsk/errors.hpp"
#include "fsk/graph.hpp"

namespace fsk {

// Injective map from the vertices of F_{s,k} (numbered as in build_fsk) into
// a host graph.
struct WitnessCopy {
    int s = 0;
    int k = 0;
    std::vector<Vertex> map;

    Edge hub_edge() const { return {map.at(0), map.at(1)}; }
    // Host degree of a host vertex inside the copy (0 when not used).
    int degree_in_copy(Vertex host) const;
    // Host vertices adjacent to `host` inside the copy.
    std::vector<Vertex> neighbors_in_copy(Vertex host) const;
};

// Problems with a witness against g, or g + probe when a probe pair is given.
// Empty means every pattern edge lands on a host edge and the map is injective.
std::vector<std::string> witness_violations(const Graph& g, const WitnessCopy& w, std::optional<Edge> probe = {});

struct SearchLimits {
    std::size_t max_vertices = 512;
    unsigned workers = 1;  // 0 = hardware concurrency
};

class SearchLimitExceeded : public Error {
public:
    using Error::Error;
};

class NotFskFree : public Error {
public:
    explicit NotFskFree(WitnessCopy witness);
    const WitnessCopy& witness() const { return witness_; }

private:
    WitnessCopy witness_;
};

// Exhaustive search for copies of F_{s,k} in g or in g + xy. The searcher
// borrows g, which must outlive it and stay unmodified; const members are safe
// to call concurrently.
class FskSearcher {
public:
    FskSearcher(const Graph& g, int s, int k, const SearchLimits& limits = {});

    // A copy in g + xy whose hub edge ab is mapped onto xy: s internally
    // disjoint x-y paths of length 2k. xy need not be an edge of g.
    std::optional<WitnessCopy> at_hub(Vertex x, Vertex y) const;

    // A copy in g + xy that uses the pair xy as any of its edges.
    std::optional<WitnessCopy> through(Vertex x, Vertex y) const;

    int s() const { return s_; }
    int k() const { return k_; }
    const Graph& graph() const { return g_; }

private:
    const Graph& g_;
    int s_;
    int k_;
};

std::optional<WitnessCopy> find_fsk_at_edge(const Graph& g, Vertex x, Vertex y, int s, int k,
                                            const SearchLimits& limits = {});
std::optional<WitnessCopy> find_fsk_through_edge(const Graph& g, Vertex x, Vertex y, int s, int k,
                                                 const SearchLimits& limits = {});

struct FreenessResult {
    bool free = true;
    std::optional<WitnessCopy> witness;  // copy at the lowest edge carrying one
};

FreenessResult is_fsk_free(const Graph& g, int s, int k, const SearchLimits& limits = {});

struct MaximalityResult {
    bool maximal = true;
    std::vector<Edge> failing;  // non-edges whose addition creates no copy, lexicographic
};

// Throws NotFskFree when g already contains a copy.
MaximalityResult is_maximal_fsk_free(const Graph& g, int s, int k, const SearchLimits& limits = {});

struct SaturationResult {
    Graph graph;
    std::vector<Edge> added;  // in the order they were added
};

// Lexicographic greedy saturation: each non-edge, in order, is added iff the
// addition creates no copy. Adding edges never destroys a copy, so rejected
// pairs stay rejected and a single pass reaches the fixpoint.
// Throws NotFskFree when g already contains a copy.
SaturationResult saturate(const Graph& g, int s, int k, const SearchLimits& limits = {});

}  // namespace fsk
