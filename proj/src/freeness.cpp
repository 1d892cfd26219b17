#include "fsk/freeness.hpp"

#include <atomic>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "fsk/parallel.hpp"
#include "fsk/pattern.hpp"

namespace fsk {

int WitnessCopy::degree_in_copy(Vertex host) const {
    return static_cast<int>(neighbors_in_copy(host).size());
}

std::vector<Vertex> WitnessCopy::neighbors_in_copy(Vertex host) const {
    const FskPattern p = build_fsk(s, k);
    std::vector<Vertex> out;
    for (auto [u, v] : p.graph.edges()) {
        if (map.at(u) == host) out.push_back(map.at(v));
        else if (map.at(v) == host) out.push_back(map.at(u));
    }
    return out;
}

std::vector<std::string> witness_violations(const Graph& g, const WitnessCopy& w, std::optional<Edge> probe) {
    std::vector<std::string> out;
    if (w.s < 1 || w.k < 1) return {"invalid pattern parameters"};
    const FskPattern p = build_fsk(w.s, w.k);
    if (w.map.size() != p.order()) return {"map has " + std::to_string(w.map.size()) + " entries, pattern has " +
                                           std::to_string(p.order())};
    VertexSet image(g.vertex_count());
    for (Vertex v : w.map) {
        if (v >= g.vertex_count()) return {"map leaves the host graph"};
        if (image.contains(v)) out.push_back("map is not injective at host vertex " + std::to_string(v));
        image.insert(v);
    }
    for (auto [u, v] : p.graph.edges()) {
        const Vertex hu = w.map[u];
        const Vertex hv = w.map[v];
        const bool is_probe = probe && ((probe->first == hu && probe->second == hv) ||
                                        (probe->first == hv && probe->second == hu));
        if (!is_probe && !g.has_edge(hu, hv))
            out.push_back("pattern edge " + std::to_string(u) + "-" + std::to_string(v) + " maps to non-edge " +
                          std::to_string(hu) + "-" + std::to_string(hv));
    }
    return out;
}

NotFskFree::NotFskFree(WitnessCopy witness)
    : Error("graph is not F_{" + std::to_string(witness.s) + "," + std::to_string(witness.k) +
            "}-free (copy with hub edge " + std::to_string(witness.map.at(0)) + "-" +
            std::to_string(witness.map.at(1)) + ")"),
      witness_(std::move(witness)) {}

namespace {

// layer[d]: vertices outside `blocked` with a walk of exactly d steps to
// `target` whose intermediate vertices also avoid `blocked` (layer[0] = {target}).
std::vector<VertexSet> walk_layers(const Graph& g, Vertex target, const VertexSet& blocked, int depth) {
    std::vector<VertexSet> layers;
    layers.reserve(static_cast<std::size_t>(depth) + 1);
    layers.emplace_back(g.vertex_count(), std::initializer_list<Vertex>{target});
    for (int d = 1; d <= depth; ++d) {
        VertexSet next(g.vertex_count());
        layers.back().for_each([&](Vertex v) { next |= g.neighbors(v); });
        next -= blocked;
        layers.push_back(std::move(next));
    }
    return layers;
}

struct HubLayers {
    std::vector<VertexSet> to_b;
    std::vector<VertexSet> to_a;
};

HubLayers hub_layers(const Graph& g, Vertex a, Vertex b, int length) {
    VertexSet ends(g.vertex_count(), {a, b});
    return {walk_layers(g, b, ends, length - 1), walk_layers(g, a, ends, length - 1)};
}

// Depth-first packing of `count` internally disjoint a-b paths of a fixed
// length whose interiors avoid a given set. Paths are produced in increasing
// order of their first interior vertex, which removes the s! relabelings.
class PathPacker {
public:
    PathPacker(const Graph& g, Vertex a, Vertex b, int length, const HubLayers& layers, VertexSet used)
        : g_(g), a_(a), b_(b), length_(length), layers_(layers), used_(std::move(used)) {}

    bool pack(int count) {
        paths_.clear();
        scratch_.assign(static_cast<std::size_t>(count * length_) + 1, VertexSet(g_.vertex_count()));
        current_.clear();
        return next_path(count, 0, 0);
    }

    const std::vector<std::vector<Vertex>>& paths() const { return paths_; }

private:
    bool next_path(int remaining, Vertex min_first, std::size_t depth) {
        if (remaining == 0) return true;
        VertexSet& firsts = scratch_[depth];
        firsts.assign_and(g_.neighbors(a_), layers_.to_b[static_cast<std::size_t>(length_ - 1)]);
        firsts -= used_;
        if (firsts.count() < static_cast<std::size_t>(remaining)) return false;
        if (remaining > 1) {
            VertexSet lasts = g_.neighbors(b_) & layers_.to_a[static_cast<std::size_t>(length_ - 1)];
            lasts -= used_;
            if (lasts.count() < static_cast<std::size_t>(remaining)) return false;
        }
        for (Vertex c = firsts.next(min_first); c != kNoVertex; c = firsts.next(c + 1)) {
            used_.insert(c);
            current_.push_back(c);
            if (extend(c, length_ - 1, remaining, depth + 1)) return true;
            current_.pop_back();
            used_.erase(c);
        }
        return false;
    }

    bool extend(Vertex cur, int rem, int remaining, std::size_t depth) {
        if (rem == 1) {
            paths_.push_back(current_);
            const Vertex first = current_.front();
            std::vector<Vertex> saved;
            saved.swap(current_);
            if (next_path(remaining - 1, first + 1, depth)) return true;
            current_.swap(saved);
            paths_.pop_back();
            return false;
        }
        VertexSet& cand = scratch_[depth];
        cand.assign_and(g_.neighbors(cur), layers_.to_b[static_cast<std::size_t>(rem - 1)]);
        cand -= used_;
        for (Vertex v = cand.first(); v != kNoVertex; v = cand.next(v + 1)) {
            used_.insert(v);
            current_.push_back(v);
            if (extend(v, rem - 1, remaining, depth + 1)) return true;
            current_.pop_back();
            used_.erase(v);
        }
        return false;
    }

    const Graph& g_;
    Vertex a_;
    Vertex b_;
    int length_;
    const HubLayers& layers_;
    VertexSet used_;
    std::vector<Vertex> current_;
    std::vector<std::vector<Vertex>> paths_;
    std::vector<VertexSet> scratch_;
};

WitnessCopy make_witness(int s, int k, Vertex a, Vertex b, const std::vector<std::vector<Vertex>>& paths) {
    WitnessCopy w{s, k, {a, b}};
    for (const auto& path : paths) w.map.insert(w.map.end(), path.begin(), path.end());
    return w;
}

// Enumerates the x-y paths of a fixed length in g with interior avoiding x, y,
// calling visit(path) with the full vertex sequence x .. y until it returns true.
template <class Visit>
bool for_each_path(const Graph& g, Vertex x, Vertex y, int length, Visit&& visit) {
    VertexSet ends(g.vertex_count(), {x, y});
    const std::vector<VertexSet> to_y = walk_layers(g, y, ends, length - 1);
    std::vector<Vertex> path{x};
    VertexSet used = ends;
    std::vector<VertexSet> scratch(static_cast<std::size_t>(length) + 1, VertexSet(g.vertex_count()));

    auto step = [&](auto&& self, Vertex cur, int rem) -> bool {
        if (rem == 1) {
            if (!g.has_edge(cur, y)) return false;
            path.push_back(y);
            const bool done = visit(path);
            path.pop_back();
            return done;
        }
        VertexSet& cand = scratch[static_cast<std::size_t>(rem)];
        cand.assign_and(g.neighbors(cur), to_y[static_cast<std::size_t>(rem - 1)]);
        cand -= used;
        for (Vertex v = cand.first(); v != kNoVertex; v = cand.next(v + 1)) {
            used.insert(v);
            path.push_back(v);
            if (self(self, v, rem - 1)) return true;
            path.pop_back();
            used.erase(v);
        }
        return false;
    };
    return step(step, x, length);
}

void check_limits(const Graph& g, const SearchLimits& limits) {
    if (g.vertex_count() > limits.max_vertices)
        throw SearchLimitExceeded("exhaustive search refused: graph has " + std::to_string(g.vertex_count()) +
                                  " vertices, limit is " + std::to_string(limits.max_vertices));
}

}  // namespace

FskSearcher::FskSearcher(const Graph& g, int s, int k, const SearchLimits& limits) : g_(g), s_(s), k_(k) {
    if (s < 1 || k < 1) throw std::invalid_argument("F_{s,k} needs s >= 1 and k >= 1");
    check_limits(g, limits);
}

std::optional<WitnessCopy> FskSearcher::at_hub(Vertex x, Vertex y) const {
    if (x == y) throw std::invalid_argument("probe pair must consist of two distinct vertices");
    if (x >= g_.vertex_count() || y >= g_.vertex_count()) throw std::out_of_range("probe vertex outside graph");
    const int length = 2 * k_;
    const HubLayers layers = hub_layers(g_, x, y, length);
    PathPacker packer(g_, x, y, length, layers, VertexSet(g_.vertex_count(), {x, y}));
    if (!packer.pack(s_)) return std::nullopt;
    return make_witness(s_, k_, x, y, packer.paths());
}

std::optional<WitnessCopy> FskSearcher::through(Vertex x, Vertex y) const {
    if (auto hub = at_hub(x, y)) return hub;
    const int length = 2 * k_;
    const std::size_t n = g_.vertex_count();
    // G + xy degree, used to discard hub candidates that cannot carry s+1 edges.
    auto degree_plus = [&](Vertex v) {
        return g_.degree(v) + ((v == x || v == y) && !g_.has_edge(x, y) ? 1U : 0U);
    };
    std::unordered_map<std::uint64_t, HubLayers> cache;
    std::optional<WitnessCopy> found;

    // Every copy using xy off the hub contains an odd cycle x .. y x through
    // the hub edge; enumerate the x-y paths closing it and try each of their
    // edges as the hub.
    for_each_path(g_, x, y, length, [&](const std::vector<Vertex>& cycle) {
        VertexSet on_cycle(n, std::span<const Vertex>(cycle));
        for (int i = 0; i < length; ++i) {
            const Vertex a = cycle[static_cast<std::size_t>(i)];
            const Vertex b = cycle[static_cast<std::size_t>(i) + 1];
            if (degree_plus(a) < static_cast<std::size_t>(s_) + 1 || degree_plus(b) < static_cast<std::size_t>(s_) + 1)
                continue;
            const std::uint64_t key = static_cast<std::uint64_t>(a) * n + b;
            auto it = cache.find(key);
            if (it == cache.end()) it = cache.emplace(key, hub_layers(g_, a, b, length)).first;
            PathPacker packer(g_, a, b, length, it->second, on_cycle);
            if (!packer.pack(s_ - 1)) continue;
            // The cycle minus ab, walked from a back through x, y to b.
            std::vector<Vertex> around;
            for (int j = i - 1; j >= 0; --j) around.push_back(cycle[static_cast<std::size_t>(j)]);
            for (int j = length; j >= i + 2; --j) around.push_back(cycle[static_cast<std::size_t>(j)]);
            std::vector<std::vector<Vertex>> paths{around};
            paths.insert(paths.end(), packer.paths().begin(), packer.paths().end());
            found = make_witness(s_, k_, a, b, paths);
            return true;
        }
        return false;
    });
    return found;
}

std::optional<WitnessCopy> find_fsk_at_edge(const Graph& g, Vertex x, Vertex y, int s, int k,
                                            const SearchLimits& limits) {
    return FskSearcher(g, s, k, limits).at_hub(x, y);
}

std::optional<WitnessCopy> find_fsk_through_edge(const Graph& g, Vertex x, Vertex y, int s, int k,
                                                 const SearchLimits& limits) {
    return FskSearcher(g, s, k, limits).through(x, y);
}

FreenessResult is_fsk_free(const Graph& g, int s, int k, const SearchLimits& limits) {
    const FskSearcher searcher(g, s, k, limits);
    const std::vector<Edge> edges = g.edges();
    std::vector<std::optional<WitnessCopy>> found(edges.size());
    std::atomic<std::size_t> lowest{std::numeric_limits<std::size_t>::max()};
    parallel_for(edges.size(), limits.workers, [&](std::size_t i) {
        if (i > lowest.load(std::memory_order_relaxed)) return;
        found[i] = searcher.at_hub(edges[i].first, edges[i].second);
        if (found[i]) {
            std::size_t seen = lowest.load();
            while (i < seen && !lowest.compare_exchange_weak(seen, i)) {
            }
        }
    });
    const std::size_t first = lowest.load();
    if (first == std::numeric_limits<std::size_t>::max()) return {true, std::nullopt};
    return {false, found[first]};
}

namespace {

std::vector<Edge> non_edges(const Graph& g) {
    std::vector<Edge> out;
    const std::size_t n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

void require_free(const Graph& g, int s, int k, const SearchLimits& limits) {
    FreenessResult free = is_fsk_free(g, s, k, limits);
    if (!free.free) throw NotFskFree(*free.witness);
}

}  // namespace

MaximalityResult is_maximal_fsk_free(const Graph& g, int s, int k, const SearchLimits& limits) {
    require_free(g, s, k, limits);
    const FskSearcher searcher(g, s, k, limits);
    const std::vector<Edge> probes = non_edges(g);
    std::vector<char> creates(probes.size(), 0);
    parallel_for(probes.size(), limits.workers, [&](std::size_t i) {
        creates[i] = searcher.through(probes[i].first, probes[i].second).has_value() ? 1 : 0;
    });
    MaximalityResult out;
    for (std::size_t i = 0; i < probes.size(); ++i)
        if (creates[i] == 0) out.failing.push_back(probes[i]);
    out.maximal = out.failing.empty();
    return out;
}

SaturationResult saturate(const Graph& g, int s, int k, const SearchLimits& limits) {
    require_free(g, s, k, limits);
    SaturationResult out{g, {}};
    const std::vector<Edge> candidates = non_edges(g);
    const std::size_t batch = resolve_workers(limits.workers) * 4;
    std::size_t i = 0;
    while (i < candidates.size()) {
        // Probe a window speculatively against the current graph. A positive
        // probe stays valid as edges are added; a negative one is only trusted
        // up to the first accepted edge in the window.
        const std::size_t end = std::min(candidates.size(), i + batch);
        std::vector<char> creates(end - i, 0);
        {
            const FskSearcher searcher(out.graph, s, k, limits);
            parallel_for(end - i, limits.workers, [&](std::size_t j) {
                const auto [u, v] = candidates[i + j];
                creates[j] = searcher.through(u, v).has_value() ? 1 : 0;
            });
        }
        std::size_t j = 0;
        while (j < creates.size() && creates[j] != 0) ++j;
        if (j < creates.size()) {
            const auto [u, v] = candidates[i + j];
            out.graph.add_edge(u, v);
            out.added.push_back(candidates[i + j]);
            ++j;
        }
        i += j;
    }
    return out;
}

}  // namespace fsk
