#include "fsk/bipartite.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace fsk {

bool is_path(const Graph& g, const Path& p) {
    const std::size_t n = g.vertex_count();
    VertexSet seen(n);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] >= n || seen.contains(p[i])) return false;
        seen.insert(p[i]);
        if (i > 0 && !g.has_edge(p[i - 1], p[i])) return false;
    }
    return true;
}

namespace {

VertexSet component_of(const Graph& g, Vertex start, const VertexSet& within) {
    VertexSet comp(g.vertex_count(), {start});
    VertexSet frontier = comp;
    while (!frontier.empty()) {
        VertexSet next(g.vertex_count());
        frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
        next &= within;
        next -= comp;
        comp |= next;
        frontier = std::move(next);
    }
    return comp;
}

// Exhaustive fixed-length path search. A (vertex, remaining) pair is recorded
// as failed only when its subtree never ran into a vertex already on the
// path, so the record holds for every later prefix.
class ParityPathSearch {
public:
    ParityPathSearch(const Graph& g, Vertex u, Vertex v, int length, const VertexSet& w)
        : g_(g), target_(v), length_(length), used_(g.vertex_count(), {u}) {
        VertexSet blocked = w;
        blocked.insert(u);
        blocked.insert(v);
        layers_.emplace_back(g.vertex_count(), std::initializer_list<Vertex>{v});
        for (int d = 1; d < length; ++d) {
            VertexSet next(g.vertex_count());
            layers_.back().for_each([&](Vertex x) { next |= g.neighbors(x); });
            next -= blocked;
            layers_.push_back(std::move(next));
        }
        failed_.assign(static_cast<std::size_t>(length) + 1, VertexSet(g.vertex_count()));
        path_.push_back(u);
    }

    std::optional<Path> run() {
        bool dependent = false;
        if (!step(path_.front(), length_, dependent)) return std::nullopt;
        return path_;
    }

private:
    bool step(Vertex cur, int rem, bool& dependent) {
        if (rem == 1) {
            if (!g_.has_edge(cur, target_)) return false;
            path_.push_back(target_);
            return true;
        }
        VertexSet cand = g_.neighbors(cur) & layers_[static_cast<std::size_t>(rem - 1)];
        if (cand.intersects(used_)) dependent = true;
        cand -= used_;
        cand -= failed_[static_cast<std::size_t>(rem - 1)];
        for (Vertex x = cand.first(); x != kNoVertex; x = cand.next(x + 1)) {
            used_.insert(x);
            path_.push_back(x);
            bool child_dependent = false;
            if (step(x, rem - 1, child_dependent)) return true;
            path_.pop_back();
            used_.erase(x);
            if (child_dependent) dependent = true;
            else failed_[static_cast<std::size_t>(rem - 1)].insert(x);
        }
        return false;
    }

    const Graph& g_;
    Vertex target_;
    int length_;
    VertexSet used_;
    std::vector<VertexSet> layers_;
    std::vector<VertexSet> failed_;
    Path path_;
};

}  // namespace

std::optional<Path> find_parity_path(const Graph& g, Vertex u, Vertex v, int length, const VertexSet& w) {
    const std::size_t n = g.vertex_count();
    if (u >= n || v >= n) throw std::out_of_range("path endpoint outside graph");
    if (u == v) throw std::invalid_argument("path endpoints must be distinct");
    if (length < 1) throw std::invalid_argument("path length must be positive");
    if (w.universe() != n) throw std::invalid_argument("avoided set is not a vertex set of this graph");
    const auto coloring = two_coloring(g);
    if (!coloring) throw std::invalid_argument("find_parity_path needs a bipartite graph");
    if (!component_of(g, u, g.all_vertices()).contains(v)) return std::nullopt;
    const bool same_side = coloring->contains(u) == coloring->contains(v);
    if (same_side != (length % 2 == 0))
        throw std::invalid_argument("length " + std::to_string(length) + " has the wrong parity for endpoints on " +
                                    (same_side ? "the same side" : "opposite sides"));
    if (static_cast<std::size_t>(length) >= n) return std::nullopt;
    return ParityPathSearch(g, u, v, length, w).run();
}

namespace {

// Dense regime: in a connected graph with minimum degree d whose order is at
// least L <= 2d+1, a path that cannot be extended at either end has at
// least 2d+1 vertices or closes into a cycle through all its vertices, and
// that cycle reopens into a longer path through an outside neighbour.
Path rotation_path(const Graph& g, const VertexSet& comp, std::size_t target) {
    Path p{comp.first()};
    VertexSet on(g.vertex_count(), {p.front()});
    auto extend_back = [&] {
        for (;;) {
            const Vertex next = ((g.neighbors(p.back()) & comp) - on).first();
            if (next == kNoVertex || p.size() >= target) return;
            p.push_back(next);
            on.insert(next);
        }
    };
    while (p.size() < target) {
        extend_back();
        std::reverse(p.begin(), p.end());
        extend_back();
        if (p.size() >= target) break;
        const std::size_t l = p.size() - 1;
        std::size_t pivot = l;
        for (std::size_t i = 0; i < l; ++i)
            if (g.has_edge(p.front(), p[i + 1]) && g.has_edge(p.back(), p[i])) {
                pivot = i;
                break;
            }
        if (pivot == l) throw std::logic_error("rotation failed: minimum degree invariant broken");
        Path cycle(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(pivot) + 1);
        for (std::size_t j = l; j > pivot; --j) cycle.push_back(p[j]);
        std::size_t open = cycle.size();
        Vertex outside = kNoVertex;
        for (std::size_t j = 0; j < cycle.size(); ++j) {
            outside = ((g.neighbors(cycle[j]) & comp) - on).first();
            if (outside != kNoVertex) {
                open = j;
                break;
            }
        }
        if (outside == kNoVertex) throw std::logic_error("rotation failed: component exhausted below target");
        // Walk the cycle so that cycle[open] comes last, then step outside.
        Path next;
        for (std::size_t j = 1; j <= cycle.size(); ++j) next.push_back(cycle[(open + j) % cycle.size()]);
        next.push_back(outside);
        on.insert(outside);
        p = std::move(next);
    }
    return p;
}

std::optional<Path> dense_long_path(const Graph& g, std::size_t target) {
    const std::size_t n = g.vertex_count();
    // Peel vertices of degree <= (L-2)/2; each removal keeps e > (L-2)|V|/2.
    std::vector<std::size_t> deg(n);
    VertexSet alive = g.all_vertices();
    std::deque<Vertex> queue;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (2 * deg[v] <= target - 2) queue.push_back(v);
    }
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        if (!alive.contains(v)) continue;
        alive.erase(v);
        (g.neighbors(v) & alive).for_each([&](Vertex u) {
            if (2 * --deg[u] <= target - 2) queue.push_back(u);
        });
    }
    VertexSet left = alive;
    while (!left.empty()) {
        const VertexSet comp = component_of(g, left.first(), alive);
        left -= comp;
        const std::size_t edges = g.edges_within(comp);
        if (2 * edges > (target - 2) * comp.count()) return rotation_path(g, comp, target);
    }
    return std::nullopt;
}

class LongPathDfs {
public:
    LongPathDfs(const Graph& g, std::size_t target, std::uint64_t budget)
        : g_(g), target_(target), budget_(budget), on_(g.vertex_count()) {}

    std::optional<Path> run() {
        std::vector<Vertex> starts(g_.vertex_count());
        for (Vertex v = 0; v < starts.size(); ++v) starts[v] = v;
        std::stable_sort(starts.begin(), starts.end(), [&](Vertex a, Vertex b) { return g_.degree(a) < g_.degree(b); });
        for (Vertex s : starts) {
            path_ = {s};
            on_.insert(s);
            if (grow()) return path_;
            on_.erase(s);
            if (exhausted_) break;
        }
        return std::nullopt;
    }

    bool exhausted() const { return exhausted_; }

private:
    bool grow() {
        if (path_.size() >= target_) return true;
        if (++steps_ > budget_) {
            exhausted_ = true;
            return false;
        }
        std::vector<Vertex> next = ((g_.neighbors(path_.back())) - on_).to_vector();
        // Fewest onward options first.
        std::stable_sort(next.begin(), next.end(), [&](Vertex a, Vertex b) {
            return g_.neighbors(a).count() - g_.neighbors(a).count_common(on_) <
                   g_.neighbors(b).count() - g_.neighbors(b).count_common(on_);
        });
        for (Vertex x : next) {
            path_.push_back(x);
            on_.insert(x);
            if (grow()) return true;
            on_.erase(x);
            path_.pop_back();
            if (exhausted_) return false;
        }
        return false;
    }

    const Graph& g_;
    std::size_t target_;
    std::uint64_t budget_;
    std::uint64_t steps_ = 0;
    bool exhausted_ = false;
    VertexSet on_;
    Path path_;
};

}  // namespace

LongPathResult find_long_path(const Graph& g, int min_vertices, std::uint64_t budget) {
    if (min_vertices < 1) throw std::invalid_argument("min_vertices must be positive");
    const std::size_t n = g.vertex_count();
    const auto target = static_cast<std::size_t>(min_vertices);
    LongPathResult out;
    if (target > n) return out;
    if (target == 1) {
        out.path = Path{0};
        return out;
    }
    out.density_guarantee = 2 * g.edge_count() > (target - 2) * n;
    if (out.density_guarantee) {
        out.path = dense_long_path(g, target);
        if (!out.path) throw std::logic_error("dense regime produced no path");
        return out;
    }
    LongPathDfs dfs(g, target, budget);
    out.path = dfs.run();
    out.budget_exhausted = dfs.exhausted();
    return out;
}

std::vector<Path> truncate_into_disjoint_paths(const Path& path, int count, int each_length, const VertexSet& side) {
    if (count < 0) throw std::invalid_argument("count must be non-negative");
    if (each_length < 0 || each_length % 2 != 0)
        throw std::invalid_argument("each_length " + std::to_string(each_length) +
                                    " cannot start and end on the same side of an alternating path");
    const auto span = static_cast<std::size_t>(each_length);
    std::vector<Path> out;
    std::size_t i = 0;
    while (out.size() < static_cast<std::size_t>(count)) {
        while (i < path.size() && !side.contains(path[i])) ++i;
        if (i + span >= path.size() || !side.contains(path[i + span])) {
            const std::size_t missing = static_cast<std::size_t>(count) - out.size();
            const std::size_t needed = missing * (span + 1);
            const std::size_t have = path.size() > i ? path.size() - i : 0;
            throw std::invalid_argument("path on " + std::to_string(path.size()) + " vertices is too short: " +
                                        std::to_string(missing) + " more segments need " + std::to_string(needed) +
                                        " vertices from position " + std::to_string(i) + ", " +
                                        std::to_string(have) + " remain (short by " +
                                        std::to_string(needed > have ? needed - have : 0) + ")");
        }
        out.emplace_back(path.begin() + static_cast<std::ptrdiff_t>(i),
                         path.begin() + static_cast<std::ptrdiff_t>(i + span) + 1);
        i += span + 1;
    }
    return out;
}

}  // namespace fsk
