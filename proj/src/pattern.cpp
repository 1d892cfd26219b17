#include "fsk/pattern.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fsk {

std::size_t fsk_order(int s, int k) { return static_cast<std::size_t>(s) * (2 * static_cast<std::size_t>(k) - 1) + 2; }

FskPattern build_fsk(int s, int k) {
    if (s < 1 || k < 1)
        throw std::invalid_argument("F_{s,k} needs s >= 1 and k >= 1 (got s=" + std::to_string(s) +
                                    ", k=" + std::to_string(k) + ")");
    FskPattern p;
    p.s = s;
    p.k = k;
    p.graph = Graph(fsk_order(s, k));
    p.graph.add_edge(p.a, p.b);
    const auto interior = static_cast<Vertex>(2 * k - 1);
    for (int i = 0; i < s; ++i) {
        std::vector<Vertex> path;
        const Vertex base = 2 + static_cast<Vertex>(i) * interior;
        for (Vertex r = 0; r < interior; ++r) path.push_back(base + r);
        p.graph.add_edge(p.a, path.front());
        for (std::size_t r = 0; r + 1 < path.size(); ++r) p.graph.add_edge(path[r], path[r + 1]);
        p.graph.add_edge(path.back(), p.b);
        p.paths.push_back(std::move(path));
    }
    return p;
}

std::vector<std::string> pattern_violations(const FskPattern& p) {
    std::vector<std::string> out;
    const auto s = static_cast<std::size_t>(p.s);
    const auto k = static_cast<std::size_t>(p.k);
    if (p.order() != fsk_order(p.s, p.k)) out.push_back("order is not s(2k-1)+2");
    if (p.size() != 2 * k * s + 1) out.push_back("size is not 2ks+1");
    if (!p.graph.has_edge(p.a, p.b)) out.push_back("hub edge ab missing");
    if (p.graph.degree(p.a) != s + 1 || p.graph.degree(p.b) != s + 1) out.push_back("hub degree is not s+1");
    if (p.paths.size() != s) out.push_back("wrong number of paths");
    VertexSet seen(p.order());
    for (const auto& path : p.paths) {
        if (path.size() != 2 * k - 1) {
            out.push_back("path interior does not have 2k-1 vertices");
            continue;
        }
        for (Vertex v : path) {
            if (v == p.a || v == p.b || seen.contains(v)) out.push_back("paths are not internally disjoint");
            seen.insert(v);
            if (p.graph.degree(v) != 2) out.push_back("interior vertex " + std::to_string(v) + " has degree != 2");
        }
        if (!p.graph.has_edge(p.a, path.front()) || !p.graph.has_edge(path.back(), p.b))
            out.push_back("path not attached to the hubs");
        for (std::size_t r = 0; r + 1 < path.size(); ++r)
            if (!p.graph.has_edge(path[r], path[r + 1])) out.push_back("path edge missing");
    }
    return out;
}

namespace {

using Mask = std::uint32_t;

int max_clique(const std::vector<Mask>& adj, Mask candidates, int size, int best) {
    if (candidates == 0) return std::max(size, best);
    if (size + std::popcount(candidates) <= best) return best;
    while (candidates != 0) {
        if (size + std::popcount(candidates) <= best) break;
        const int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        best = max_clique(adj, candidates & adj[static_cast<std::size_t>(v)], size + 1, best);
    }
    return best;
}

bool colorable(const std::vector<Mask>& adj, const std::vector<int>& order, std::size_t depth, int colors,
               std::vector<int>& color, int used) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    // Opening a new color class only once avoids permuted duplicates.
    const int limit = std::min(colors, used + 1);
    for (int c = 0; c < limit; ++c) {
        bool clash = false;
        for (Mask m = adj[static_cast<std::size_t>(v)]; m != 0; m &= m - 1)
            if (color[static_cast<std::size_t>(std::countr_zero(m))] == c) {
                clash = true;
                break;
            }
        if (clash) continue;
        color[static_cast<std::size_t>(v)] = c;
        if (colorable(adj, order, depth + 1, colors, color, std::max(used, c + 1))) return true;
        color[static_cast<std::size_t>(v)] = -1;
    }
    return false;
}

}  // namespace

int chromatic_number(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kChromaticMaxOrder)
        throw std::invalid_argument("chromatic_number is limited to " + std::to_string(kChromaticMaxOrder) +
                                    " vertices (got " + std::to_string(n) + ")");
    if (n == 0) return 0;
    std::vector<Mask> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= Mask{1} << v;
        adj[v] |= Mask{1} << u;
    }
    const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
    const int lower = max_clique(adj, all, 0, 0);

    std::vector<int> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return std::popcount(adj[static_cast<std::size_t>(x)]) > std::popcount(adj[static_cast<std::size_t>(y)]);
    });
    for (int colors = lower;; ++colors) {
        std::vector<int> color(n, -1);
        if (colorable(adj, order, 0, colors, color, 0)) return colors;
    }
}

bool is_color_critical_edge(const FskPattern& p) {
    if (chromatic_number(p.graph) != 3) return false;
    Graph without = p.graph;
    without.delete_edge(p.a, p.b);
    return chromatic_number(without) == 2;
}

}  // namespace fsk
