#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace oracle {

Graph fsk_pattern(int s, int k) {
    const int inner = 2 * k - 1;
    Graph g(static_cast<std::size_t>(2 + s * inner));
    g.add_edge(0, 1);
    for (int i = 0; i < s; ++i) {
        Vertex prev = 0;
        for (int j = 0; j < inner; ++j) {
            const auto v = static_cast<Vertex>(2 + i * inner + j);
            g.add_edge(prev, v);
            prev = v;
        }
        g.add_edge(prev, 1);
    }
    return g;
}

std::optional<std::vector<Vertex>> find_embedding(const Graph& pattern, const Graph& host,
                                                  std::optional<Edge> must_use) {
    const std::size_t h = pattern.vertex_count();
    const std::size_t n = host.vertex_count();
    if (h > n) return std::nullopt;
    // Earlier pattern neighbours of each pattern vertex.
    std::vector<std::vector<Vertex>> back(h);
    for (Vertex i = 0; i < h; ++i)
        for (Vertex j = 0; j < i; ++j)
            if (pattern.has_edge(i, j)) back[i].push_back(j);

    auto adjacent = [&](Vertex u, Vertex v) {
        if (must_use && ((u == must_use->first && v == must_use->second) ||
                         (u == must_use->second && v == must_use->first)))
            return true;
        return host.has_edge(u, v);
    };
    auto is_probe = [&](Vertex u, Vertex v) {
        return must_use && ((u == must_use->first && v == must_use->second) ||
                            (u == must_use->second && v == must_use->first));
    };

    std::vector<Vertex> map(h);
    std::vector<bool> used(n, false);
    std::function<bool(Vertex, bool)> place = [&](Vertex i, bool probe_used) -> bool {
        if (i == h) return !must_use || probe_used;
        // Candidates: everything for the first vertex, otherwise whatever is
        // adjacent (in host + probe) to the image of the first earlier neighbour.
        std::vector<Vertex> candidates;
        for (Vertex c = 0; c < n; ++c)
            if (back[i].empty() || adjacent(map[back[i].front()], c)) candidates.push_back(c);
        for (Vertex c : candidates) {
            if (used[c]) continue;
            bool ok = true;
            bool hits = probe_used;
            for (Vertex j : back[i]) {
                if (!adjacent(map[j], c)) {
                    ok = false;
                    break;
                }
                if (is_probe(map[j], c)) hits = true;
            }
            if (!ok) continue;
            used[c] = true;
            map[i] = c;
            if (place(i + 1, hits)) return true;
            used[c] = false;
        }
        return false;
    };
    if (place(0, false)) return map;
    return std::nullopt;
}

bool contains_fsk(const Graph& host, int s, int k) { return find_embedding(fsk_pattern(s, k), host).has_value(); }

bool creates_fsk(const Graph& host, Vertex x, Vertex y, int s, int k) {
    return find_embedding(fsk_pattern(s, k), host, Edge{x, y}).has_value();
}

std::size_t max_biclique_size(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
        if (size <= best) continue;
        std::vector<Vertex> s;
        for (Vertex v = 0; v < n; ++v)
            if (mask & (1U << v)) s.push_back(v);
        // Components of the complement of G[S], each of which must be a clique there.
        std::vector<int> comp(s.size(), -1);
        int comps = 0;
        bool ok = true;
        for (std::size_t i = 0; i < s.size() && ok; ++i) {
            if (comp[i] >= 0) continue;
            std::vector<std::size_t> stack{i};
            comp[i] = comps;
            std::vector<std::size_t> members;
            while (!stack.empty()) {
                const std::size_t a = stack.back();
                stack.pop_back();
                members.push_back(a);
                for (std::size_t b = 0; b < s.size(); ++b)
                    if (b != a && comp[b] < 0 && !g.has_edge(s[a], s[b])) {
                        comp[b] = comps;
                        stack.push_back(b);
                    }
            }
            for (std::size_t a : members)
                for (std::size_t b : members)
                    if (a != b && g.has_edge(s[a], s[b])) ok = false;
            ++comps;
        }
        if (ok && comps <= 2) best = size;
    }
    return best;
}

Sizes layout_sizes(int n, int s, int k, const fsk::Rational& alpha) {
    Sizes out;
    auto power = [](long long b, int e) {
        long long r = 1;
        for (int i = 0; i < e; ++i) r *= b;
        return r;
    };
    while (power(out.m + 1, s + 1) <= n) ++out.m;
    const long long num = boost::multiprecision::numerator(alpha).convert_to<long long>();
    const long long den = boost::multiprecision::denominator(alpha).convert_to<long long>();
    out.t = static_cast<int>(std::max<long long>(1, num * out.m / den));
    out.blocks = static_cast<int>(power(out.t, s));
    out.z = s * out.t * (2 * k - 1);
    out.residual = n - 2 * out.blocks * out.m - out.z;
    return out;
}

Graph min_member_from_labels(const fsk::ConstructionLayout& l) {
    using fsk::VertexClass;
    auto dig = [&](int i, int p) {
        for (int j = 0; j < p; ++j) i /= l.t;
        return i % l.t;
    };
    const int last = 2 * l.k - 1;
    Graph g(static_cast<std::size_t>(l.n));
    for (Vertex u = 0; u < static_cast<Vertex>(l.n); ++u) {
        for (Vertex v = u + 1; v < static_cast<Vertex>(l.n); ++v) {
            const fsk::VertexLabel a = l.labels[u];
            const fsk::VertexLabel b = l.labels[v];
            bool edge = false;
            if (a.cls == VertexClass::Z && b.cls == VertexClass::Z) {
                edge = a.p == b.p && a.q == b.q && std::abs(a.r - b.r) == 1;
            } else if (a.cls != VertexClass::Z && b.cls != VertexClass::Z) {
                if (a.cls != b.cls) edge = a.block != b.block || a.block == l.blocks;
            } else {
                const fsk::VertexLabel& z = a.cls == VertexClass::Z ? a : b;
                const fsk::VertexLabel& o = a.cls == VertexClass::Z ? b : a;
                if (o.block < l.blocks && dig(o.block, z.p) == z.q)
                    edge = (o.cls == VertexClass::X && z.r == 1) || (o.cls == VertexClass::Y && z.r == last);
            }
            if (edge) g.add_edge(u, v);
        }
    }
    return g;
}

std::size_t longest_path_vertices(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> on(n, false);
    std::size_t best = n > 0 ? 1 : 0;
    std::function<void(Vertex, std::size_t)> grow = [&](Vertex v, std::size_t len) {
        best = std::max(best, len);
        for (Vertex u = 0; u < n; ++u)
            if (!on[u] && g.has_edge(v, u)) {
                on[u] = true;
                grow(u, len + 1);
                on[u] = false;
            }
    };
    for (Vertex v = 0; v < n; ++v) {
        on[v] = true;
        grow(v, 1);
        on[v] = false;
    }
    return best;
}

bool parity_path_exists(const Graph& g, Vertex u, Vertex v, int length, const std::vector<bool>& avoid) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> on(n, false);
    on[u] = true;
    std::function<bool(Vertex, int)> walk = [&](Vertex cur, int rem) -> bool {
        if (rem == 1) return g.has_edge(cur, v);
        for (Vertex x = 0; x < n; ++x) {
            if (on[x] || x == v || avoid[x] || !g.has_edge(cur, x)) continue;
            on[x] = true;
            if (walk(x, rem - 1)) return true;
            on[x] = false;
        }
        return false;
    };
    return walk(u, length);
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace oracle
