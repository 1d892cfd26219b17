#include "fsk/construction.hpp"

#include <limits>
#include <stdexcept>

namespace fsk {

std::uint64_t DigitParams::capacity() const {
    if (base < 2 || digits < 1) throw std::invalid_argument("digit parameters need t >= 2 and s >= 1");
    std::uint64_t out = 1;
    for (int i = 0; i < digits; ++i) {
        if (out > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(base))
            throw std::overflow_error("t^s exceeds 2^62");
        out *= static_cast<std::uint64_t>(base);
    }
    return out;
}

int digit(std::uint64_t x, int position, const DigitParams& params) {
    const std::uint64_t cap = params.capacity();
    if (x >= cap) throw std::invalid_argument("digit: x=" + std::to_string(x) + " outside [0, t^s-1]");
    if (position < 0 || position >= params.digits)
        throw std::invalid_argument("digit: position " + std::to_string(position) + " outside [0, s-1]");
    for (int i = 0; i < position; ++i) x /= static_cast<std::uint64_t>(params.base);
    return static_cast<int>(x % static_cast<std::uint64_t>(params.base));
}

std::string VertexLabel::to_string() const {
    switch (cls) {
        case VertexClass::X: return "X" + std::to_string(block);
        case VertexClass::Y: return "Y" + std::to_string(block);
        case VertexClass::Z:
            return "Z" + std::to_string(p) + "," + std::to_string(q) + ":" + std::to_string(r);
    }
    return "?";
}

bool ConstructionLayout::theorem_scale() const {
    // n >= 8 k^2 s^2 / alpha  <=>  n * alpha >= 8 k^2 s^2
    return Rational(n) * alpha >= Rational(8 * k * k * s * s);
}

Vertex ConstructionLayout::z_vertex(int p, int q, int r) const {
    if (p < 0 || p >= s || q < 0 || q >= t || r < 1 || r > 2 * k - 1)
        throw std::out_of_range("Z-vertex index out of range");
    return static_cast<Vertex>(2 * blocks * m + (p * t + q) * (2 * k - 1) + (r - 1));
}

VertexSet ConstructionLayout::x_block(int i) const {
    if (i < 0 || i > blocks) throw std::out_of_range("X block index out of range");
    VertexSet out(static_cast<std::size_t>(n));
    if (i < blocks) {
        for (int v = i * m; v < (i + 1) * m; ++v) out.insert(static_cast<Vertex>(v));
    } else {
        const int start = 2 * blocks * m + z_count();
        for (int v = start; v < start + last_x; ++v) out.insert(static_cast<Vertex>(v));
    }
    return out;
}

VertexSet ConstructionLayout::y_block(int i) const {
    if (i < 0 || i > blocks) throw std::out_of_range("Y block index out of range");
    VertexSet out(static_cast<std::size_t>(n));
    if (i < blocks) {
        for (int v = (blocks + i) * m; v < (blocks + i + 1) * m; ++v) out.insert(static_cast<Vertex>(v));
    } else {
        const int start = 2 * blocks * m + z_count() + last_x;
        for (int v = start; v < start + last_y; ++v) out.insert(static_cast<Vertex>(v));
    }
    return out;
}

namespace {

VertexSet with_class(const ConstructionLayout& layout, VertexClass cls) {
    VertexSet out(static_cast<std::size_t>(layout.n));
    for (std::size_t v = 0; v < layout.labels.size(); ++v)
        if (layout.labels[v].cls == cls) out.insert(static_cast<Vertex>(v));
    return out;
}

}  // namespace

VertexSet ConstructionLayout::x_side() const { return with_class(*this, VertexClass::X); }
VertexSet ConstructionLayout::y_side() const { return with_class(*this, VertexClass::Y); }
VertexSet ConstructionLayout::z_all() const { return with_class(*this, VertexClass::Z); }

std::vector<int> ConstructionLayout::blocks_with_digit(int p, int q) const {
    std::vector<int> out;
    if (t == 1) {
        if (q == 0) out.push_back(0);
        return out;
    }
    const DigitParams params{t, s};
    for (int i = 0; i < blocks; ++i)
        if (digit(static_cast<std::uint64_t>(i), p, params) == q) out.push_back(i);
    return out;
}

ConstructionLayout plan_layout(int n, int s, int k, const Rational& alpha) {
    if (s < 2 || k < 2)
        throw std::invalid_argument("construction needs s >= 2 and k >= 2 (got s=" + std::to_string(s) +
                                    ", k=" + std::to_string(k) + ")");
    if (alpha <= 0 || alpha > Rational(1, 2))
        throw std::invalid_argument("alpha must lie in (0, 1/2] (got " + to_string(alpha) + ")");
    if (n < 1) throw std::invalid_argument("n must be positive");

    ConstructionLayout layout;
    layout.n = n;
    layout.s = s;
    layout.k = k;
    layout.alpha = alpha;
    layout.m = static_cast<int>(iroot(Integer(n), static_cast<unsigned>(s + 1)));
    layout.t = std::max(1, static_cast<int>(floor(alpha * layout.m)));

    Integer blocks = 1;
    for (int i = 0; i < s; ++i) blocks *= layout.t;
    const Integer residual = Integer(n) - 2 * blocks * layout.m - Integer(s) * layout.t * (2 * k - 1);
    if (residual < 2)
        throw InfeasibleLayout("n - 2 t^s m - s t (2k-1) >= 2",
                               "n=" + std::to_string(n) + ", m=" + std::to_string(layout.m) +
                                   ", t=" + std::to_string(layout.t) + ", residual=" + to_string(residual));
    layout.blocks = static_cast<int>(blocks);
    const int rest = static_cast<int>(residual);
    layout.last_x = (rest + 1) / 2;
    layout.last_y = rest / 2;

    layout.labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < layout.blocks; ++i)
        for (int j = 0; j < layout.m; ++j) layout.labels.push_back({VertexClass::X, i});
    for (int i = 0; i < layout.blocks; ++i)
        for (int j = 0; j < layout.m; ++j) layout.labels.push_back({VertexClass::Y, i});
    for (int p = 0; p < s; ++p)
        for (int q = 0; q < layout.t; ++q)
            for (int r = 1; r <= 2 * k - 1; ++r) layout.labels.push_back({VertexClass::Z, 0, p, q, r});
    for (int j = 0; j < layout.last_x; ++j) layout.labels.push_back({VertexClass::X, layout.blocks});
    for (int j = 0; j < layout.last_y; ++j) layout.labels.push_back({VertexClass::Y, layout.blocks});
    return layout;
}

Integer specified_edge_count(const ConstructionLayout& l) {
    const Integer x_total = Integer(l.blocks) * l.m + l.last_x;
    const Integer y_total = Integer(l.blocks) * l.m + l.last_y;
    const Integer paired = Integer(l.blocks) * l.m * l.m;
    const Integer z_paths = Integer(l.s) * l.t * (2 * l.k - 2);
    // Each path end sees t^{s-1} blocks of size m (all of block 0 when t = 1).
    const Integer per_end = Integer(l.blocks / l.t) * l.m;
    return x_total * y_total - paired + z_paths + 2 * Integer(l.s) * l.t * per_end;
}

ConstructionResult build_min_member(const ConstructionLayout& layout) {
    if (static_cast<int>(layout.labels.size()) != layout.n) throw std::invalid_argument("layout labels do not cover n");
    Graph g(static_cast<std::size_t>(layout.n));
    const std::vector<VertexSet> xs = [&] {
        std::vector<VertexSet> out;
        for (int i = 0; i <= layout.blocks; ++i) out.push_back(layout.x_block(i));
        return out;
    }();
    const VertexSet y_all = layout.y_side();
    for (int i = 0; i <= layout.blocks; ++i) {
        // X_i is complete to every Y_j except its own partner (X_{t^s}-Y_{t^s} included).
        VertexSet targets = y_all;
        if (i < layout.blocks) targets -= layout.y_block(i);
        xs[static_cast<std::size_t>(i)].for_each([&](Vertex x) { targets.for_each([&](Vertex y) { g.add_edge(x, y); }); });
    }
    const int last = 2 * layout.k - 1;
    for (int p = 0; p < layout.s; ++p) {
        for (int q = 0; q < layout.t; ++q) {
            for (int r = 1; r < last; ++r) g.add_edge(layout.z_vertex(p, q, r), layout.z_vertex(p, q, r + 1));
            const Vertex head = layout.z_vertex(p, q, 1);
            const Vertex tail = layout.z_vertex(p, q, last);
            for (int i : layout.blocks_with_digit(p, q)) {
                xs[static_cast<std::size_t>(i)].for_each([&](Vertex x) { g.add_edge(head, x); });
                layout.y_block(i).for_each([&](Vertex y) { g.add_edge(tail, y); });
            }
        }
    }
    return {std::move(g), layout, specified_edge_count(layout)};
}

bool Certificate::passed() const { return first_failure() == nullptr; }

const CertificateFact* Certificate::first_failure() const {
    for (const auto& f : facts)
        if (!f.passed) return &f;
    return nullptr;
}

namespace {

std::string edge_text(Vertex u, Vertex v) { return std::to_string(u) + "-" + std::to_string(v); }

CertificateFact independent_fact(const std::string& name, const Graph& g, const VertexSet& s) {
    CertificateFact fact{name, true, {}};
    for (Vertex v = s.first(); v != kNoVertex; v = s.next(v + 1)) {
        const VertexSet inside = g.neighbors(v) & s;
        if (const Vertex u = inside.first(); u != kNoVertex) {
            fact.passed = false;
            fact.witness = edge_text(std::min(u, v), std::max(u, v));
            break;
        }
    }
    return fact;
}

}  // namespace

Certificate certify_structure(const ConstructionResult& result) {
    const Graph& g = result.graph;
    const ConstructionLayout& l = result.layout;
    if (g.vertex_count() != static_cast<std::size_t>(l.n)) throw std::invalid_argument("graph does not match layout");
    const int last = 2 * l.k - 1;
    const auto n = static_cast<std::size_t>(l.n);

    Certificate cert;

    CertificateFact paths{"z_paths", true, {}};
    for (int p = 0; p < l.s && paths.passed; ++p) {
        for (int q = 0; q < l.t && paths.passed; ++q) {
            VertexSet block(n);
            for (int r = 1; r <= last; ++r) block.insert(l.z_vertex(p, q, r));
            for (int r = 1; r <= last && paths.passed; ++r) {
                const Vertex v = l.z_vertex(p, q, r);
                VertexSet expected(n);
                if (r > 1) expected.insert(l.z_vertex(p, q, r - 1));
                if (r < last) expected.insert(l.z_vertex(p, q, r + 1));
                const VertexSet actual = g.neighbors(v) & block;
                if (actual != expected) {
                    paths.passed = false;
                    const Vertex missing = (expected - actual).first();
                    const Vertex extra = (actual - expected).first();
                    paths.witness = missing != kNoVertex ? "missing " + edge_text(v, missing)
                                                         : "extra " + edge_text(v, extra);
                }
            }
        }
    }
    cert.facts.push_back(paths);

    VertexSet middles(n);
    VertexSet phase1(n);
    VertexSet phase2(n);
    for (int p = 0; p < l.s; ++p)
        for (int q = 0; q < l.t; ++q)
            for (int r = 1; r <= last; ++r) {
                const Vertex v = l.z_vertex(p, q, r);
                if (r == l.k) middles.insert(v);
                else if ((r < l.k) == (r % 2 == 1)) phase1.insert(v);
                else phase2.insert(v);
            }

    CertificateFact middle{"middle_degree", true, {}};
    middles.for_each([&](Vertex v) {
        if (middle.passed && g.degree(v) != 2) {
            middle.passed = false;
            middle.witness = std::to_string(v) + " has degree " + std::to_string(g.degree(v));
        }
    });
    cert.facts.push_back(middle);

    cert.facts.push_back(independent_fact("x_z2_independent", g, l.x_side() | phase2));
    cert.facts.push_back(independent_fact("y_z1_independent", g, l.y_side() | phase1));

    CertificateFact bipartite{"bipartite_without_middles", true, {}};
    if (!two_coloring(g, g.all_vertices() - middles)) {
        bipartite.passed = false;
        bipartite.witness = "odd cycle avoiding the middle vertices";
    }
    cert.facts.push_back(bipartite);

    CertificateFact ends{"end_attachments", true, {}};
    const VertexSet x_inner = l.x_side() - l.x_block(l.blocks);
    const VertexSet y_inner = l.y_side() - l.y_block(l.blocks);
    for (int p = 0; p < l.s && ends.passed; ++p) {
        for (int q = 0; q < l.t && ends.passed; ++q) {
            const Vertex head = l.z_vertex(p, q, 1);
            const Vertex tail = l.z_vertex(p, q, last);
            VertexSet head_rest = g.neighbors(head);
            head_rest.erase(l.z_vertex(p, q, 2));
            VertexSet tail_rest = g.neighbors(tail);
            tail_rest.erase(l.z_vertex(p, q, last - 1));
            if (const Vertex bad = (head_rest - x_inner).first(); bad != kNoVertex) {
                ends.passed = false;
                ends.witness = edge_text(head, bad);
            } else if (const Vertex bad2 = (tail_rest - y_inner).first(); bad2 != kNoVertex) {
                ends.passed = false;
                ends.witness = edge_text(tail, bad2);
            }
        }
    }
    cert.facts.push_back(ends);
    return cert;
}

EdgeBoundReport edge_bound_check(const Integer& edges, int n, int s, int k, const Rational& alpha) {
    EdgeBoundReport out;
    out.edges = edges;
    out.theorem_scale = Rational(n) * alpha >= Rational(8 * k * k * s * s);
    const Rational quarter_square(Integer(n) * n, 4);
    const Rational coeff = Rational(2 * k * s) * alpha * n;  // multiplies n^{1/(s+1)}
    const Rational deficit = quarter_square - Rational(edges);
    const auto degree = static_cast<unsigned>(s + 1);
    if (deficit <= 0) {
        out.holds = true;
    } else if (coeff <= 0) {
        out.holds = false;
    } else {
        // coeff * n^{1/(s+1)} >= deficit  <=>  n >= (deficit / coeff)^{s+1}
        const Rational ratio = deficit / coeff;
        Rational power = 1;
        for (unsigned i = 0; i < degree; ++i) power *= ratio;
        out.holds = Rational(n) >= power;
    }
    const RootBracket root = root_bracket(Integer(n), degree, Integer(1000000));
    out.margin_lo = coeff * root.lo - deficit;
    out.margin_hi = coeff * root.hi - deficit;
    return out;
}

EdgeBoundReport edge_bound_check(const ConstructionResult& result) {
    const auto& l = result.layout;
    return edge_bound_check(Integer(result.graph.edge_count()), l.n, l.s, l.k, l.alpha);
}

}  // namespace fsk
