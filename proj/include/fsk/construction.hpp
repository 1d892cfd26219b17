#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fsk/errors.hpp"
#include "fsk/graph.hpp"
#include "fsk/rational.hpp"

namespace fsk {

// Base-t expansion with a fixed number of digits.
struct DigitParams {
    int base = 2;    // t >= 2
    int digits = 2;  // s >= 2

    std::uint64_t capacity() const;  // t^s; throws std::overflow_error past 2^62
};

// p-th base-t digit of x, 0 <= x < t^s, 0 <= p < s.
int digit(std::uint64_t x, int position, const DigitParams& params);

enum class VertexClass { X, Y, Z };

struct VertexLabel {
    VertexClass cls = VertexClass::X;
    int block = 0;  // X_i / Y_i index, 0..t^s; unused for Z
    int p = 0;      // Z_{p,q}
    int q = 0;
    int r = 0;  // 1..2k-1, position on the Z-path

    std::string to_string() const;
    friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

// Vertex partition of the lower-bound construction with integer block sizes:
// m = floor(n^(1/(s+1))), t = max(1, floor(alpha * m)), |X_i| = |Y_i| = m for
// i < t^s, |Z_{p,q}| = 2k-1, and the remaining vertices split between X_{t^s}
// (the ceiling half) and Y_{t^s}.
//
// Vertex ids are assigned X_0..X_{t^s-1}, Y_0..Y_{t^s-1}, Z_{p,q} (p major,
// then q, then path position), X_{t^s}, Y_{t^s}.
struct ConstructionLayout {
    int n = 0;
    int s = 0;
    int k = 0;
    Rational alpha;
    int m = 0;
    int t = 0;
    int blocks = 0;  // t^s
    int last_x = 0;  // |X_{t^s}|
    int last_y = 0;  // |Y_{t^s}|
    std::vector<VertexLabel> labels;

    // t == 1: a single X_0/Y_0 pair and one Z-path per digit position.
    bool degenerate() const { return t == 1; }
    // n >= 8 k^2 s^2 / alpha, the regime in which the edge and ceiling bounds are claimed.
    bool theorem_scale() const;

    int z_count() const { return s * t * (2 * k - 1); }
    Vertex z_vertex(int p, int q, int r) const;
    VertexSet x_block(int i) const;
    VertexSet y_block(int i) const;
    VertexSet x_side() const;
    VertexSet y_side() const;
    VertexSet z_all() const;
    // Blocks i < t^s whose p-th digit equals q.
    std::vector<int> blocks_with_digit(int p, int q) const;
};

// Throws std::invalid_argument for s < 2, k < 2 or alpha outside (0, 1/2], and
// InfeasibleLayout when fewer than two vertices remain for X_{t^s} and Y_{t^s}.
ConstructionLayout plan_layout(int n, int s, int k, const Rational& alpha);

struct ConstructionResult {
    Graph graph;
    ConstructionLayout layout;
    Integer specified_edge_count;
};

// |X||Y| - sum_{i<t^s} |X_i||Y_i| + s t (2k-2) + 2 s t t^{s-1} m.
Integer specified_edge_count(const ConstructionLayout& layout);

// The member of the class with the fewest edges: Z-paths, complete X_i-Y_j
// for i != j, complete X_{t^s}-Y_{t^s}, and the digit attachments of the
// Z-path ends.
ConstructionResult build_min_member(const ConstructionLayout& layout);

struct CertificateFact {
    std::string name;
    bool passed = true;
    std::string witness;  // first offending vertex or edge when !passed
};

struct Certificate {
    std::vector<CertificateFact> facts;
    bool passed() const;
    const CertificateFact* first_failure() const;
};

// Structural facts behind F_{s,k}-freeness of the min member:
//   z_paths           G[Z_{p,q}] is exactly the path z^1 .. z^{2k-1}
//   middle_degree     every middle vertex z^k has degree 2
//   x_z2_independent  X together with the even-phase Z vertices is independent
//   y_z1_independent  Y together with the odd-phase Z vertices is independent
//   bipartite_without_middles  G minus the middle vertices is bipartite
//   end_attachments   z^1's other neighbours lie in X \ X_{t^s}, z^{2k-1}'s in Y \ Y_{t^s}
Certificate certify_structure(const ConstructionResult& result);

struct EdgeBoundReport {
    Integer edges;
    bool holds = false;
    bool theorem_scale = false;
    // e(G) - (n^2/4 - 2ks alpha n^{(s+2)/(s+1)}) lies in [margin_lo, margin_hi].
    Rational margin_lo;
    Rational margin_hi;
};

// Exact evaluation of e(G) >= n^2/4 - 2ks alpha n^{(s+2)/(s+1)}: the verdict
// compares rationals after raising to the (s+1)-th power, never a float.
EdgeBoundReport edge_bound_check(const Integer& edges, int n, int s, int k, const Rational& alpha);
EdgeBoundReport edge_bound_check(const ConstructionResult& result);

}  // namespace fsk
