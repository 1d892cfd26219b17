#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fsk/bipartite.hpp"
#include "fsk/freeness.hpp"
#include "fsk/rational.hpp"

namespace fsk {

// Non-edge xy (x in U, y in V) by the roles of x and y in its witness copy:
//   Omega1   both on the paths (degree 2 in the copy)
//   Omega2   x and y are the hub vertices (degree s+1)
//   Omega31  x hub, y path, all s other copy neighbours of x in T
//   Omega32  mirror of Omega31
//   Omega33  x hub, y path, at most s-1 copy neighbours of x in T
//   Omega34  mirror of Omega33
enum class OmegaClass { Omega1, Omega2, Omega31, Omega32, Omega33, Omega34 };

std::string omega_name(OmegaClass c);

// g + xy contains no copy using xy, so g was not maximal F_{s,k}-free.
class NotMaximal : public Error {
public:
    explicit NotMaximal(Edge probe);
    Edge probe() const { return probe_; }

private:
    Edge probe_;
};

struct Classification {
    OmegaClass cls = OmegaClass::Omega1;
    WitnessCopy witness;
    std::vector<Vertex> x_anchors;  // copy neighbours of x in T, ascending
    std::vector<Vertex> y_anchors;
    bool claim4 = false;  // both anchor lists non-empty
};

// Throws std::invalid_argument unless x in U, y in V and xy is a non-edge;
// throws NotMaximal when no witness exists.
Classification classify_non_edge(const Graph& g, const PartitionUVT& part, Vertex x, Vertex y, int s, int k,
                                 const SearchLimits& limits = {});

struct DeletionStep {
    Edge probe;
    OmegaClass cls = OmegaClass::Omega1;
    std::vector<Vertex> x_anchors;
    std::vector<Vertex> y_anchors;
    std::size_t x_size = 0;  // |X|, the U-side candidate
    std::size_t y_size = 0;  // |Y|, the V-side candidate
    bool deleted_u_side = true;
    std::vector<Vertex> deleted;
    bool claim4 = false;
};

struct DeletionTrace {
    std::vector<DeletionStep> steps;
    std::size_t n = 0;
    std::size_t t_size = 0;
    std::size_t deleted_total = 0;  // sum of |S_i|
    std::size_t core_size = 0;
    std::size_t claim4_violations = 0;
};

struct PipelineResult {
    BicliqueResult core;
    DeletionTrace trace;
};

// While a non-edge survives between the current U' and V' (lexicographically
// first), classify it and delete the smaller of the anchored candidate sets:
// X, the common neighbourhood in U' of x's T-anchors, and Y, the common
// neighbourhood in V' of y's T-anchors (Omega1 uses only the first anchor on
// each side; with no anchor the set is {x} or {y}). Ties delete X.
PipelineResult deletion_pipeline(const Graph& g, const PartitionUVT& part, int s, int k,
                                 const SearchLimits& limits = {});

// Problems with a trace against its pipeline output: overlapping deleted
// sets, deletions touching T or the core, inconsistent totals.
std::vector<std::string> trace_violations(const PipelineResult& r, const PartitionUVT& part);

struct BoundReport {
    std::size_t removed = 0;        // n - |core| = |T| + deleted_total
    std::size_t deleted_total = 0;
    std::size_t t_size = 0;
    Rational bound;                 // 4 (12sk)^{s+3} alpha n
    bool within = false;            // removed <= bound
    bool vacuous = false;           // bound >= n
    Rational margin;                // bound - removed
    // epsilon = alpha n^{-s/(s+1)} lies in [epsilon_lo, epsilon_hi].
    Rational epsilon_lo;
    Rational epsilon_hi;
};

BoundReport bound_report(const DeletionTrace& trace, int n, int s, int k, const Rational& alpha);

}  // namespace fsk
