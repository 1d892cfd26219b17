#pragma once

#include <string>
#include <vector>

#include "fsk/graph.hpp"

namespace fsk {

// s odd cycles of length 2k+1 glued along one common edge ab.
//
// Numbering: a = 0, b = 1, and path i (0-based) occupies the consecutive ids
// 2 + i(2k-1) .. 2 + (i+1)(2k-1) - 1 in order from the a end to the b end.
struct FskPattern {
    int s = 0;
    int k = 0;
    Graph graph;
    Vertex a = 0;
    Vertex b = 1;
    std::vector<std::vector<Vertex>> paths;  // interior vertices c_1..c_{2k-1} of each a-b path

    std::size_t order() const { return graph.vertex_count(); }
    std::size_t size() const { return graph.edge_count(); }
};

// Number of vertices s(2k-1)+2.
std::size_t fsk_order(int s, int k);

// Throws std::invalid_argument unless s >= 1 and k >= 1.
FskPattern build_fsk(int s, int k);

// Structural invariants of a pattern; returns a description of each violation.
std::vector<std::string> pattern_violations(const FskPattern& p);

inline constexpr std::size_t kChromaticMaxOrder = 32;

// Exact chromatic number by backtracking. Throws std::invalid_argument for
// graphs with more than kChromaticMaxOrder vertices.
int chromatic_number(const Graph& g);

// chi(F) = 3 and chi(F - ab) = 2.
bool is_color_critical_edge(const FskPattern& p);

}  // namespace fsk
