#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "fsk/errors.hpp"
#include "fsk/graph.hpp"

namespace fsk {

// graph6 as published with nauty: N(n) followed by the upper triangle of the
// adjacency matrix in column order, packed six bits per printable byte.
// Orders up to 2^36 - 1 are representable.
std::string encode_graph6(const Graph& g);

// Accepts an optional ">>graph6<<" header and a trailing newline. Throws
// ParseError carrying the byte offset of the first bad byte.
Graph decode_graph6(std::string_view text);

// Plain text: header "n m" then m lines "u v".
std::string encode_edge_list(const Graph& g);
Graph decode_edge_list(std::string_view text);

enum class GraphFormat { Graph6, EdgeList };

// Edge-list when the first line is two integers, graph6 otherwise.
GraphFormat detect_format(std::string_view text);

Graph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const Graph& g, GraphFormat format = GraphFormat::Graph6);

}  // namespace fsk
