#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lec/graph.hpp"

namespace lec {

enum class GraphFormat { kEdgeList, kGraph6 };

/// Largest order the graph6 reader and writer accept (single-byte header).
inline constexpr int kMaxGraph6Order = 62;

/// Parses one graph. Edge-list input is one "u v" pair per line; blank lines
/// and lines starting with '#' are skipped and a line holding a single token
/// declares an isolated vertex. Vertex labels are numbered 0..n-1 in order of
/// first appearance. graph6 input is a single line, optionally preceded by the
/// ">>graph6<<" header. Throws lec::ParseError with a 1-based position.
Graph load_graph(std::string_view text, GraphFormat format);

/// Parses every graph6 line of `text` (blank lines skipped).
std::vector<Graph> load_graph6_all(std::string_view text);

std::string to_edge_list(const Graph& g);
std::string to_graph6(const Graph& g);
std::string serialize(const Graph& g, GraphFormat format);

}  // namespace lec
