#pragma once

#include <cstdint>
#include <vector>

#include "lec/graph.hpp"

namespace lec::testing {

/// Adjacency rows as bitmasks; small graphs only (n <= 16).
using AdjRows = std::vector<std::uint16_t>;

/// Canonical code of a small graph: the lexicographically least upper-triangle
/// bit string over orderings compatible with colour refinement.
std::vector<std::uint8_t> canonical_code(const AdjRows& rows);

/// One representative per isomorphism class of connected graphs on n vertices
/// (1 <= n <= 9). Results are cached and returned in a fixed order.
const std::vector<Graph>& connected_graphs(int n);

/// One representative per isomorphism class of trees on n vertices
/// (1 <= n <= 14), by leaf augmentation with centre-rooted canonical strings.
const std::vector<Graph>& trees(int n);

Graph from_rows(const AdjRows& rows);
AdjRows to_rows(const Graph& g);

}  // namespace lec::testing
