#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lec/classify.hpp"
#include "lec/edge_colouring.hpp"
#include "lec/graph.hpp"

namespace lec {

/// Queue-driven tree colouring: each edge receives the least colour not yet
/// used on an adjacent or semi-adjacent edge. Uses exactly rw(g) colours.
EdgeColouring colour_tree(const Graph& g, Vertex start = 0);

/// At most three colours for a 2-connected graph; one colour only for K3.
EdgeColouring colour_two_connected(const Graph& g);

/// Value of lec for a typed subgraph, by core shape, chords and leaf counts.
int typed_lec(const TypedSubgraph& h);

/// Constraints on a typed colouring coming from the surrounding graph.
struct CutVertexContext {
  /// Cut vertex through which h is attached, and the two colours its core
  /// cycle edges must carry there.
  std::optional<Vertex> cut_vertex;
  std::optional<std::pair<int, int>> cycle_colours;
  /// Edges of h that are already coloured.
  std::vector<std::pair<EdgeId, int>> fixed;
  /// Colours available; 0 means exactly typed_lec colours.
  int palette = 0;
};

/// Colourings of typed subgraphs with exactly typed_lec(h) colours. Throws
/// when h is not of the named family or the context cannot be met.
EdgeColouring colour_type_R(const Graph& h, const CutVertexContext& context = {});
EdgeColouring colour_type_Q(const Graph& h, const CutVertexContext& context = {});
EdgeColouring colour_type_P(const Graph& h, const CutVertexContext& context = {});

/// Cycle C_k (k >= 6) with leaves: max{3, t} colours.
EdgeColouring colour_leafy_long_cycle(const Graph& h);

/// Two-colouring of K_{r,s} for 2 <= s <= r <= 2^s on the vertex layout of
/// complete_bipartite_graph(r, s).
EdgeColouring colour_complete_bipartite_two(int r, int s);

/// Same colouring placed on g along the given sides (larger side first).
EdgeColouring colour_complete_bipartite_two(const Graph& g, const std::vector<Vertex>& larger,
                                            const std::vector<Vertex>& smaller);

/// Graphs of diameter 2 that are not complete: max{3, Delta(C(G))} colours.
EdgeColouring colour_diameter_two(const Graph& g);

inline constexpr std::uint64_t kDefaultSweepBudget = 50'000'000;

/// Graphs of diameter at least 3: the block-cutpoint-tree sweep with the
/// number of colours given by the diameter-3 value.
EdgeColouring colour_general(const Graph& g, std::uint64_t budget = kDefaultSweepBudget);

/// The sweep with an explicit number of colours. Returns nullopt when no
/// colouring with `colours` colours exists (the search is exhaustive).
std::optional<EdgeColouring> sweep_colouring(const Graph& g, int colours,
                                             std::uint64_t budget = kDefaultSweepBudget);

}  // namespace lec
