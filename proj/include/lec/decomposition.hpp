#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lec/graph.hpp"

namespace lec {

struct Block {
  std::vector<EdgeId> edges;      // sorted
  std::vector<Vertex> vertices;   // sorted

  /// A trivial block is a single cut-edge (K_2).
  bool trivial() const { return edges.size() == 1; }
};

/// Blocks, cut vertices and the block-cutpoint tree of a connected graph.
///
/// Blocks are sorted by their smallest edge id. Nodes of the block-cutpoint
/// tree are numbered 0..blocks-1 for blocks and blocks+i for cut_vertices[i].
struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<Vertex> cut_vertices;               // sorted
  std::vector<int> block_of_edge;                 // edge id -> block index
  std::vector<std::vector<int>> blocks_of_vertex; // vertex -> sorted block indices
  std::vector<std::vector<int>> bc_tree;          // adjacency of the bc-tree

  bool is_cut_vertex(Vertex v) const { return blocks_of_vertex[v].size() >= 2; }
  int cut_node(Vertex v) const;  // bc-tree node of a cut vertex
  int block_count() const { return static_cast<int>(blocks.size()); }
};

/// Lowpoint DFS block decomposition. Requires a connected graph on at least
/// two vertices.
BlockDecomposition block_decomposition(const Graph& g);

/// The cut-edge graph C(G): all bridges and their endpoints.
struct CutEdgeGraph {
  std::vector<EdgeId> edges;     // sorted
  std::vector<Vertex> vertices;  // sorted
  std::vector<int> degree;       // deg_C(v) for every vertex of G (0 outside C)
  int max_degree = 0;
  /// rw(C(G)); empty when C(G) has no edges.
  std::optional<int> reduced_max_weight;

  bool empty() const { return edges.empty(); }
};

CutEdgeGraph cut_edge_graph(const Graph& g);
CutEdgeGraph cut_edge_graph(const Graph& g, const BlockDecomposition& blocks);

bool is_two_connected(const Graph& g);

inline constexpr std::uint64_t kDefaultCircumferenceBudget = 50'000'000;

struct Circumference {
  int length = 0;             // 0 when acyclic
  std::vector<Vertex> cycle;  // a longest cycle, as a closed vertex walk without repetition
};

/// Exact circumference by backtracking over simple paths, block by block.
/// Throws lec::BudgetExceeded when more than `budget` search states are
/// visited.
Circumference circumference(const Graph& g,
                            std::uint64_t budget = kDefaultCircumferenceBudget);

}  // namespace lec
