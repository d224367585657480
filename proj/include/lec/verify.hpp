#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lec/decomposition.hpp"
#include "lec/edge_colouring.hpp"
#include "lec/graph.hpp"

namespace lec {

enum class PathKind { kEdge, kBichromatic, kLoose };

/// Evidence that a vertex pair is joined by a loose path: a single edge, a
/// 2-path with two colours, or a path of length >= 3 with >= 3 colours.
struct LooseWitness {
  Vertex u = 0;
  Vertex v = 0;
  PathKind kind = PathKind::kEdge;
  std::vector<Vertex> path;
  std::vector<int> colours;  // colour of each path edge, in path order
};

/// True when a colour word of this length and these colours is loose.
bool is_loose_word(std::span<const int> colours);

/// Loose-path search restricted to the blocks a u,v-path can use.
///
/// The colour span may contain 0 for edges that are not coloured yet; such
/// edges are treated as absent, which lets construction code test pairs whose
/// blocks are already fully coloured.
class LooseChecker {
 public:
  /// Requires a connected graph.
  explicit LooseChecker(const Graph& g);

  std::optional<LooseWitness> find(std::span<const int> colours, Vertex u, Vertex v);
  bool loose(std::span<const int> colours, Vertex u, Vertex v) {
    return find(colours, u, v).has_value();
  }

  /// Blocks of the block-cutpoint tree path between u and v (u != v).
  std::vector<int> blocks_between(Vertex u, Vertex v) const;
  const BlockDecomposition& blocks() const { return blocks_; }
  const Graph& graph() const { return g_; }

 private:
  int node_of(Vertex v) const;
  bool search(Vertex x);
  bool reaches_target(Vertex x, std::vector<Vertex>* tail);

  const Graph& g_;
  BlockDecomposition blocks_;
  std::vector<int> parent_;  // bc-tree parent, rooted at node 0
  std::vector<int> depth_;

  // Scratch state of one search.
  std::span<const int> colours_;
  Vertex target_ = 0;
  std::vector<int> allowed_;  // stamp per vertex
  int stamp_ = 0;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
  std::vector<int> path_colours_;
  std::vector<int> seen_;
  int seen_stamp_ = 0;
  std::vector<Vertex> bfs_parent_;
  std::vector<Vertex> found_path_;
};

/// Loose witness for u != v, or nullopt. Throws when `c` is partial.
std::optional<LooseWitness> is_loose_pair(const Graph& g, const EdgeColouring& c, Vertex u,
                                          Vertex v);

struct Verification {
  bool accepted = false;
  std::optional<std::pair<Vertex, Vertex>> failing_pair;  // lexicographically first
};

/// Throws on a disconnected graph or a partial colouring.
Verification verify_loose_connected(const Graph& g, const EdgeColouring& c);

}  // namespace lec
