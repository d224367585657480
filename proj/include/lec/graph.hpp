#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lec {

using Vertex = int;
using EdgeId = int;

/// An undirected edge. The orientation is the one the edge was given in and
/// only matters for serialization.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

struct Incidence {
  Vertex to;
  EdgeId edge;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Each vertex keeps the label it had in the input (edge-list token or graph6
/// index) so that human-facing output can use the original names.
class Graph {
 public:
  Graph() = default;

  /// Validates the simple-graph invariants; throws lec::Error on a self-loop,
  /// a duplicate edge or an out-of-range endpoint.
  Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels = {});

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  /// Neighbours sorted by vertex id.
  std::span<const Incidence> neighbours(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const;
  int min_degree() const;

  bool adjacent(Vertex a, Vertex b) const { return edge_between(a, b).has_value(); }
  std::optional<EdgeId> edge_between(Vertex a, Vertex b) const;

  const std::string& label(Vertex v) const { return labels_[v]; }
  std::span<const std::string> labels() const { return labels_; }

  /// Copy with vertex v renamed to perm[v]; labels travel with their vertex
  /// and edge ids are preserved.
  Graph relabelled(std::span<const Vertex> perm) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<std::string> labels_;
};

/// A subgraph together with the maps back into its parent graph.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent_vertex;
  std::vector<EdgeId> to_parent_edge;
};

/// The subgraph formed by the given edges and their endpoints. Vertices are
/// renumbered in increasing parent order, edges keep the given order.
Subgraph edge_induced_subgraph(const Graph& g, std::span<const EdgeId> edges);

bool is_connected(const Graph& g);

/// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Maximum shortest-path distance over all vertex pairs; std::nullopt when the
/// graph is disconnected. The empty and single-vertex graphs have diameter 0.
std::optional<int> diameter(const Graph& g);

struct EdgeWeightStats {
  std::vector<int> weight;  // w(uv) = deg(u) + deg(v), indexed by edge id
  int reduced_max_weight = 0;
};

/// Edge weights and the reduced maximum weight max_e w(e) - 1.
/// Throws on a graph without edges.
EdgeWeightStats reduced_max_weight(const Graph& g);

bool is_tree(const Graph& g);
bool is_complete(const Graph& g);

struct BasicFamily {
  enum class Kind { kComplete, kCompleteBipartite, kTree, kNone };
  Kind kind = Kind::kNone;
  int r = 0;  // Complete: n. CompleteBipartite: larger side.
  int s = 0;  // CompleteBipartite: smaller side.
  std::vector<Vertex> larger_side;
  std::vector<Vertex> smaller_side;
};

/// Recognizes K_n, K_{r,s} (r >= s) and trees, in that precedence. Stars are
/// reported as complete bipartite K_{s,1}; K_2 is reported as complete.
/// Throws on a disconnected graph.
BasicFamily recognize_basic_family(const Graph& g);

/// When g contains a spanning complete bipartite K_{r,s} with
/// 2 <= s <= r <= 2^s, returns its sides (larger first).
std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>>
find_spanning_two_colourable_bipartite(const Graph& g);

}  // namespace lec
