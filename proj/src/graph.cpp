#include "lec/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "lec/error.hpp"

namespace lec {

namespace {

std::uint64_t pair_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : edges_(std::move(edges)), adjacency_(n), labels_(std::move(labels)) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  if (labels_.empty()) {
    labels_.reserve(n);
    for (int v = 0; v < n; ++v) labels_.push_back(std::to_string(v));
  } else if (static_cast<int>(labels_.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "label count does not match vertex count");
  }
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges_.size() * 2);
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
    const auto [u, v] = edges_[e];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    }
    if (u == v) {
      throw Error(ErrorCode::kInvalidArgument, "self-loop at vertex " + labels_[u]);
    }
    if (!seen.insert(pair_key(u, v)).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate edge " + labels_[u] + " " + labels_[v]);
    }
    adjacency_[u].push_back({v, e});
    adjacency_[v].push_back({u, e});
  }
  for (auto& row : adjacency_) {
    std::sort(row.begin(), row.end(),
              [](const Incidence& a, const Incidence& b) { return a.to < b.to; });
  }
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& row : adjacency_) best = std::max(best, static_cast<int>(row.size()));
  return best;
}

int Graph::min_degree() const {
  if (adjacency_.empty()) return 0;
  int best = static_cast<int>(adjacency_.front().size());
  for (const auto& row : adjacency_) best = std::min(best, static_cast<int>(row.size()));
  return best;
}

std::optional<EdgeId> Graph::edge_between(Vertex a, Vertex b) const {
  const auto& row = adjacency_[a];
  auto it = std::lower_bound(row.begin(), row.end(), b,
                             [](const Incidence& inc, Vertex x) { return inc.to < x; });
  if (it != row.end() && it->to == b) return it->edge;
  return std::nullopt;
}

Graph Graph::relabelled(std::span<const Vertex> perm) const {
  const int n = order();
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const Edge& e : edges_) edges.push_back({perm[e.u], perm[e.v]});
  std::vector<std::string> labels(n);
  for (int v = 0; v < n; ++v) labels[perm[v]] = labels_[v];
  return Graph(n, std::move(edges), std::move(labels));
}

Subgraph edge_induced_subgraph(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<Vertex> vertices;
  for (EdgeId e : edges) {
    vertices.push_back(g.edge(e).u);
    vertices.push_back(g.edge(e).v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<Vertex> local(g.order(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) local[vertices[i]] = i;
  std::vector<Edge> sub_edges;
  sub_edges.reserve(edges.size());
  for (EdgeId e : edges) sub_edges.push_back({local[g.edge(e).u], local[g.edge(e).v]});
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  for (Vertex v : vertices) labels.push_back(g.label(v));
  Subgraph sub;
  sub.graph = Graph(static_cast<int>(vertices.size()), std::move(sub_edges), std::move(labels));
  sub.to_parent_vertex = std::move(vertices);
  sub.to_parent_edge.assign(edges.begin(), edges.end());
  return sub;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (const Incidence& inc : g.neighbours(v)) {
      if (dist[inc.to] < 0) {
        dist[inc.to] = dist[v] + 1;
        queue.push_back(inc.to);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::optional<int> diameter(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (int d : bfs_distances(g, v)) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

EdgeWeightStats reduced_max_weight(const Graph& g) {
  if (g.size() == 0) {
    throw Error(ErrorCode::kPrecondition, "reduced maximum weight of a graph without edges");
  }
  EdgeWeightStats stats;
  stats.weight.reserve(g.size());
  int best = 0;
  for (const Edge& e : g.edges()) {
    const int w = g.degree(e.u) + g.degree(e.v);
    stats.weight.push_back(w);
    best = std::max(best, w);
  }
  stats.reduced_max_weight = best - 1;
  return stats;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

bool is_complete(const Graph& g) {
  const long long n = g.order();
  return static_cast<long long>(g.size()) == n * (n - 1) / 2;
}

namespace {

// Two-colours a connected graph; nullopt when it has an odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (const Incidence& inc : g.neighbours(v)) {
        if (side[inc.to] < 0) {
          side[inc.to] = 1 - side[v];
          queue.push_back(inc.to);
        } else if (side[inc.to] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

}  // namespace

BasicFamily recognize_basic_family(const Graph& g) {
  if (!is_connected(g)) fail_precondition("recognize_basic_family: graph is disconnected");
  BasicFamily result;
  const int n = g.order();
  if (is_complete(g)) {
    result.kind = BasicFamily::Kind::kComplete;
    result.r = n;
    return result;
  }
  if (auto side = bipartition(g)) {
    std::vector<Vertex> a, b;
    for (Vertex v = 0; v < n; ++v) ((*side)[v] == 0 ? a : b).push_back(v);
    if (static_cast<long long>(g.size()) ==
        static_cast<long long>(a.size()) * static_cast<long long>(b.size())) {
      if (a.size() < b.size()) std::swap(a, b);
      result.kind = BasicFamily::Kind::kCompleteBipartite;
      result.r = static_cast<int>(a.size());
      result.s = static_cast<int>(b.size());
      result.larger_side = std::move(a);
      result.smaller_side = std::move(b);
      return result;
    }
  }
  if (is_tree(g)) result.kind = BasicFamily::Kind::kTree;
  return result;
}

std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>>
find_spanning_two_colourable_bipartite(const Graph& g) {
  // A spanning K_{X,Y} exists iff X is a union of components of the
  // complement graph.
  const int n = g.order();
  if (n < 4) return std::nullopt;
  std::vector<int> component(n, -1);
  std::vector<std::vector<Vertex>> members;
  for (Vertex s = 0; s < n; ++s) {
    if (component[s] >= 0) continue;
    const int id = static_cast<int>(members.size());
    members.emplace_back();
    component[s] = id;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      members[id].push_back(v);
      for (Vertex w = 0; w < n; ++w) {
        if (w != v && component[w] < 0 && !g.adjacent(v, w)) {
          component[w] = id;
          queue.push_back(w);
        }
      }
    }
  }
  const int k = static_cast<int>(members.size());
  if (k < 2) return std::nullopt;
  // reachable[i][x]: some subset of the first i components has total size x.
  std::vector<std::vector<char>> reachable(k + 1, std::vector<char>(n + 1, 0));
  reachable[0][0] = 1;
  for (int i = 0; i < k; ++i) {
    const int c = static_cast<int>(members[i].size());
    for (int x = 0; x <= n; ++x) {
      if (!reachable[i][x]) continue;
      reachable[i + 1][x] = 1;
      if (x + c <= n) reachable[i + 1][x + c] = 1;
    }
  }
  for (int r = n - 2; r >= (n + 1) / 2; --r) {
    const int s = n - r;
    if (s < 2 || s > r) continue;
    if (s < 31 && r > (1 << s)) continue;
    if (!reachable[k][r]) continue;
    std::vector<char> in_x(n, 0);
    int x = r;
    for (int i = k; i > 0; --i) {
      if (reachable[i - 1][x]) continue;
      const int c = static_cast<int>(members[i - 1].size());
      for (Vertex v : members[i - 1]) in_x[v] = 1;
      x -= c;
    }
    std::vector<Vertex> larger, smaller;
    for (Vertex v = 0; v < n; ++v) (in_x[v] ? larger : smaller).push_back(v);
    return std::make_pair(std::move(larger), std::move(smaller));
  }
  return std::nullopt;
}

}  // namespace lec
