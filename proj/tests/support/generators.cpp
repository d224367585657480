#include "generators.hpp"

#include <algorithm>

#include "graph_enum.hpp"
#include "lec/classify.hpp"
#include "lec/decomposition.hpp"

namespace lec::testing {

namespace {

struct Builder {
  int n = 0;
  std::vector<Edge> edges;

  int add_vertex() { return n++; }

  void glue(const Graph& block, int at, int anchor) {
    std::vector<int> map(block.order());
    for (Vertex v = 0; v < block.order(); ++v) map[v] = v == anchor ? at : add_vertex();
    for (const Edge& e : block.edges()) edges.push_back({map[e.u], map[e.v]});
  }

  Graph build() const { return Graph(n, edges); }
};

int pick(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> list;
  for (auto [u, v] : edges) list.push_back({u, v});
  return Graph(n, std::move(list));
}

const std::vector<Graph>& small_blocks() {
  static const std::vector<Graph> blocks = [] {
    std::vector<Graph> out;
    for (int n = 3; n <= 5; ++n) {
      for (const Graph& g : connected_graphs(n)) {
        if (is_two_connected(g)) out.push_back(g);
      }
    }
    return out;
  }();
  return blocks;
}

Graph random_block_tree(std::mt19937_64& rng, int max_edges) {
  const auto& pool = small_blocks();
  Builder b;
  const Graph& first = pool[pick(rng, 0, static_cast<int>(pool.size()) - 1)];
  b.n = 1;
  b.glue(first, 0, 0);
  for (int attempt = 0; attempt < 50; ++attempt) {
    const int room = max_edges - static_cast<int>(b.edges.size());
    if (room <= 0) break;
    const int at = pick(rng, 0, b.n - 1);
    if (pick(rng, 0, 2) > 0 || room < 3) {
      const int leaf = b.add_vertex();
      b.edges.push_back({at, leaf});
      continue;
    }
    const Graph& block = pool[pick(rng, 0, static_cast<int>(pool.size()) - 1)];
    if (block.size() > room) continue;
    b.glue(block, at, pick(rng, 0, block.order() - 1));
  }
  return b.build();
}

Graph random_typed_graph(std::mt19937_64& rng, CoreFamily family, int t) {
  std::vector<std::pair<int, int>> chords;
  if (family == CoreFamily::kQ) {
    const int c = pick(rng, 0, 2);
    if (c >= 1) chords.push_back({0, 2});
    if (c == 2) chords.push_back({1, 3});
  } else if (family == CoreFamily::kP) {
    for (const auto& chord : std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}}) {
      if (pick(rng, 0, 2) == 0) chords.push_back(chord);
    }
  }
  const int k = core_size(family);
  std::vector<int> leaves(k);
  for (int& l : leaves) l = pick(rng, 0, t);
  leaves[pick(rng, 0, k - 1)] = t;
  return decorated_core_graph(family, chords, leaves);
}

Graph random_decorated_block(std::mt19937_64& rng, int max_edges) {
  std::vector<const Graph*> hamiltonian;
  for (const Graph& g : small_blocks()) {
    if (is_hamiltonian_small_block(g)) hamiltonian.push_back(&g);
  }
  const Graph& block = *hamiltonian[pick(rng, 0, static_cast<int>(hamiltonian.size()) - 1)];
  Builder b;
  b.n = block.order();
  for (const Edge& e : block.edges()) b.edges.push_back(e);
  const int target = pick(rng, static_cast<int>(b.edges.size()) + 1, max_edges);
  while (static_cast<int>(b.edges.size()) < target) {
    // Mostly leaves on the block, sometimes deeper.
    const int at = pick(rng, 0, 3) > 0 ? pick(rng, 0, block.order() - 1) : pick(rng, 0, b.n - 1);
    const int leaf = b.add_vertex();
    b.edges.push_back({at, leaf});
  }
  return b.build();
}

}  // namespace lec::testing
