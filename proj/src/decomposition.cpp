#include "lec/decomposition.hpp"

#include <algorithm>
#include <bit>

#include "lec/error.hpp"

namespace lec {

namespace {

// Tarjan's lowpoint DFS, iterative. Works on disconnected graphs; isolated
// vertices belong to no block.
std::vector<std::vector<EdgeId>> raw_blocks(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::vector<EdgeId>> blocks;
  std::vector<EdgeId> edge_stack;
  struct Frame {
    Vertex v;
    EdgeId parent_edge;
    int next;
  };
  std::vector<Frame> frames;
  int timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0 || g.degree(root) == 0) continue;
    disc[root] = low[root] = timer++;
    frames.push_back({root, -1, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto nbrs = g.neighbours(f.v);
      if (f.next < static_cast<int>(nbrs.size())) {
        const Incidence inc = nbrs[f.next++];
        if (inc.edge == f.parent_edge) continue;
        if (disc[inc.to] < 0) {
          edge_stack.push_back(inc.edge);
          disc[inc.to] = low[inc.to] = timer++;
          frames.push_back({inc.to, inc.edge, 0});
        } else if (disc[inc.to] < disc[f.v]) {
          edge_stack.push_back(inc.edge);
          low[f.v] = std::min(low[f.v], disc[inc.to]);
        }
        continue;
      }
      const Frame done = f;
      frames.pop_back();
      if (frames.empty()) break;
      Frame& parent = frames.back();
      low[parent.v] = std::min(low[parent.v], low[done.v]);
      if (low[done.v] >= disc[parent.v]) {
        std::vector<EdgeId> block;
        while (true) {
          const EdgeId e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == done.parent_edge) break;
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

}  // namespace

int BlockDecomposition::cut_node(Vertex v) const {
  auto it = std::lower_bound(cut_vertices.begin(), cut_vertices.end(), v);
  if (it == cut_vertices.end() || *it != v) return -1;
  return block_count() + static_cast<int>(it - cut_vertices.begin());
}

BlockDecomposition block_decomposition(const Graph& g) {
  if (g.order() < 2) fail_precondition("block decomposition needs at least two vertices");
  if (!is_connected(g)) fail_precondition("block decomposition of a disconnected graph");
  BlockDecomposition bd;
  bd.block_of_edge.assign(g.size(), -1);
  bd.blocks_of_vertex.assign(g.order(), {});
  for (auto& edges : raw_blocks(g)) {
    Block block;
    block.edges = std::move(edges);
    for (EdgeId e : block.edges) {
      block.vertices.push_back(g.edge(e).u);
      block.vertices.push_back(g.edge(e).v);
    }
    std::sort(block.vertices.begin(), block.vertices.end());
    block.vertices.erase(std::unique(block.vertices.begin(), block.vertices.end()),
                         block.vertices.end());
    const int id = bd.block_count();
    for (EdgeId e : block.edges) bd.block_of_edge[e] = id;
    for (Vertex v : block.vertices) bd.blocks_of_vertex[v].push_back(id);
    bd.blocks.push_back(std::move(block));
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (bd.blocks_of_vertex[v].size() >= 2) bd.cut_vertices.push_back(v);
  }
  bd.bc_tree.assign(bd.block_count() + bd.cut_vertices.size(), {});
  for (int i = 0; i < static_cast<int>(bd.cut_vertices.size()); ++i) {
    const int node = bd.block_count() + i;
    for (int b : bd.blocks_of_vertex[bd.cut_vertices[i]]) {
      bd.bc_tree[node].push_back(b);
      bd.bc_tree[b].push_back(node);
    }
  }
  for (auto& row : bd.bc_tree) std::sort(row.begin(), row.end());
  return bd;
}

CutEdgeGraph cut_edge_graph(const Graph& g, const BlockDecomposition& blocks) {
  CutEdgeGraph c;
  c.degree.assign(g.order(), 0);
  for (const Block& b : blocks.blocks) {
    if (!b.trivial()) continue;
    const EdgeId e = b.edges.front();
    c.edges.push_back(e);
    ++c.degree[g.edge(e).u];
    ++c.degree[g.edge(e).v];
  }
  std::sort(c.edges.begin(), c.edges.end());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (c.degree[v] > 0) c.vertices.push_back(v);
    c.max_degree = std::max(c.max_degree, c.degree[v]);
  }
  if (!c.edges.empty()) {
    int best = 0;
    for (EdgeId e : c.edges) {
      best = std::max(best, c.degree[g.edge(e).u] + c.degree[g.edge(e).v]);
    }
    c.reduced_max_weight = best - 1;
  }
  return c;
}

CutEdgeGraph cut_edge_graph(const Graph& g) {
  return cut_edge_graph(g, block_decomposition(g));
}

bool is_two_connected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  return raw_blocks(g).size() == 1;
}

namespace {

class LongestCycleSearch {
 public:
  LongestCycleSearch(const Graph& h, std::uint64_t budget, std::uint64_t& states)
      : h_(h), k_(h.order()), words_((k_ + 63) / 64), budget_(budget), states_(states) {
    adjacency_.assign(static_cast<std::size_t>(k_) * words_, 0);
    for (Vertex v = 0; v < k_; ++v) {
      for (const Incidence& inc : h.neighbours(v)) set(row(v), inc.to);
    }
    visited_.assign(words_, 0);
    reach_.assign(words_, 0);
    frontier_.assign(words_, 0);
    next_.assign(words_, 0);
  }

  // Returns the longest cycle, as a vertex list, of the (2-connected) graph.
  std::vector<Vertex> run() {
    for (start_ = 0; start_ < k_; ++start_) {
      if (k_ - start_ <= static_cast<int>(best_.size())) break;
      std::fill(visited_.begin(), visited_.end(), 0);
      set(visited_.data(), start_);
      path_.assign(1, start_);
      if (extend(start_)) break;
    }
    return best_;
  }

 private:
  std::uint64_t* row(Vertex v) { return adjacency_.data() + static_cast<std::size_t>(v) * words_; }
  static void set(std::uint64_t* bits, int i) { bits[i >> 6] |= std::uint64_t{1} << (i & 63); }
  static void clear(std::uint64_t* bits, int i) { bits[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  static bool test(const std::uint64_t* bits, int i) { return (bits[i >> 6] >> (i & 63)) & 1; }

  // Vertices above start_ that are not on the path and are reachable from
  // `x` through such vertices. Returns their count, and whether the start
  // vertex can be re-entered from x or from one of them.
  std::pair<int, bool> reachable(Vertex x) {
    auto* adj_x = row(x);
    bool closes = test(adj_x, start_);
    for (int w = 0; w < words_; ++w) {
      reach_[w] = adj_x[w] & ~visited_[w] & above_mask(w);
      frontier_[w] = reach_[w];
    }
    while (true) {
      bool any = false;
      std::fill(next_.begin(), next_.end(), 0);
      for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = frontier_[w];
        while (bits) {
          const int v = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          const auto* adj_v = row(v);
          if (test(adj_v, start_)) closes = true;
          for (int u = 0; u < words_; ++u) next_[u] |= adj_v[u];
        }
      }
      for (int w = 0; w < words_; ++w) {
        next_[w] &= ~visited_[w] & ~reach_[w] & above_mask(w);
        reach_[w] |= next_[w];
        frontier_[w] = next_[w];
        any = any || next_[w] != 0;
      }
      if (!any) break;
    }
    int count = 0;
    for (int w = 0; w < words_; ++w) count += std::popcount(reach_[w]);
    return {count, closes};
  }

  std::uint64_t above_mask(int word) const {
    const int lo = word * 64;
    if (start_ + 1 <= lo) return ~std::uint64_t{0};
    if (start_ + 1 >= lo + 64) return 0;
    return ~std::uint64_t{0} << (start_ + 1 - lo);
  }

  // True once a Hamiltonian cycle of the remaining vertices is found.
  bool extend(Vertex x) {
    if (++states_ > budget_) {
      throw BudgetExceeded("circumference search exceeded " + std::to_string(budget_) +
                           " states");
    }
    const int len = static_cast<int>(path_.size()) - 1;
    if (len >= 2 && test(row(x), start_) && len + 1 > static_cast<int>(best_.size())) {
      best_ = path_;
      if (static_cast<int>(best_.size()) == k_ - start_) return true;
    }
    const auto [count, closes] = reachable(x);
    if (!closes || len + 1 + count <= static_cast<int>(best_.size())) return false;
    for (const Incidence& inc : h_.neighbours(x)) {
      const Vertex y = inc.to;
      if (y <= start_ || test(visited_.data(), y)) continue;
      set(visited_.data(), y);
      path_.push_back(y);
      const bool done = extend(y);
      path_.pop_back();
      clear(visited_.data(), y);
      if (done) return true;
    }
    return false;
  }

  const Graph& h_;
  int k_;
  int words_;
  std::uint64_t budget_;
  std::uint64_t& states_;
  std::vector<std::uint64_t> adjacency_;
  std::vector<std::uint64_t> visited_, reach_, frontier_, next_;
  int start_ = 0;
  std::vector<Vertex> path_;
  std::vector<Vertex> best_;
};

}  // namespace

Circumference circumference(const Graph& g, std::uint64_t budget) {
  Circumference result;
  std::uint64_t states = 0;
  for (const auto& edges : raw_blocks(g)) {
    if (edges.size() < 3) continue;
    if (static_cast<int>(edges.size()) <= result.length) continue;  // a block with m edges has cir <= m
    const Subgraph block = edge_induced_subgraph(g, edges);
    if (block.graph.order() <= result.length) continue;
    LongestCycleSearch search(block.graph, budget, states);
    const auto cycle = search.run();
    if (static_cast<int>(cycle.size()) > result.length) {
      result.length = static_cast<int>(cycle.size());
      result.cycle.clear();
      for (Vertex v : cycle) result.cycle.push_back(block.to_parent_vertex[v]);
    }
  }
  return result;
}

}  // namespace lec
