#include "lec/verify.hpp"

#include <algorithm>
#include <deque>

#include "lec/error.hpp"

namespace lec {

bool is_loose_word(std::span<const int> colours) {
  const std::size_t len = colours.size();
  if (len == 0) return false;
  if (len == 1) return true;
  int distinct[3] = {0, 0, 0};
  int count = 0;
  for (int c : colours) {
    if (std::find(distinct, distinct + count, c) == distinct + count) {
      if (count == 2) return len >= 3;
      distinct[count++] = c;
    }
  }
  return len == 2 && count == 2;
}

LooseChecker::LooseChecker(const Graph& g) : g_(g) {
  if (!is_connected(g)) fail_precondition("loose connectivity of a disconnected graph");
  if (g.order() >= 2) {
    blocks_ = block_decomposition(g);
    const int nodes = static_cast<int>(blocks_.bc_tree.size());
    parent_.assign(nodes, -1);
    depth_.assign(nodes, 0);
    std::vector<char> seen(nodes, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int y : blocks_.bc_tree[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          parent_[y] = x;
          depth_[y] = depth_[x] + 1;
          queue.push_back(y);
        }
      }
    }
  }
  allowed_.assign(g.order(), 0);
  on_path_.assign(g.order(), 0);
  seen_.assign(g.order(), 0);
  bfs_parent_.assign(g.order(), -1);
}

int LooseChecker::node_of(Vertex v) const {
  const int cut = blocks_.cut_node(v);
  return cut >= 0 ? cut : blocks_.blocks_of_vertex[v].front();
}

std::vector<int> LooseChecker::blocks_between(Vertex u, Vertex v) const {
  int a = node_of(u);
  int b = node_of(v);
  std::vector<int> out;
  auto take = [&](int node) {
    if (node < blocks_.block_count()) out.push_back(node);
  };
  while (depth_[a] > depth_[b]) take(std::exchange(a, parent_[a]));
  while (depth_[b] > depth_[a]) take(std::exchange(b, parent_[b]));
  while (a != b) {
    take(std::exchange(a, parent_[a]));
    take(std::exchange(b, parent_[b]));
  }
  take(a);
  std::sort(out.begin(), out.end());
  return out;
}

bool LooseChecker::reaches_target(Vertex x, std::vector<Vertex>* tail) {
  ++seen_stamp_;
  std::deque<Vertex> queue{x};
  seen_[x] = seen_stamp_;
  while (!queue.empty()) {
    const Vertex a = queue.front();
    queue.pop_front();
    for (const Incidence& inc : g_.neighbours(a)) {
      const Vertex b = inc.to;
      if (colours_[inc.edge] == 0 || allowed_[b] != stamp_ || on_path_[b] || seen_[b] == seen_stamp_) {
        continue;
      }
      seen_[b] = seen_stamp_;
      bfs_parent_[b] = a;
      if (b == target_) {
        if (tail) {
          tail->clear();
          for (Vertex w = b; w != x; w = bfs_parent_[w]) tail->push_back(w);
          std::reverse(tail->begin(), tail->end());
        }
        return true;
      }
      queue.push_back(b);
    }
  }
  return false;
}

bool LooseChecker::search(Vertex x) {
  for (const Incidence& inc : g_.neighbours(x)) {
    const Vertex y = inc.to;
    const int c = colours_[inc.edge];
    if (c == 0 || allowed_[y] != stamp_ || on_path_[y]) continue;
    path_colours_.push_back(c);
    if (y == target_) {
      const bool ok = path_colours_.size() >= 3 && is_loose_word(path_colours_);
      if (ok) {
        found_path_ = path_;
        found_path_.push_back(y);
        return true;
      }
      path_colours_.pop_back();
      continue;
    }
    int distinct[3];
    int count = 0;
    for (int pc : path_colours_) {
      if (std::find(distinct, distinct + count, pc) == distinct + count) {
        distinct[count++] = pc;
        if (count == 3) break;
      }
    }
    on_path_[y] = 1;
    path_.push_back(y);
    bool found = false;
    if (count >= 3) {
      // Any continuation to the target keeps three colours.
      std::vector<Vertex> tail;
      if (reaches_target(y, &tail)) {
        found_path_ = path_;
        found_path_.insert(found_path_.end(), tail.begin(), tail.end());
        found = true;
      }
    } else if (reaches_target(y, nullptr)) {
      found = search(y);
    }
    path_.pop_back();
    on_path_[y] = 0;
    path_colours_.pop_back();
    if (found) return true;
  }
  return false;
}

std::optional<LooseWitness> LooseChecker::find(std::span<const int> colours, Vertex u, Vertex v) {
  LooseWitness w;
  w.u = u;
  w.v = v;
  if (auto e = g_.edge_between(u, v); e && colours[*e] != 0) {
    w.kind = PathKind::kEdge;
    w.path = {u, v};
    w.colours = {colours[*e]};
    return w;
  }
  for (const Incidence& inc : g_.neighbours(u)) {
    if (colours[inc.edge] == 0) continue;
    auto second = g_.edge_between(inc.to, v);
    if (second && colours[*second] != 0 && colours[*second] != colours[inc.edge]) {
      w.kind = PathKind::kBichromatic;
      w.path = {u, inc.to, v};
      w.colours = {colours[inc.edge], colours[*second]};
      return w;
    }
  }
  colours_ = colours;
  target_ = v;
  ++stamp_;
  for (int b : blocks_between(u, v)) {
    for (Vertex x : blocks_.blocks[b].vertices) allowed_[x] = stamp_;
  }
  path_.assign(1, u);
  path_colours_.clear();
  on_path_[u] = 1;
  const bool found = search(u);
  on_path_[u] = 0;
  if (!found) return std::nullopt;
  w.kind = PathKind::kLoose;
  w.path = found_path_;
  for (std::size_t i = 0; i + 1 < w.path.size(); ++i) {
    w.colours.push_back(colours[*g_.edge_between(w.path[i], w.path[i + 1])]);
  }
  return w;
}

std::optional<LooseWitness> is_loose_pair(const Graph& g, const EdgeColouring& c, Vertex u,
                                          Vertex v) {
  require_total(g, c);
  if (u == v) fail_precondition("is_loose_pair needs two distinct vertices");
  LooseChecker checker(g);
  return checker.find(c.colours(), u, v);
}

Verification verify_loose_connected(const Graph& g, const EdgeColouring& c) {
  require_total(g, c);
  LooseChecker checker(g);
  Verification result;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!checker.loose(c.colours(), u, v)) {
        result.failing_pair = std::make_pair(u, v);
        return result;
      }
    }
  }
  result.accepted = true;
  return result;
}

}  // namespace lec
