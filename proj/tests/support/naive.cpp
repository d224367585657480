#include "naive.hpp"

#include <algorithm>
#include <set>

namespace lec::testing {

namespace {

void extend(const Graph& g, Vertex at, Vertex target, std::vector<char>& seen, std::vector<EdgeId>& path,
            std::vector<std::vector<EdgeId>>& out) {
  if (at == target) {
    out.push_back(path);
    return;
  }
  for (const Incidence& inc : g.neighbours(at)) {
    if (seen[inc.to]) continue;
    seen[inc.to] = 1;
    path.push_back(inc.edge);
    extend(g, inc.to, target, seen, path, out);
    path.pop_back();
    seen[inc.to] = 0;
  }
}

bool path_is_loose(const std::vector<int>& colours, const std::vector<EdgeId>& path) {
  std::set<int> distinct;
  for (EdgeId e : path) distinct.insert(colours[e]);
  if (path.size() == 1) return true;
  if (path.size() == 2) return distinct.size() == 2;
  return distinct.size() >= 3;
}

}  // namespace

std::vector<std::vector<EdgeId>> all_simple_paths(const Graph& g, Vertex u, Vertex v) {
  std::vector<std::vector<EdgeId>> out;
  std::vector<char> seen(g.order(), 0);
  std::vector<EdgeId> path;
  seen[u] = 1;
  extend(g, u, v, seen, path, out);
  return out;
}

bool naive_loose_pair(const Graph& g, const std::vector<int>& colours, Vertex u, Vertex v) {
  for (const auto& path : all_simple_paths(g, u, v)) {
    if (path_is_loose(colours, path)) return true;
  }
  return false;
}

bool naive_loose_connected(const Graph& g, const std::vector<int>& colours) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!naive_loose_pair(g, colours, u, v)) return false;
    }
  }
  return true;
}

int naive_circumference(const Graph& g) {
  // A cycle through edge uv is a u,v-path of length >= 2 plus the edge.
  int best = 0;
  for (const Edge& e : g.edges()) {
    for (const auto& path : all_simple_paths(g, e.u, e.v)) {
      if (path.size() >= 2) best = std::max(best, static_cast<int>(path.size()) + 1);
    }
  }
  return best;
}

int naive_lec(const Graph& g) {
  const int m = g.size();
  for (int k = 1; k <= m; ++k) {
    std::vector<int> colours(m, 1);
    while (true) {
      if (naive_loose_connected(g, colours)) return k;
      int i = 0;
      while (i < m && colours[i] == k) colours[i++] = 1;
      if (i == m) break;
      ++colours[i];
    }
  }
  return m;
}

}  // namespace lec::testing
