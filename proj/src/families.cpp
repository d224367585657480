#include "lec/families.hpp"

#include <string>

#include "lec/error.hpp"

namespace lec {

namespace {

class Builder {
 public:
  Vertex add(std::string label) {
    labels_.push_back(std::move(label));
    return static_cast<Vertex>(labels_.size()) - 1;
  }
  void join(Vertex a, Vertex b) { edges_.push_back({a, b}); }
  Graph build() { return Graph(static_cast<int>(labels_.size()), edges_, labels_); }

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
};

void require(bool ok, const char* message) {
  if (!ok) fail_precondition(message);
}

}  // namespace

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  Builder b;
  for (int i = 0; i < n; ++i) b.add(std::to_string(i));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) b.join(i, j);
  }
  return b.build();
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  Builder b;
  for (int i = 0; i < n; ++i) b.add(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) b.join(i, i + 1);
  return b.build();
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  Builder b;
  for (int i = 0; i < n; ++i) b.add(std::to_string(i));
  for (int i = 0; i < n; ++i) b.join(i, (i + 1) % n);
  return b.build();
}

Graph star_graph(int leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  Builder b;
  const Vertex c = b.add("c");
  for (int i = 1; i <= leaves; ++i) b.join(c, b.add("l" + std::to_string(i)));
  return b.build();
}

Graph complete_bipartite_graph(int r, int s) {
  require(r >= 1 && s >= 1, "complete bipartite graph needs r, s >= 1");
  Builder b;
  for (int i = 1; i <= r; ++i) b.add("x" + std::to_string(i));
  for (int j = 1; j <= s; ++j) b.add("y" + std::to_string(j));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < s; ++j) b.join(i, r + j);
  }
  return b.build();
}

Graph petersen_graph() {
  Builder b;
  for (int i = 0; i < 10; ++i) b.add(std::to_string(i));
  for (int i = 0; i < 5; ++i) {
    b.join(i, (i + 1) % 5);
    b.join(i, i + 5);
    b.join(5 + i, 5 + (i + 2) % 5);
  }
  return b.build();
}

namespace {

Graph k2s_family(int s, bool xy, bool plus) {
  Builder b;
  const Vertex x = b.add("x");
  const Vertex y = b.add("y");
  std::vector<Vertex> v;
  for (int i = 1; i <= s; ++i) v.push_back(b.add("v" + std::to_string(i)));
  for (Vertex vi : v) {
    b.join(x, vi);
    b.join(y, vi);
  }
  if (xy) b.join(x, y);
  if (plus) b.join(v[1], v[2]);
  return b.build();
}

}  // namespace

Graph k2s_graph(int s) {
  require(s >= 2, "K_{2,s} needs s >= 2");
  return k2s_family(s, false, false);
}

Graph k2s_prime_graph(int s) {
  require(s >= 2, "K'_{2,s} needs s >= 2");
  return k2s_family(s, true, false);
}

Graph k2s_plus_graph(int s) {
  require(s >= 3, "K+_{2,s} needs s >= 3");
  return k2s_family(s, false, true);
}

Graph prs_graph(int r, int s, int extra) {
  require(r >= 1 && s >= 1 && extra >= 0 && extra <= 2, "P_{r,s} needs r, s >= 1");
  Builder b;
  const Vertex x = b.add("x");
  const Vertex y = b.add("y");
  const Vertex z = b.add("z");
  b.join(y, z);
  for (int i = 1; i <= r; ++i) {
    const Vertex u = b.add("u" + std::to_string(i));
    b.join(x, u);
    b.join(y, u);
  }
  for (int j = 1; j <= s; ++j) {
    const Vertex v = b.add("v" + std::to_string(j));
    b.join(x, v);
    b.join(z, v);
  }
  if (extra >= 1) b.join(x, y);
  if (extra >= 2) b.join(x, z);
  return b.build();
}

Graph c5_variant_graph(C5Variant variant) {
  // Built on P_{1,1}: vertices x, y, z, u1, v1 with cycle x u1 y z v1.
  Builder b;
  const Vertex x = b.add("x");
  const Vertex y = b.add("y");
  const Vertex z = b.add("z");
  const Vertex u1 = b.add("u1");
  const Vertex v1 = b.add("v1");
  b.join(y, z);
  b.join(x, u1);
  b.join(y, u1);
  b.join(x, v1);
  b.join(z, v1);
  b.join(x, y);
  switch (variant) {
    case C5Variant::kBar2:
      b.join(u1, v1);
      break;
    case C5Variant::kThree:
      b.join(x, z);
      b.join(y, v1);
      break;
    case C5Variant::kBarThree:
      b.join(x, z);
      b.join(u1, v1);
      break;
    case C5Variant::kFour:
      b.join(x, z);
      b.join(y, v1);
      b.join(u1, v1);
      break;
    case C5Variant::kComplete:
      b.join(x, z);
      b.join(y, v1);
      b.join(u1, v1);
      b.join(u1, z);
      break;
  }
  return b.build();
}

int core_size(CoreFamily family) {
  switch (family) {
    case CoreFamily::kR:
      return 3;
    case CoreFamily::kQ:
      return 4;
    case CoreFamily::kP:
      return 5;
  }
  return 0;
}

const std::vector<const char*>& core_roles(CoreFamily family) {
  static const std::vector<const char*> r{"x", "y", "z"};
  static const std::vector<const char*> q{"x", "v", "y", "w"};
  static const std::vector<const char*> p{"u", "x", "v", "z", "y"};
  switch (family) {
    case CoreFamily::kR:
      return r;
    case CoreFamily::kQ:
      return q;
    case CoreFamily::kP:
      break;
  }
  return p;
}

Graph decorated_core_graph(CoreFamily family, const std::vector<std::pair<int, int>>& chords,
                           const std::vector<int>& leaves) {
  const int k = core_size(family);
  require(static_cast<int>(leaves.size()) == k, "one leaf count per core vertex expected");
  const auto& roles = core_roles(family);
  Builder b;
  for (int i = 0; i < k; ++i) b.add(roles[i]);
  for (int i = 0; i < k; ++i) b.join(i, (i + 1) % k);
  for (auto [a, c] : chords) {
    require(a >= 0 && c >= 0 && a < k && c < k, "chord endpoint out of range");
    const int gap = (c - a + k) % k;
    require(gap != 0 && gap != 1 && gap != k - 1, "chord must join non-consecutive core vertices");
    b.join(a, c);
  }
  for (int i = 0; i < k; ++i) {
    require(leaves[i] >= 0, "leaf counts must be nonnegative");
    for (int j = 1; j <= leaves[i]; ++j) b.join(i, b.add(std::string(roles[i]) + std::to_string(j)));
  }
  return b.build();
}

Graph r_t_graph(int t) { return decorated_core_graph(CoreFamily::kR, {}, {t, t, t}); }
Graph q_t_graph(int t) { return decorated_core_graph(CoreFamily::kQ, {}, {t, t, t, t}); }
Graph p_t_graph(int t) { return decorated_core_graph(CoreFamily::kP, {}, {t, t, t, t, t}); }

Graph leafy_cycle_graph(int k, const std::vector<int>& leaves) {
  require(k >= 3, "cycle needs k >= 3");
  require(static_cast<int>(leaves.size()) == k, "one leaf count per cycle vertex expected");
  Builder b;
  for (int i = 0; i < k; ++i) b.add("c" + std::to_string(i));
  for (int i = 0; i < k; ++i) b.join(i, (i + 1) % k);
  for (int i = 0; i < k; ++i) {
    for (int j = 1; j <= leaves[i]; ++j) {
      b.join(i, b.add("c" + std::to_string(i) + "_" + std::to_string(j)));
    }
  }
  return b.build();
}

Graph leafy_cycle_graph(int k, int t) { return leafy_cycle_graph(k, std::vector<int>(k, t)); }

}  // namespace lec
