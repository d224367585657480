#include "lec/classify.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "lec/decomposition.hpp"
#include "lec/error.hpp"

namespace lec {

const char* tag_name(BlockClassTag tag) {
  switch (tag) {
    case BlockClassTag::kK3:
      return "K3";
    case BlockClassTag::kK4:
      return "K4";
    case BlockClassTag::kK2s:
      return "K2s";
    case BlockClassTag::kK2sPrime:
      return "K2s_prime";
    case BlockClassTag::kK2sPlus:
      return "K2s_plus";
    case BlockClassTag::kPrs:
      return "Prs";
    case BlockClassTag::kPrsPrime:
      return "Prs_prime";
    case BlockClassTag::kPrsDoublePrime:
      return "Prs_doubleprime";
    case BlockClassTag::kC5Bar2:
      return "C5bar^2";
    case BlockClassTag::kC5Three:
      return "C5^3";
    case BlockClassTag::kC5BarThree:
      return "C5bar^3";
    case BlockClassTag::kC5Four:
      return "C5^4";
    case BlockClassTag::kK5:
      return "K5";
    case BlockClassTag::kLarge:
      return "Large";
    case BlockClassTag::kNotApplicable:
      return "NotApplicable";
  }
  return "?";
}

namespace {

std::string with_params(BlockClassTag tag, int r, int s) {
  std::string out = tag_name(tag);
  switch (tag) {
    case BlockClassTag::kK2s:
    case BlockClassTag::kK2sPrime:
    case BlockClassTag::kK2sPlus:
      out += "(" + std::to_string(s) + ")";
      break;
    case BlockClassTag::kPrs:
    case BlockClassTag::kPrsPrime:
    case BlockClassTag::kPrsDoublePrime:
      out += "(" + std::to_string(r) + "," + std::to_string(s) + ")";
      break;
    default:
      break;
  }
  return out;
}

struct Candidate {
  BlockClassTag tag;
  int r;
  int s;
};

// Listed classes on n vertices and m edges, most specific first.
std::vector<Candidate> candidates(int n, int m) {
  std::vector<Candidate> out;
  auto add = [&](BlockClassTag tag, int r, int s, int edges) {
    if (edges == m) out.push_back({tag, r, s});
  };
  if (n == 3) add(BlockClassTag::kK3, 0, 0, 3);
  if (n == 4) add(BlockClassTag::kK4, 0, 0, 6);
  if (n == 5) {
    add(BlockClassTag::kK5, 0, 0, 10);
    add(BlockClassTag::kC5Bar2, 0, 0, 7);
    add(BlockClassTag::kC5Three, 0, 0, 8);
    add(BlockClassTag::kC5BarThree, 0, 0, 8);
    add(BlockClassTag::kC5Four, 0, 0, 9);
  }
  if (n >= 4) {
    const int s = n - 2;
    add(BlockClassTag::kK2s, 0, s, 2 * s);
    add(BlockClassTag::kK2sPrime, 0, s, 2 * s + 1);
    if (s >= 3) add(BlockClassTag::kK2sPlus, 0, s, 2 * s + 1);
  }
  if (n >= 5) {
    const int total = n - 3;
    for (int r = total - 1; r >= 1; --r) {
      const int s = total - r;
      if (r >= s) add(BlockClassTag::kPrs, r, s, 2 * total + 1);
    }
    for (int r = total - 1; r >= 1; --r) add(BlockClassTag::kPrsPrime, r, total - r, 2 * total + 2);
    for (int r = total - 1; r >= 1; --r) {
      const int s = total - r;
      if (r >= s) add(BlockClassTag::kPrsDoublePrime, r, s, 2 * total + 3);
    }
  }
  return out;
}

std::vector<std::string> extra_aliases(BlockClassTag tag, int r, int s) {
  if (tag == BlockClassTag::kK2s && s == 2) return {"C4"};
  if (tag == BlockClassTag::kK2sPrime && s == 2) return {"D"};
  if (r == 1 && s == 1) {
    if (tag == BlockClassTag::kPrs) return {"C5"};
    if (tag == BlockClassTag::kPrsPrime) return {"C5^1"};
    if (tag == BlockClassTag::kPrsDoublePrime) return {"C5^2"};
  }
  return {};
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& p, const Graph& t) : p_(p), t_(t) {}

  std::optional<std::vector<Vertex>> run() {
    const int n = p_.order();
    if (n != t_.order() || p_.size() != t_.size()) return std::nullopt;
    std::vector<int> pd, td;
    for (Vertex v = 0; v < n; ++v) {
      pd.push_back(p_.degree(v));
      td.push_back(t_.degree(v));
    }
    std::sort(pd.begin(), pd.end());
    std::sort(td.begin(), td.end());
    if (pd != td) return std::nullopt;
    // Pattern vertices in BFS order from a maximum-degree vertex, so each
    // vertex after the first has an already mapped neighbour.
    order_.clear();
    std::vector<char> seen(n, 0);
    for (int round = 0; round < n; ++round) {
      Vertex start = -1;
      for (Vertex v = 0; v < n; ++v) {
        if (!seen[v] && (start < 0 || p_.degree(v) > p_.degree(start))) start = v;
      }
      if (start < 0) break;
      std::deque<Vertex> queue{start};
      seen[start] = 1;
      while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        order_.push_back(v);
        for (const Incidence& inc : p_.neighbours(v)) {
          if (!seen[inc.to]) {
            seen[inc.to] = 1;
            queue.push_back(inc.to);
          }
        }
      }
    }
    map_.assign(n, -1);
    used_.assign(n, 0);
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t i) {
    if (i == order_.size()) return true;
    const Vertex p = order_[i];
    for (Vertex c = 0; c < t_.order(); ++c) {
      if (used_[c] || t_.degree(c) != p_.degree(p)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const Vertex q = order_[j];
        ok = p_.adjacent(p, q) == t_.adjacent(c, map_[q]);
      }
      if (!ok) continue;
      map_[p] = c;
      used_[c] = 1;
      if (extend(i + 1)) return true;
      used_[c] = 0;
      map_[p] = -1;
    }
    return false;
  }

  const Graph& p_;
  const Graph& t_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

}  // namespace

std::string SmallBlockClass::name() const { return with_params(tag, r, s); }

Graph reference_graph(BlockClassTag tag, int r, int s) {
  switch (tag) {
    case BlockClassTag::kK3:
      return decorated_core_graph(CoreFamily::kR, {}, {0, 0, 0});
    case BlockClassTag::kK4:
      return decorated_core_graph(CoreFamily::kQ, {{0, 2}, {1, 3}}, {0, 0, 0, 0});
    case BlockClassTag::kK2s:
      return k2s_graph(s);
    case BlockClassTag::kK2sPrime:
      return k2s_prime_graph(s);
    case BlockClassTag::kK2sPlus:
      return k2s_plus_graph(s);
    case BlockClassTag::kPrs:
      return prs_graph(r, s, 0);
    case BlockClassTag::kPrsPrime:
      return prs_graph(r, s, 1);
    case BlockClassTag::kPrsDoublePrime:
      return prs_graph(r, s, 2);
    case BlockClassTag::kC5Bar2:
      return c5_variant_graph(C5Variant::kBar2);
    case BlockClassTag::kC5Three:
      return c5_variant_graph(C5Variant::kThree);
    case BlockClassTag::kC5BarThree:
      return c5_variant_graph(C5Variant::kBarThree);
    case BlockClassTag::kC5Four:
      return c5_variant_graph(C5Variant::kFour);
    case BlockClassTag::kK5:
      return c5_variant_graph(C5Variant::kComplete);
    case BlockClassTag::kLarge:
    case BlockClassTag::kNotApplicable:
      break;
  }
  fail_precondition(std::string("no reference graph for class ") + tag_name(tag));
}

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& pattern, const Graph& target) {
  return IsomorphismSearch(pattern, target).run();
}

SmallBlockClass classify_small_block(const Graph& b) {
  if (!is_two_connected(b)) fail_precondition("classify_small_block needs a 2-connected graph");
  SmallBlockClass result;
  result.circumference = circumference(b).length;
  if (result.circumference >= 6) {
    result.tag = BlockClassTag::kLarge;
    return result;
  }
  bool found = false;
  for (const Candidate& c : candidates(b.order(), b.size())) {
    const Graph ref = reference_graph(c.tag, c.r, c.s);
    const auto iso = find_isomorphism(ref, b);
    if (!iso) continue;
    if (!found) {
      found = true;
      result.tag = c.tag;
      result.r = c.r;
      result.s = c.s;
      for (Vertex v = 0; v < ref.order(); ++v) result.mapping.emplace_back(ref.label(v), (*iso)[v]);
      for (auto& a : extra_aliases(c.tag, c.r, c.s)) result.aliases.push_back(a);
    } else {
      result.aliases.push_back(with_params(c.tag, c.r, c.s));
      for (auto& a : extra_aliases(c.tag, c.r, c.s)) result.aliases.push_back(a);
    }
  }
  if (!found) result.tag = BlockClassTag::kNotApplicable;
  return result;
}

namespace {

// Hamiltonian cycle orders of a small graph, each rotation and direction.
std::vector<std::vector<Vertex>> hamiltonian_orders(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < g.order() && ok; ++i) ok = g.adjacent(order[i], order[(i + 1) % g.order()]);
    if (ok) out.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

}  // namespace

bool is_hamiltonian_small_block(const Graph& b) {
  if (b.order() < 3 || b.order() > 5) return false;
  if (!is_two_connected(b)) return false;
  return !hamiltonian_orders(b).empty();
}

std::vector<int> TypedSubgraph::leaf_counts() const {
  std::vector<int> out;
  for (const auto& l : leaves) out.push_back(static_cast<int>(l.size()));
  return out;
}

bool TypedSubgraph::has_chord(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::find(chords.begin(), chords.end(), std::make_pair(a, b)) != chords.end();
}

const char* family_name(CoreFamily family) {
  switch (family) {
    case CoreFamily::kR:
      return "R";
    case CoreFamily::kQ:
      return "Q";
    case CoreFamily::kP:
      return "P";
  }
  return "?";
}

std::optional<TypedSubgraph> recognize_type_tF(const Graph& h) {
  if (h.order() < 3 || !is_connected(h)) return std::nullopt;
  const BlockDecomposition bd = block_decomposition(h);
  int core_block = -1;
  for (int i = 0; i < bd.block_count(); ++i) {
    if (bd.blocks[i].trivial()) continue;
    if (core_block >= 0) return std::nullopt;
    core_block = i;
  }
  if (core_block < 0) return std::nullopt;
  const Block& block = bd.blocks[core_block];
  const int k = static_cast<int>(block.vertices.size());
  if (k < 3 || k > 5) return std::nullopt;
  std::vector<char> in_core(h.order(), 0);
  for (Vertex v : block.vertices) in_core[v] = 1;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (in_core[v]) continue;
    if (h.degree(v) != 1 || !in_core[h.neighbours(v).front().to]) return std::nullopt;
  }
  const Subgraph core = edge_induced_subgraph(h, block.edges);
  const auto orders = hamiltonian_orders(core.graph);
  if (orders.empty()) return std::nullopt;

  TypedSubgraph best;
  best.family = k == 3 ? CoreFamily::kR : k == 4 ? CoreFamily::kQ : CoreFamily::kP;
  std::vector<int> best_counts;
  std::vector<Vertex> best_core;
  bool have = false;
  for (const auto& order : orders) {
    std::vector<Vertex> labelled;
    for (Vertex local : order) labelled.push_back(core.to_parent_vertex[local]);
    std::vector<std::pair<int, int>> chords;
    for (int a = 0; a < k; ++a) {
      for (int b = a + 2; b < k; ++b) {
        if (a == 0 && b == k - 1) continue;
        if (h.adjacent(labelled[a], labelled[b])) chords.emplace_back(a, b);
      }
    }
    if (k == 4 && chords.size() == 1 && chords.front() != std::make_pair(0, 2)) continue;
    std::vector<int> counts;
    for (Vertex v : labelled) {
      int leaves = 0;
      for (const Incidence& inc : h.neighbours(v)) leaves += !in_core[inc.to];
      counts.push_back(leaves);
    }
    const bool better = !have || counts > best_counts ||
                        (counts == best_counts && labelled < best_core);
    if (!better) continue;
    have = true;
    best_counts = counts;
    best_core = labelled;
    best.chords = chords;
  }
  best.core = best_core;
  best.leaves.assign(k, {});
  for (int i = 0; i < k; ++i) {
    for (const Incidence& inc : h.neighbours(best.core[i])) {
      if (!in_core[inc.to]) best.leaves[i].push_back(inc.to);
    }
    std::sort(best.leaves[i].begin(), best.leaves[i].end());
  }
  best.t = *std::max_element(best_counts.begin(), best_counts.end());
  return best;
}

}  // namespace lec
