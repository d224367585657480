#include "lec/colouring.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "lec/decomposition.hpp"
#include "lec/error.hpp"
#include "lec/oracle.hpp"
#include "lec/solver.hpp"
#include "lec/verify.hpp"

namespace lec {

namespace {

void require_loose(const Graph& g, const EdgeColouring& c, const char* what) {
  const Verification v = verify_loose_connected(g, c);
  if (!v.accepted) {
    throw Error(ErrorCode::kInternal,
                std::string(what) + " produced a colouring that is not loose at pair " +
                    g.label(v.failing_pair->first) + "," + g.label(v.failing_pair->second));
  }
}

// Colours adjacent or semi-adjacent to edge e among the coloured edges.
std::set<int> nearby_colours(const Graph& g, const std::vector<int>& colour, EdgeId e) {
  std::set<int> out;
  const Edge& edge = g.edge(e);
  for (Vertex end : {edge.u, edge.v}) {
    for (const Incidence& inc : g.neighbours(end)) {
      if (inc.edge == e) continue;
      if (colour[inc.edge] > 0) out.insert(colour[inc.edge]);
      for (const Incidence& far : g.neighbours(inc.to)) {
        if (far.edge == inc.edge || far.edge == e) continue;
        if (colour[far.edge] > 0) out.insert(colour[far.edge]);
      }
    }
  }
  return out;
}

// Injective renamings of the colours of `base` into 1..palette, in
// lexicographic order of the images; returns the first accepted one.
std::optional<std::vector<int>> rename_to_fit(const std::vector<int>& base, int palette,
                                              const std::function<bool(const std::vector<int>&)>& accept,
                                              std::size_t limit = 1'000'000) {
  std::vector<int> used;
  for (int c : base) {
    if (c > 0 && std::find(used.begin(), used.end(), c) == used.end()) used.push_back(c);
  }
  std::sort(used.begin(), used.end());
  if (static_cast<int>(used.size()) > palette) return std::nullopt;
  std::map<int, int> image;
  std::vector<char> taken(palette + 1, 0);
  std::size_t tried = 0;
  std::optional<std::vector<int>> found;
  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == used.size()) {
      if (++tried > limit) return true;
      std::vector<int> out(base.size(), 0);
      for (std::size_t e = 0; e < base.size(); ++e) out[e] = base[e] > 0 ? image[base[e]] : 0;
      if (accept(out)) {
        found = std::move(out);
        return true;
      }
      return false;
    }
    for (int c = 1; c <= palette; ++c) {
      if (taken[c]) continue;
      taken[c] = 1;
      image[used[i]] = c;
      if (place(i + 1)) return true;
      taken[c] = 0;
    }
    return false;
  };
  place(0);
  return found;
}

// ---------------------------------------------------------------------------
// Colour schemes of maximal typed graphs. Core edges are given by pairs of
// core positions; leaves[i] lists the colours of the leaf edges at position i.

struct CoreScheme {
  std::vector<std::array<int, 3>> core;
  std::vector<std::vector<int>> leaves;
  int fill = 1;  // colour of core chords the scheme does not have
};

std::vector<int> range_colours(int from, int to) {
  std::vector<int> out;
  for (int c = from; c <= to; ++c) out.push_back(c);
  return out;
}

// R: x = 0, y = 1, z = 2.
CoreScheme r_single_leaf() { return {{{0, 1, 1}, {0, 2, 1}, {1, 2, 1}}, {{2}, {}, {}}}; }

CoreScheme r_one() { return {{{0, 1, 1}, {1, 2, 2}, {0, 2, 3}}, {{2}, {3}, {1}}}; }

CoreScheme r_t_plus(int t) {
  CoreScheme s{{{0, 1, 1}, {0, 2, 2}, {1, 2, 3}}, {{1, 2}, {1, 3}, {2, 3}}};
  for (int i = 3; i <= t; ++i) {
    for (auto& l : s.leaves) l.push_back(i + 1);
  }
  return s;
}

CoreScheme r_g1(int t) {
  CoreScheme s{{{0, 1, t - 2}, {0, 2, t}, {1, 2, t - 1}}, {}};
  const std::vector<int> low = range_colours(1, t - 3);
  s.leaves = {low, low, low};
  s.leaves[0].push_back(t);
  s.leaves[1].push_back(t - 1);
  for (int c : {t - 2, t - 1, t}) s.leaves[2].push_back(c);
  return s;
}

// Q: x = 0, v = 1, y = 2, w = 3; cycle xv, vy, yw, wx; chords xy, vw.
CoreScheme q_one() { return {{{0, 1, 1}, {2, 3, 1}, {1, 2, 3}, {0, 3, 2}}, {{3}, {2}, {3}, {2}}}; }

CoreScheme q_star(int t) {
  const std::vector<int> all = range_colours(1, t);
  return {{{0, 1, 1}, {0, 3, 2}, {2, 3, 3}, {1, 2, 4}}, {all, all, all, all}};
}

CoreScheme q_h1() {
  return {{{0, 1, 2}, {1, 2, 1}, {2, 3, 2}, {0, 3, 3}}, {{1, 3}, {1, 3}, {1}, {3}}};
}

CoreScheme q_h2() {
  return {{{0, 1, 3}, {1, 2, 1}, {2, 3, 3}, {0, 3, 2}}, {{1, 2}, {1}, {1, 2}, {2}}};
}

CoreScheme q_diamond_two() {
  return {{{0, 1, 3}, {1, 2, 1}, {2, 3, 3}, {0, 3, 2}, {0, 2, 3}}, {{1, 2}, {1, 3}, {1, 2}, {2, 3}}};
}

CoreScheme q_bar_three() {
  return {{{0, 1, 1}, {0, 3, 1}, {2, 3, 2}, {1, 2, 3}, {0, 2, 3}},
          {{1, 2, 3}, {1, 2, 3}, {2, 3}, {1, 2}}};
}

CoreScheme q_g1() {
  return {{{0, 1, 1}, {0, 3, 1}, {2, 3, 2}, {1, 2, 3}, {0, 2, 2}},
          {{1, 2, 3}, {1, 2, 3}, {3}, {1, 2, 3}}};
}

CoreScheme q_g_star() {
  return {{{0, 1, 1}, {0, 3, 1}, {1, 2, 2}, {2, 3, 2}, {0, 2, 3}},
          {{1, 3}, {1, 2, 3}, {2, 3}, {1, 2, 3}}};
}

CoreScheme q_g2() {
  const std::vector<int> all{1, 2, 3};
  return {{{0, 1, 1}, {2, 3, 1}, {0, 3, 2}, {1, 2, 2}, {0, 2, 3}, {1, 3, 3}}, {all, all, all, all}};
}

// P: u = 0, x = 1, v = 2, z = 3, y = 4; cycle ux, xv, vz, zy, yu.
CoreScheme p_one() {
  return {{{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {3, 4, 2}, {0, 4, 3}}, {{3}, {2}, {2}, {1}, {3}}};
}

CoreScheme p_two() {
  CoreScheme s = p_one();
  s.leaves = {{3, 1}, {2, 3}, {2, 3}, {1, 3}, {3, 2}};
  return s;
}

CoreScheme p_g3() {
  CoreScheme s = p_two();
  s.leaves[2].push_back(1);
  return s;
}

CoreScheme p_star(int t) {
  const std::vector<int> all = range_colours(1, t);
  return {{{0, 1, 1}, {1, 2, 3}, {3, 4, 3}, {0, 4, 2}, {2, 3, 4}}, {all, all, all, all, all}};
}

CoreScheme p_g4() {
  const std::vector<int> all{1, 2, 3};
  return {{{1, 2, 1}, {1, 4, 1}, {0, 1, 2}, {3, 4, 2}, {0, 4, 3}, {2, 3, 3}},
          {all, all, all, all, all}};
}

// Schemes to try for a typed subgraph (t >= 1), in order.
std::vector<CoreScheme> typed_schemes(const TypedSubgraph& h, int value) {
  const std::vector<int> counts = h.leaf_counts();
  const int t = h.t;
  int total = 0;
  for (int c : counts) total += c;
  switch (h.family) {
    case CoreFamily::kR:
      if (t == 1 && total == 1) return {r_single_leaf()};
      if (t == 1) return {r_one()};
      if (t == 2) return {r_t_plus(2)};
      if (value == t + 1) return {r_t_plus(t)};
      return {r_g1(t)};
    case CoreFamily::kQ: {
      if (t >= 4) return {q_star(t)};
      if (h.chords.empty()) {
        if (t == 1) return {q_one()};
        if (t == 2 && value == 3) return {q_h1(), q_h2()};
        return {q_star(t)};
      }
      if (h.chords.size() == 2) return {q_g2()};
      if (t <= 2) return {q_diamond_two()};
      if (value == 4) return {q_star(3)};
      return {q_bar_three(), q_g1(), q_g_star()};
    }
    case CoreFamily::kP:
      if (t >= 4) return {p_star(t)};
      if (t == 1) return {p_one()};
      if (t == 2) return {p_two()};
      if (value == 4) return {p_star(3)};
      if (h.chords.empty()) return {p_g3()};
      return {p_g4()};
  }
  return {};
}

// Every placement of the scheme on h: sigma maps h core positions to scheme
// positions; the scheme core must be present in h and the leaves must fit.
std::vector<std::vector<int>> place_scheme(const Graph& g, const TypedSubgraph& h,
                                           const CoreScheme& scheme) {
  const int k = static_cast<int>(h.core.size());
  std::vector<int> sigma(k);
  for (int i = 0; i < k; ++i) sigma[i] = i;
  std::vector<int> position(g.order(), -1);
  for (int i = 0; i < k; ++i) position[h.core[i]] = i;
  std::vector<std::vector<int>> out;
  do {
    std::vector<int> inverse(k);
    for (int i = 0; i < k; ++i) inverse[sigma[i]] = i;
    bool ok = true;
    for (const auto& [a, b, c] : scheme.core) {
      if (!g.adjacent(h.core[inverse[a]], h.core[inverse[b]])) {
        ok = false;
        break;
      }
    }
    for (int i = 0; i < k && ok; ++i) {
      ok = h.leaves[i].size() <= scheme.leaves[sigma[i]].size();
    }
    if (!ok) continue;
    std::vector<int> colour(g.size(), 0);
    for (EdgeId e = 0; e < g.size(); ++e) {
      const Edge& edge = g.edge(e);
      const int pu = position[edge.u], pv = position[edge.v];
      if (pu >= 0 && pv >= 0) {
        int a = sigma[pu], b = sigma[pv];
        if (a > b) std::swap(a, b);
        colour[e] = scheme.fill;
        for (const auto& [sa, sb, sc] : scheme.core) {
          if (sa == a && sb == b) colour[e] = sc;
        }
      } else {
        const int p = pu >= 0 ? pu : pv;
        const Vertex leaf = pu >= 0 ? edge.v : edge.u;
        const auto& ls = h.leaves[p];
        const auto idx = std::find(ls.begin(), ls.end(), leaf) - ls.begin();
        colour[e] = scheme.leaves[sigma[p]][idx];
      }
    }
    out.push_back(std::move(colour));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

// Colourings of a typed graph suggested by the core schemes (t >= 1).
std::vector<std::vector<int>> typed_base_colourings(const Graph& g, const TypedSubgraph& h) {
  const int value = typed_lec(h);
  std::vector<std::vector<int>> out;
  if (value == 2 && h.family != CoreFamily::kR) {
    // Diamond or K4 with one leaf at a dominating vertex; at most seven edges.
    std::uint64_t states = 0;
    if (auto found = find_loose_colouring(g, 2, kDefaultOracleBudget, states)) {
      out.emplace_back(found->colours().begin(), found->colours().end());
    }
    return out;
  }
  for (const CoreScheme& s : typed_schemes(h, value)) {
    for (auto& c : place_scheme(g, h, s)) out.push_back(std::move(c));
  }
  return out;
}

EdgeColouring colour_typed(const Graph& h, CoreFamily family, const CutVertexContext& context) {
  const auto typed = recognize_type_tF(h);
  if (!typed || typed->family != family) {
    fail_precondition(std::string("graph is not of type (t,") + family_name(family) + ")");
  }
  if (typed->t == 0) return colour_two_connected(h);
  const int value = typed_lec(*typed);
  int palette = context.palette > 0 ? context.palette : value;
  for (auto [e, c] : context.fixed) {
    if (e < 0 || e >= h.size() || c <= 0) fail_precondition("invalid pre-coloured edge");
    palette = std::max(palette, c);
  }
  std::optional<std::pair<EdgeId, EdgeId>> cycle_edges;
  if (context.cut_vertex) {
    const auto it = std::find(typed->core.begin(), typed->core.end(), *context.cut_vertex);
    if (it == typed->core.end()) fail_precondition("cut vertex is not a core vertex");
    const int k = static_cast<int>(typed->core.size());
    const int i = static_cast<int>(it - typed->core.begin());
    cycle_edges = {*h.edge_between(typed->core[i], typed->core[(i + k - 1) % k]),
                   *h.edge_between(typed->core[i], typed->core[(i + 1) % k])};
    if (context.cycle_colours) {
      palette = std::max({palette, context.cycle_colours->first, context.cycle_colours->second});
    }
  }
  auto accept = [&](const std::vector<int>& c) {
    for (auto [e, colour] : context.fixed) {
      if (c[e] != colour) return false;
    }
    if (cycle_edges && context.cycle_colours) {
      const auto [b, cc] = *context.cycle_colours;
      const int p = c[cycle_edges->first], q = c[cycle_edges->second];
      if (!((p == b && q == cc) || (p == cc && q == b))) return false;
    }
    return true;
  };
  for (const auto& base : typed_base_colourings(h, *typed)) {
    if (auto fitted = rename_to_fit(base, palette, accept)) {
      EdgeColouring result(std::move(*fitted));
      require_loose(h, result, "typed colouring");
      if (result.k() != value) {
        throw Error(ErrorCode::kInternal, "typed colouring uses " + std::to_string(result.k()) +
                                              " colours, expected " + std::to_string(value));
      }
      return result;
    }
  }
  throw Error(ErrorCode::kPrecondition, "pre-coloured edges cannot be met by a typed colouring");
}

}  // namespace

// ---------------------------------------------------------------------------

EdgeColouring colour_tree(const Graph& g, Vertex start) {
  if (!is_tree(g)) fail_precondition("colour_tree needs a tree");
  if (g.size() == 0) fail_precondition("colour_tree needs at least one edge");
  if (start < 0 || start >= g.order()) fail_precondition("start vertex out of range");
  const int palette = reduced_max_weight(g).reduced_max_weight;
  std::vector<int> colour(g.size(), 0);
  std::vector<char> reached(g.order(), 0);
  std::deque<Vertex> queue{start};
  reached[start] = 1;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (const Incidence& inc : g.neighbours(v)) {
      if (reached[inc.to]) continue;
      const std::set<int> forbidden = nearby_colours(g, colour, inc.edge);
      int c = 1;
      while (forbidden.count(c)) ++c;
      if (c > palette) throw Error(ErrorCode::kInternal, "tree colouring ran out of colours");
      colour[inc.edge] = c;
      reached[inc.to] = 1;
      queue.push_back(inc.to);
    }
  }
  return EdgeColouring(std::move(colour));
}

EdgeColouring colour_two_connected(const Graph& g) {
  if (!is_two_connected(g)) fail_precondition("colour_two_connected needs a 2-connected graph");
  const SmallBlockClass cls = classify_small_block(g);
  constexpr int a = 1, b = 2, c = 3;
  std::vector<int> colour(g.size(), 0);
  auto role = [&](const std::string& name) {
    for (const auto& [label, v] : cls.mapping) {
      if (label == name) return v;
    }
    throw Error(ErrorCode::kInternal, "missing role " + name);
  };
  auto set = [&](const std::string& p, const std::string& q, int value) {
    colour[*g.edge_between(role(p), role(q))] = value;
  };
  auto fill_rest = [&](int value) {
    for (int& x : colour) {
      if (x == 0) x = value;
    }
  };
  auto colour_k2s = [&](int s) {
    for (int i = 1; i <= s; ++i) {
      const std::string vi = "v" + std::to_string(i);
      set("x", vi, i == 1 ? a : i == 2 ? b : c);
      set("y", vi, i == 1 ? b : i == 2 ? c : a);
    }
  };
  auto colour_prs = [&](int r, int s) {
    for (int i = 1; i <= r; ++i) {
      const std::string ui = "u" + std::to_string(i);
      set("x", ui, i == 1 ? a : b);
      set("y", ui, i == 1 ? b : c);
    }
    for (int j = 1; j <= s; ++j) {
      const std::string vj = "v" + std::to_string(j);
      set("x", vj, j == 1 ? c : a);
      set("z", vj, j == 1 ? a : b);
    }
    set("y", "z", c);
  };
  switch (cls.tag) {
    case BlockClassTag::kK3:
      fill_rest(1);
      break;
    case BlockClassTag::kK4:
      set("x", "v", 1);
      set("y", "w", 1);
      set("x", "w", 2);
      set("y", "v", 2);
      set("x", "y", 3);
      set("v", "w", 3);
      break;
    case BlockClassTag::kK2s:
      colour_k2s(cls.s);
      break;
    case BlockClassTag::kK2sPrime:
      colour_k2s(cls.s);
      set("x", "y", a);
      break;
    case BlockClassTag::kK2sPlus:
      colour_k2s(cls.s);
      set("v2", "v3", a);
      break;
    case BlockClassTag::kPrs:
      colour_prs(cls.r, cls.s);
      break;
    case BlockClassTag::kPrsPrime:
      colour_prs(cls.r, cls.s);
      set("x", "y", b);
      break;
    case BlockClassTag::kPrsDoublePrime:
      colour_prs(cls.r, cls.s);
      set("x", "y", c);
      set("x", "z", b);
      break;
    case BlockClassTag::kC5Bar2:
      // P'_{1,1} plus the chord u1v1.
      colour_prs(1, 1);
      set("x", "y", b);
      fill_rest(a);
      break;
    case BlockClassTag::kC5Three:
    case BlockClassTag::kC5BarThree:
    case BlockClassTag::kC5Four:
    case BlockClassTag::kK5:
      // Each contains P''_{1,1} as a spanning subgraph.
      colour_prs(1, 1);
      set("x", "y", c);
      set("x", "z", b);
      fill_rest(a);
      break;
    case BlockClassTag::kLarge: {
      const Circumference cir = circumference(g);
      const int k = cir.length;
      for (int i = 0; i < k; ++i) {
        colour[*g.edge_between(cir.cycle[i], cir.cycle[(i + 1) % k])] = i % 3 + 1;
      }
      fill_rest(1);
      break;
    }
    case BlockClassTag::kNotApplicable: {
      std::uint64_t states = 0;
      auto found = find_loose_colouring(g, 3, kDefaultOracleBudget, states);
      if (!found) throw Error(ErrorCode::kInternal, "no 3-colouring of a 2-connected block");
      colour.assign(found->colours().begin(), found->colours().end());
      break;
    }
  }
  EdgeColouring result(std::move(colour));
  require_loose(g, result, "colour_two_connected");
  return result;
}

int typed_lec(const TypedSubgraph& h) {
  const std::vector<int> n = h.leaf_counts();
  const int t = h.t;
  if (t == 0) {
    const Graph core = decorated_core_graph(h.family, h.chords, std::vector<int>(n.size(), 0));
    return oracle_min_colours(core).lec;
  }
  int total = 0;
  for (int c : n) total += c;
  if (total == 1) {
    // A single leaf at a vertex joined to the whole core keeps diameter 2.
    const int p = static_cast<int>(std::find(n.begin(), n.end(), 1) - n.begin());
    const int k = static_cast<int>(n.size());
    int core_degree = 2;
    for (auto [a, b] : h.chords) core_degree += (a == p || b == p);
    if (core_degree == k - 1) return 2;
  }
  switch (h.family) {
    case CoreFamily::kR: {
      if (t == 1) return total == 1 ? 2 : 3;
      if (t == 2) return 3;
      std::vector<int> sorted = n;
      std::sort(sorted.rbegin(), sorted.rend());
      return sorted[0] + sorted[1] >= 2 * t - 1 ? t + 1 : t;
    }
    case CoreFamily::kQ: {
      if (t >= 4) return t;
      if (h.chords.empty()) {
        if (t == 1) return 3;
        if (t == 2) return std::count(n.begin(), n.end(), 2) >= 3 ? 4 : 3;
        return 4;
      }
      if (h.chords.size() == 2 || t <= 2) return 3;
      // One chord, joining positions 0 and 2 (x and y).
      const int x = n[0], v = n[1], y = n[2], w = n[3];
      const bool both = x == 3 && y == 3;
      const bool split = ((x == 3 && y == 2) || (x == 2 && y == 3)) && v == 3 && w == 3;
      return both || split ? 4 : 3;
    }
    case CoreFamily::kP:
      if (t >= 4) return t;
      if (t <= 2) return 3;
      return h.chords.empty() && std::count(n.begin(), n.end(), 3) >= 2 ? 4 : 3;
  }
  return 0;
}

EdgeColouring colour_type_R(const Graph& h, const CutVertexContext& context) {
  return colour_typed(h, CoreFamily::kR, context);
}

EdgeColouring colour_type_Q(const Graph& h, const CutVertexContext& context) {
  return colour_typed(h, CoreFamily::kQ, context);
}

EdgeColouring colour_type_P(const Graph& h, const CutVertexContext& context) {
  return colour_typed(h, CoreFamily::kP, context);
}

EdgeColouring colour_leafy_long_cycle(const Graph& h) {
  if (!is_connected(h) || h.order() < 3) fail_precondition("leafy cycle must be connected");
  const BlockDecomposition bd = block_decomposition(h);
  int core = -1;
  for (int i = 0; i < bd.block_count(); ++i) {
    if (bd.blocks[i].trivial()) continue;
    if (core >= 0) fail_precondition("leafy cycle must have a single cycle");
    core = i;
  }
  if (core < 0) fail_precondition("leafy cycle must contain a cycle");
  const Block& block = bd.blocks[core];
  const int k = static_cast<int>(block.vertices.size());
  if (static_cast<int>(block.edges.size()) != k) fail_precondition("core block is not a cycle");
  if (k < 6) fail_precondition("core cycle shorter than 6");
  std::vector<char> on_cycle(h.order(), 0);
  for (Vertex v : block.vertices) on_cycle[v] = 1;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (!on_cycle[v] && (h.degree(v) != 1 || !on_cycle[h.neighbours(v).front().to])) {
      fail_precondition("non-cycle vertices must be leaves at cycle vertices");
    }
  }
  std::vector<int> colour(h.size(), 0);
  // Walk the cycle from its smallest vertex.
  Vertex prev = -1, cur = block.vertices.front();
  for (int i = 0; i < k; ++i) {
    for (const Incidence& inc : h.neighbours(cur)) {
      if (on_cycle[inc.to] && inc.to != prev && colour[inc.edge] == 0) {
        colour[inc.edge] = i % 3 + 1;
        prev = cur;
        cur = inc.to;
        break;
      }
    }
  }
  for (Vertex v : block.vertices) {
    int next = 1;
    for (const Incidence& inc : h.neighbours(v)) {
      if (!on_cycle[inc.to]) colour[inc.edge] = next++;
    }
  }
  EdgeColouring result(std::move(colour));
  require_loose(h, result, "colour_leafy_long_cycle");
  return result;
}

EdgeColouring colour_complete_bipartite_two(int r, int s) {
  const Graph g = complete_bipartite_graph(r, s);
  std::vector<Vertex> larger, smaller;
  for (int i = 0; i < r; ++i) larger.push_back(i);
  for (int j = 0; j < s; ++j) smaller.push_back(r + j);
  return colour_complete_bipartite_two(g, larger, smaller);
}

EdgeColouring colour_complete_bipartite_two(const Graph& g, const std::vector<Vertex>& larger,
                                            const std::vector<Vertex>& smaller) {
  const int r = static_cast<int>(larger.size());
  const int s = static_cast<int>(smaller.size());
  if (s < 2 || r < s) fail_precondition("two colours need 2 <= s <= r");
  if (s < 31 && r > (1 << s)) fail_precondition("two colours need r <= 2^s, but r > 2^s");
  constexpr int a = 1, b = 2;
  // Star vector of x_i as an s-bit word, first coordinate most significant,
  // bit set for colour b.
  std::vector<std::uint64_t> vectors;
  std::set<std::uint64_t> used;
  for (int i = 1; i <= s - 1; ++i) {
    std::uint64_t word = 0;
    for (int j = 1; j <= s; ++j) word = word << 1 | (j > i ? 1u : 0u);
    vectors.push_back(word);
    used.insert(word);
  }
  for (std::uint64_t word = 0; static_cast<int>(vectors.size()) < r; ++word) {
    if (used.insert(word).second) vectors.push_back(word);
  }
  std::vector<int> colour(g.size(), 0);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < s; ++j) {
      const auto e = g.edge_between(larger[i], smaller[j]);
      if (!e) fail_precondition("sides do not span a complete bipartite subgraph");
      colour[*e] = (vectors[i] >> (s - 1 - j) & 1) ? b : a;
    }
  }
  for (int& c : colour) {
    if (c == 0) c = a;
  }
  EdgeColouring result(std::move(colour));
  require_loose(g, result, "colour_complete_bipartite_two");
  return result;
}

// ---------------------------------------------------------------------------
// Block-cutpoint-tree sweep.

namespace {

enum class BlockKind { kLarge = 0, kSmall = 1, kHamiltonianSmall = 2, kTrivial = 3 };

class Sweep {
 public:
  Sweep(const Graph& g, int colours, std::uint64_t budget)
      : g_(g), k_(colours), budget_(budget), checker_(g), colour_(g.size(), 0) {}

  std::optional<EdgeColouring> run() {
    plan();
    triggers();
    used_count_.assign(k_ + 1, 0);
    hints_.assign(order_.size(), 0);
    if (!dfs(0)) return std::nullopt;
    return EdgeColouring(colour_);
  }

 private:
  struct Unit {
    BlockKind kind;
    int block;
    std::vector<EdgeId> group;  // whole typed graph, or the block's edges
    int begin = 0;              // positions [begin, end) in order_
    int end = 0;
  };

  const BlockDecomposition& blocks() const { return checker_.blocks(); }

  BlockKind kind_of(int b) {
    const Block& block = blocks().blocks[b];
    if (block.trivial()) return BlockKind::kTrivial;
    const Subgraph sub = edge_induced_subgraph(g_, block.edges);
    if (is_hamiltonian_small_block(sub.graph)) return BlockKind::kHamiltonianSmall;
    return circumference(sub.graph).length >= 6 ? BlockKind::kLarge : BlockKind::kSmall;
  }

  void add_unit(BlockKind kind, int b, std::vector<EdgeId> group) {
    Unit u{kind, b, std::move(group)};
    u.begin = static_cast<int>(order_.size());
    std::vector<EdgeId> fresh;
    for (EdgeId e : u.group) {
      if (!planned_[e]) fresh.push_back(e);
    }
    // Block edges first, then pendant cut-edges, each in id order.
    std::stable_sort(fresh.begin(), fresh.end(), [&](EdgeId x, EdgeId y) {
      const bool bx = blocks().block_of_edge[x] == b, by = blocks().block_of_edge[y] == b;
      return bx != by ? bx : x < y;
    });
    for (EdgeId e : fresh) {
      planned_[e] = 1;
      order_.push_back(e);
    }
    u.end = static_cast<int>(order_.size());
    if (u.end > u.begin) units_.push_back(std::move(u));
  }

  void emit(int b) {
    const Block& block = blocks().blocks[b];
    const BlockKind kind = kinds_[b];
    if (kind == BlockKind::kHamiltonianSmall) {
      std::vector<EdgeId> group = block.edges;
      for (Vertex v : block.vertices) {
        for (const Incidence& inc : g_.neighbours(v)) {
          if (kinds_[blocks().block_of_edge[inc.edge]] == BlockKind::kTrivial) group.push_back(inc.edge);
        }
      }
      std::sort(group.begin(), group.end());
      add_unit(kind, b, std::move(group));
    } else {
      add_unit(kind, b, block.edges);
    }
  }

  void plan() {
    const int nb = blocks().block_count();
    kinds_.resize(nb);
    for (int b = 0; b < nb; ++b) kinds_[b] = kind_of(b);
    planned_.assign(g_.size(), 0);
    int root = 0;
    for (int b = 0; b < nb; ++b) {
      if (kinds_[b] != BlockKind::kTrivial) {
        root = b;
        break;
      }
    }
    std::vector<char> visited(nb, 0);
    std::deque<int> queue{root};
    visited[root] = 1;
    emit(root);
    while (!queue.empty()) {
      const int b = queue.front();
      queue.pop_front();
      for (Vertex v : blocks().blocks[b].vertices) {
        if (!blocks().is_cut_vertex(v)) continue;
        std::vector<int> children;
        for (int c : blocks().blocks_of_vertex[v]) {
          if (!visited[c]) children.push_back(c);
        }
        std::stable_sort(children.begin(), children.end(), [&](int x, int y) {
          return static_cast<int>(kinds_[x]) < static_cast<int>(kinds_[y]);
        });
        for (int c : children) {
          visited[c] = 1;
          emit(c);
          queue.push_back(c);
        }
      }
    }
    position_.assign(g_.size(), -1);
    for (int i = 0; i < static_cast<int>(order_.size()); ++i) position_[order_[i]] = i;
    unit_at_.assign(order_.size(), -1);
    for (int u = 0; u < static_cast<int>(units_.size()); ++u) {
      for (int p = units_[u].begin; p < units_[u].end; ++p) unit_at_[p] = u;
    }
  }

  void triggers() {
    checks_at_.assign(order_.size(), {});
    for (Vertex a = 0; a < g_.order(); ++a) {
      for (Vertex b = a + 1; b < g_.order(); ++b) {
        if (g_.adjacent(a, b)) continue;
        int trigger = -1;
        for (int blk : checker_.blocks_between(a, b)) {
          for (EdgeId e : blocks().blocks[blk].edges) trigger = std::max(trigger, position_[e]);
        }
        checks_at_[trigger].emplace_back(a, b);
      }
    }
  }

  bool checks_pass(int p) {
    for (auto [a, b] : checks_at_[p]) {
      if (!checker_.loose(colour_, a, b)) return false;
    }
    return true;
  }

  // Candidate colourings of a unit's whole group, best first.
  std::vector<std::vector<int>> base_colourings(const Unit& u, const Subgraph& sub) {
    std::vector<std::vector<int>> out;
    if (u.kind == BlockKind::kHamiltonianSmall) {
      const auto typed = recognize_type_tF(sub.graph);
      if (typed && typed->t > 0) return typed_base_colourings(sub.graph, *typed);
      if (sub.graph.order() == 3) return {{1, 2, 3}};
    }
    const EdgeColouring base = colour_two_connected(sub.graph);
    out.emplace_back(base.colours().begin(), base.colours().end());
    return out;
  }

  // Hint colours for positions of unit u given the current partial colouring.
  void compute_hint(int ui) {
    const Unit& u = units_[ui];
    if (u.kind == BlockKind::kTrivial) {
      const EdgeId e = order_[u.begin];
      const std::set<int> near = nearby_colours(g_, colour_, e);
      int c = 1;
      while (c <= k_ && near.count(c)) ++c;
      hints_[u.begin] = c <= k_ ? c : 1;
      return;
    }
    const Subgraph sub = edge_induced_subgraph(g_, u.group);
    const auto bases = base_colourings(u, sub);
    std::vector<int> fallback;
    for (const auto& base : bases) {
      auto accept = [&](const std::vector<int>& local) {
        for (std::size_t i = 0; i < local.size(); ++i) {
          const EdgeId e = sub.to_parent_edge[i];
          if (position_[e] < u.begin && colour_[e] != local[i]) return false;
        }
        if (fallback.empty()) fallback = local;
        for (std::size_t i = 0; i < local.size(); ++i) {
          const EdgeId e = sub.to_parent_edge[i];
          if (position_[e] >= u.begin) colour_[e] = local[i];
        }
        bool ok = true;
        for (int p = u.begin; p < u.end && ok; ++p) ok = checks_pass(p);
        for (std::size_t i = 0; i < local.size(); ++i) {
          const EdgeId e = sub.to_parent_edge[i];
          if (position_[e] >= u.begin) colour_[e] = 0;
        }
        return ok;
      };
      if (auto local = rename_to_fit(base, k_, accept, 20'000)) {
        store_hint(u, sub, *local);
        return;
      }
    }
    if (!fallback.empty()) {
      store_hint(u, sub, fallback);
    } else {
      for (int p = u.begin; p < u.end; ++p) hints_[p] = 0;
    }
  }

  void store_hint(const Unit& u, const Subgraph& sub, const std::vector<int>& local) {
    for (std::size_t i = 0; i < local.size(); ++i) {
      const int p = position_[sub.to_parent_edge[i]];
      if (p >= u.begin) hints_[p] = local[i];
    }
  }

  bool dfs(int p) {
    if (++states_ > budget_) throw BudgetExceeded("sweep colouring exceeded " + std::to_string(budget_) + " states");
    if (p == static_cast<int>(order_.size())) return true;
    const int ui = unit_at_[p];
    if (units_[ui].begin == p) compute_hint(ui);
    const EdgeId e = order_[p];
    const int hint = hints_[p];
    // One representative among the colours not used so far.
    int fresh_rep = -1;
    if (hint > 0 && used_count_[hint] == 0) fresh_rep = hint;
    for (int c = 1; c <= k_ && fresh_rep < 0; ++c) {
      if (used_count_[c] == 0) fresh_rep = c;
    }
    std::vector<int> values;
    if (hint > 0) values.push_back(hint);
    for (int c = 1; c <= k_; ++c) {
      if (c == hint) continue;
      if (used_count_[c] == 0 && c != fresh_rep) continue;
      values.push_back(c);
    }
    for (int c : values) {
      if (used_count_[c] == 0 && c != fresh_rep) continue;
      colour_[e] = c;
      ++used_count_[c];
      if (checks_pass(p) && dfs(p + 1)) return true;
      --used_count_[c];
      colour_[e] = 0;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t states_ = 0;
  LooseChecker checker_;
  std::vector<int> colour_;
  std::vector<BlockKind> kinds_;
  std::vector<char> planned_;
  std::vector<EdgeId> order_;
  std::vector<int> position_;
  std::vector<Unit> units_;
  std::vector<int> unit_at_;
  std::vector<std::vector<std::pair<Vertex, Vertex>>> checks_at_;
  std::vector<int> hints_;
  std::vector<int> used_count_;
};

}  // namespace

std::optional<EdgeColouring> sweep_colouring(const Graph& g, int colours, std::uint64_t budget) {
  if (!is_connected(g) || g.order() < 2) fail_precondition("sweep needs a connected graph with an edge");
  if (colours < 1) fail_precondition("sweep needs at least one colour");
  Sweep sweep(g, colours, budget);
  auto result = sweep.run();
  if (result) {
    *result = result->compacted();
    require_loose(g, *result, "sweep colouring");
  }
  return result;
}

EdgeColouring colour_diameter_two(const Graph& g) {
  const auto diam = diameter(g);
  if (!diam || *diam != 2) fail_precondition("colour_diameter_two needs diameter 2");
  if (is_two_connected(g)) return colour_two_connected(g);
  const CutEdgeGraph cut = cut_edge_graph(g);
  const int colours = std::max(3, cut.max_degree);
  auto result = sweep_colouring(g, colours);
  if (!result) throw Error(ErrorCode::kInternal, "no diameter-2 colouring with " + std::to_string(colours) + " colours");
  return *result;
}

EdgeColouring colour_general(const Graph& g, std::uint64_t budget) {
  const auto diam = diameter(g);
  if (!diam) fail_precondition("colour_general needs a connected graph");
  if (*diam < 3) fail_precondition("colour_general needs diameter at least 3");
  if (is_tree(g)) return colour_tree(g);
  if (is_two_connected(g)) return colour_two_connected(g);
  const int colours = diameter_three_value(g);
  auto result = sweep_colouring(g, colours, budget);
  if (!result) {
    throw Error(ErrorCode::kInternal,
                "no loose colouring with " + std::to_string(colours) + " colours found by the sweep");
  }
  if (result->k() != colours) {
    throw Error(ErrorCode::kInternal, "sweep colouring uses " + std::to_string(result->k()) +
                                          " colours, expected " + std::to_string(colours));
  }
  return *result;
}

}  // namespace lec
