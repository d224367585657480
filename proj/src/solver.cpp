#include "lec/solver.hpp"

#include <algorithm>

#include "lec/colouring.hpp"
#include "lec/decomposition.hpp"
#include "lec/error.hpp"
#include "lec/verify.hpp"

namespace lec {

const char* exception_name(ExceptionTag tag) {
  switch (tag) {
    case ExceptionTag::kC4Triple: return "dia3-C4-triple";
    case ExceptionTag::kC5Pair: return "C5-pair";
    case ExceptionTag::kC4Single: return "C4-single";
    case ExceptionTag::kC3DegreeSum: return "C3-degree-sum";
    case ExceptionTag::kDiamond: return "diamond";
  }
  return "?";
}

namespace {

const char* exception_reason(ExceptionTag tag) {
  switch (tag) {
    case ExceptionTag::kC4Triple: return "typed-exception(i)";
    case ExceptionTag::kC5Pair: return "typed-exception(1)";
    case ExceptionTag::kC4Single: return "typed-exception(2)";
    case ExceptionTag::kC3DegreeSum: return "typed-exception(3)";
    case ExceptionTag::kDiamond: return "typed-exception(4)";
  }
  return "?";
}

int block_degree(const Graph& g, const Block& block, Vertex v) {
  int d = 0;
  for (const Incidence& inc : g.neighbours(v)) {
    d += std::binary_search(block.edges.begin(), block.edges.end(), inc.edge);
  }
  return d;
}

std::optional<ExceptionTag> block_exception(const Graph& g, const Block& block,
                                            const CutEdgeGraph& cut) {
  const int nv = static_cast<int>(block.vertices.size());
  const int ne = static_cast<int>(block.edges.size());
  const int rw = cut.reduced_max_weight.value_or(0);
  auto count_deg = [&](int d) {
    return std::count_if(block.vertices.begin(), block.vertices.end(),
                         [&](Vertex v) { return cut.degree[v] == d; });
  };
  if (cut.max_degree <= 2) {
    // Any rw here: a pendant 2-path can lift rw(C) to 3 and the C4 still
    // forces a fourth colour (exhaustive search agrees).
    if (nv == 4 && ne == 4 && count_deg(2) >= 3) return ExceptionTag::kC4Triple;
    return std::nullopt;
  }
  if (nv == 5 && ne == 5 && rw == 3 && count_deg(3) >= 2) return ExceptionTag::kC5Pair;
  if (nv == 4 && ne == 4 && rw == 3 && count_deg(3) >= 1) return ExceptionTag::kC4Single;
  if (nv == 3) {
    std::vector<int> d;
    for (Vertex v : block.vertices) d.push_back(cut.degree[v]);
    std::sort(d.rbegin(), d.rend());
    if (d[0] + d[1] >= 2 * rw - 1) return ExceptionTag::kC3DegreeSum;
  }
  if (nv == 4 && ne == 5 && rw == 3) {
    int chord_sum = 0, total = 0;
    for (Vertex v : block.vertices) {
      total += cut.degree[v];
      if (block_degree(g, block, v) == 3) chord_sum += cut.degree[v];
    }
    if (chord_sum == 6 || total >= 11) return ExceptionTag::kDiamond;
  }
  return std::nullopt;
}

}  // namespace

std::optional<ExceptionTag> exceptional_case(const Graph& g) {
  const auto diam = diameter(g);
  if (!diam) fail_precondition("exceptional_case needs a connected graph");
  if (*diam < 3) fail_precondition("exceptional_case needs diameter at least 3");
  const BlockDecomposition bd = block_decomposition(g);
  const CutEdgeGraph cut = cut_edge_graph(g, bd);
  if (cut.empty()) return std::nullopt;
  for (const Block& block : bd.blocks) {
    if (block.trivial()) continue;
    if (auto tag = block_exception(g, block, cut)) return tag;
  }
  return std::nullopt;
}

int diameter_three_value(const Graph& g) {
  const auto tag = exceptional_case(g);
  const CutEdgeGraph cut = cut_edge_graph(g);
  const int bump = tag ? 1 : 0;
  if (cut.max_degree <= 2) return 3 + bump;
  return *cut.reduced_max_weight + bump;
}

LecBounds lec_bounds(const Graph& g) {
  if (!is_connected(g)) fail_precondition("lec_bounds needs a connected graph");
  if (g.order() < 2) fail_precondition("lec_bounds needs at least two vertices");
  const BasicFamily basic = recognize_basic_family(g);
  switch (basic.kind) {
    case BasicFamily::Kind::kComplete:
      return {1, 1};
    case BasicFamily::Kind::kTree: {
      const int rw = reduced_max_weight(g).reduced_max_weight;
      return {rw, rw};
    }
    case BasicFamily::Kind::kCompleteBipartite: {
      if (basic.s == 1) return {basic.r, basic.r};
      const bool two = basic.s >= 31 || basic.r <= (1 << basic.s);
      return two ? LecBounds{2, 2} : LecBounds{3, 3};
    }
    case BasicFamily::Kind::kNone:
      break;
  }
  const int diam = *diameter(g);
  if (diam >= 3) {
    const int value = is_two_connected(g) ? 3 : diameter_three_value(g);
    return {value, value};
  }
  if (is_two_connected(g)) return {2, 3};
  // With diameter 2 and a cut vertex every bridge is a pendant edge at that
  // vertex, and the leaves of a star need pairwise distinct colours.
  const CutEdgeGraph cut = cut_edge_graph(g);
  return {std::max(2, cut.max_degree), std::max(3, cut.max_degree)};
}

namespace {

LecCertificate exact(int value, EdgeColouring colouring, std::string reason, std::string branch,
                     std::string provenance) {
  LecCertificate c;
  c.value = value;
  c.lo = c.hi = value;
  c.colouring = std::move(colouring);
  c.reason = std::move(reason);
  c.branch = std::move(branch);
  c.provenance = std::move(provenance);
  return c;
}

void check_certificate(const Graph& g, const LecCertificate& c) {
  const Verification v = verify_loose_connected(g, c.colouring);
  if (!v.accepted) throw Error(ErrorCode::kInternal, "certificate colouring is not loose");
  if (c.colouring.k() != c.hi) {
    throw Error(ErrorCode::kInternal, "certificate colouring uses " + std::to_string(c.colouring.k()) +
                                          " colours, bound is " + std::to_string(c.hi));
  }
  if (c.lo > c.hi) throw Error(ErrorCode::kInternal, "certificate bounds are inverted");
}

OracleOptions oracle_options(const SolverOptions& options) {
  OracleOptions o;
  o.max_edges = options.max_oracle_edges;
  o.budget = options.budget;
  o.workers = options.workers;
  return o;
}

LecCertificate two_connected_small_diameter(const Graph& g, const SolverOptions& options) {
  const EdgeColouring base = colour_two_connected(g);
  if (base.k() == 2) return exact(2, base, "non-complete", "two-connected", "block-scheme");
  if (g.size() <= options.max_oracle_edges) {
    const Lec2Decision d = decide_lec2(g, options.budget, options.workers);
    if (d.outcome == Lec2Decision::Outcome::kYes) {
      return exact(2, *d.colouring, "non-complete", "two-connected", "oracle");
    }
    if (d.outcome == Lec2Decision::Outcome::kNo) {
      return exact(base.k(), base, "oracle", "two-connected", "block-scheme");
    }
  }
  if (auto sides = find_spanning_two_colourable_bipartite(g)) {
    return exact(2, colour_complete_bipartite_two(g, sides->first, sides->second), "non-complete",
                 "two-connected", "spanning-bipartite");
  }
  LecCertificate c;
  c.lo = 2;
  c.hi = base.k();
  c.colouring = base;
  c.reason = "non-complete";
  c.branch = "two-connected";
  c.provenance = "block-scheme";
  return c;
}

LecCertificate diameter_two_composite(const Graph& g, const SolverOptions& options) {
  const CutEdgeGraph cut = cut_edge_graph(g);
  const EdgeColouring base = colour_diameter_two(g);
  const int lo = std::max(2, cut.max_degree);
  if (base.k() == lo) {
    return exact(lo, base, lo == 2 ? "non-complete" : "cut-vertex-star", "diameter-two", "sweep");
  }
  if (g.size() <= options.max_oracle_edges) {
    try {
      OracleResult r = oracle_min_colours(g, oracle_options(options));
      if (r.lec == base.k()) return exact(r.lec, base, "oracle", "diameter-two", "sweep");
      return exact(r.lec, r.colouring, "oracle", "diameter-two", "oracle");
    } catch (const BudgetExceeded&) {
      // fall through to bounds
    }
  }
  LecCertificate c;
  c.lo = lo;
  c.hi = base.k();
  c.colouring = base;
  c.reason = lo == 2 ? "non-complete" : "cut-vertex-star";
  c.branch = "diameter-two";
  c.provenance = "sweep";
  return c;
}

}  // namespace

LecCertificate lec(const Graph& g, const SolverOptions& options) {
  if (g.order() < 2) fail_precondition("lec needs at least two vertices");
  if (!is_connected(g)) fail_precondition("lec needs a connected graph");
  if (options.max_oracle_edges < 0 || options.budget == 0 || options.workers < 1) {
    throw Error(ErrorCode::kInvalidArgument, "invalid solver options");
  }
  LecCertificate result;
  const BasicFamily basic = recognize_basic_family(g);
  const bool tree = is_tree(g);
  if (basic.kind == BasicFamily::Kind::kComplete) {
    result = exact(1, EdgeColouring(std::vector<int>(g.size(), 1)), "complete", "complete", "single-colour");
  } else if (tree) {
    const int rw = reduced_max_weight(g).reduced_max_weight;
    result = exact(rw, colour_tree(g), "tree-rw", "tree", "tree-sweep");
  } else if (basic.kind == BasicFamily::Kind::kCompleteBipartite) {
    const bool two = basic.s >= 31 || basic.r <= (1 << basic.s);
    if (two) {
      result = exact(2, colour_complete_bipartite_two(g, basic.larger_side, basic.smaller_side),
                     "non-complete", "complete-bipartite", "binary-stars");
    } else {
      result = exact(3, colour_two_connected(g), "bipartite-pigeonhole", "complete-bipartite",
                     "block-scheme");
    }
  } else {
    const int diam = *diameter(g);
    if (is_two_connected(g)) {
      if (diam >= 3) {
        result = exact(3, colour_two_connected(g), "diameter>=3", "two-connected", "block-scheme");
      } else {
        result = two_connected_small_diameter(g, options);
      }
    } else if (diam >= 3) {
      const auto tag = exceptional_case(g);
      const int value = diameter_three_value(g);
      const CutEdgeGraph cut = cut_edge_graph(g);
      std::string reason = tag ? exception_reason(*tag) : cut.max_degree <= 2 ? "diameter>=3" : "cut-edge-rw";
      result = exact(value, colour_general(g), std::move(reason), "diameter-three", "sweep");
    } else {
      result = diameter_two_composite(g, options);
    }
  }
  check_certificate(g, result);
  return result;
}

}  // namespace lec
