#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "lec/edge_colouring.hpp"
#include "lec/graph.hpp"
#include "lec/oracle.hpp"

namespace lec {

/// Block configurations that push lec one above the cut-edge bound on graphs
/// of diameter at least 3.
enum class ExceptionTag {
  kC4Triple,     // Delta(C) <= 2 and a C4 block with three vertices of deg_C = 2
  kC5Pair,       // C5 block, two vertices with deg_C = rw(C) = 3
  kC4Single,     // C4 block, a vertex with deg_C = rw(C) = 3
  kC3DegreeSum,  // triangle, two vertices with deg_C sum >= 2 rw(C) - 1
  kDiamond,      // diamond, rw(C) = 3, chord ends sum to 6 or all four sum >= 11
};

/// "dia3-C4-triple", "C5-pair", "C4-single", "C3-degree-sum", "diamond".
const char* exception_name(ExceptionTag tag);

/// First satisfied exception over the blocks in canonical order. Requires a
/// connected graph of diameter at least 3.
std::optional<ExceptionTag> exceptional_case(const Graph& g);

/// lec of a connected graph of diameter at least 3: 3 or 4 when
/// Delta(C(G)) <= 2, otherwise rw(C(G)) or rw(C(G)) + 1.
int diameter_three_value(const Graph& g);

struct LecBounds {
  int lo = 0;
  int hi = 0;
};

/// Bounds from the structure alone, without exhaustive search. Requires a
/// connected graph on at least two vertices.
LecBounds lec_bounds(const Graph& g);

struct LecCertificate {
  std::optional<int> value;  // set when lo == hi
  int lo = 0;
  int hi = 0;
  EdgeColouring colouring;   // verified, uses exactly `hi` colours
  std::string reason;        // justification of `lo`
  std::string branch;        // which dispatch branch fired
  std::string provenance;    // how the colouring was obtained
};

struct SolverOptions {
  int max_oracle_edges = kDefaultOracleMaxEdges;
  std::uint64_t budget = kDefaultOracleBudget;
  int workers = 1;
};

/// lec(g) with a verified colouring. Exact except on diameter-2 graphs that
/// are too large for the exhaustive search, where bounds are returned.
/// Requires a connected graph on at least two vertices.
LecCertificate lec(const Graph& g, const SolverOptions& options = {});

}  // namespace lec
