#pragma once

#include <cstdint>
#include <optional>

#include "lec/edge_colouring.hpp"
#include "lec/graph.hpp"

namespace lec {

inline constexpr int kDefaultOracleMaxEdges = 14;
inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;

struct OracleOptions {
  int max_edges = kDefaultOracleMaxEdges;
  std::uint64_t budget = kDefaultOracleBudget;  // visited search states, all k together
  int workers = 1;
};

struct OracleResult {
  int lec = 0;
  EdgeColouring colouring;
  std::uint64_t states = 0;
};

/// Exact lec(G) by exhaustive search over canonical colourings for
/// k = 1, 2, 3, ...
///
/// Edges are searched in a fixed breadth-first order and a colouring is
/// canonical when each new colour is the smallest unused one. The returned
/// colouring is the lexicographically least accepted canonical colouring in
/// that order, independent of `workers`. Throws lec::Error when m exceeds
/// `max_edges` or the graph is disconnected, and lec::BudgetExceeded when the
/// state budget runs out.
OracleResult oracle_min_colours(const Graph& g, const OracleOptions& options = {});

struct Lec2Decision {
  enum class Outcome { kYes, kNo, kBudgetExceeded };
  Outcome outcome = Outcome::kNo;
  std::optional<EdgeColouring> colouring;  // set for kYes
  std::uint64_t states = 0;
};

/// Whether some 2-colouring makes g loose edge-connected. Graphs of diameter
/// at least 3 are answered "no" without search. Requires a connected,
/// non-complete graph with at most 64 edges.
Lec2Decision decide_lec2(const Graph& g, std::uint64_t budget = kDefaultOracleBudget,
                         int workers = 1);

/// Search for a loose colouring with at most k colours; used by the oracle and
/// by decide_lec2. Returns nullopt when none exists; throws
/// lec::BudgetExceeded. `states` accumulates visited states.
std::optional<EdgeColouring> find_loose_colouring(const Graph& g, int k, std::uint64_t budget,
                                                  std::uint64_t& states, int workers = 1);

}  // namespace lec
