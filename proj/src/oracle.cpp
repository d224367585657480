#include "lec/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <deque>
#include <mutex>
#include <thread>

#include "lec/error.hpp"

namespace lec {

namespace {

using Mask = std::uint64_t;

constexpr std::size_t kMaxPathMasks = 4'000'000;

// Path constraints of one vertex pair, in search-position bit space.
struct PairConstraint {
  std::vector<std::pair<int, int>> two_paths;  // both edges must differ
  std::vector<Mask> long_paths;                // needs >= 3 colours
};

// Edges ordered breadth-first from a maximum-degree vertex, so that edges
// sharing a vertex are close together in the search.
std::vector<EdgeId> search_order(const Graph& g) {
  Vertex root = 0;
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) > g.degree(root)) root = v;
  }
  std::vector<char> placed(g.size(), 0), seen(g.order(), 0);
  std::vector<EdgeId> order;
  std::deque<Vertex> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (const Incidence& inc : g.neighbours(v)) {
      if (!placed[inc.edge]) {
        placed[inc.edge] = 1;
        order.push_back(inc.edge);
      }
      if (!seen[inc.to]) {
        seen[inc.to] = 1;
        queue.push_back(inc.to);
      }
    }
  }
  return order;
}

class PathCollector {
 public:
  PathCollector(const Graph& g, const std::vector<int>& position, std::size_t& total)
      : g_(g), position_(position), total_(total), on_path_(g.order(), 0) {}

  PairConstraint collect(Vertex u, Vertex v) {
    constraint_ = {};
    target_ = v;
    on_path_[u] = 1;
    walk(u, 0, 0, -1);
    on_path_[u] = 0;
    auto& masks = constraint_.long_paths;
    std::sort(masks.begin(), masks.end(), [](Mask a, Mask b) {
      const int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<Mask> minimal;
    for (Mask m : masks) {
      const bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                         [m](Mask k) { return (k & m) == k; });
      if (!dominated) minimal.push_back(m);
    }
    masks = std::move(minimal);
    return std::move(constraint_);
  }

 private:
  void walk(Vertex x, Mask mask, int len, int first_bit) {
    for (const Incidence& inc : g_.neighbours(x)) {
      if (on_path_[inc.to]) continue;
      const int bit = position_[inc.edge];
      const Mask next = mask | (Mask{1} << bit);
      if (inc.to == target_) {
        if (len + 1 == 2) {
          constraint_.two_paths.emplace_back(first_bit, bit);
        } else if (len + 1 >= 3) {
          constraint_.long_paths.push_back(next);
        }
        if (++total_ > kMaxPathMasks) {
          throw Error(ErrorCode::kInvalidArgument, "oracle: too many simple paths to enumerate");
        }
        continue;
      }
      on_path_[inc.to] = 1;
      walk(inc.to, next, len + 1, len == 0 ? bit : first_bit);
      on_path_[inc.to] = 0;
    }
  }

  const Graph& g_;
  const std::vector<int>& position_;
  std::size_t& total_;
  std::vector<char> on_path_;
  Vertex target_ = 0;
  PairConstraint constraint_;
};

struct Problem {
  int m = 0;
  std::vector<EdgeId> order;
  std::vector<std::vector<PairConstraint>> checks_at;  // by completing position
};

Problem build_problem(const Graph& g) {
  if (g.size() > 64) {
    throw Error(ErrorCode::kInvalidArgument, "exhaustive colouring search supports at most 64 edges");
  }
  Problem p;
  p.m = g.size();
  p.order = search_order(g);
  std::vector<int> position(g.size(), 0);
  for (int i = 0; i < p.m; ++i) position[p.order[i]] = i;
  p.checks_at.assign(p.m, {});
  std::size_t total = 0;
  PathCollector collector(g, position, total);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) continue;
      PairConstraint pc = collector.collect(u, v);
      Mask all = 0;
      for (auto [a, b] : pc.two_paths) all |= (Mask{1} << a) | (Mask{1} << b);
      for (Mask m : pc.long_paths) all |= m;
      const int trigger = 63 - std::countl_zero(all);
      p.checks_at[trigger].push_back(std::move(pc));
    }
  }
  return p;
}

class Search {
 public:
  Search(const Problem& p, int k, std::uint64_t budget, std::atomic<std::uint64_t>& states)
      : p_(p), k_(k), budget_(budget), states_(states), colour_(p.m, 0), classes_(k, 0) {}

  // Extends the fixed prefix to the least accepted canonical colouring.
  bool run(const std::vector<int>& prefix) {
    std::fill(classes_.begin(), classes_.end(), 0);
    int used = 0;
    for (int i = 0; i < static_cast<int>(prefix.size()); ++i) {
      assign(i, prefix[i]);
      used = std::max(used, prefix[i] + 1);
      if (!checks_pass(i)) return false;
    }
    return dfs(static_cast<int>(prefix.size()), used);
  }

  // Canonical prefixes of the given length that pass their checks, in
  // lexicographic order.
  void prefixes(int depth, std::vector<std::vector<int>>& out) {
    std::fill(classes_.begin(), classes_.end(), 0);
    std::vector<int> current;
    enumerate(0, 0, depth, current, out);
  }

  const std::vector<int>& colours() const { return colour_; }

 private:
  void assign(int i, int c) {
    colour_[i] = c;
    classes_[c] |= Mask{1} << i;
  }
  void unassign(int i) { classes_[colour_[i]] &= ~(Mask{1} << i); }

  bool pair_ok(const PairConstraint& pc) const {
    for (auto [a, b] : pc.two_paths) {
      if (colour_[a] != colour_[b]) return true;
    }
    for (Mask m : pc.long_paths) {
      int distinct = 0;
      for (int c = 0; c < k_; ++c) {
        if (classes_[c] & m) {
          if (++distinct == 3) return true;
        }
      }
    }
    return false;
  }

  bool checks_pass(int i) const {
    for (const PairConstraint& pc : p_.checks_at[i]) {
      if (!pair_ok(pc)) return false;
    }
    return true;
  }

  void count_state() {
    if (states_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) {
      throw BudgetExceeded("colouring search exceeded " + std::to_string(budget_) + " states");
    }
  }

  bool dfs(int i, int used) {
    count_state();
    if (i == p_.m) return true;
    const int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      assign(i, c);
      if (checks_pass(i) && dfs(i + 1, std::max(used, c + 1))) return true;
      unassign(i);
    }
    return false;
  }

  void enumerate(int i, int used, int depth, std::vector<int>& current,
                 std::vector<std::vector<int>>& out) {
    if (i == depth) {
      out.push_back(current);
      return;
    }
    const int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      assign(i, c);
      current.push_back(c);
      if (checks_pass(i)) enumerate(i + 1, std::max(used, c + 1), depth, current, out);
      current.pop_back();
      unassign(i);
    }
  }

  const Problem& p_;
  int k_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& states_;
  std::vector<int> colour_;
  std::vector<Mask> classes_;
};

EdgeColouring to_edge_colouring(const Problem& p, const std::vector<int>& by_position) {
  std::vector<int> colours(p.m, 0);
  for (int i = 0; i < p.m; ++i) colours[p.order[i]] = by_position[i] + 1;
  return EdgeColouring(std::move(colours));
}

std::optional<EdgeColouring> solve(const Problem& p, int k, std::uint64_t budget,
                                   std::atomic<std::uint64_t>& states, int workers) {
  if (p.m == 0) return EdgeColouring{};
  if (workers <= 1 || p.m < 8) {
    Search search(p, k, budget, states);
    if (search.run({})) return to_edge_colouring(p, search.colours());
    return std::nullopt;
  }
  std::vector<std::vector<int>> jobs;
  Search(p, k, budget, states).prefixes(std::min(p.m - 1, 10), jobs);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{jobs.size()};
  std::vector<int> best_colours;
  std::mutex mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    Search search(p, k, budget, states);
    while (true) {
      const std::size_t j = next.fetch_add(1);
      if (j >= jobs.size() || j > best.load()) return;
      try {
        if (search.run(jobs[j])) {
          std::lock_guard lock(mutex);
          if (j < best.load()) {
            best = j;
            best_colours = search.colours();
          }
          return;
        }
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!failure) failure = std::current_exception();
        best = 0;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  if (best.load() < jobs.size()) return to_edge_colouring(p, best_colours);
  return std::nullopt;
}

}  // namespace

std::optional<EdgeColouring> find_loose_colouring(const Graph& g, int k, std::uint64_t budget,
                                                  std::uint64_t& states, int workers) {
  if (!is_connected(g)) fail_precondition("colouring search on a disconnected graph");
  const Problem p = build_problem(g);
  std::atomic<std::uint64_t> counter{states};
  auto result = solve(p, k, budget, counter, workers);
  states = counter.load();
  return result;
}

OracleResult oracle_min_colours(const Graph& g, const OracleOptions& options) {
  if (g.order() < 2) fail_precondition("oracle needs at least two vertices");
  if (!is_connected(g)) fail_precondition("oracle on a disconnected graph");
  if (g.size() > options.max_edges) {
    throw Error(ErrorCode::kInvalidArgument,
                "oracle: graph has " + std::to_string(g.size()) + " edges, limit is " +
                    std::to_string(options.max_edges));
  }
  const Problem p = build_problem(g);
  std::atomic<std::uint64_t> states{0};
  for (int k = 1; k <= g.size(); ++k) {
    if (auto c = solve(p, k, options.budget, states, options.workers)) {
      OracleResult result;
      result.lec = k;
      result.colouring = std::move(*c);
      result.states = states.load();
      return result;
    }
  }
  throw Error(ErrorCode::kInternal, "oracle: no loose colouring with m colours");
}

Lec2Decision decide_lec2(const Graph& g, std::uint64_t budget, int workers) {
  if (!is_connected(g)) fail_precondition("decide_lec2 on a disconnected graph");
  if (is_complete(g)) fail_precondition("decide_lec2 on a complete graph");
  Lec2Decision decision;
  const auto diam = diameter(g);
  if (diam && *diam >= 3) {
    decision.outcome = Lec2Decision::Outcome::kNo;
    return decision;
  }
  try {
    std::uint64_t states = 0;
    auto c = find_loose_colouring(g, 2, budget, states, workers);
    decision.states = states;
    if (c) {
      decision.outcome = Lec2Decision::Outcome::kYes;
      decision.colouring = std::move(c);
    } else {
      decision.outcome = Lec2Decision::Outcome::kNo;
    }
  } catch (const BudgetExceeded&) {
    decision.outcome = Lec2Decision::Outcome::kBudgetExceeded;
    decision.states = budget;
  }
  return decision;
}

}  // namespace lec
