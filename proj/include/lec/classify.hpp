#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lec/families.hpp"
#include "lec/graph.hpp"

namespace lec {

enum class BlockClassTag {
  kK3,
  kK4,
  kK2s,
  kK2sPrime,
  kK2sPlus,
  kPrs,
  kPrsPrime,
  kPrsDoublePrime,
  kC5Bar2,
  kC5Three,
  kC5BarThree,
  kC5Four,
  kK5,
  kLarge,
  // 2-connected with circumference 3..5 but isomorphic to no listed graph.
  kNotApplicable,
};

/// "K3", "K2s", "Prs_prime", "C5bar^2", "Large", ...
const char* tag_name(BlockClassTag tag);

struct SmallBlockClass {
  BlockClassTag tag = BlockClassTag::kNotApplicable;
  int r = 0;  // K2s*: s in `s`; Prs*: r and s
  int s = 0;
  int circumference = 0;
  /// Role label of the reference graph -> vertex of the classified block.
  std::vector<std::pair<std::string, Vertex>> mapping;
  /// Other names of the same graph, e.g. "K2s_plus(3)" for C5bar^2 or "C5"
  /// for Prs(1,1).
  std::vector<std::string> aliases;

  /// Tag with parameters, e.g. "K2s(3)" or "Prs_prime(2,1)".
  std::string name() const;
};

/// The reference graph of a small class (tag with its parameters).
Graph reference_graph(BlockClassTag tag, int r = 0, int s = 0);

/// Isomorphism from `pattern` onto `target` (pattern vertex -> target vertex),
/// or nullopt.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& pattern, const Graph& target);

/// Classifies a 2-connected graph by circumference: a listed small class with
/// an explicit vertex mapping, Large for circumference >= 6, NotApplicable
/// when a circumference 3..5 graph matches no listed class. Throws when `b` is
/// not 2-connected.
SmallBlockClass classify_small_block(const Graph& b);

/// True for the Hamiltonian small blocks on at most five vertices (K3, C4,
/// the diamond, K4 and C5 with any chords), the blocks that are coloured
/// together with their pendant cut-edges.
bool is_hamiltonian_small_block(const Graph& b);

/// A graph of type (t, F): a core cycle C3, C4 or C5 (with chords) and
/// leaves hanging at core vertices.
struct TypedSubgraph {
  CoreFamily family = CoreFamily::kR;
  int t = 0;
  /// Core vertices in the role order of core_roles(family).
  std::vector<Vertex> core;
  /// Chords of the core cycle as pairs of core positions (first < second).
  std::vector<std::pair<int, int>> chords;
  /// Leaves per core position, sorted.
  std::vector<std::vector<Vertex>> leaves;

  std::vector<int> leaf_counts() const;
  bool has_chord(int a, int b) const;
};

/// Recognizes h as a typed subgraph. The role labelling is canonical: among
/// the admissible cycle orders (for C4 with one chord the chord joins x and
/// y) the one with the lexicographically largest leaf-count vector is chosen,
/// ties broken by vertex ids.
std::optional<TypedSubgraph> recognize_type_tF(const Graph& h);

const char* family_name(CoreFamily family);

}  // namespace lec
