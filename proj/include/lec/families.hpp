#pragma once

#include <array>
#include <utility>
#include <vector>

#include "lec/graph.hpp"

namespace lec {

/// Reference graph constructors. Vertex labels carry role names (x, y, v1, ...)
/// so that generated graphs read naturally in edge-list output.

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);                 // K_{1,s}; centre is vertex 0
Graph complete_bipartite_graph(int r, int s); // x1..xr then y1..ys
Graph petersen_graph();

/// K_{2,s} on x, y, v1..vs; optionally with the edge xy (K'_{2,s}) or the
/// edge v2v3 (K+_{2,s}, s >= 3).
Graph k2s_graph(int s);
Graph k2s_prime_graph(int s);
Graph k2s_plus_graph(int s);

/// P_{r,s} on x, y, z, u1..ur, v1..vs. `extra` adds xy (1) or xy and xz (2).
Graph prs_graph(int r, int s, int extra = 0);

/// Five-vertex Hamiltonian graphs with two or more chords.
enum class C5Variant { kBar2, kThree, kBarThree, kFour, kComplete };
Graph c5_variant_graph(C5Variant variant);

/// Core shape of a leaf-decorated small block.
enum class CoreFamily { kR, kQ, kP };

/// Number of core vertices (3, 4 or 5).
int core_size(CoreFamily family);

/// Core vertex roles in cycle order: R = x,y,z; Q = x,v,y,w; P = u,x,v,z,y.
const std::vector<const char*>& core_roles(CoreFamily family);

/// Core graph plus leaves. `chords` are pairs of core positions that are not
/// consecutive on the core cycle; `leaves[i]` is the number of leaves at core
/// position i.
Graph decorated_core_graph(CoreFamily family, const std::vector<std::pair<int, int>>& chords,
                           const std::vector<int>& leaves);

/// R_t, Q_t, P_t: t leaves at every core vertex, no chords.
Graph r_t_graph(int t);
Graph q_t_graph(int t);
Graph p_t_graph(int t);

/// Cycle C_k with leaves[i] leaves at cycle vertex i.
Graph leafy_cycle_graph(int k, const std::vector<int>& leaves);
Graph leafy_cycle_graph(int k, int t);

}  // namespace lec
