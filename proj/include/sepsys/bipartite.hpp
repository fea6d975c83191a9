#pragma once

#include <cstdint>
#include <vector>

#include "sepsys/family.hpp"
#include "sepsys/graph.hpp"

namespace sepsys {

/// Mirrored-bit biclique members separating the complete bipartite graph
/// left x right. Indices run over max(|left|, |right|); for each bit b the
/// left set with bit b (and its complement) is paired with the right set of
/// the same indices and with that set's complement. Members with an empty
/// side are skipped; a 1 x 1 input yields itself.
std::vector<BicliqueSides> knn_members(const std::vector<Vertex>& left, const std::vector<Vertex>& right);

/// Separating biclique system of K_{n,n} (left side 0..n-1, right n..2n-1).
SeparatingFamily build_knn_system(int n);

struct Constraint {
  std::vector<int> include;
  std::vector<int> exclude;
};

struct ConstraintConfig {
  /// Random draws before falling back to tailored sets.
  std::uint64_t max_draws = 20000;
};

struct ConstraintFamily {
  std::vector<std::vector<int>> sets;  // sorted members
  std::uint64_t draws = 0;
  /// Constraints settled by a tailored set include + (universe - exclude).
  std::size_t fallback_sets = 0;
  double include_probability = 0.0;
};

/// Family of subsets of {0..universe-1} such that every constraint (V, W) has
/// a member S with V inside S and W disjoint from S. Sets are sampled with
/// include probability avg|V| / k and kept when they settle a new
/// constraint. Throws std::invalid_argument on unequal constraint sizes,
/// overlapping V and W, or elements outside the universe.
ConstraintFamily build_constraint_family(int universe, const std::vector<Constraint>& constraints,
                                         std::uint64_t seed, const ConstraintConfig& cfg = {});

bool satisfies(const std::vector<int>& set, const Constraint& c);

struct BicliqueCover {
  std::vector<BicliqueSides> bicliques;  // balanced, edge-disjoint
  std::vector<EdgeId> leftovers;
};

/// Greedy cover of E(g) by balanced bicliques with sides >= s_min, plus the
/// edges left over. Throws std::invalid_argument if s_min < 1.
BicliqueCover extract_biclique_cover(const Graph& g, int s_min);

/// Biclique cover with every cover element separated by knn_members and
/// leftovers added as K_{1,1} members.
SeparatingFamily build_biclique_separating_system(const Graph& g, int s_min);

/// Placements of K_{t,s} covering K_{n,n}: row blocks of t and column blocks
/// of s, the last block of each wrapping around. Right side ids are n..2n-1.
/// Throws std::invalid_argument unless 1 <= t <= s <= n.
std::vector<BicliqueSides> tile_biclique(int n, int t, int s);

}  // namespace sepsys
