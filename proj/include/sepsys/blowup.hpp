#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepsys/bitset.hpp"
#include "sepsys/family.hpp"
#include "sepsys/graph.hpp"

namespace sepsys {

/// Balanced blowup: class x holds vertices x*l .. x*l+l-1, and every pattern
/// edge xy becomes the complete bipartite graph between the two classes.
struct Blowup {
  Graph pattern;
  int class_size = 0;
  std::vector<std::vector<Vertex>> classes;
  Graph host;

  int class_of(Vertex v) const { return v / class_size; }
};

/// Throws std::invalid_argument if l < 1.
Blowup build_blowup(const Graph& h, int l);

struct CopyOfH {
  std::vector<Vertex> map;    // pattern vertex -> host vertex
  std::vector<EdgeId> edges;  // sorted host edge ids
  Bitset edge_set;
};

struct EnumerationCaps {
  int max_pattern_vertices = 4;
  int max_host_vertices = 16;
};

/// All subgraphs of g isomorphic to h, one per image edge set, ordered by
/// their sorted edge-id lists. Throws std::invalid_argument above the caps.
std::vector<CopyOfH> enumerate_h_copies(const Graph& g, const Graph& h, const EnumerationCaps& caps = {});

struct HSeparationVerdict {
  bool ok = true;
  std::size_t copies = 0;
  /// First ordered pair of copy indices (i, j) with no member containing
  /// copy i but not all of copy j.
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  explicit operator bool() const { return ok; }
};

HSeparationVerdict check_h_separation(const std::vector<CopyOfH>& copies, const SeparatingFamily& fam);
HSeparationVerdict check_h_separation(const Graph& g, const Graph& h, const SeparatingFamily& fam,
                                      const EnumerationCaps& caps = {});

/// Edge sets satisfying every constraint (copy, {e}) with e outside the copy,
/// sampled by build_constraint_family. Empty when g has no copy of h.
SeparatingFamily build_supergraph_h_separator(const Graph& g, const Graph& h, std::uint64_t seed,
                                              const EnumerationCaps& caps = {});

struct BlowupSeparator {
  Blowup blowup;
  SeparatingFamily family;
  /// "shared_index", "product" or "copies".
  std::string tier;
  std::size_t copies = 0;
  /// Per member, the selected vertex set of each class (empty for the copies tier).
  std::vector<std::vector<std::vector<Vertex>>> selections;
  /// Size of each per-class family.
  std::vector<std::size_t> class_family_sizes;
};

/// H-separating family over the n-balanced blowup of h. Each class x gets a
/// family of subsets satisfying (S, {w}) for all |S| = min(|V(h)|, n-1) and
/// w outside S; member (x, M) is the blowup induced on M in class x and on
/// every other class in full. If that fails verification the product of the
/// class families is tried, and then the copies themselves.
BlowupSeparator build_blowup_h_separator(const Graph& h, int n, std::uint64_t seed,
                                         const EnumerationCaps& caps = {});

/// Edges of the blowup induced by one vertex selection per class.
std::vector<EdgeId> induced_blowup_edges(const Blowup& b, const std::vector<std::vector<Vertex>>& selection);

}  // namespace sepsys
