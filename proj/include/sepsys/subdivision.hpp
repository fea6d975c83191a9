#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sepsys/graph.hpp"

namespace sepsys {

/// Witness that a subgraph of a host is an H-subdivision.
///
/// branch_vertices[h] is the host image of pattern vertex h. branch_paths[e]
/// runs from the image of pattern edge e's lower endpoint to the image of its
/// upper endpoint. The host is not stored; verification takes it explicitly.
struct SubdivisionCert {
  Graph pattern;
  std::vector<Vertex> branch_vertices;
  std::vector<Path> branch_paths;

  /// Host edge ids of all branch paths (sorted, unique).
  std::vector<EdgeId> host_edges(const Graph& host) const;
  /// Host vertices covered by the cert (sorted, unique).
  std::vector<Vertex> host_vertices() const;
};

struct Verdict {
  bool ok = true;
  std::string reason;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

Verdict verify_subdivision(const Graph& host, const SubdivisionCert& cert);

struct BalanceProfile {
  enum class Kind { balanced, almost_balanced, unbalanced };
  std::vector<int> lengths;  // sorted
  Kind kind = Kind::balanced;
  /// Witnessing length; for almost-balanced with two candidates, the smaller.
  int ell = 0;

  bool is_balanced(int l) const;
  /// At most one branch path has length other than l. Balanced implies this.
  bool is_almost_balanced(int l) const;
};

BalanceProfile balance_profile(const SubdivisionCert& cert);

struct CliqueSearchResult {
  enum class Status { found, budget_exhausted, refuted };
  Status status = Status::refuted;
  std::optional<SubdivisionCert> cert;
  int ell = 0;
  std::uint64_t nodes = 0;
  /// Largest l examined (found at, or refuted through).
  int max_ell_examined = 0;
};

/// Search for an l-balanced K_m-subdivision, trying l = 1 (clique search) first
/// and then increasing l. Stops at the first l that succeeds. `budget` bounds
/// the number of search nodes over all l. `refuted` means every l that fits in
/// the host was exhausted; `budget_exhausted` means the search was cut short.
CliqueSearchResult find_balanced_clique_subdivision(const Graph& g, int m,
                                                    std::uint64_t budget = 2'000'000);

/// Split a K_{4t+8} cert into four vertex-disjoint K_{t+2} certs. Branch
/// vertices are taken in increasing host id and chunked; quarter r keeps the
/// branch paths inside chunk r. Throws std::invalid_argument on a wrong pattern.
std::vector<SubdivisionCert> quarter_split(const SubdivisionCert& cert, int t);

/// Pattern-edge id of the branch path joining pattern vertices a and b of a
/// complete-pattern cert, and that path oriented from a to b.
Path oriented_branch_path(const SubdivisionCert& cert, Vertex a, Vertex b);

/// K_2 certificate for a single path.
SubdivisionCert path_cert(const Path& p);

// Certificate text format:
//   pattern n m
//   u v            (m pattern edges)
//   branch h v     (n lines)
//   path e: v0 v1 ... vk   (m lines)
std::string format_cert(const SubdivisionCert& cert);
SubdivisionCert parse_cert(const std::string& text);

}  // namespace sepsys
