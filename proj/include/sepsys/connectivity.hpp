#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sepsys/bitset.hpp"
#include "sepsys/graph.hpp"

namespace sepsys {

/// Component id per vertex (-1 for removed vertices) and the component count.
struct Components {
  std::vector<int> id;
  int count = 0;
};

/// Connected components of g minus the vertices flagged in `removed`
/// (empty span = nothing removed). Component ids follow the lowest vertex.
Components connected_components(const Graph& g, std::span<const char> removed = {});
bool is_connected(const Graph& g);

/// Cut vertices of g minus `removed`, ascending.
std::vector<Vertex> articulation_points(const Graph& g, std::span<const char> removed = {});

struct ConnectivityVerdict {
  enum class Reason { none, too_few_vertices, disconnected, cut_vertex, two_separator };
  bool three_connected = false;
  Reason reason = Reason::none;
  /// A smallest vertex set whose removal disconnects g (empty when the reason
  /// is disconnection or too few vertices).
  std::vector<Vertex> separator;
};

ConnectivityVerdict is_three_connected(const Graph& g);

/// k pairwise vertex-disjoint paths, each from a source to a target and
/// internally avoiding sources, targets and `blocked`. A source or target set
/// of one vertex is shared by all paths, which are then disjoint apart from
/// it. Routing is max-flow with unit vertex capacities and breadth-first
/// augmentation; ties go to the lowest vertex id. Returns nullopt iff fewer than k such paths exist.
/// Throws std::invalid_argument if sources and targets intersect or k < 1.
std::optional<std::vector<Path>> disjoint_paths(const Graph& g, std::span<const Vertex> sources,
                                                std::span<const Vertex> targets, int k,
                                                std::span<const Vertex> blocked = {});

/// Shortest u-v path using only edges in `allowed`, lexicographically smallest
/// vertex sequence among shortest ones.
std::optional<Path> shortest_path(const Graph& g, Vertex u, Vertex v, const Bitset& allowed);

struct SeparatorInfo {
  std::vector<Vertex> vertices;  // sorted, size 1 or 2
  /// At least two components of g - S are adjacent to every vertex of S.
  bool tight = false;
  bool totally_nested = false;
};

/// Brute-force oracle: every vertex set S with |S| <= 2 and g - S disconnected,
/// ordered by size then lexicographically. A separator is flagged totally
/// nested when it is tight and nested with every other tight separator of size
/// at most two, where nestedness is decided on the separations (A, B) with
/// connected sides directly. Refuses graphs above `limit` vertices.
std::vector<SeparatorInfo> two_separators_bruteforce(const Graph& g, int limit = 20);

/// Whether the separations induced by two separators can be chosen nested.
bool separators_nested(const Graph& g, std::span<const Vertex> s, std::span<const Vertex> t);

}  // namespace sepsys
