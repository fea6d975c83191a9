#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sepsys/family.hpp"
#include "sepsys/graph.hpp"

namespace sepsys {

enum class TorsoKind { three_connected, cycle, single_real_edge };

const char* to_string(TorsoKind k);

/// Torso edge between two bag vertices; `real` is the host edge id, or empty
/// for a virtual edge.
struct TorsoEdge {
  Vertex u;
  Vertex v;
  std::optional<EdgeId> real;
  bool is_virtual() const { return !real; }
};

struct Bag {
  std::vector<Vertex> vertices;  // sorted host ids
  TorsoKind kind = TorsoKind::single_real_edge;
  std::vector<TorsoEdge> torso;  // sorted by (u, v), u < v
  int parent = -1;
  std::vector<Vertex> adhesion;  // intersection with the parent bag
};

/// Torso of one bag as a standalone graph on local ids 0..|bag|-1, ordered
/// like Bag::vertices. Edge i of `graph` is Bag::torso[i].
struct Torso {
  Graph graph;
  std::vector<Vertex> to_host;
  std::vector<std::optional<EdgeId>> real;
};

/// Bags are numbered so that every parent precedes its children; bag 0 is
/// the root. Enumerating bags in index order therefore keeps every prefix
/// connected in the tree.
struct TutteDecomposition {
  std::vector<Bag> bags;

  int size() const { return static_cast<int>(bags.size()); }
  Torso torso(int bag) const;
  /// Sum of bag sizes.
  long long total_size() const;
  std::vector<std::vector<int>> children() const;
};

/// Throws std::invalid_argument unless g is connected with at least 2 vertices.
TutteDecomposition build_tutte(const Graph& g);

struct TutteVerdict {
  bool ok = true;
  std::string clause;  // violated clause name when !ok
  std::string detail;
  explicit operator bool() const { return ok; }
};

/// Clauses, checked in this order: "tree", "edge coverage", "vertex subtree",
/// "adhesion ≤ 2", "torso edges", "torso classification", "virtual edge paths".
TutteVerdict verify_tutte(const Graph& g, const TutteDecomposition& d);

/// Maps a family over torso(bag).graph to a family over g. Real single edges
/// are kept, virtual single edges dropped, and every virtual edge on a branch
/// path is replaced by a shortest path (lexicographically first) through the
/// part of the decomposition hanging off that edge.
/// Throws std::invalid_argument if `members` is not over that torso.
SeparatingFamily realize_members(const Graph& g, const TutteDecomposition& d, int bag,
                                 const SeparatingFamily& members);

/// Host path replacing the torso edge u-v of `bag` (the edge itself if real).
Path realize_torso_edge(const Graph& g, const TutteDecomposition& d, int bag, Vertex u, Vertex v);

std::string format_tutte(const TutteDecomposition& d);
std::string tutte_to_dot(const TutteDecomposition& d);

}  // namespace sepsys
