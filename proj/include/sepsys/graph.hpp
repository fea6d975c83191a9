#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sepsys {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Raised by every text parser in the library; carries the 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edge ids are the positions in the constructor's edge list; endpoints are
/// normalized so that u < v. Neighbor lists are sorted by vertex id, which is
/// what all deterministic tie-breaking in the library relies on.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on self-loops, parallel edges or
  /// out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {nbrs_.data() + offsets_[v], nbrs_.data() + offsets_[v + 1]};
  }
  /// Edge ids parallel to neighbors(v).
  std::span<const EdgeId> incident_edges(Vertex v) const {
    return {nbr_edges_.data() + offsets_[v], nbr_edges_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return edge_id(u, v).has_value(); }

  double average_degree() const {
    return n_ == 0 ? 0.0 : 2.0 * num_edges() / n_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Vertex> nbrs_;
  std::vector<EdgeId> nbr_edges_;
};

/// A path given by its vertex sequence. A single vertex is a path of length 0.
struct Path {
  std::vector<Vertex> vertices;

  int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  Path reversed() const { return Path{{vertices.rbegin(), vertices.rend()}}; }
  /// Edge ids along the path; throws std::invalid_argument if a step is not an edge.
  std::vector<EdgeId> edge_ids(const Graph& g) const;
  /// Distinct vertices and consecutive pairs adjacent in g.
  bool is_valid_in(const Graph& g) const;

  friend bool operator==(const Path&, const Path&) = default;
};

/// A subgraph materialized as its own Graph, keeping maps back to the parent.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> parent_vertex;  // local -> parent
  std::vector<EdgeId> parent_edge;    // local -> parent

  Vertex local_vertex(Vertex parent) const;  // -1 if absent
};

/// Subgraph spanned by the given parent edges; vertices are their endpoints in
/// increasing parent order, edges keep the given order.
Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edges);
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// Edge-list text format: '#' comments, "n m" header, then m lines "u v" with u < v.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

/// FNV-1a over the canonical edge-list text; identifies hosts in family files.
std::uint64_t host_hash(const Graph& g);
std::string host_hash_hex(const Graph& g);

}  // namespace sepsys
