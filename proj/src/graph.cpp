#include "sepsys/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace sepsys {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::vector<int> deg(n, 0);
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  std::vector<std::pair<Vertex, EdgeId>> slots(offsets_[n]);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < num_edges(); ++id) {
    const auto [u, v] = edges_[id];
    slots[fill[u]++] = {v, id};
    slots[fill[v]++] = {u, id};
  }
  nbrs_.resize(slots.size());
  nbr_edges_.resize(slots.size());
  for (int v = 0; v < n; ++v) {
    auto first = slots.begin() + offsets_[v];
    auto last = slots.begin() + offsets_[v + 1];
    std::sort(first, last);
    for (auto it = first; it != last; ++it) {
      if (it != first && it->first == (it - 1)->first)
        throw std::invalid_argument("parallel edge " + std::to_string(v) + "-" +
                                    std::to_string(it->first));
      nbrs_[it - slots.begin()] = it->first;
      nbr_edges_[it - slots.begin()] = it->second;
    }
  }
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n, [&] {
        std::vector<Edge> out;
        for (auto [u, v] : edges) out.push_back({u, v});
        return out;
      }()) {}

std::optional<EdgeId> Graph::edge_id(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return nbr_edges_[offsets_[u] + (it - nb.begin())];
}

std::vector<EdgeId> Path::edge_ids(const Graph& g) const {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    auto e = g.edge_id(vertices[i], vertices[i + 1]);
    if (!e)
      throw std::invalid_argument("path step " + std::to_string(vertices[i]) + "-" +
                                  std::to_string(vertices[i + 1]) + " is not an edge");
    out.push_back(*e);
  }
  return out;
}

bool Path::is_valid_in(const Graph& g) const {
  if (vertices.empty()) return false;
  std::vector<Vertex> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    if (!g.adjacent(vertices[i], vertices[i + 1])) return false;
  return sorted.front() >= 0 && sorted.back() < g.num_vertices();
}

Vertex Subgraph::local_vertex(Vertex parent) const {
  auto it = std::lower_bound(parent_vertex.begin(), parent_vertex.end(), parent);
  if (it == parent_vertex.end() || *it != parent) return -1;
  return static_cast<Vertex>(it - parent_vertex.begin());
}

Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edges) {
  Subgraph s;
  for (EdgeId e : edges) {
    s.parent_vertex.push_back(g.edge(e).u);
    s.parent_vertex.push_back(g.edge(e).v);
  }
  std::sort(s.parent_vertex.begin(), s.parent_vertex.end());
  s.parent_vertex.erase(std::unique(s.parent_vertex.begin(), s.parent_vertex.end()),
                        s.parent_vertex.end());
  std::vector<Edge> local;
  for (EdgeId e : edges) {
    local.push_back({s.local_vertex(g.edge(e).u), s.local_vertex(g.edge(e).v)});
    s.parent_edge.push_back(e);
  }
  s.graph = Graph(static_cast<int>(s.parent_vertex.size()), std::move(local));
  return s;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  Subgraph s;
  s.parent_vertex.assign(vertices.begin(), vertices.end());
  std::sort(s.parent_vertex.begin(), s.parent_vertex.end());
  s.parent_vertex.erase(std::unique(s.parent_vertex.begin(), s.parent_vertex.end()),
                        s.parent_vertex.end());
  std::vector<Edge> local;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    Vertex a = s.local_vertex(g.edge(e).u);
    Vertex b = s.local_vertex(g.edge(e).v);
    if (a >= 0 && b >= 0) {
      local.push_back({a, b});
      s.parent_edge.push_back(e);
    }
  }
  s.graph = Graph(static_cast<int>(s.parent_vertex.size()), std::move(local));
  return s;
}

namespace {

bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_content_line(in, line, lineno)) throw ParseError(lineno, "missing \"n m\" header");
  long long n = -1, m = -1;
  {
    std::istringstream ss(line);
    std::string rest;
    if (!(ss >> n >> m) || (ss >> rest) || n < 0 || m < 0)
      throw ParseError(lineno, "expected \"n m\" header");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, lineno))
      throw ParseError(lineno, "expected " + std::to_string(m) + " edges, found " +
                                   std::to_string(i));
    std::istringstream ss(line);
    long long u, v;
    std::string rest;
    if (!(ss >> u >> v) || (ss >> rest)) throw ParseError(lineno, "expected \"u v\"");
    if (!(0 <= u && u < v && v < n)) throw ParseError(lineno, "edge must satisfy 0 <= u < v < n");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (next_content_line(in, line, lineno)) throw ParseError(lineno, "trailing content");
  try {
    return Graph(static_cast<int>(n), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(lineno, e.what());
  }
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream ss(text);
  return parse_edge_list(ss);
}

std::string format_edge_list(const Graph& g) {
  std::string out = std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::uint64_t host_hash(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : format_edge_list(g)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string host_hash_hex(const Graph& g) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(host_hash(g)));
  return buf;
}

}  // namespace sepsys
