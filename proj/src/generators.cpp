#include "sepsys/generators.hpp"

#include <stdexcept>

namespace sepsys::gen {

Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph(n, std::move(e));
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  e.push_back({0, n - 1});
  return Graph(n, std::move(e));
}

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, std::move(e));
}

Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph(leaves + 1, std::move(e));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.push_back({u, a + v});
  return Graph(a + b, std::move(e));
}

Graph grid(int rows, int cols) {
  std::vector<Edge> e;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) e.push_back({id(r, c), id(r + 1, c)});
    }
  return Graph(rows * cols, std::move(e));
}

Graph prism() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph petersen() {
  return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7},
                    {3, 8}, {4, 9}, {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
}

Graph theta() {
  return Graph(5, {{0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}});
}

Graph two_triangles() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}); }

double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Graph gnp(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (unit_draw(rng) < p) e.push_back({u, v});
  return Graph(n, std::move(e));
}

Graph random_connected(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) {
    int u = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
    has[u][v] = 1;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (has[u][v] || unit_draw(rng) < p) e.push_back({u, v});
  return Graph(n, std::move(e));
}

Graph random_tree(int n, std::uint64_t seed) { return random_connected(n, 0.0, seed); }

Graph with_pendant_path(const Graph& g, Vertex attach, int length) {
  std::vector<Edge> e(g.edges().begin(), g.edges().end());
  const int n = g.num_vertices();
  Vertex prev = attach;
  for (int i = 0; i < length; ++i) {
    e.push_back({prev, n + i});
    prev = n + i;
  }
  return Graph(n + length, std::move(e));
}

}  // namespace sepsys::gen
