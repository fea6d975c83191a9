#include "sepsys/cycles.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "sepsys/connectivity.hpp"
#include "sepsys/generators.hpp"

namespace sepsys {

SubdivisionCert cycle_cert(const std::vector<Vertex>& cycle) {
  const int len = static_cast<int>(cycle.size());
  if (len < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  const int p1 = len / 3, p2 = 2 * len / 3;
  SubdivisionCert c;
  c.pattern = gen::complete(3);
  c.branch_vertices = {cycle[0], cycle[p1], cycle[p2]};
  Path a, b, m;
  for (int i = 0; i <= p1; ++i) a.vertices.push_back(cycle[i]);
  b.vertices.push_back(cycle[0]);
  for (int i = len - 1; i >= p2; --i) b.vertices.push_back(cycle[i]);
  for (int i = p1; i <= p2; ++i) m.vertices.push_back(cycle[i]);
  // Pattern edges of K_3 in order: 0-1, 0-2, 1-2.
  c.branch_paths = {std::move(a), std::move(b), std::move(m)};
  return c;
}

namespace {

struct PoolCycle {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> ids;  // sorted
  Bitset edges;
};

PoolCycle make_cycle(const Graph& g, std::vector<Vertex> vs) {
  // Rotate so the smallest vertex leads, walking towards its smaller neighbour.
  auto it = std::min_element(vs.begin(), vs.end());
  std::rotate(vs.begin(), it, vs.end());
  if (vs.back() < vs[1]) std::reverse(vs.begin() + 1, vs.end());
  PoolCycle c;
  c.edges = Bitset(static_cast<std::size_t>(g.num_edges()));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    EdgeId e = *g.edge_id(vs[i], vs[(i + 1) % vs.size()]);
    c.ids.push_back(e);
    c.edges.set(static_cast<std::size_t>(e));
  }
  std::sort(c.ids.begin(), c.ids.end());
  c.vertices = std::move(vs);
  return c;
}

std::vector<PoolCycle> cycle_pool(const Graph& g, const Bitset& ground) {
  const int n = g.num_vertices();
  std::set<std::vector<EdgeId>> seen;
  std::vector<PoolCycle> pool;
  auto add = [&](std::vector<Vertex> vs) {
    PoolCycle c = make_cycle(g, std::move(vs));
    if (!c.edges.intersects(ground)) return;
    if (seen.insert(c.ids).second) pool.push_back(std::move(c));
  };
  // Fundamental cycles of a breadth-first spanning forest.
  std::vector<int> parent(n, -1), depth(n, -1);
  std::vector<char> tree(static_cast<std::size_t>(g.num_edges()), 0);
  for (Vertex r = 0; r < n; ++r) {
    if (depth[r] >= 0) continue;
    depth[r] = 0;
    std::deque<Vertex> q{r};
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop_front();
      auto nb = g.neighbors(v);
      auto inc = g.incident_edges(v);
      for (std::size_t i = 0; i < nb.size(); ++i)
        if (depth[nb[i]] < 0) {
          depth[nb[i]] = depth[v] + 1;
          parent[nb[i]] = v;
          tree[inc[i]] = 1;
          q.push_back(nb[i]);
        }
    }
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (tree[e]) continue;
    Vertex a = g.edge(e).u, b = g.edge(e).v;
    std::vector<Vertex> up, down;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        up.push_back(a);
        a = parent[a];
      } else {
        down.push_back(b);
        b = parent[b];
      }
    }
    up.push_back(a);
    up.insert(up.end(), down.rbegin(), down.rend());
    add(std::move(up));
  }
  // Shortest cycle through each ground edge uv, and through each path w-v-u.
  const std::size_t m = static_cast<std::size_t>(g.num_edges());
  Bitset allowed(m);
  for (auto e = ground.find_first(); e != Bitset::npos; e = ground.find_next(e)) {
    const Vertex eu = g.edge(static_cast<EdgeId>(e)).u, ev = g.edge(static_cast<EdgeId>(e)).v;
    allowed.set_all();
    allowed.reset(e);
    if (auto p = shortest_path(g, eu, ev, allowed)) add(p->vertices);
    for (auto [u, v] : {std::pair{eu, ev}, std::pair{ev, eu}}) {
      allowed.set_all();
      for (EdgeId f : g.incident_edges(v)) allowed.reset(static_cast<std::size_t>(f));
      for (Vertex w : g.neighbors(v)) {
        if (w == u) continue;
        auto p = shortest_path(g, w, u, allowed);
        if (!p) continue;
        std::vector<Vertex> vs{v};
        vs.insert(vs.end(), p->vertices.begin(), p->vertices.end());
        add(std::move(vs));
      }
    }
  }
  return pool;
}

}  // namespace

SeparatingFamily build_sub_k3_system(const Graph& g, const Bitset& ground) {
  if (ground.size() != static_cast<std::size_t>(g.num_edges()))
    throw std::invalid_argument("ground set is not over the graph's edges");
  const std::size_t q = ground.size();
  auto pool = cycle_pool(g, ground);

  // unresolved[e]: ground edges not yet separated from e.
  std::vector<Bitset> unresolved(q);
  for (auto e = ground.find_first(); e != Bitset::npos; e = ground.find_next(e)) {
    unresolved[e] = ground;
    unresolved[e].reset(e);
  }
  auto score = [&](const PoolCycle& c) {
    std::size_t s = 0;
    for (auto e = c.edges.find_first(); e != Bitset::npos; e = c.edges.find_next(e))
      if (ground.test(e)) s += unresolved[e].count_and_not(c.edges);
    return s;
  };
  // Lazy greedy: scores only drop as pairs get resolved, so a stale score is
  // an upper bound and the first entry whose fresh score still leads wins.
  struct Entry {
    std::size_t score;
    std::size_t index;
  };
  auto ahead = [&](const Entry& x, const Entry& y) {
    if (x.score != y.score) return x.score > y.score;
    const auto& a = pool[x.index].ids;
    const auto& b = pool[y.index].ids;
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };
  auto heap_cmp = [&](const Entry& x, const Entry& y) { return ahead(y, x); };
  std::vector<Entry> heap;
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (std::size_t s = score(pool[i])) heap.push_back({s, i});
  std::make_heap(heap.begin(), heap.end(), heap_cmp);
  std::vector<std::size_t> picked;
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), heap_cmp);
    Entry top = heap.back();
    heap.pop_back();
    top.score = score(pool[top.index]);
    if (top.score == 0) continue;
    if (!heap.empty() && ahead(heap.front(), top)) {
      heap.push_back(top);
      std::push_heap(heap.begin(), heap.end(), heap_cmp);
      continue;
    }
    picked.push_back(top.index);
    const Bitset& c = pool[top.index].edges;
    for (auto e = c.find_first(); e != Bitset::npos; e = c.find_next(e))
      if (ground.test(e)) unresolved[e] &= c;
  }
  std::vector<EdgeId> singles;
  for (auto e = ground.find_first(); e != Bitset::npos; e = ground.find_next(e))
    if (unresolved[e].any()) singles.push_back(static_cast<EdgeId>(e));

  SeparatingFamily fam(g);
  fam.metadata["constructor"] = "sub_k3_greedy";
  if (picked.size() + singles.size() > ground.count()) {
    for (auto e = ground.find_first(); e != Bitset::npos; e = ground.find_next(e))
      fam.add_edge(static_cast<EdgeId>(e));
    fam.metadata["cycles"] = "0";
    fam.metadata["fallback"] = "single_edges";
    return fam;
  }
  for (std::size_t i : picked) fam.add_cert(g, cycle_cert(pool[i].vertices));
  for (EdgeId e : singles) fam.add_edge(e);
  fam.metadata["cycles"] = std::to_string(picked.size());
  return fam;
}

}  // namespace sepsys
