#include "sepsys/tutte.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sepsys/connectivity.hpp"

namespace sepsys {

const char* to_string(TorsoKind k) {
  switch (k) {
    case TorsoKind::three_connected: return "three_connected";
    case TorsoKind::cycle: return "cycle";
    case TorsoKind::single_real_edge: return "single_real_edge";
  }
  return "?";
}

namespace {

// Edge sets of the biconnected components, in discovery order.
std::vector<std::vector<EdgeId>> blocks(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::vector<EdgeId>> out;
  std::vector<EdgeId> estack;
  struct Frame {
    Vertex v;
    EdgeId via;
    std::size_t next;
  };
  std::vector<Frame> stack;
  int timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto inc = g.incident_edges(f.v);
      if (f.next < inc.size()) {
        EdgeId e = inc[f.next];
        Vertex w = g.neighbors(f.v)[f.next];
        ++f.next;
        if (e == f.via) continue;
        if (disc[w] < 0) {
          estack.push_back(e);
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else if (disc[w] < disc[f.v]) {
          estack.push_back(e);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      Frame& p = stack.back();
      low[p.v] = std::min(low[p.v], low[done.v]);
      if (low[done.v] >= disc[p.v]) {
        std::vector<EdgeId> blk;
        while (true) {
          EdgeId e = estack.back();
          estack.pop_back();
          blk.push_back(e);
          if (e == done.via) break;
        }
        std::sort(blk.begin(), blk.end());
        out.push_back(std::move(blk));
      }
    }
  }
  return out;
}

// Multigraph edge inside a split component: id >= 0 is a host edge,
// id < 0 is virtual edge number -id - 1.
struct SEdge {
  Vertex u;
  Vertex v;
  int id;
};

enum class NodeType { bond, polygon, rigid };

struct SplitComp {
  std::vector<SEdge> edges;
  NodeType type = NodeType::rigid;
};

std::vector<Vertex> comp_vertices(const std::vector<SEdge>& edges) {
  std::vector<Vertex> vs;
  for (const auto& e : edges) {
    vs.push_back(e.u);
    vs.push_back(e.v);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

// Either classifies `c` as terminal or splits it at a separation pair.
std::optional<std::pair<SplitComp, SplitComp>> try_split(SplitComp& c, int& next_virtual) {
  auto vs = comp_vertices(c.edges);
  const int nv = static_cast<int>(vs.size());
  auto local = [&](Vertex x) {
    return static_cast<Vertex>(std::lower_bound(vs.begin(), vs.end(), x) - vs.begin());
  };
  if (nv == 2) {
    c.type = NodeType::bond;
    return std::nullopt;
  }
  std::vector<int> deg(nv, 0);
  std::map<std::pair<Vertex, Vertex>, int> mult;
  for (const auto& e : c.edges) {
    ++deg[local(e.u)];
    ++deg[local(e.v)];
    ++mult[{local(e.u), local(e.v)}];
  }
  if (static_cast<int>(c.edges.size()) == nv &&
      std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; })) {
    c.type = NodeType::polygon;
    return std::nullopt;
  }
  std::vector<Edge> simple;
  for (const auto& [p, k] : mult) simple.push_back({p.first, p.second});
  Graph s(nv, simple);

  std::optional<std::pair<Vertex, Vertex>> pair;
  for (const auto& [p, k] : mult)
    if (k >= 2) {
      pair = p;
      break;
    }
  std::vector<char> removed(nv, 0);
  for (Vertex a = 0; a < nv && !pair; ++a) {
    removed[a] = 1;
    auto aps = articulation_points(s, removed);
    if (!aps.empty()) pair = std::make_pair(std::min(a, aps.front()), std::max(a, aps.front()));
    removed[a] = 0;
  }
  if (!pair) {
    c.type = NodeType::rigid;
    return std::nullopt;
  }
  auto [a, b] = *pair;
  removed[a] = removed[b] = 1;
  auto cc = connected_components(s, removed);
  SplitComp first, rest;
  for (const auto& e : c.edges) {
    Vertex lu = local(e.u), lv = local(e.v);
    Vertex inner = (lu != a && lu != b) ? lu : lv;
    bool in_first = inner != a && inner != b && cc.id[inner] == 0;
    (in_first ? first : rest).edges.push_back(e);
  }
  int vid = -(next_virtual++) - 1;
  first.edges.push_back({vs[a], vs[b], vid});
  rest.edges.push_back({vs[a], vs[b], vid});
  return std::make_pair(std::move(first), std::move(rest));
}

struct Node {
  NodeType type;
  std::vector<SEdge> edges;
  std::vector<Vertex> vertices;
};

// Triconnected components of a biconnected multigraph with >= 3 vertices.
std::vector<Node> triconnected_components(std::vector<SEdge> block_edges, int& next_virtual) {
  std::vector<SplitComp> done;
  std::vector<SplitComp> work;
  work.push_back({std::move(block_edges), NodeType::rigid});
  while (!work.empty()) {
    SplitComp c = std::move(work.back());
    work.pop_back();
    if (auto parts = try_split(c, next_virtual)) {
      work.push_back(std::move(parts->second));
      work.push_back(std::move(parts->first));
    } else {
      done.push_back(std::move(c));
    }
  }
  // Merge adjacent bonds with bonds and polygons with polygons.
  const int nc = static_cast<int>(done.size());
  std::vector<int> uf(nc);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  std::map<int, std::vector<int>> holders;
  for (int i = 0; i < nc; ++i)
    for (const auto& e : done[i].edges)
      if (e.id < 0) holders[e.id].push_back(i);
  for (const auto& [vid, hs] : holders) {
    if (hs.size() != 2) throw std::logic_error("virtual edge without two holders");
    if (done[hs[0]].type == done[hs[1]].type && done[hs[0]].type != NodeType::rigid)
      uf[find(hs[0])] = find(hs[1]);
  }
  std::map<int, int> node_of_root;
  std::vector<Node> nodes;
  for (int i = 0; i < nc; ++i) {
    int r = find(i);
    auto [it, fresh] = node_of_root.try_emplace(r, static_cast<int>(nodes.size()));
    if (fresh) nodes.push_back({done[i].type, {}, {}});
    for (const auto& e : done[i].edges) {
      if (e.id < 0) {
        const auto& hs = holders[e.id];
        if (find(hs[0]) == find(hs[1])) continue;
      }
      nodes[it->second].edges.push_back(e);
    }
  }
  for (auto& nd : nodes) nd.vertices = comp_vertices(nd.edges);
  return nodes;
}

struct TmpBag {
  std::vector<Vertex> vertices;
  TorsoKind kind;
  std::vector<TorsoEdge> torso;
  std::vector<int> adj;
};

void link(std::vector<TmpBag>& bags, int a, int b) {
  bags[a].adj.push_back(b);
  bags[b].adj.push_back(a);
}

// Adds the bags of one block; returns their ids.
std::vector<int> add_block(const Graph& g, const std::vector<EdgeId>& blk, std::vector<TmpBag>& bags,
                           int& next_virtual) {
  if (blk.size() == 1) {
    const Edge& e = g.edge(blk[0]);
    bags.push_back({{e.u, e.v}, TorsoKind::single_real_edge, {{e.u, e.v, blk[0]}}, {}});
    return {static_cast<int>(bags.size()) - 1};
  }
  std::vector<SEdge> edges;
  for (EdgeId id : blk) edges.push_back({g.edge(id).u, g.edge(id).v, id});
  auto nodes = triconnected_components(std::move(edges), next_virtual);

  std::vector<int> bag_of(nodes.size(), -1);
  std::vector<int> ids;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].type == NodeType::bond) continue;
    bag_of[i] = static_cast<int>(bags.size());
    ids.push_back(bag_of[i]);
    TmpBag b;
    b.vertices = nodes[i].vertices;
    b.kind = nodes[i].type == NodeType::polygon ? TorsoKind::cycle : TorsoKind::three_connected;
    for (const auto& e : nodes[i].edges)
      if (e.id >= 0) b.torso.push_back({e.u, e.v, e.id});
    bags.push_back(std::move(b));
  }
  std::map<int, std::vector<int>> holders;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (const auto& e : nodes[i].edges)
      if (e.id < 0) holders[e.id].push_back(static_cast<int>(i));
  auto pair_of = [](const SEdge& e) { return std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v)); };

  for (const auto& [vid, hs] : holders) {
    const Node& x = nodes[hs[0]];
    const Node& y = nodes[hs[1]];
    if (x.type == NodeType::bond || y.type == NodeType::bond) continue;
    auto it = std::find_if(x.edges.begin(), x.edges.end(), [&](const SEdge& e) { return e.id == vid; });
    auto [u, v] = pair_of(*it);
    bags[bag_of[hs[0]]].torso.push_back({u, v, std::nullopt});
    bags[bag_of[hs[1]]].torso.push_back({u, v, std::nullopt});
    link(bags, bag_of[hs[0]], bag_of[hs[1]]);
  }
  // A bond becomes a star of links between its neighbours; its real edge, if
  // any, is owned by the lowest-numbered neighbour.
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& p = nodes[i];
    if (p.type != NodeType::bond) continue;
    std::optional<EdgeId> real;
    std::vector<int> nbrs;
    for (const auto& e : p.edges) {
      if (e.id >= 0) {
        real = e.id;
        continue;
      }
      const auto& hs = holders[e.id];
      int other = hs[0] == static_cast<int>(i) ? hs[1] : hs[0];
      if (nodes[other].type == NodeType::bond) throw std::logic_error("adjacent bonds after merge");
      nbrs.push_back(bag_of[other]);
    }
    std::sort(nbrs.begin(), nbrs.end());
    Vertex u = p.vertices[0], v = p.vertices[1];
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      bags[nbrs[k]].torso.push_back({u, v, k == 0 ? real : std::nullopt});
      if (k > 0) link(bags, nbrs[0], nbrs[k]);
    }
  }
  return ids;
}

std::vector<Vertex> intersect(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

TutteDecomposition build_tutte(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 2) throw std::invalid_argument("Tutte decomposition needs at least 2 vertices");
  if (!is_connected(g)) throw std::invalid_argument("Tutte decomposition needs a connected graph");

  std::vector<TmpBag> bags;
  int next_virtual = 0;
  auto blks = blocks(g);
  std::vector<std::vector<int>> block_bags;
  std::vector<std::vector<int>> blocks_at(n);
  for (std::size_t b = 0; b < blks.size(); ++b) {
    block_bags.push_back(add_block(g, blks[b], bags, next_virtual));
    std::set<Vertex> vs;
    for (EdgeId e : blks[b]) {
      vs.insert(g.edge(e).u);
      vs.insert(g.edge(e).v);
    }
    for (Vertex v : vs) blocks_at[v].push_back(static_cast<int>(b));
  }
  auto rep = [&](int blk, Vertex c) {
    for (int id : block_bags[blk])
      if (std::binary_search(bags[id].vertices.begin(), bags[id].vertices.end(), c)) return id;
    throw std::logic_error("cut vertex missing from its block");
  };
  // Join blocks along the block-cut tree.
  std::vector<char> seen(blks.size(), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    int b = queue.front();
    queue.pop_front();
    std::set<Vertex> vs;
    for (EdgeId e : blks[b]) {
      vs.insert(g.edge(e).u);
      vs.insert(g.edge(e).v);
    }
    for (Vertex c : vs)
      for (int other : blocks_at[c])
        if (!seen[other]) {
          seen[other] = 1;
          link(bags, rep(b, c), rep(other, c));
          queue.push_back(other);
        }
  }

  // Renumber breadth-first from bag 0.
  const int k = static_cast<int>(bags.size());
  std::vector<int> order, parent(k, -1), new_id(k, -1);
  order.push_back(0);
  new_id[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto adj = bags[order[i]].adj;
    std::sort(adj.begin(), adj.end());
    for (int w : adj)
      if (new_id[w] < 0) {
        new_id[w] = static_cast<int>(order.size());
        parent[w] = order[i];
        order.push_back(w);
      }
  }
  if (static_cast<int>(order.size()) != k) throw std::logic_error("decomposition tree is disconnected");

  TutteDecomposition d;
  d.bags.resize(k);
  for (int old = 0; old < k; ++old) {
    Bag& b = d.bags[new_id[old]];
    b.vertices = bags[old].vertices;
    b.kind = bags[old].kind;
    b.torso = bags[old].torso;
    for (auto& e : b.torso)
      if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(b.torso.begin(), b.torso.end(),
              [](const TorsoEdge& x, const TorsoEdge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
    if (parent[old] >= 0) {
      b.parent = new_id[parent[old]];
      b.adhesion = intersect(b.vertices, bags[parent[old]].vertices);
    }
  }
  return d;
}

Torso TutteDecomposition::torso(int bag) const {
  const Bag& b = bags.at(static_cast<std::size_t>(bag));
  Torso t;
  t.to_host = b.vertices;
  auto local = [&](Vertex x) {
    auto it = std::lower_bound(b.vertices.begin(), b.vertices.end(), x);
    if (it == b.vertices.end() || *it != x) throw std::invalid_argument("torso edge leaves its bag");
    return static_cast<Vertex>(it - b.vertices.begin());
  };
  std::vector<Edge> edges;
  for (const auto& e : b.torso) {
    edges.push_back({local(e.u), local(e.v)});
    t.real.push_back(e.real);
  }
  t.graph = Graph(static_cast<int>(b.vertices.size()), std::move(edges));
  return t;
}

long long TutteDecomposition::total_size() const {
  long long s = 0;
  for (const auto& b : bags) s += static_cast<long long>(b.vertices.size());
  return s;
}

std::vector<std::vector<int>> TutteDecomposition::children() const {
  std::vector<std::vector<int>> ch(bags.size());
  for (std::size_t i = 0; i < bags.size(); ++i)
    if (bags[i].parent >= 0 && bags[i].parent < size()) ch[bags[i].parent].push_back(static_cast<int>(i));
  return ch;
}

namespace {

TutteVerdict fail(std::string clause, std::string detail) {
  return {false, std::move(clause), std::move(detail)};
}

bool contains(const std::vector<Vertex>& sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

using VPair = std::pair<Vertex, Vertex>;

VPair ordered(Vertex u, Vertex v) { return {std::min(u, v), std::max(u, v)}; }

std::string pair_text(Vertex u, Vertex v) { return std::to_string(u) + "-" + std::to_string(v); }

// Bags reachable from `start` in the tree without entering `blocked`.
std::vector<int> tree_side(const std::vector<std::vector<int>>& adj, int start, int blocked) {
  std::vector<char> seen(adj.size(), 0);
  std::vector<int> out{start}, stack{start};
  seen[start] = 1;
  if (blocked >= 0) seen[blocked] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
        stack.push_back(y);
      }
  }
  return out;
}

std::vector<std::vector<int>> tree_adjacency(const TutteDecomposition& d) {
  std::vector<std::vector<int>> adj(d.bags.size());
  for (std::size_t i = 0; i < d.bags.size(); ++i)
    if (d.bags[i].parent >= 0) {
      adj[i].push_back(d.bags[i].parent);
      adj[d.bags[i].parent].push_back(static_cast<int>(i));
    }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

Bitset owned_real_edges(const Graph& g, const TutteDecomposition& d, const std::vector<int>& side) {
  Bitset b(static_cast<std::size_t>(g.num_edges()));
  for (int t : side)
    for (const auto& e : d.bags[t].torso)
      if (e.real && *e.real >= 0 && *e.real < g.num_edges()) b.set(static_cast<std::size_t>(*e.real));
  return b;
}

}  // namespace

TutteVerdict verify_tutte(const Graph& g, const TutteDecomposition& d) {
  const int n = g.num_vertices();
  const int k = d.size();

  // tree
  if (k == 0) return fail("tree", "no bags");
  int roots = 0;
  for (int i = 0; i < k; ++i) {
    const Bag& b = d.bags[i];
    if (b.parent == -1) {
      ++roots;
    } else if (b.parent < 0 || b.parent >= k || b.parent == i) {
      return fail("tree", "bag " + std::to_string(i) + " has an invalid parent");
    }
    if (b.vertices.empty()) return fail("tree", "bag " + std::to_string(i) + " is empty");
    for (std::size_t j = 0; j < b.vertices.size(); ++j) {
      if (b.vertices[j] < 0 || b.vertices[j] >= n)
        return fail("tree", "bag " + std::to_string(i) + " has a vertex out of range");
      if (j > 0 && b.vertices[j - 1] >= b.vertices[j])
        return fail("tree", "bag " + std::to_string(i) + " vertices are not sorted and distinct");
    }
  }
  if (roots != 1) return fail("tree", std::to_string(roots) + " roots");
  for (int i = 0; i < k; ++i) {
    int x = i;
    for (int steps = 0; x != -1; ++steps) {
      if (steps > k) return fail("tree", "parent links contain a cycle");
      x = d.bags[x].parent;
    }
  }
  for (int i = 0; i < k; ++i) {
    const Bag& b = d.bags[i];
    if (b.parent < 0) continue;
    if (b.adhesion != intersect(b.vertices, d.bags[b.parent].vertices))
      return fail("tree", "adhesion of bag " + std::to_string(i) + " is not the intersection with its parent");
  }

  // edge coverage
  std::vector<std::vector<int>> bags_of(n);
  for (int i = 0; i < k; ++i)
    for (Vertex v : d.bags[i].vertices) bags_of[v].push_back(i);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge(e);
    bool covered = false;
    for (int t : bags_of[u])
      if (contains(d.bags[t].vertices, v)) {
        covered = true;
        break;
      }
    if (!covered) return fail("edge coverage", "edge " + pair_text(u, v) + " lies in no bag");
  }

  // vertex subtree
  for (Vertex v = 0; v < n; ++v) {
    if (bags_of[v].empty()) return fail("vertex subtree", "vertex " + std::to_string(v) + " lies in no bag");
    int tops = 0;
    for (int t : bags_of[v]) {
      int p = d.bags[t].parent;
      if (p < 0 || !contains(d.bags[p].vertices, v)) ++tops;
    }
    if (tops != 1)
      return fail("vertex subtree", "bags containing vertex " + std::to_string(v) + " are not connected");
  }

  // adhesion <= 2
  for (int i = 0; i < k; ++i)
    if (d.bags[i].adhesion.size() > 2)
      return fail("adhesion ≤ 2", "link " + std::to_string(d.bags[i].parent) + "-" + std::to_string(i) +
                                      " has adhesion " + std::to_string(d.bags[i].adhesion.size()));

  // torso edges
  auto adj = tree_adjacency(d);
  std::vector<int> real_count(static_cast<std::size_t>(g.num_edges()), 0);
  for (int t = 0; t < k; ++t) {
    const Bag& b = d.bags[t];
    std::set<VPair> adhesion_pairs;
    for (int s : adj[t]) {
      const auto& a = (d.bags[s].parent == t) ? d.bags[s].adhesion : b.adhesion;
      if (a.size() == 2) adhesion_pairs.insert({a[0], a[1]});
    }
    std::set<VPair> expected = adhesion_pairs;
    for (std::size_t i = 0; i < b.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < b.vertices.size(); ++j)
        if (g.adjacent(b.vertices[i], b.vertices[j])) expected.insert({b.vertices[i], b.vertices[j]});
    std::set<VPair> actual;
    for (const auto& e : b.torso) {
      const std::string where = " in torso " + std::to_string(t);
      if (!contains(b.vertices, e.u) || !contains(b.vertices, e.v) || e.u == e.v)
        return fail("torso edges", "edge " + pair_text(e.u, e.v) + " does not join two bag vertices" + where);
      VPair p = ordered(e.u, e.v);
      if (!actual.insert(p).second) return fail("torso edges", "duplicate edge " + pair_text(p.first, p.second) + where);
      if (e.real) {
        auto id = g.edge_id(p.first, p.second);
        if (!id || *id != *e.real)
          return fail("torso edges", "real tag of " + pair_text(p.first, p.second) + " is not its host edge" + where);
        ++real_count[*id];
      } else if (!adhesion_pairs.count(p)) {
        return fail("torso edges", "virtual edge " + pair_text(p.first, p.second) + " is not an adhesion pair" + where);
      }
    }
    if (actual != expected)
      return fail("torso edges", "torso " + std::to_string(t) + " is not the bag completed along its adhesion sets");
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (real_count[e] != 1)
      return fail("torso edges", "edge " + pair_text(g.edge(e).u, g.edge(e).v) + " is real in " +
                                     std::to_string(real_count[e]) + " torsos");

  // torso classification
  for (int t = 0; t < k; ++t) {
    const Bag& b = d.bags[t];
    Torso tor = d.torso(t);
    const Graph& h = tor.graph;
    bool ok = false;
    switch (b.kind) {
      case TorsoKind::three_connected:
        ok = is_three_connected(h).three_connected;
        break;
      case TorsoKind::cycle: {
        ok = h.num_vertices() >= 3 && h.num_edges() == h.num_vertices() && is_connected(h);
        for (Vertex v = 0; ok && v < h.num_vertices(); ++v) ok = h.degree(v) == 2;
        break;
      }
      case TorsoKind::single_real_edge:
        ok = h.num_vertices() == 2 && h.num_edges() == 1 && tor.real[0].has_value();
        break;
    }
    if (!ok)
      return fail("torso classification",
                  "torso " + std::to_string(t) + " is not " + std::string(to_string(b.kind)));
  }

  // virtual edge paths
  for (int c = 0; c < k; ++c) {
    const Bag& b = d.bags[c];
    if (b.adhesion.size() != 2) continue;
    Vertex u = b.adhesion[0], v = b.adhesion[1];
    for (auto side : {tree_side(adj, c, b.parent), tree_side(adj, b.parent, c)}) {
      if (!shortest_path(g, u, v, owned_real_edges(g, d, side)))
        return fail("virtual edge paths", "no " + pair_text(u, v) + " path on one side of link " +
                                              std::to_string(b.parent) + "-" + std::to_string(c));
    }
  }
  return {};
}

Path realize_torso_edge(const Graph& g, const TutteDecomposition& d, int bag, Vertex u, Vertex v) {
  const Bag& b = d.bags.at(static_cast<std::size_t>(bag));
  VPair p = ordered(u, v);
  auto it = std::find_if(b.torso.begin(), b.torso.end(),
                         [&](const TorsoEdge& e) { return ordered(e.u, e.v) == p; });
  if (it == b.torso.end())
    throw std::invalid_argument("no torso edge " + pair_text(u, v) + " in bag " + std::to_string(bag));
  if (it->real) return Path{{u, v}};
  auto adj = tree_adjacency(d);
  std::vector<int> side;
  for (int s : adj[bag]) {
    const auto& a = (d.bags[s].parent == bag) ? d.bags[s].adhesion : b.adhesion;
    if (a.size() == 2 && a[0] == p.first && a[1] == p.second) {
      auto part = tree_side(adj, s, bag);
      side.insert(side.end(), part.begin(), part.end());
    }
  }
  auto path = shortest_path(g, p.first, p.second, owned_real_edges(g, d, side));
  if (!path) throw std::logic_error("virtual edge " + pair_text(u, v) + " has no realizing path");
  return p.first == u ? *path : path->reversed();
}

SeparatingFamily realize_members(const Graph& g, const TutteDecomposition& d, int bag,
                                 const SeparatingFamily& members) {
  Torso t = d.torso(bag);
  if (members.edge_count() != static_cast<std::size_t>(t.graph.num_edges()) ||
      members.host_hash() != host_hash_hex(t.graph))
    throw std::invalid_argument("family is not over the torso of bag " + std::to_string(bag));
  SeparatingFamily out(g);
  out.metadata = members.metadata;
  std::map<VPair, Path> cache;
  auto route = [&](Vertex lx, Vertex ly) -> Path {
    Vertex x = t.to_host[lx], y = t.to_host[ly];
    VPair p = ordered(x, y);
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, realize_torso_edge(g, d, bag, p.first, p.second)).first;
    return x == p.first ? it->second : it->second.reversed();
  };
  auto route_ids = [&](EdgeId te, std::vector<EdgeId>& ids) {
    const Edge& e = t.graph.edge(te);
    auto r = route(e.u, e.v).edge_ids(g);
    ids.insert(ids.end(), r.begin(), r.end());
  };
  for (const auto& m : members.members()) {
    std::visit(
        [&](const auto& data) {
          using T = std::decay_t<decltype(data)>;
          if constexpr (std::is_same_v<T, SingleEdge>) {
            if (t.real[data.id]) out.add_edge(*t.real[data.id]);
          } else if constexpr (std::is_same_v<T, SubdivisionCert>) {
            SubdivisionCert c;
            c.pattern = data.pattern;
            for (Vertex x : data.branch_vertices) c.branch_vertices.push_back(t.to_host[x]);
            for (const auto& bp : data.branch_paths) {
              Path hp{{t.to_host[bp.vertices.front()]}};
              for (std::size_t i = 0; i + 1 < bp.vertices.size(); ++i) {
                Path r = route(bp.vertices[i], bp.vertices[i + 1]);
                hp.vertices.insert(hp.vertices.end(), r.vertices.begin() + 1, r.vertices.end());
              }
              c.branch_paths.push_back(std::move(hp));
            }
            out.add_cert(g, std::move(c));
          } else if constexpr (std::is_same_v<T, BicliqueSides>) {
            std::vector<EdgeId> ids;
            for (Vertex x : data.left)
              for (Vertex y : data.right) route_ids(*t.graph.edge_id(x, y), ids);
            out.add_edge_set(std::move(ids));
          } else {
            std::vector<EdgeId> ids;
            for (EdgeId te : data.ids) route_ids(te, ids);
            out.add_edge_set(std::move(ids));
          }
        },
        m.data);
  }
  return out;
}

std::string format_tutte(const TutteDecomposition& d) {
  std::ostringstream os;
  for (int i = 0; i < d.size(); ++i)
    os << "bag " << i << " kind=" << to_string(d.bags[i].kind)
       << " vertices=" << format_id_list(d.bags[i].vertices) << '\n';
  for (int i = 0; i < d.size(); ++i)
    if (d.bags[i].parent >= 0)
      os << "link " << d.bags[i].parent << ' ' << i << " adhesion=" << format_id_list(d.bags[i].adhesion) << '\n';
  for (int i = 0; i < d.size(); ++i)
    for (const auto& e : d.bags[i].torso)
      if (e.is_virtual()) os << "virtual " << i << ' ' << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::string tutte_to_dot(const TutteDecomposition& d) {
  std::ostringstream os;
  os << "graph tutte {\n  node [shape=box];\n";
  for (int i = 0; i < d.size(); ++i)
    os << "  b" << i << " [label=\"" << i << ": " << to_string(d.bags[i].kind) << "\\n{"
       << format_id_list(d.bags[i].vertices) << "}\"];\n";
  for (int i = 0; i < d.size(); ++i)
    if (d.bags[i].parent >= 0)
      os << "  b" << d.bags[i].parent << " -- b" << i << " [label=\"" << format_id_list(d.bags[i].adhesion)
         << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace sepsys
