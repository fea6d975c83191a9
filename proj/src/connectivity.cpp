#include "sepsys/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace sepsys {

Components connected_components(const Graph& g, std::span<const char> removed) {
  const int n = g.num_vertices();
  auto is_removed = [&](Vertex v) { return !removed.empty() && removed[v]; };
  Components c;
  c.id.assign(n, -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (is_removed(s) || c.id[s] >= 0) continue;
    c.id[s] = c.count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (!is_removed(w) && c.id[w] < 0) {
          c.id[w] = c.count;
          stack.push_back(w);
        }
    }
    ++c.count;
  }
  return c;
}

bool is_connected(const Graph& g) { return connected_components(g).count <= 1; }

std::vector<Vertex> articulation_points(const Graph& g, std::span<const char> removed) {
  const int n = g.num_vertices();
  auto is_removed = [&](Vertex v) { return !removed.empty() && removed[v]; };
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> cut(n, 0);
  int timer = 0;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
    int children;
  };
  std::vector<Frame> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (is_removed(root) || disc[root] >= 0) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (is_removed(w) || w == f.parent) continue;
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          ++f.children;
          stack.push_back({w, f.v, 0, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        Frame& p = stack.back();
        low[p.v] = std::min(low[p.v], low[done.v]);
        if (p.parent >= 0 && low[done.v] >= disc[p.v]) cut[p.v] = 1;
      } else if (done.children >= 2) {
        cut[done.v] = 1;
      }
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (cut[v]) out.push_back(v);
  return out;
}

ConnectivityVerdict is_three_connected(const Graph& g) {
  using R = ConnectivityVerdict::Reason;
  ConnectivityVerdict out;
  const int n = g.num_vertices();
  if (!is_connected(g) && n > 1) {
    out.reason = R::disconnected;
    return out;
  }
  auto cuts = articulation_points(g);
  if (!cuts.empty()) {
    out.reason = R::cut_vertex;
    out.separator = {cuts.front()};
    return out;
  }
  if (n < 4) {
    out.reason = R::too_few_vertices;
    return out;
  }
  std::vector<char> removed(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    removed[u] = 1;
    auto c = articulation_points(g, removed);
    removed[u] = 0;
    for (Vertex v : c)
      if (v > u) {
        out.reason = R::two_separator;
        out.separator = {u, v};
        return out;
      }
  }
  out.three_connected = true;
  return out;
}

namespace {

// Small-capacity flow network with deterministic BFS augmentation.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : adj_(nodes) {}

  void add_arc(int from, int to, int cap = 1) {
    adj_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap, cap});
    adj_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0, 0});
  }

  bool augment(int s, int t) {
    std::vector<int> via(adj_.size(), -1);
    std::vector<char> seen(adj_.size(), 0);
    std::deque<int> q{s};
    seen[s] = 1;
    while (!q.empty() && !seen[t]) {
      int x = q.front();
      q.pop_front();
      for (int a : adj_[x]) {
        int y = arcs_[a].to;
        if (arcs_[a].cap > 0 && !seen[y]) {
          seen[y] = 1;
          via[y] = a;
          q.push_back(y);
        }
      }
    }
    if (!seen[t]) return false;
    for (int y = t; y != s; y = arcs_[via[y] ^ 1].to) {
      --arcs_[via[y]].cap;
      ++arcs_[via[y] ^ 1].cap;
    }
    return true;
  }

  // Heads of forward arcs out of x that carry flow, once per unit.
  std::vector<int> flow_successors(int x) const {
    std::vector<int> out;
    for (int a : adj_[x])
      if ((a & 1) == 0)
        for (int u = arcs_[a].cap; u < arcs_[a].orig; ++u) out.push_back(arcs_[a].to);
    return out;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int orig;
  };
  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
};

}  // namespace

std::optional<std::vector<Path>> disjoint_paths(const Graph& g, std::span<const Vertex> sources,
                                                std::span<const Vertex> targets, int k,
                                                std::span<const Vertex> blocked) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const int n = g.num_vertices();
  enum : char { plain, source, target, block };
  std::vector<char> role(n, plain);
  for (Vertex v : blocked) role[v] = block;
  for (Vertex s : sources) role[s] = source;
  for (Vertex t : targets) {
    if (role[t] == source) throw std::invalid_argument("sources and targets must be disjoint");
    role[t] = target;
  }
  // v_in = 2v, v_out = 2v+1, super source 2n, super sink 2n+1.
  // A lone source or target may be shared by all k paths (a fan).
  const int S = 2 * n, T = 2 * n + 1;
  const int source_cap = sources.size() == 1 ? k : 1, target_cap = targets.size() == 1 ? k : 1;
  FlowNetwork net(2 * n + 2);
  std::vector<Vertex> sorted_sources(sources.begin(), sources.end());
  std::sort(sorted_sources.begin(), sorted_sources.end());
  for (Vertex s : sorted_sources) net.add_arc(S, 2 * s, source_cap);
  for (Vertex v = 0; v < n; ++v) {
    if (role[v] == block) continue;
    net.add_arc(2 * v, 2 * v + 1, role[v] == source ? source_cap : role[v] == target ? target_cap : 1);
    if (role[v] == target) {
      net.add_arc(2 * v + 1, T, target_cap);
      continue;
    }
    for (Vertex w : g.neighbors(v))
      if (role[w] != block && role[w] != source) net.add_arc(2 * v + 1, 2 * w);
  }
  int flow = 0;
  while (flow < k && net.augment(S, T)) ++flow;
  if (flow < k) return std::nullopt;

  std::vector<Path> paths;
  for (Vertex s : sorted_sources)
    for (int first : net.flow_successors(2 * s + 1)) {
      Path p{{s}};
      int node = first;  // an in-node
      while (true) {
        Vertex v = node / 2;
        p.vertices.push_back(v);
        if (role[v] == target) break;
        node = net.flow_successors(2 * v + 1).front();
      }
      paths.push_back(std::move(p));
    }
  return paths;
}

std::optional<Path> shortest_path(const Graph& g, Vertex u, Vertex v, const Bitset& allowed) {
  const int n = g.num_vertices();
  constexpr int inf = std::numeric_limits<int>::max();
  std::vector<int> dist(n, inf);
  std::deque<Vertex> q{v};
  dist[v] = 0;
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop_front();
    auto nb = g.neighbors(x);
    auto ids = g.incident_edges(x);
    for (std::size_t i = 0; i < nb.size(); ++i)
      if (allowed.test(ids[i]) && dist[nb[i]] == inf) {
        dist[nb[i]] = dist[x] + 1;
        q.push_back(nb[i]);
      }
  }
  if (dist[u] == inf) return std::nullopt;
  Path p{{u}};
  for (Vertex x = u; x != v;) {
    auto nb = g.neighbors(x);
    auto ids = g.incident_edges(x);
    for (std::size_t i = 0; i < nb.size(); ++i)
      if (allowed.test(ids[i]) && dist[nb[i]] == dist[x] - 1) {
        x = nb[i];
        break;
      }
    p.vertices.push_back(x);
  }
  return p;
}

namespace {

std::vector<char> vertex_mask(int n, std::span<const Vertex> vs) {
  std::vector<char> m(n, 0);
  for (Vertex v : vs) m[v] = 1;
  return m;
}

bool induces_connected(const Graph& g, const std::vector<char>& in) {
  std::vector<char> removed(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) removed[i] = !in[i];
  return connected_components(g, removed).count == 1;
}

// Components c of g - S for which both S+c and V-c induce connected
// subgraphs, i.e. the small sides of separations (S+c, V-c) of S.
std::vector<std::vector<char>> separation_small_sides(const Graph& g, std::span<const Vertex> s) {
  const int n = g.num_vertices();
  auto in_s = vertex_mask(n, s);
  auto comps = connected_components(g, in_s);
  std::vector<std::vector<char>> out;
  if (comps.count < 2) return out;
  for (int c = 0; c < comps.count; ++c) {
    std::vector<char> small(n, 0), big(n, 0);
    for (Vertex v = 0; v < n; ++v) {
      bool in_c = comps.id[v] == c;
      small[v] = in_s[v] || in_c;
      big[v] = !in_c;
    }
    if (induces_connected(g, small) && induces_connected(g, big)) {
      std::vector<char> comp(n, 0);
      for (Vertex v = 0; v < n; ++v) comp[v] = comps.id[v] == c;
      out.push_back(std::move(comp));
    }
  }
  return out;
}

}  // namespace

bool separators_nested(const Graph& g, std::span<const Vertex> s, std::span<const Vertex> t) {
  // (S+c, V-c) and (V-d, T+d) are nested iff S+c avoids d and T+d avoids c;
  // shrinking the small side to a single component loses no generality.
  const int n = g.num_vertices();
  auto in_s = vertex_mask(n, s);
  auto in_t = vertex_mask(n, t);
  auto cs = separation_small_sides(g, s);
  auto ds = separation_small_sides(g, t);
  for (const auto& c : cs)
    for (const auto& d : ds) {
      bool ok = true;
      for (Vertex v = 0; v < n && ok; ++v) {
        if ((in_s[v] || c[v]) && d[v]) ok = false;
        if ((in_t[v] || d[v]) && c[v]) ok = false;
      }
      if (ok) return true;
    }
  return false;
}

std::vector<SeparatorInfo> two_separators_bruteforce(const Graph& g, int limit) {
  const int n = g.num_vertices();
  if (n > limit)
    throw std::invalid_argument("two_separators_bruteforce: graph exceeds oracle limit of " +
                                std::to_string(limit) + " vertices");
  if (!is_connected(g)) throw std::invalid_argument("two_separators_bruteforce: graph is disconnected");
  std::vector<SeparatorInfo> out;
  auto consider = [&](std::vector<Vertex> s) {
    auto removed = vertex_mask(n, s);
    auto comps = connected_components(g, removed);
    if (comps.count < 2) return;
    std::vector<int> touching(comps.count, 0);
    for (Vertex x : s) {
      std::vector<char> seen(comps.count, 0);
      for (Vertex w : g.neighbors(x))
        if (comps.id[w] >= 0 && !seen[comps.id[w]]) {
          seen[comps.id[w]] = 1;
          ++touching[comps.id[w]];
        }
    }
    int full = 0;
    for (int c = 0; c < comps.count; ++c) full += touching[c] == static_cast<int>(s.size());
    out.push_back({std::move(s), full >= 2, false});
  };
  for (Vertex u = 0; u < n; ++u) consider({u});
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) consider({u, v});
  for (auto& a : out) {
    if (!a.tight) continue;
    a.totally_nested = true;
    for (const auto& b : out) {
      if (&a == &b || !b.tight) continue;
      if (!separators_nested(g, a.vertices, b.vertices)) {
        a.totally_nested = false;
        break;
      }
    }
  }
  return out;
}

}  // namespace sepsys
