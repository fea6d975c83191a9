#include "sepsys/blowup.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sepsys/bipartite.hpp"

namespace sepsys {

Blowup build_blowup(const Graph& h, int l) {
  if (l < 1) throw std::invalid_argument("class size must be at least 1");
  Blowup b;
  b.pattern = h;
  b.class_size = l;
  for (int x = 0; x < h.num_vertices(); ++x) {
    b.classes.emplace_back();
    for (int i = 0; i < l; ++i) b.classes.back().push_back(x * l + i);
  }
  std::vector<Edge> edges;
  for (const auto& e : h.edges())
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) edges.push_back({e.u * l + i, e.v * l + j});
  b.host = Graph(h.num_vertices() * l, std::move(edges));
  return b;
}

std::vector<CopyOfH> enumerate_h_copies(const Graph& g, const Graph& h, const EnumerationCaps& caps) {
  if (h.num_vertices() > caps.max_pattern_vertices)
    throw std::invalid_argument("pattern has more than " + std::to_string(caps.max_pattern_vertices) + " vertices");
  if (g.num_vertices() > caps.max_host_vertices)
    throw std::invalid_argument("host has more than " + std::to_string(caps.max_host_vertices) + " vertices");
  const int t = h.num_vertices(), n = g.num_vertices();
  std::map<std::vector<EdgeId>, std::vector<Vertex>> found;
  std::vector<Vertex> map(t, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int x) -> void {
    if (x == t) {
      std::vector<EdgeId> ids;
      for (const auto& e : h.edges()) ids.push_back(*g.edge_id(map[e.u], map[e.v]));
      std::sort(ids.begin(), ids.end());
      found.try_emplace(std::move(ids), map);
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (Vertex y : h.neighbors(x))
        if (y < x && !g.adjacent(map[y], v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      map[x] = v;
      used[v] = 1;
      self(self, x + 1);
      used[v] = 0;
    }
    map[x] = -1;
  };
  if (t <= n) rec(rec, 0);
  std::vector<CopyOfH> out;
  for (auto& [ids, m] : found) {
    CopyOfH c;
    c.map = m;
    c.edges = ids;
    c.edge_set = make_edge_set(static_cast<std::size_t>(g.num_edges()), ids);
    out.push_back(std::move(c));
  }
  return out;
}

HSeparationVerdict check_h_separation(const std::vector<CopyOfH>& copies, const SeparatingFamily& fam) {
  HSeparationVerdict v;
  v.copies = copies.size();
  for (std::size_t i = 0; i < copies.size(); ++i) {
    // Intersection of all members containing copy i; copy j is separated from
    // it exactly when copy j is not inside this intersection.
    std::optional<Bitset> inter;
    for (const auto& m : fam.members())
      if (copies[i].edge_set.is_subset_of(m.edges)) {
        if (!inter) {
          inter = m.edges;
        } else {
          *inter &= m.edges;
        }
      }
    for (std::size_t j = 0; j < copies.size(); ++j) {
      if (j == i) continue;
      if (!inter || copies[j].edge_set.is_subset_of(*inter)) {
        v.ok = false;
        v.failing_pair = std::make_pair(i, j);
        return v;
      }
    }
  }
  return v;
}

HSeparationVerdict check_h_separation(const Graph& g, const Graph& h, const SeparatingFamily& fam,
                                      const EnumerationCaps& caps) {
  return check_h_separation(enumerate_h_copies(g, h, caps), fam);
}

SeparatingFamily build_supergraph_h_separator(const Graph& g, const Graph& h, std::uint64_t seed,
                                              const EnumerationCaps& caps) {
  auto copies = enumerate_h_copies(g, h, caps);
  SeparatingFamily fam(g);
  fam.metadata["constructor"] = "supergraph_constraints";
  fam.metadata["copies"] = std::to_string(copies.size());
  if (copies.empty()) return fam;
  std::vector<Constraint> constraints;
  for (const auto& c : copies)
    for (EdgeId e = 0; e < g.num_edges(); ++e)
      if (!c.edge_set.test(static_cast<std::size_t>(e))) constraints.push_back({c.edges, {e}});
  fam.metadata["constraints"] = std::to_string(constraints.size());
  if (constraints.empty()) return fam;
  auto cf = build_constraint_family(g.num_edges(), constraints, seed);
  for (auto& s : cf.sets) fam.add_edge_set(std::move(s));
  fam.metadata["fallback_sets"] = std::to_string(cf.fallback_sets);
  return fam;
}

std::vector<EdgeId> induced_blowup_edges(const Blowup& b, const std::vector<std::vector<Vertex>>& selection) {
  std::vector<char> in(static_cast<std::size_t>(b.host.num_vertices()), 0);
  for (const auto& s : selection)
    for (Vertex v : s) in[v] = 1;
  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < b.host.num_edges(); ++e)
    if (in[b.host.edge(e).u] && in[b.host.edge(e).v]) ids.push_back(e);
  return ids;
}

namespace {

void combinations(int n, int k, std::vector<int>& cur, int from, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = from; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, cur, i + 1, out);
    cur.pop_back();
  }
}

}  // namespace

BlowupSeparator build_blowup_h_separator(const Graph& h, int n, std::uint64_t seed, const EnumerationCaps& caps) {
  if (h.num_edges() == 0) throw std::invalid_argument("H needs at least one edge");
  BlowupSeparator out;
  out.blowup = build_blowup(h, n);
  const Blowup& b = out.blowup;
  auto copies = enumerate_h_copies(b.host, h, caps);
  out.copies = copies.size();
  out.family = SeparatingFamily(b.host);
  out.tier = "shared_index";
  const int t = h.num_vertices();
  if (copies.size() <= 1) {
    out.family.metadata["tier"] = out.tier;
    return out;
  }

  // Per-class families, on local indices 0..n-1.
  const int s = std::min(t, n - 1);
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  combinations(n, s, cur, 0, subsets);
  std::vector<Constraint> constraints;
  for (const auto& sub : subsets)
    for (int w = 0; w < n; ++w)
      if (!std::binary_search(sub.begin(), sub.end(), w)) constraints.push_back({sub, {w}});
  std::vector<std::vector<std::vector<Vertex>>> class_sets(t);
  for (int x = 0; x < t; ++x) {
    auto cf = build_constraint_family(n, constraints, seed + static_cast<std::uint64_t>(x));
    for (const auto& local : cf.sets) {
      std::vector<Vertex> vs;
      for (int i : local) vs.push_back(b.classes[x][i]);
      class_sets[x].push_back(std::move(vs));
    }
    out.class_family_sizes.push_back(class_sets[x].size());
  }

  auto emit = [&](std::vector<std::vector<std::vector<Vertex>>> selections) {
    SeparatingFamily fam(b.host);
    for (const auto& sel : selections) fam.add_edge_set(induced_blowup_edges(b, sel));
    if (!check_h_separation(copies, fam)) return false;
    out.family = std::move(fam);
    out.selections = std::move(selections);
    return true;
  };

  std::vector<std::vector<std::vector<Vertex>>> shared;
  for (int x = 0; x < t; ++x)
    for (const auto& m : class_sets[x]) {
      auto sel = b.classes;
      sel[x] = m;
      shared.push_back(std::move(sel));
    }
  bool done = emit(shared);
  if (!done) {
    out.tier = "product";
    std::vector<std::vector<std::vector<Vertex>>> choices(class_sets);
    for (int x = 0; x < t; ++x) choices[x].push_back(b.classes[x]);
    std::vector<std::vector<std::vector<Vertex>>> product{{}};
    for (int x = 0; x < t; ++x) {
      std::vector<std::vector<std::vector<Vertex>>> next;
      for (const auto& partial : product)
        for (const auto& c : choices[x]) {
          auto p = partial;
          p.push_back(c);
          next.push_back(std::move(p));
        }
      product = std::move(next);
    }
    done = emit(product);
  }
  if (!done) {
    out.tier = "copies";
    out.selections.clear();
    SeparatingFamily fam(b.host);
    for (const auto& c : copies) fam.add_edge_set(c.edges);
    out.family = std::move(fam);
  }
  out.family.metadata["constructor"] = "blowup";
  out.family.metadata["tier"] = out.tier;
  out.family.metadata["copies"] = std::to_string(out.copies);
  return out;
}

}  // namespace sepsys
