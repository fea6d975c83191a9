#include "sepsys/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sepsys/connectivity.hpp"
#include "sepsys/cycles.hpp"

namespace sepsys {

EdgeId fixed_edge_of(const Graph& h, const PipelineConfig& cfg) {
  if (h.num_edges() == 0) throw std::invalid_argument("H needs at least one edge");
  if (cfg.fixed_edge) {
    if (*cfg.fixed_edge < 0 || *cfg.fixed_edge >= h.num_edges())
      throw std::invalid_argument("fixed edge out of range");
    return *cfg.fixed_edge;
  }
  EdgeId best = 0;
  for (EdgeId e = 1; e < h.num_edges(); ++e)
    if (std::tie(h.edge(e).u, h.edge(e).v) < std::tie(h.edge(best).u, h.edge(best).v)) best = e;
  return best;
}

Graph remove_edge(const Graph& h, EdgeId f) {
  std::vector<Edge> es;
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    if (e != f) es.push_back(h.edge(e));
  return Graph(h.num_vertices(), std::move(es));
}

namespace {

int pattern_index(const SubdivisionCert& kr, Vertex host) {
  auto it = std::find(kr.branch_vertices.begin(), kr.branch_vertices.end(), host);
  if (it == kr.branch_vertices.end())
    throw std::invalid_argument("vertex " + std::to_string(host) + " is not a branch vertex");
  return static_cast<int>(it - kr.branch_vertices.begin());
}

// Placement of h's vertices (host ids) with f mapped onto u, v.
std::vector<Vertex> place(const SubdivisionCert& kr, const Graph& h, EdgeId f, Vertex u, Vertex v,
                          const std::vector<Vertex>& excluded) {
  if (u == v) throw std::invalid_argument("u and v must differ");
  pattern_index(kr, u);
  pattern_index(kr, v);
  for (Vertex x : excluded) {
    pattern_index(kr, x);
    if (x == u || x == v) throw std::invalid_argument("u and v must not be excluded");
  }
  std::vector<Vertex> free;
  for (Vertex b : kr.branch_vertices)
    if (b != u && b != v && std::find(excluded.begin(), excluded.end(), b) == excluded.end()) free.push_back(b);
  std::sort(free.begin(), free.end());
  if (static_cast<int>(free.size()) + 2 < h.num_vertices())
    throw std::invalid_argument("not enough branch vertices to place H - f");
  std::vector<Vertex> img(h.num_vertices(), -1);
  img[h.edge(f).u] = u;
  img[h.edge(f).v] = v;
  std::size_t next = 0;
  for (Vertex x = 0; x < h.num_vertices(); ++x)
    if (img[x] < 0) img[x] = free[next++];
  return img;
}

Path concat(std::initializer_list<const Path*> parts) {
  Path out;
  for (const Path* p : parts) {
    if (p->vertices.empty()) continue;
    auto first = p->vertices.begin();
    if (!out.vertices.empty()) {
      if (out.vertices.back() != p->vertices.front()) throw std::logic_error("paths do not meet");
      ++first;
    }
    out.vertices.insert(out.vertices.end(), first, p->vertices.end());
  }
  return out;
}

// Subpath of p between the occurrences of a and b, oriented from a to b.
Path segment(const Path& p, Vertex a, Vertex b) {
  auto ia = std::find(p.vertices.begin(), p.vertices.end(), a) - p.vertices.begin();
  auto ib = std::find(p.vertices.begin(), p.vertices.end(), b) - p.vertices.begin();
  if (ia == static_cast<long>(p.vertices.size()) || ib == static_cast<long>(p.vertices.size()))
    throw std::logic_error("segment endpoint not on path");
  Path out;
  if (ia <= ib) {
    out.vertices.assign(p.vertices.begin() + ia, p.vertices.begin() + ib + 1);
  } else {
    out.vertices.assign(p.vertices.begin() + ib, p.vertices.begin() + ia + 1);
    std::reverse(out.vertices.begin(), out.vertices.end());
  }
  return out;
}

}  // namespace

SubdivisionCert embed_h_minus_f(const SubdivisionCert& kr, const Graph& h, EdgeId f, Vertex u, Vertex v,
                                const std::vector<Vertex>& excluded) {
  auto img = place(kr, h, f, u, v, excluded);
  SubdivisionCert c;
  c.pattern = remove_edge(h, f);
  c.branch_vertices = img;
  for (const auto& e : c.pattern.edges())
    c.branch_paths.push_back(oriented_branch_path(kr, pattern_index(kr, img[e.u]), pattern_index(kr, img[e.v])));
  return c;
}

std::vector<Vertex> cycle_of_cert(const SubdivisionCert& cert) {
  if (cert.pattern.num_vertices() != 3 || cert.pattern.num_edges() != 3)
    throw std::invalid_argument("not a K_3 certificate");
  // Branch paths run 0-1, 0-2, 1-2 once oriented by pattern vertex order.
  Path a = oriented_branch_path(cert, 0, 1), m = oriented_branch_path(cert, 1, 2),
       b = oriented_branch_path(cert, 2, 0);
  Path all = concat({&a, &m, &b});
  all.vertices.pop_back();
  return all.vertices;
}

DerivedGadget derive_six(const Graph& g, const std::vector<Vertex>& cycle, const SubdivisionCert& kr,
                         const Graph& h, const PipelineConfig& cfg) {
  const int len = static_cast<int>(cycle.size());
  if (len < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  const EdgeId f = fixed_edge_of(h, cfg);
  auto kv = kr.host_vertices();
  for (Vertex c : cycle)
    if (std::binary_search(kv.begin(), kv.end(), c)) throw std::invalid_argument("cycle meets the clique subdivision");

  DerivedGadget gd;
  gd.cycle = cycle;
  auto paths = disjoint_paths(g, cycle, kv, 3);
  if (!paths) throw std::logic_error("fewer than three disjoint paths from the cycle to the subdivision");

  // Order anchors along the cycle.
  std::vector<int> pos_of(static_cast<std::size_t>(g.num_vertices()), -1);
  for (int i = 0; i < len; ++i) pos_of[cycle[i]] = i;
  std::sort(paths->begin(), paths->end(),
            [&](const Path& a, const Path& b) { return pos_of[a.front()] < pos_of[b.front()]; });
  std::array<int, 3> pos{};
  for (int i = 0; i < 3; ++i) {
    gd.connector[i] = (*paths)[i];
    gd.x[i] = gd.connector[i].front();
    gd.y[i] = gd.connector[i].back();
    pos[i] = pos_of[gd.x[i]];
  }

  // Arcs between anchors, oriented from the lower to the higher anchor index.
  auto forward = [&](int from, int to) {
    Path p;
    for (int i = from;; i = (i + 1) % len) {
      p.vertices.push_back(cycle[i]);
      if (i == to) break;
    }
    return p;
  };
  std::array<Path, 3> arcs{forward(pos[0], pos[1]), forward(pos[2], pos[0]).reversed(), forward(pos[1], pos[2])};
  auto arc = [&](int i, int j) {
    int p = (i == 0 && j == 1) || (i == 1 && j == 0) ? 0 : ((i == 2 && j == 1) || (i == 1 && j == 2) ? 2 : 1);
    return i < j ? arcs[p] : arcs[p].reversed();
  };

  // Branch path of kr carrying each landing vertex.
  std::map<Vertex, EdgeId> interior_of;
  for (EdgeId e = 0; e < kr.pattern.num_edges(); ++e) {
    const auto& vs = kr.branch_paths[e].vertices;
    for (std::size_t i = 1; i + 1 < vs.size(); ++i) interior_of[vs[i]] = e;
  }
  for (int i = 0; i < 3; ++i) {
    auto it = interior_of.find(gd.y[i]);
    if (it != interior_of.end()) {
      gd.q[i] = it->second;
    } else {
      int b = pattern_index(kr, gd.y[i]);
      gd.q[i] = kr.pattern.incident_edges(b).empty() ? -1 : *std::min_element(kr.pattern.incident_edges(b).begin(),
                                                                               kr.pattern.incident_edges(b).end());
      if (gd.q[i] < 0) throw std::logic_error("isolated branch vertex");
    }
  }
  auto q_path = [&](int i) { return kr.branch_paths[gd.q[i]]; };

  for (int p = 0; p < 3; ++p) {
    auto [i, j] = kGadgetPairs[p];
    Path qi = q_path(i), qj = q_path(j);
    Vertex ai = qi.front(), bi = qi.back(), aj = qj.front(), bj = qj.back();
    std::vector<Vertex> excluded;
    Vertex u, v;
    if (gd.q[i] == gd.q[j]) {
      auto at = [&](Vertex y) { return std::find(qi.vertices.begin(), qi.vertices.end(), y) - qi.vertices.begin(); };
      if (at(gd.y[i]) < at(gd.y[j])) {
        u = ai;
        v = bi;
      } else {
        u = bi;
        v = ai;
      }
    } else if (ai == aj || ai == bj || bi == aj || bi == bj) {
      Vertex s = (ai == aj || ai == bj) ? ai : bi;
      u = ai == s ? bi : ai;
      v = aj == s ? bj : aj;
      excluded = {s};
    } else {
      u = std::min(ai, bi);
      v = std::min(aj, bj);
      excluded = {std::max(ai, bi), std::max(aj, bj)};
    }
    gd.u[p] = u;
    gd.v[p] = v;
    gd.excluded[p] = excluded;

    Path head = segment(qi, u, gd.y[i]);
    Path in = gd.connector[i].reversed();
    Path out = gd.connector[j];
    Path tail = segment(qj, gd.y[j], v);
    int k = 3 - i - j;
    gd.arc[p] = arc(i, j);
    Path ik = arc(i, k), kj = arc(k, j);
    gd.arc_alt[p] = concat({&ik, &kj});
    gd.wide[p] = concat({&head, &in, &gd.arc[p], &out, &tail});
    gd.wide_alt[p] = concat({&head, &in, &gd.arc_alt[p], &out, &tail});

    SubdivisionCert minus = embed_h_minus_f(kr, h, f, u, v, excluded);
    for (const Path* wide : {&gd.wide[p], &gd.wide_alt[p]}) {
      SubdivisionCert c;
      c.pattern = h;
      c.branch_vertices = minus.branch_vertices;
      std::size_t next = 0;
      for (EdgeId e = 0; e < h.num_edges(); ++e)
        c.branch_paths.push_back(e == f ? *wide : minus.branch_paths[next++]);
      if (auto verdict = verify_subdivision(g, c); !verdict)
        throw std::logic_error("derived subdivision is invalid: " + verdict.reason);
      gd.certs.push_back(std::move(c));
    }
  }
  return gd;
}

ThreeConnectedResult separate_three_connected(const Graph& g, const Graph& h, const PipelineConfig& cfg) {
  if (h.num_edges() == 0) throw std::invalid_argument("H needs at least one edge");
  if (cfg.budget == 0) throw std::invalid_argument("budget must be positive");
  if (!(cfg.c_balance > 0)) throw std::invalid_argument("c_balance must be positive");
  auto conn = is_three_connected(g);
  if (!conn.three_connected) throw std::invalid_argument("separate_three_connected needs a 3-connected graph");

  const int t = h.num_vertices();
  const int m = 4 * t + 8;
  ThreeConnectedResult res;
  res.family = SeparatingFamily(g);
  auto fallback = [&](std::string why) {
    res.fallback = true;
    res.fallback_reason = std::move(why);
    for (EdgeId e = 0; e < g.num_edges(); ++e) res.family.add_edge(e);
    res.family.metadata["constructor"] = "three_connected";
    res.family.metadata["fallback"] = res.fallback_reason;
    return res;
  };
  if (cfg.degree_gate && g.average_degree() <= cfg.c_balance * m * m) return fallback("degree_gate");
  int high = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) high += g.degree(v) >= m - 1;
  if (high < m) return fallback("too_few_high_degree");

  auto search = find_balanced_clique_subdivision(g, m, cfg.budget);
  res.search_nodes = search.nodes;
  if (search.status != CliqueSearchResult::Status::found)
    return fallback(search.status == CliqueSearchResult::Status::refuted ? "search_refuted" : "search_budget");

  res.fallback = false;
  res.ell = search.ell;
  res.k = search.cert;
  res.quarters = quarter_split(*search.cert, t);
  std::set<EdgeId> singles;
  std::vector<SubdivisionCert> certs;
  for (int r = 0; r < 4; ++r) {
    const auto& kr = res.quarters[r];
    auto kv = kr.host_vertices();
    std::vector<EdgeId> ground;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
      if (!std::binary_search(kv.begin(), kv.end(), g.edge(e).u) &&
          !std::binary_search(kv.begin(), kv.end(), g.edge(e).v))
        ground.push_back(e);
    QuarterReport rep;
    rep.quarter = r + 1;
    rep.ground = ground.size();
    if (!ground.empty()) {
      Subgraph j = edge_subgraph(g, ground);
      rep.j_vertices = j.parent_vertex.size();
      auto sys = build_sub_k3_system(j.graph, all_edges(j.graph));
      rep.system_size = sys.size();
      for (const auto& mem : sys.members()) {
        if (const auto* se = std::get_if<SingleEdge>(&mem.data)) {
          ++rep.single_edges;
          singles.insert(j.parent_edge[se->id]);
        } else if (const auto* c = std::get_if<SubdivisionCert>(&mem.data)) {
          ++rep.cycles;
          auto local = cycle_of_cert(*c);
          std::vector<Vertex> cyc;
          for (Vertex x : local) cyc.push_back(j.parent_vertex[x]);
          auto gd = derive_six(g, cyc, kr, h, cfg);
          for (const auto& dc : gd.certs) certs.push_back(dc);
          res.gadgets.push_back(std::move(gd));
          res.gadget_quarter.push_back(r + 1);
        } else {
          throw std::logic_error("unexpected member in cycle system");
        }
      }
    }
    res.reports.push_back(rep);
  }
  for (EdgeId e : singles) res.family.add_edge(e);
  for (auto& c : certs) res.family.add_cert(g, std::move(c));
  res.family.metadata["constructor"] = "three_connected";
  res.family.metadata["ell"] = std::to_string(res.ell);
  return res;
}

GraphResult separate_graph(const Graph& g, const Graph& h, const PipelineConfig& cfg) {
  if (g.num_vertices() == 0 || g.num_edges() == 0) throw std::invalid_argument("graph has no edges");
  if (h.num_edges() == 0) throw std::invalid_argument("H needs at least one edge");
  GraphResult out;
  out.tutte = build_tutte(g);
  out.family = SeparatingFamily(g);
  for (int b = 0; b < out.tutte.size(); ++b) {
    const Bag& bag = out.tutte.bags[b];
    Torso torso = out.tutte.torso(b);
    BagReport rep;
    rep.bag = b;
    rep.kind = bag.kind;
    rep.vertices = static_cast<int>(bag.vertices.size());
    rep.torso_edges = torso.graph.num_edges();
    SeparatingFamily local(torso.graph);
    if (bag.kind == TorsoKind::three_connected) {
      auto r = separate_three_connected(torso.graph, h, cfg);
      rep.fallback = r.fallback;
      rep.fallback_reason = r.fallback_reason;
      rep.ell = r.ell;
      for (const auto& q : r.reports) rep.system_size += q.system_size;
      local = std::move(r.family);
    } else {
      for (EdgeId e = 0; e < torso.graph.num_edges(); ++e) local.add_edge(e);
    }
    auto realized = realize_members(g, out.tutte, b, local);
    rep.members = realized.size();
    out.family.append(realized);
    out.bags.push_back(rep);
  }
  out.family.metadata["constructor"] = "separate_graph";
  return out;
}

BalanceCensus balance_census(const SeparatingFamily& fam) {
  BalanceCensus c;
  for (const auto& m : fam.members()) {
    if (std::holds_alternative<SingleEdge>(m.data)) {
      ++c.single_edges;
    } else if (const auto* cert = std::get_if<SubdivisionCert>(&m.data)) {
      switch (balance_profile(*cert).kind) {
        case BalanceProfile::Kind::balanced: ++c.balanced; break;
        case BalanceProfile::Kind::almost_balanced: ++c.almost_balanced; break;
        case BalanceProfile::Kind::unbalanced: ++c.unbalanced; break;
      }
    } else {
      ++c.other;
    }
  }
  return c;
}

std::string format_metrics(const Graph& g, const Graph& h, const GraphResult& r) {
  const double n = g.num_vertices();
  const double hv = h.num_vertices();
  bool any_construction = false;
  std::set<int> ells;
  std::size_t system = 0;
  for (const auto& b : r.bags) {
    if (b.kind == TorsoKind::three_connected && !b.fallback) {
      any_construction = true;
      ells.insert(b.ell);
    }
    system += b.system_size;
  }
  std::vector<int> ell_list(ells.begin(), ells.end());
  auto census = balance_census(r.family);
  std::ostringstream os;
  os << "n=" << g.num_vertices() << '\n'
     << "edges=" << g.num_edges() << '\n'
     << "h_vertices=" << h.num_vertices() << '\n'
     << "h_edges=" << h.num_edges() << '\n'
     << "bags=" << r.tutte.size() << '\n'
     << "bag_size_sum=" << r.tutte.total_size() << '\n'
     << "fallback=" << (any_construction ? "false" : "true") << '\n'
     << "ell=" << (ell_list.empty() ? std::string("none") : format_id_list(ell_list)) << '\n'
     << "system_size=" << system << '\n'
     << "family_size=" << r.family.size() << '\n'
     << "family_per_n=" << r.family.size() / n << '\n'
     << "family_per_h2n=" << r.family.size() / (hv * hv * n) << '\n'
     << "single_edges=" << census.single_edges << '\n'
     << "balanced=" << census.balanced << '\n'
     << "almost_balanced=" << census.almost_balanced << '\n'
     << "unbalanced=" << census.unbalanced << '\n';
  return os.str();
}

}  // namespace sepsys
