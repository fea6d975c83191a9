#include "sepsys/subdivision.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sepsys/bitset.hpp"
#include "sepsys/generators.hpp"

namespace sepsys {

std::vector<EdgeId> SubdivisionCert::host_edges(const Graph& host) const {
  std::vector<EdgeId> out;
  for (const auto& p : branch_paths) {
    auto ids = p.edge_ids(host);
    out.insert(out.end(), ids.begin(), ids.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Vertex> SubdivisionCert::host_vertices() const {
  std::vector<Vertex> out(branch_vertices);
  for (const auto& p : branch_paths) out.insert(out.end(), p.vertices.begin(), p.vertices.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Verdict verify_subdivision(const Graph& host, const SubdivisionCert& cert) {
  const auto& h = cert.pattern;
  const int n = host.num_vertices();
  if (static_cast<int>(cert.branch_vertices.size()) != h.num_vertices())
    return Verdict::fail("branch vertex count differs from pattern order");
  if (static_cast<int>(cert.branch_paths.size()) != h.num_edges())
    return Verdict::fail("branch path count differs from pattern size");
  // 0 = unused, 1 = branch vertex, 2 = internal vertex of some branch path
  std::vector<char> use(n, 0);
  for (Vertex v : cert.branch_vertices) {
    if (v < 0 || v >= n) return Verdict::fail("branch vertex " + std::to_string(v) + " not in host");
    if (use[v]) return Verdict::fail("branch vertex map is not injective at " + std::to_string(v));
    use[v] = 1;
  }
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const auto& p = cert.branch_paths[e];
    const std::string tag = "branch path " + std::to_string(e);
    if (p.vertices.size() < 2) return Verdict::fail(tag + " has no edges");
    for (Vertex v : p.vertices)
      if (v < 0 || v >= n) return Verdict::fail(tag + " leaves the host");
    if (p.front() != cert.branch_vertices[h.edge(e).u] ||
        p.back() != cert.branch_vertices[h.edge(e).v])
      return Verdict::fail(tag + " endpoints do not match its pattern edge");
    if (!p.is_valid_in(host)) return Verdict::fail(tag + " is not a path in the host");
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
      Vertex v = p.vertices[i];
      if (use[v] == 1) return Verdict::fail(tag + " passes through branch vertex " + std::to_string(v));
      if (use[v] == 2)
        return Verdict::fail(tag + " shares internal vertex " + std::to_string(v) +
                             " with another branch path");
      use[v] = 2;
    }
  }
  return Verdict::pass();
}

bool BalanceProfile::is_balanced(int l) const {
  return std::all_of(lengths.begin(), lengths.end(), [l](int x) { return x == l; });
}

bool BalanceProfile::is_almost_balanced(int l) const {
  return std::count_if(lengths.begin(), lengths.end(), [l](int x) { return x != l; }) <= 1;
}

BalanceProfile balance_profile(const SubdivisionCert& cert) {
  BalanceProfile b;
  for (const auto& p : cert.branch_paths) b.lengths.push_back(p.length());
  std::sort(b.lengths.begin(), b.lengths.end());
  if (b.lengths.empty()) return b;
  if (b.lengths.front() == b.lengths.back()) {
    b.kind = BalanceProfile::Kind::balanced;
    b.ell = b.lengths.front();
  } else if (b.is_almost_balanced(b.lengths.front())) {
    b.kind = BalanceProfile::Kind::almost_balanced;
    b.ell = b.lengths.front();
  } else if (b.is_almost_balanced(b.lengths.back())) {
    b.kind = BalanceProfile::Kind::almost_balanced;
    b.ell = b.lengths.back();
  } else {
    b.kind = BalanceProfile::Kind::unbalanced;
    b.ell = 0;
  }
  return b;
}

namespace {

struct BudgetExceeded {};

class CliqueSubdivisionSearch {
 public:
  CliqueSubdivisionSearch(const Graph& g, int m, std::uint64_t budget)
      : g_(g), m_(m), budget_(budget), n_(g.num_vertices()) {
    order_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    adj_.assign(n_, Bitset(n_));
    for (const auto& e : g.edges()) {
      adj_[e.u].set(e.v);
      adj_[e.v].set(e.u);
    }
  }

  std::uint64_t nodes() const { return nodes_; }

  // Throws BudgetExceeded.
  std::optional<std::vector<Vertex>> clique() {
    std::vector<Vertex> cand;
    for (Vertex v : order_)
      if (g_.degree(v) >= m_ - 1) cand.push_back(v);
    std::vector<Vertex> chosen;
    if (expand_clique(chosen, cand)) return chosen;
    return std::nullopt;
  }

  // Throws BudgetExceeded.
  std::optional<std::pair<std::vector<Vertex>, std::vector<Path>>> subdivision(int ell) {
    ell_ = ell;
    used_.assign(n_, 0);
    branch_.clear();
    paths_.clear();
    if (place(0)) return std::make_pair(branch_, paths_);
    return std::nullopt;
  }

 private:
  void tick() {
    if (++nodes_ > budget_) throw BudgetExceeded{};
  }

  bool expand_clique(std::vector<Vertex>& chosen, std::vector<Vertex> cand) {
    tick();
    if (static_cast<int>(chosen.size()) == m_) return true;
    // Greedy colouring bound.
    std::vector<Vertex> ordered;
    std::vector<int> color;
    std::vector<Vertex> rest = cand;
    for (int k = 1; !rest.empty(); ++k) {
      std::vector<Vertex> next;
      std::vector<Vertex> cls;
      for (Vertex v : rest) {
        bool free = std::none_of(cls.begin(), cls.end(), [&](Vertex w) { return adj_[v].test(w); });
        if (free) {
          cls.push_back(v);
          ordered.push_back(v);
          color.push_back(k);
        } else {
          next.push_back(v);
        }
      }
      rest = std::move(next);
    }
    for (int i = static_cast<int>(ordered.size()) - 1; i >= 0; --i) {
      if (static_cast<int>(chosen.size()) + color[i] < m_) return false;
      Vertex v = ordered[i];
      std::vector<Vertex> sub;
      for (int j = 0; j < i; ++j)
        if (adj_[v].test(ordered[j])) sub.push_back(ordered[j]);
      chosen.push_back(v);
      if (expand_clique(chosen, std::move(sub))) return true;
      chosen.pop_back();
    }
    return false;
  }

  bool place(std::size_t start) {
    tick();
    if (static_cast<int>(branch_.size()) == m_) return true;
    for (std::size_t i = start; i < order_.size(); ++i) {
      Vertex v = order_[i];
      if (used_[v] || g_.degree(v) < m_ - 1) continue;
      used_[v] = 1;
      branch_.push_back(v);
      if (route(0, i + 1)) return true;
      branch_.pop_back();
      used_[v] = 0;
    }
    return false;
  }

  // Connect the newest branch vertex to branch_[j], branch_[j+1], ...
  bool route(std::size_t j, std::size_t next_start) {
    const std::size_t k = branch_.size() - 1;
    if (j == k) return place(next_start);
    Path p{{branch_[j]}};
    return extend(p, branch_[k], [&] {
      paths_.push_back(p);
      if (route(j + 1, next_start)) return true;
      paths_.pop_back();
      return false;
    });
  }

  template <class Cont>
  bool extend(Path& p, Vertex target, Cont&& cont) {
    tick();
    Vertex x = p.back();
    if (p.length() == ell_ - 1) {
      if (!g_.adjacent(x, target)) return false;
      p.vertices.push_back(target);
      bool ok = cont();
      p.vertices.pop_back();
      return ok;
    }
    for (Vertex w : g_.neighbors(x)) {
      if (used_[w]) continue;
      used_[w] = 2;
      p.vertices.push_back(w);
      if (extend(p, target, cont)) return true;
      p.vertices.pop_back();
      used_[w] = 0;
    }
    return false;
  }

  const Graph& g_;
  int m_;
  std::uint64_t budget_;
  int n_;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> order_;
  std::vector<Bitset> adj_;
  int ell_ = 1;
  std::vector<char> used_;
  std::vector<Vertex> branch_;
  std::vector<Path> paths_;
};

SubdivisionCert complete_cert(int m, const std::vector<Vertex>& branch,
                              const std::vector<Path>& paths_in_route_order) {
  // Routed paths appear in order: (1,0), (2,0), (2,1), (3,0), ...; each from
  // the older vertex to the newer one.
  SubdivisionCert cert{gen::complete(m), branch, {}};
  cert.branch_paths.resize(cert.pattern.num_edges());
  std::size_t idx = 0;
  for (int k = 1; k < m; ++k)
    for (int j = 0; j < k; ++j) {
      EdgeId e = *cert.pattern.edge_id(j, k);
      cert.branch_paths[e] = paths_in_route_order[idx++];
    }
  return cert;
}

}  // namespace

CliqueSearchResult find_balanced_clique_subdivision(const Graph& g, int m, std::uint64_t budget) {
  if (m < 2) throw std::invalid_argument("clique subdivision search needs m >= 2");
  CliqueSearchResult res;
  CliqueSubdivisionSearch search(g, m, budget);
  const long long n = g.num_vertices();
  const long long pairs = static_cast<long long>(m) * (m - 1) / 2;
  try {
    for (int ell = 1;; ++ell) {
      if (m + pairs * (ell - 1) > n) break;
      res.max_ell_examined = ell;
      if (ell == 1) {
        if (auto c = search.clique()) {
          std::vector<Path> paths;
          for (int k = 1; k < m; ++k)
            for (int j = 0; j < k; ++j) paths.push_back(Path{{(*c)[j], (*c)[k]}});
          res.cert = complete_cert(m, *c, paths);
        }
      } else if (auto s = search.subdivision(ell)) {
        res.cert = complete_cert(m, s->first, s->second);
      }
      if (res.cert) {
        res.status = CliqueSearchResult::Status::found;
        res.ell = ell;
        break;
      }
    }
    if (!res.cert) res.status = CliqueSearchResult::Status::refuted;
  } catch (const BudgetExceeded&) {
    res.status = CliqueSearchResult::Status::budget_exhausted;
  }
  res.nodes = search.nodes();
  return res;
}

Path oriented_branch_path(const SubdivisionCert& cert, Vertex a, Vertex b) {
  auto e = cert.pattern.edge_id(a, b);
  if (!e) throw std::invalid_argument("pattern vertices are not adjacent");
  const Path& p = cert.branch_paths[*e];
  return a < b ? p : p.reversed();
}

std::vector<SubdivisionCert> quarter_split(const SubdivisionCert& cert, int t) {
  const int m = 4 * t + 8;
  const auto& h = cert.pattern;
  if (t < 0 || h.num_vertices() != m || h.num_edges() != m * (m - 1) / 2)
    throw std::invalid_argument("quarter_split needs a K_" + std::to_string(m) +
                                " certificate, got a pattern with " +
                                std::to_string(h.num_vertices()) + " vertices and " +
                                std::to_string(h.num_edges()) + " edges");
  std::vector<Vertex> by_host(m);
  for (int i = 0; i < m; ++i) by_host[i] = i;
  std::sort(by_host.begin(), by_host.end(), [&](Vertex a, Vertex b) {
    return cert.branch_vertices[a] < cert.branch_vertices[b];
  });
  const int q = t + 2;
  std::vector<SubdivisionCert> out;
  for (int r = 0; r < 4; ++r) {
    SubdivisionCert part{gen::complete(q), {}, {}};
    for (int i = 0; i < q; ++i) part.branch_vertices.push_back(cert.branch_vertices[by_host[r * q + i]]);
    for (const auto& e : part.pattern.edges())
      part.branch_paths.push_back(oriented_branch_path(cert, by_host[r * q + e.u], by_host[r * q + e.v]));
    out.push_back(std::move(part));
  }
  return out;
}

SubdivisionCert path_cert(const Path& p) {
  return SubdivisionCert{Graph(2, {{0, 1}}), {p.front(), p.back()}, {p}};
}

std::string format_cert(const SubdivisionCert& cert) {
  std::ostringstream os;
  const auto& h = cert.pattern;
  os << "pattern " << h.num_vertices() << ' ' << h.num_edges() << '\n';
  for (const auto& e : h.edges()) os << e.u << ' ' << e.v << '\n';
  for (int i = 0; i < h.num_vertices(); ++i) os << "branch " << i << ' ' << cert.branch_vertices[i] << '\n';
  for (int e = 0; e < h.num_edges(); ++e) {
    os << "path " << e << ':';
    for (Vertex v : cert.branch_paths[e].vertices) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

SubdivisionCert parse_cert(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next = [&]() -> std::istringstream {
    while (std::getline(in, line)) {
      ++lineno;
      auto pos = line.find_first_not_of(" \t\r");
      if (pos != std::string::npos && line[pos] != '#') return std::istringstream(line);
    }
    throw ParseError(lineno, "unexpected end of certificate");
  };
  auto expect_end = [&](std::istringstream& ss) {
    std::string rest;
    if (ss >> rest) throw ParseError(lineno, "unexpected token '" + rest + "'");
  };
  std::string kw;
  int n = 0, m = 0;
  {
    auto ss = next();
    if (!(ss >> kw >> n >> m) || kw != "pattern" || n < 0 || m < 0)
      throw ParseError(lineno, "expected \"pattern n m\"");
    expect_end(ss);
  }
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    auto ss = next();
    int u, v;
    if (!(ss >> u >> v) || !(0 <= u && u < v && v < n))
      throw ParseError(lineno, "expected pattern edge \"u v\" with u < v < n");
    expect_end(ss);
    edges.push_back({u, v});
  }
  SubdivisionCert cert;
  try {
    cert.pattern = Graph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(lineno, e.what());
  }
  cert.branch_vertices.resize(n);
  for (int i = 0; i < n; ++i) {
    auto ss = next();
    int h, v;
    if (!(ss >> kw >> h >> v) || kw != "branch" || h != i || v < 0)
      throw ParseError(lineno, "expected \"branch " + std::to_string(i) + " v\"");
    expect_end(ss);
    cert.branch_vertices[i] = v;
  }
  cert.branch_paths.resize(m);
  for (int e = 0; e < m; ++e) {
    auto ss = next();
    std::string label;
    if (!(ss >> kw >> label) || kw != "path" || label != std::to_string(e) + ":")
      throw ParseError(lineno, "expected \"path " + std::to_string(e) + ": ...\"");
    int v;
    while (ss >> v) cert.branch_paths[e].vertices.push_back(v);
    if (!ss.eof()) throw ParseError(lineno, "malformed vertex in path");
    if (cert.branch_paths[e].vertices.empty()) throw ParseError(lineno, "empty path");
  }
  while (std::getline(in, line)) {
    ++lineno;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos != std::string::npos && line[pos] != '#') throw ParseError(lineno, "trailing content");
  }
  return cert;
}

}  // namespace sepsys
