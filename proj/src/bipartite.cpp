#include "sepsys/bipartite.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "sepsys/bitset.hpp"
#include "sepsys/generators.hpp"

namespace sepsys {

namespace {

std::vector<int> as_ints(const Bitset& b) {
  std::vector<int> out;
  for (auto x = b.find_first(); x != Bitset::npos; x = b.find_next(x)) out.push_back(static_cast<int>(x));
  return out;
}

int ceil_log2(int n) { return n <= 1 ? 0 : static_cast<int>(std::bit_width(static_cast<unsigned>(n - 1))); }

}  // namespace

std::vector<BicliqueSides> knn_members(const std::vector<Vertex>& left, const std::vector<Vertex>& right) {
  const int a = static_cast<int>(left.size()), b = static_cast<int>(right.size());
  if (a == 0 || b == 0) return {};
  if (a == 1 && b == 1) return {{left, right}};
  const int bits = ceil_log2(std::max(a, b));
  std::vector<BicliqueSides> out;
  for (int bit = 0; bit < bits; ++bit)
    for (int polarity : {1, 0}) {
      BicliqueSides same, flipped;
      for (int i = 0; i < a; ++i)
        if (((i >> bit) & 1) == polarity) {
          same.left.push_back(left[i]);
          flipped.left.push_back(left[i]);
        }
      for (int i = 0; i < b; ++i) (((i >> bit) & 1) == polarity ? same.right : flipped.right).push_back(right[i]);
      for (auto* m : {&same, &flipped})
        if (!m->left.empty() && !m->right.empty()) out.push_back(std::move(*m));
    }
  return out;
}

SeparatingFamily build_knn_system(int n) {
  if (n < 1) throw std::invalid_argument("side size must be positive");
  Graph host = gen::complete_bipartite(n, n);
  std::vector<Vertex> left(n), right(n);
  for (int i = 0; i < n; ++i) {
    left[i] = i;
    right[i] = n + i;
  }
  SeparatingFamily fam(host);
  fam.metadata["constructor"] = "knn";
  if (n == 1) return fam;
  for (auto& m : knn_members(left, right)) fam.add_biclique(host, std::move(m.left), std::move(m.right));
  return fam;
}

bool satisfies(const std::vector<int>& set, const Constraint& c) {
  for (int x : c.include)
    if (!std::binary_search(set.begin(), set.end(), x)) return false;
  for (int x : c.exclude)
    if (std::binary_search(set.begin(), set.end(), x)) return false;
  return true;
}

ConstraintFamily build_constraint_family(int universe, const std::vector<Constraint>& constraints,
                                         std::uint64_t seed, const ConstraintConfig& cfg) {
  if (universe < 0) throw std::invalid_argument("negative universe");
  ConstraintFamily out;
  if (constraints.empty()) return out;
  const std::size_t k = constraints[0].include.size() + constraints[0].exclude.size();
  const std::size_t u = static_cast<std::size_t>(universe);
  std::vector<Bitset> inc, exc;
  double include_total = 0;
  for (const auto& c : constraints) {
    if (c.include.size() + c.exclude.size() != k) throw std::invalid_argument("constraints must have equal sizes");
    Bitset bi(u), be(u);
    for (int x : c.include) {
      if (x < 0 || x >= universe) throw std::invalid_argument("constraint element outside the universe");
      bi.set(static_cast<std::size_t>(x));
    }
    for (int x : c.exclude) {
      if (x < 0 || x >= universe) throw std::invalid_argument("constraint element outside the universe");
      if (bi.test(static_cast<std::size_t>(x))) throw std::invalid_argument("constraint includes and excludes one element");
      be.set(static_cast<std::size_t>(x));
    }
    inc.push_back(std::move(bi));
    exc.push_back(std::move(be));
    include_total += static_cast<double>(c.include.size());
  }
  const double p = k == 0 ? 0.0 : include_total / static_cast<double>(constraints.size()) / static_cast<double>(k);
  out.include_probability = p;

  std::vector<std::size_t> open(constraints.size());
  for (std::size_t i = 0; i < open.size(); ++i) open[i] = i;
  std::mt19937_64 rng(seed);
  Bitset s(u);
  while (!open.empty() && out.draws < cfg.max_draws) {
    ++out.draws;
    s.clear();
    for (std::size_t x = 0; x < u; ++x)
      if (gen::unit_draw(rng) < p) s.set(x);
    std::vector<std::size_t> still;
    for (std::size_t i : open)
      if (!(inc[i].is_subset_of(s) && !exc[i].intersects(s))) still.push_back(i);
    if (still.size() == open.size()) continue;
    open = std::move(still);
    out.sets.push_back(as_ints(s));
  }
  for (std::size_t i : open) {
    Bitset t(u);
    t.set_all();
    t.subtract(exc[i]);
    out.sets.push_back(as_ints(t));
    ++out.fallback_sets;
  }
  return out;
}

BicliqueCover extract_biclique_cover(const Graph& g, int s_min) {
  if (s_min < 1) throw std::invalid_argument("s_min must be at least 1");
  const int n = g.num_vertices();
  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<Bitset> adj(un, Bitset(un));
  for (const auto& e : g.edges()) {
    adj[e.u].set(static_cast<std::size_t>(e.v));
    adj[e.v].set(static_cast<std::size_t>(e.u));
  }
  BicliqueCover cover;
  for (Vertex u = 0; u < n;) {
    Bitset in_left(un);
    in_left.set(static_cast<std::size_t>(u));
    std::vector<Vertex> left{u};
    Bitset right = adj[u];
    std::size_t best_s = std::min<std::size_t>(1, right.count());
    std::vector<Vertex> best_left = left;
    Bitset best_right = right;
    while (true) {
      Vertex pick = -1;
      std::size_t pick_count = 0;
      for (Vertex w = 0; w < n; ++w) {
        if (in_left.test(static_cast<std::size_t>(w))) continue;
        std::size_t c = right.count_and(adj[w]);
        if (c > pick_count) {
          pick = w;
          pick_count = c;
        }
      }
      if (pick < 0 || pick_count < left.size() + 1) break;
      left.push_back(pick);
      in_left.set(static_cast<std::size_t>(pick));
      right.reset(static_cast<std::size_t>(pick));
      right &= adj[pick];
      std::size_t s = std::min(left.size(), right.count());
      if (s > best_s) {
        best_s = s;
        best_left = left;
        best_right = right;
      }
    }
    if (best_s < static_cast<std::size_t>(s_min) || best_s == 0) {
      ++u;
      continue;
    }
    std::vector<Vertex> l(best_left.begin(), best_left.begin() + static_cast<long>(best_s));
    std::sort(l.begin(), l.end());
    std::vector<Vertex> r;
    for (auto x = best_right.find_first(); x != Bitset::npos && r.size() < best_s; x = best_right.find_next(x))
      r.push_back(static_cast<Vertex>(x));
    for (Vertex a : l)
      for (Vertex b : r) {
        adj[a].reset(static_cast<std::size_t>(b));
        adj[b].reset(static_cast<std::size_t>(a));
      }
    cover.bicliques.push_back({std::move(l), std::move(r)});
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (adj[g.edge(e).u].test(static_cast<std::size_t>(g.edge(e).v))) cover.leftovers.push_back(e);
  return cover;
}

SeparatingFamily build_biclique_separating_system(const Graph& g, int s_min) {
  auto cover = extract_biclique_cover(g, s_min);
  SeparatingFamily fam(g);
  for (const auto& b : cover.bicliques)
    for (auto& m : knn_members(b.left, b.right)) fam.add_biclique(g, std::move(m.left), std::move(m.right));
  for (EdgeId e : cover.leftovers) fam.add_biclique(g, {g.edge(e).u}, {g.edge(e).v});
  fam.metadata["constructor"] = "biclique_cover";
  fam.metadata["cover_bicliques"] = std::to_string(cover.bicliques.size());
  fam.metadata["leftovers"] = std::to_string(cover.leftovers.size());
  return fam;
}

std::vector<BicliqueSides> tile_biclique(int n, int t, int s) {
  if (t < 1 || s < t || s > n) throw std::invalid_argument("tiling needs 1 <= t <= s <= n");
  std::vector<BicliqueSides> out;
  for (int r = 0; r < (n + t - 1) / t; ++r)
    for (int c = 0; c < (n + s - 1) / s; ++c) {
      BicliqueSides b;
      for (int i = 0; i < t; ++i) b.left.push_back((r * t + i) % n);
      for (int i = 0; i < s; ++i) b.right.push_back(n + (c * s + i) % n);
      std::sort(b.left.begin(), b.left.end());
      std::sort(b.right.begin(), b.right.end());
      out.push_back(std::move(b));
    }
  return out;
}

}  // namespace sepsys
