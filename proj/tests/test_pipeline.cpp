#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "sepsys/generators.hpp"
#include "sepsys/pipeline.hpp"

using namespace sepsys;

namespace {

SubdivisionCert clique_cert(const Graph& g, int m) {
  auto r = find_balanced_clique_subdivision(g, m);
  if (!r.cert) throw std::runtime_error("no clique subdivision");
  return *r.cert;
}

std::vector<EdgeId> cycle_edges(const Graph& g, const std::vector<Vertex>& cyc) {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < cyc.size(); ++i) out.push_back(*g.edge_id(cyc[i], cyc[(i + 1) % cyc.size()]));
  return out;
}

// Each edge of the gadget's cycle lies in exactly three of its six certificates.
void expect_exactly_three(const Graph& g, const DerivedGadget& gd) {
  ASSERT_EQ(gd.certs.size(), 6u);
  for (EdgeId e : cycle_edges(g, gd.cycle)) {
    int hits = 0;
    for (const auto& c : gd.certs) {
      auto es = c.host_edges(g);
      hits += std::binary_search(es.begin(), es.end(), e) ? 1 : 0;
    }
    EXPECT_EQ(hits, 3) << "edge " << e;
  }
}

}  // namespace

TEST(EmbedHMinusF, KTwoLeavesTwoBranchVertices) {
  Graph g = gen::complete(12);
  auto kr = clique_cert(g, 6);
  auto c = embed_h_minus_f(kr, gen::complete(2), 0, kr.branch_vertices[0], kr.branch_vertices[1], {});
  EXPECT_EQ(c.pattern.num_vertices(), 2);
  EXPECT_EQ(c.pattern.num_edges(), 0);
  EXPECT_EQ(c.branch_vertices, (std::vector<Vertex>{kr.branch_vertices[0], kr.branch_vertices[1]}));
  EXPECT_TRUE(verify_subdivision(g, c));
}

TEST(EmbedHMinusF, TriangleBecomesPathThroughThirdVertex) {
  Graph g = gen::complete(12);
  auto kr = clique_cert(g, 5);
  Graph h = gen::complete(3);
  const EdgeId f = *h.edge_id(1, 2);
  const Vertex u = kr.branch_vertices[3], v = kr.branch_vertices[4];
  auto c = embed_h_minus_f(kr, h, f, u, v, {});
  ASSERT_TRUE(verify_subdivision(g, c));
  EXPECT_EQ(c.branch_vertices[1], u);
  EXPECT_EQ(c.branch_vertices[2], v);
  const Vertex w = c.branch_vertices[0];
  EXPECT_TRUE(w != u && w != v);
  ASSERT_EQ(c.branch_paths.size(), 2u);
  std::set<EdgeId> kr_edges;
  for (EdgeId e : kr.host_edges(g)) kr_edges.insert(e);
  for (EdgeId e : c.host_edges(g)) EXPECT_TRUE(kr_edges.count(e));
}

TEST(EmbedHMinusF, PathDropsFirstEdge) {
  Graph g = gen::complete(12);
  auto kr = clique_cert(g, 5);
  Graph h = gen::path(3);
  const EdgeId f = *h.edge_id(0, 1);
  const Vertex u = kr.branch_vertices[0], v = kr.branch_vertices[1];
  auto c = embed_h_minus_f(kr, h, f, u, v, {});
  ASSERT_TRUE(verify_subdivision(g, c));
  ASSERT_EQ(c.branch_paths.size(), 1u);
  EXPECT_EQ(c.branch_paths[0].front(), v);
}

TEST(EmbedHMinusF, ExcludedVerticesAreSkipped) {
  Graph g = gen::complete(12);
  auto kr = clique_cert(g, 5);
  Graph h = gen::complete(3);
  const Vertex u = kr.branch_vertices[0], v = kr.branch_vertices[1];
  std::vector<Vertex> excluded{kr.branch_vertices[2]};
  auto c = embed_h_minus_f(kr, h, *h.edge_id(1, 2), u, v, excluded);
  std::vector<Vertex> free;
  for (Vertex x : kr.branch_vertices)
    if (x != u && x != v && x != excluded[0]) free.push_back(x);
  EXPECT_EQ(c.branch_vertices[0], *std::min_element(free.begin(), free.end()));
  std::vector<Vertex> all_but_two(kr.branch_vertices.begin() + 2, kr.branch_vertices.end());
  EXPECT_THROW(embed_h_minus_f(kr, h, *h.edge_id(1, 2), u, v, all_but_two), std::invalid_argument);
}

TEST(DeriveSix, KTwoOnK20) {
  Graph g = gen::complete(20);
  auto r = separate_three_connected(g, gen::complete(2));
  ASSERT_FALSE(r.fallback) << r.fallback_reason;
  ASSERT_FALSE(r.gadgets.empty());
  for (const auto& gd : r.gadgets) {
    expect_exactly_three(g, gd);
    std::set<std::vector<Vertex>> distinct;
    for (const auto& c : gd.certs) {
      EXPECT_TRUE(verify_subdivision(g, c));
      EXPECT_EQ(c.pattern.num_edges(), 1);
      distinct.insert(c.branch_paths[0].vertices);
    }
    EXPECT_EQ(distinct.size(), 6u);
  }
}

TEST(SeparateThreeConnected, SmallHostsFallBack) {
  auto k4 = separate_three_connected(gen::complete(4), gen::complete(2));
  EXPECT_TRUE(k4.fallback);
  EXPECT_EQ(k4.family.size(), 6u);
  auto prism = separate_three_connected(gen::prism(), gen::complete(3));
  EXPECT_TRUE(prism.fallback);
  EXPECT_EQ(prism.family.size(), 9u);
  EXPECT_THROW(separate_three_connected(gen::cycle(5), gen::complete(3)), std::invalid_argument);
  EXPECT_THROW(separate_three_connected(gen::complete(5), Graph(2, {})), std::invalid_argument);
}

TEST(SeparateThreeConnected, K24WithTriangle) {
  Graph g = gen::complete(24);
  Graph h = gen::complete(3);
  auto r = separate_three_connected(g, h);
  ASSERT_FALSE(r.fallback) << r.fallback_reason;
  EXPECT_TRUE(check_strong_separation(all_edges(g), r.family));
  std::size_t sum = 0;
  for (const auto& q : r.reports) sum += q.system_size;
  EXPECT_LE(r.family.size(), 6 * sum);
  ASSERT_TRUE(r.k);
  EXPECT_TRUE(balance_profile(*r.k).is_balanced(r.ell));
  for (const auto& m : r.family.members())
    if (const auto* c = std::get_if<SubdivisionCert>(&m.data)) {
      EXPECT_TRUE(verify_subdivision(g, *c));
      EXPECT_TRUE(balance_profile(*c).is_almost_balanced(r.ell));
    }
  for (const auto& gd : r.gadgets) expect_exactly_three(g, gd);
}

TEST(SeparateThreeConnected, DegreeGateIsOptIn) {
  PipelineConfig cfg;
  cfg.degree_gate = true;
  auto r = separate_three_connected(gen::complete(24), gen::complete(3), cfg);
  EXPECT_TRUE(r.fallback);
  EXPECT_EQ(r.fallback_reason, "degree_gate");
  cfg.c_balance = 0.01;
  EXPECT_FALSE(separate_three_connected(gen::complete(24), gen::complete(3), cfg).fallback);
}

TEST(SeparateThreeConnected, BudgetFallback) {
  PipelineConfig cfg;
  cfg.budget = 5;
  auto r = separate_three_connected(gen::gnp(40, 0.9, 0), gen::complete(2), cfg);
  EXPECT_TRUE(r.fallback);
  EXPECT_EQ(r.fallback_reason, "search_budget");
  EXPECT_TRUE(check_strong_separation(all_edges(gen::gnp(40, 0.9, 0)), r.family));
}

TEST(SeparateGraph, TreeGivesAllEdges) {
  Graph g = gen::random_tree(20, 7);
  auto r = separate_graph(g, gen::complete(3));
  EXPECT_EQ(r.family.size(), static_cast<std::size_t>(g.num_edges()));
  EXPECT_TRUE(check_strong_separation(all_edges(g), r.family));
}

TEST(SeparateGraph, TwoTriangles) {
  Graph g = gen::two_triangles();
  auto r = separate_graph(g, gen::complete(3));
  EXPECT_EQ(r.family.size(), 5u);
  for (const auto& m : r.family.members()) EXPECT_TRUE(std::holds_alternative<SingleEdge>(m.data));
  EXPECT_TRUE(check_strong_separation(all_edges(g), r.family));
}

TEST(SeparateGraph, K24WithPendantPathIsMixed) {
  Graph g = gen::with_pendant_path(gen::complete(24), 0, 5);
  auto r = separate_graph(g, gen::complete(2));
  EXPECT_TRUE(check_strong_separation(all_edges(g), r.family));
  EXPECT_TRUE(oracle::strongly_separates(oracle::member_sets(r.family), oracle::all_ids(g)));
  bool built = false;
  int single_bags = 0;
  for (const auto& b : r.bags) {
    if (b.kind == TorsoKind::three_connected) built = !b.fallback;
    if (b.kind == TorsoKind::single_real_edge) ++single_bags;
  }
  EXPECT_TRUE(built);
  EXPECT_EQ(single_bags, 5);
  auto census = balance_census(r.family);
  EXPECT_GT(census.single_edges, 0u);
  EXPECT_GT(census.balanced + census.almost_balanced, 0u);
}

TEST(SeparateGraph, MetricsReport) {
  Graph g = gen::petersen();
  Graph h = gen::complete(3);
  auto r = separate_graph(g, h);
  auto text = format_metrics(g, h, r);
  EXPECT_NE(text.find("n=10\n"), std::string::npos);
  EXPECT_NE(text.find("family_size=15\n"), std::string::npos);
  EXPECT_NE(text.find("fallback="), std::string::npos);
  EXPECT_THROW(separate_graph(Graph(3, {}), h), std::invalid_argument);
}
