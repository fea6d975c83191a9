#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sepsys/cycles.hpp"
#include "sepsys/generators.hpp"

using namespace sepsys;

namespace {

void expect_system(const Graph& g, const std::string& name) {
  auto f = build_sub_k3_system(g, all_edges(g));
  EXPECT_TRUE(check_strong_separation(all_edges(g), f)) << name;
  EXPECT_TRUE(oracle::strongly_separates(oracle::member_sets(f), oracle::all_ids(g))) << name;
  EXPECT_LE(f.size(), static_cast<std::size_t>(g.num_edges())) << name;
  for (const auto& m : f.members())
    if (const auto* c = std::get_if<SubdivisionCert>(&m.data)) {
      EXPECT_TRUE(verify_subdivision(g, *c)) << name;
      EXPECT_EQ(c->pattern.num_edges(), 3);
    }
}

}  // namespace

TEST(CycleCert, BranchVerticesAtThirds) {
  auto c = cycle_cert({5, 6, 7, 8, 9, 10});
  EXPECT_EQ(c.branch_vertices, (std::vector<Vertex>{5, 7, 9}));
  EXPECT_TRUE(verify_subdivision(gen::complete(11), c));
  EXPECT_EQ(balance_profile(c).kind, BalanceProfile::Kind::balanced);
}

TEST(SubK3System, TriangleNeedsSingleEdges) {
  auto f = build_sub_k3_system(gen::complete(3), all_edges(gen::complete(3)));
  EXPECT_EQ(f.size(), 3u);
  for (const auto& m : f.members()) EXPECT_TRUE(std::holds_alternative<SingleEdge>(m.data));
}

TEST(SubK3System, CycleNeedsSingleEdges) {
  for (int n : {4, 7, 12}) {
    auto f = build_sub_k3_system(gen::cycle(n), all_edges(gen::cycle(n)));
    EXPECT_EQ(f.size(), static_cast<std::size_t>(n));
    EXPECT_EQ(f.count_certs(), 0u);
  }
}

TEST(SubK3System, K4WithinBound) {
  Graph g = gen::complete(4);
  auto f = build_sub_k3_system(g, all_edges(g));
  EXPECT_TRUE(check_strong_separation(all_edges(g), f));
  EXPECT_LE(f.size(), 41u * 4u);
  EXPECT_GT(f.count_certs(), 0u);
}

TEST(SubK3System, Corpus) {
  expect_system(gen::complete(10), "k10");
  expect_system(gen::petersen(), "petersen");
  expect_system(gen::prism(), "prism");
  expect_system(gen::theta(), "theta");
  expect_system(gen::grid(4, 5), "grid");
  expect_system(gen::random_tree(12, 1), "tree");
  for (std::uint64_t s = 0; s < 30; ++s) expect_system(gen::gnp(12, 0.5, s), "gnp " + std::to_string(s));
}

TEST(SubK3System, PartialGround) {
  Graph g = gen::complete(6);
  Bitset ground = make_edge_set(static_cast<std::size_t>(g.num_edges()), {0, 3, 7, 11});
  auto f = build_sub_k3_system(g, ground);
  EXPECT_TRUE(check_strong_separation(ground, f));
  EXPECT_LE(f.size(), 4u);
}

TEST(SubK3System, DenseGraphUsesFewMembers) {
  Graph g = gen::complete(30);
  auto f = build_sub_k3_system(g, all_edges(g));
  EXPECT_TRUE(check_strong_separation(all_edges(g), f));
  EXPECT_LT(f.size(), static_cast<std::size_t>(g.num_edges()));
  EXPECT_EQ(f.count_certs(), f.size());
}
