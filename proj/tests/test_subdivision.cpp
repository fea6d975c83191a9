#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "sepsys/generators.hpp"
#include "sepsys/subdivision.hpp"

using namespace sepsys;

namespace {

// Cert with the given branch path lengths on fresh vertices; only lengths matter.
SubdivisionCert with_lengths(const Graph& pattern, const std::vector<int>& lengths) {
  SubdivisionCert c{pattern, {}, {}};
  for (int i = 0; i < pattern.num_vertices(); ++i) c.branch_vertices.push_back(i);
  int next = pattern.num_vertices();
  for (EdgeId e = 0; e < pattern.num_edges(); ++e) {
    Path p{{pattern.edge(e).u}};
    for (int k = 1; k < lengths[e]; ++k) p.vertices.push_back(next++);
    p.vertices.push_back(pattern.edge(e).v);
    c.branch_paths.push_back(p);
  }
  return c;
}

}  // namespace

TEST(VerifySubdivision, TriangleInK4) {
  Graph g = gen::complete(4);
  SubdivisionCert c{gen::complete(3), {0, 1, 2}, {Path{{0, 1}}, Path{{0, 2}}, Path{{1, 2}}}};
  EXPECT_TRUE(verify_subdivision(g, c));
}

TEST(VerifySubdivision, SharedInternalVertexFails) {
  Graph g = gen::complete(6);
  SubdivisionCert c{gen::complete(3), {0, 1, 2}, {Path{{0, 3, 1}}, Path{{0, 3, 2}}, Path{{1, 2}}}};
  auto v = verify_subdivision(g, c);
  EXPECT_FALSE(v);
  EXPECT_FALSE(v.reason.empty());
}

TEST(VerifySubdivision, BranchVertexInsidePathFails) {
  Graph g = gen::complete(5);
  SubdivisionCert c{gen::complete(3), {0, 1, 2}, {Path{{0, 2, 1}}, Path{{0, 2}}, Path{{1, 2}}}};
  EXPECT_FALSE(verify_subdivision(g, c));
}

TEST(VerifySubdivision, WrongEndpointsOrMissingEdgeFail) {
  Graph g = gen::cycle(6);
  SubdivisionCert reversed{gen::complete(3), {0, 2, 4}, {Path{{2, 1, 0}}, Path{{0, 5, 4}}, Path{{2, 3, 4}}}};
  EXPECT_FALSE(verify_subdivision(g, reversed));
  SubdivisionCert missing{gen::complete(3), {0, 2, 4}, {Path{{0, 2}}, Path{{0, 5, 4}}, Path{{2, 3, 4}}}};
  EXPECT_FALSE(verify_subdivision(g, missing));
  SubdivisionCert repeated{gen::complete(3), {0, 0, 4}, {Path{{0}}, Path{{0, 5, 4}}, Path{{0, 5, 4}}}};
  EXPECT_FALSE(verify_subdivision(g, repeated));
}

TEST(VerifySubdivision, HexagonIsTwoBalancedTriangle) {
  Graph g = gen::cycle(6);
  SubdivisionCert c{gen::complete(3), {0, 2, 4}, {Path{{0, 1, 2}}, Path{{0, 5, 4}}, Path{{2, 3, 4}}}};
  ASSERT_TRUE(verify_subdivision(g, c));
  auto b = balance_profile(c);
  EXPECT_EQ(b.kind, BalanceProfile::Kind::balanced);
  EXPECT_EQ(b.ell, 2);
  EXPECT_EQ(c.host_edges(g).size(), 6u);
  EXPECT_EQ(c.host_vertices().size(), 6u);
}

TEST(BalanceProfile, Examples) {
  auto all2 = balance_profile(with_lengths(gen::complete(4), {2, 2, 2, 2, 2, 2}));
  EXPECT_EQ(all2.kind, BalanceProfile::Kind::balanced);
  EXPECT_TRUE(all2.is_balanced(2));
  EXPECT_TRUE(all2.is_almost_balanced(2));

  auto almost = balance_profile(with_lengths(gen::cycle(4), {2, 2, 5, 2}));
  EXPECT_EQ(almost.kind, BalanceProfile::Kind::almost_balanced);
  EXPECT_EQ(almost.ell, 2);
  EXPECT_FALSE(almost.is_balanced(2));
  EXPECT_TRUE(almost.is_almost_balanced(2));
  EXPECT_FALSE(almost.is_almost_balanced(5));

  auto un = balance_profile(with_lengths(gen::complete(3), {1, 2, 3}));
  EXPECT_EQ(un.kind, BalanceProfile::Kind::unbalanced);
  EXPECT_EQ(un.lengths, (std::vector<int>{1, 2, 3}));
}

TEST(BalanceProfile, TwoPathsOfDifferentLength) {
  // Either length can be the exceptional one; the smaller is reported.
  auto b = balance_profile(with_lengths(gen::path(3), {4, 1}));
  EXPECT_EQ(b.kind, BalanceProfile::Kind::almost_balanced);
  EXPECT_EQ(b.ell, 1);
  EXPECT_TRUE(b.is_almost_balanced(4));
}

TEST(CliqueSearch, CompleteGraphGivesOneBalanced) {
  auto r = find_balanced_clique_subdivision(gen::complete(8), 6);
  ASSERT_EQ(r.status, CliqueSearchResult::Status::found);
  EXPECT_EQ(r.ell, 1);
  ASSERT_TRUE(r.cert);
  EXPECT_TRUE(verify_subdivision(gen::complete(8), *r.cert));
  EXPECT_TRUE(balance_profile(*r.cert).is_balanced(1));
}

TEST(CliqueSearch, FiveCycleRefuted) {
  auto r = find_balanced_clique_subdivision(gen::cycle(5), 3);
  EXPECT_EQ(r.status, CliqueSearchResult::Status::refuted);
  EXPECT_FALSE(r.cert);
}

TEST(CliqueSearch, SixCycleTwoBalanced) {
  auto r = find_balanced_clique_subdivision(gen::cycle(6), 3);
  ASSERT_EQ(r.status, CliqueSearchResult::Status::found);
  EXPECT_EQ(r.ell, 2);
  EXPECT_TRUE(verify_subdivision(gen::cycle(6), *r.cert));
}

TEST(CliqueSearch, PetersenHasBalancedK4) {
  Graph g = gen::petersen();
  auto r = find_balanced_clique_subdivision(g, 4);
  ASSERT_EQ(r.status, CliqueSearchResult::Status::found);
  EXPECT_TRUE(verify_subdivision(g, *r.cert));
  EXPECT_TRUE(balance_profile(*r.cert).is_balanced(r.ell));
}

TEST(CliqueSearch, BudgetIsReported) {
  auto r = find_balanced_clique_subdivision(gen::gnp(40, 0.9, 0), 16, 5);
  EXPECT_EQ(r.status, CliqueSearchResult::Status::budget_exhausted);
  EXPECT_THROW(find_balanced_clique_subdivision(gen::complete(3), 1), std::invalid_argument);
}

TEST(QuarterSplit, K16InsideK20) {
  Graph g = gen::complete(20);
  auto r = find_balanced_clique_subdivision(g, 16);
  ASSERT_TRUE(r.cert);
  auto q = quarter_split(*r.cert, 2);
  ASSERT_EQ(q.size(), 4u);
  std::set<Vertex> seen;
  for (const auto& c : q) {
    EXPECT_EQ(c.pattern.num_vertices(), 4);
    EXPECT_TRUE(verify_subdivision(g, c));
    EXPECT_TRUE(balance_profile(c).is_balanced(1));
    for (Vertex v : c.host_vertices()) EXPECT_TRUE(seen.insert(v).second);
  }
}

TEST(QuarterSplit, K12GivesTriangles) {
  Graph g = gen::complete(12);
  auto r = find_balanced_clique_subdivision(g, 12);
  ASSERT_TRUE(r.cert);
  auto q = quarter_split(*r.cert, 1);
  ASSERT_EQ(q.size(), 4u);
  for (const auto& c : q) EXPECT_EQ(c.pattern.num_edges(), 3);
}

TEST(QuarterSplit, WrongSizeThrows) {
  auto r = find_balanced_clique_subdivision(gen::complete(15), 15);
  ASSERT_TRUE(r.cert);
  EXPECT_THROW(quarter_split(*r.cert, 2), std::invalid_argument);
}

TEST(CertText, RoundTripAndErrors) {
  Graph g = gen::cycle(6);
  SubdivisionCert c{gen::complete(3), {0, 2, 4}, {Path{{0, 1, 2}}, Path{{0, 5, 4}}, Path{{2, 3, 4}}}};
  auto back = parse_cert(format_cert(c));
  EXPECT_EQ(back.branch_vertices, c.branch_vertices);
  ASSERT_EQ(back.branch_paths.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(back.branch_paths[i], c.branch_paths[i]);
  EXPECT_TRUE(verify_subdivision(g, back));

  std::string bad = format_cert(c);
  bad.replace(bad.find("path 1:"), 7, "path 9:");
  try {
    parse_cert(bad);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_GT(e.line(), 1);
  }
}

TEST(PathCert, IsKTwoSubdivision) {
  Graph g = gen::path(5);
  auto c = path_cert(Path{{0, 1, 2, 3}});
  EXPECT_TRUE(verify_subdivision(g, c));
  EXPECT_EQ(c.pattern.num_edges(), 1);
  EXPECT_EQ(oriented_branch_path(c, 1, 0).vertices, (std::vector<Vertex>{3, 2, 1, 0}));
}
