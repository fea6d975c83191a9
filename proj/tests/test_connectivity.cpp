#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "sepsys/bitset.hpp"
#include "sepsys/connectivity.hpp"
#include "sepsys/generators.hpp"

using namespace sepsys;

TEST(ThreeConnected, SmallExamples) {
  EXPECT_TRUE(is_three_connected(gen::complete(4)).three_connected);
  EXPECT_TRUE(is_three_connected(gen::petersen()).three_connected);
  EXPECT_TRUE(is_three_connected(gen::prism()).three_connected);

  auto c5 = is_three_connected(gen::cycle(5));
  EXPECT_FALSE(c5.three_connected);
  EXPECT_EQ(c5.reason, ConnectivityVerdict::Reason::two_separator);
  ASSERT_EQ(c5.separator.size(), 2u);
  EXPECT_FALSE(gen::cycle(5).adjacent(c5.separator[0], c5.separator[1]));

  EXPECT_EQ(is_three_connected(gen::complete(3)).reason, ConnectivityVerdict::Reason::too_few_vertices);
  EXPECT_EQ(is_three_connected(gen::path(5)).reason, ConnectivityVerdict::Reason::cut_vertex);
  EXPECT_EQ(is_three_connected(Graph(4, {{0, 1}, {2, 3}})).reason, ConnectivityVerdict::Reason::disconnected);
}

TEST(ThreeConnected, AgreesWithBruteForce) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Graph g = gen::gnp(5 + static_cast<int>(seed % 6), 0.6, seed);
    EXPECT_EQ(is_three_connected(g).three_connected, oracle::three_connected(g)) << "seed " << seed;
  }
}

TEST(Components, CountsAndArticulationPoints) {
  Graph g(6, {{0, 1}, {1, 2}, {3, 4}});
  auto c = connected_components(g);
  EXPECT_EQ(c.count, 3);
  EXPECT_EQ(c.id[0], c.id[2]);
  EXPECT_NE(c.id[0], c.id[3]);
  EXPECT_EQ(articulation_points(gen::path(4)), (std::vector<Vertex>{1, 2}));
  EXPECT_TRUE(articulation_points(gen::cycle(6)).empty());
}

TEST(DisjointPaths, FanInK5) {
  std::vector<Vertex> s{0}, t{2, 3, 4};
  auto paths = disjoint_paths(gen::complete(5), s, t, 3);
  ASSERT_TRUE(paths);
  ASSERT_EQ(paths->size(), 3u);
  std::set<Vertex> ends;
  for (const auto& p : *paths) {
    EXPECT_EQ(p.length(), 1);
    EXPECT_EQ(p.front(), 0);
    ends.insert(p.back());
  }
  EXPECT_EQ(ends, (std::set<Vertex>{2, 3, 4}));
}

TEST(DisjointPaths, PathHasOnlyOneRoute) {
  std::vector<Vertex> s{0}, t{3};
  EXPECT_FALSE(disjoint_paths(gen::path(4), s, t, 2));
  EXPECT_TRUE(disjoint_paths(gen::path(4), s, t, 1));
}

TEST(DisjointPaths, GridCorners) {
  Graph g = gen::grid(4, 4);
  std::vector<Vertex> s{0}, t{15};
  auto paths = disjoint_paths(g, s, t, 2);
  ASSERT_TRUE(paths);
  std::set<Vertex> inner;
  for (const auto& p : *paths) {
    EXPECT_TRUE(p.is_valid_in(g));
    EXPECT_EQ(p.length(), 6);  // monotone
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) EXPECT_TRUE(inner.insert(p.vertices[i]).second);
  }
  EXPECT_FALSE(disjoint_paths(g, s, t, 3));
}

TEST(DisjointPaths, RejectsBadInput) {
  std::vector<Vertex> s{0}, t{0};
  EXPECT_THROW(disjoint_paths(gen::complete(4), s, t, 1), std::invalid_argument);
  std::vector<Vertex> t2{1};
  EXPECT_THROW(disjoint_paths(gen::complete(4), s, t2, 0), std::invalid_argument);
}

TEST(DisjointPaths, ThreeConnectedGivesThreePaths) {
  for (const Graph& g : {gen::complete(6), gen::petersen(), gen::prism()}) {
    ASSERT_TRUE(oracle::three_connected(g));
    std::vector<Vertex> s{0, 1, 2}, t{3, 4, 5};
    auto paths = disjoint_paths(g, s, t, 3);
    ASSERT_TRUE(paths);
    std::set<Vertex> used;
    for (const auto& p : *paths) {
      EXPECT_TRUE(p.is_valid_in(g));
      for (Vertex v : p.vertices) EXPECT_TRUE(used.insert(v).second);
    }
  }
}

TEST(DisjointPaths, BlockedVerticesAreAvoided) {
  std::vector<Vertex> s{0}, t{2}, blocked{1};
  auto p = disjoint_paths(gen::cycle(6), s, t, 1, blocked);
  ASSERT_TRUE(p);
  EXPECT_EQ((*p)[0].vertices, (std::vector<Vertex>{0, 5, 4, 3, 2}));
}

TEST(ShortestPath, LexicographicTieBreak) {
  Graph g = gen::cycle(4);
  Bitset all(4);
  all.set_all();
  auto p = shortest_path(g, 0, 2, all);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->vertices, (std::vector<Vertex>{0, 1, 2}));
  Bitset some(4);
  some.set(*g.edge_id(0, 3));
  some.set(*g.edge_id(2, 3));
  EXPECT_EQ(shortest_path(g, 0, 2, some)->vertices, (std::vector<Vertex>{0, 3, 2}));
  some.reset(*g.edge_id(2, 3));
  EXPECT_FALSE(shortest_path(g, 0, 2, some));
}

TEST(TwoSeparators, Examples) {
  EXPECT_TRUE(two_separators_bruteforce(gen::complete(4)).empty());

  auto theta = two_separators_bruteforce(gen::theta());
  ASSERT_EQ(theta.size(), 1u);
  EXPECT_EQ(theta[0].vertices, (std::vector<Vertex>{0, 1}));
  EXPECT_TRUE(theta[0].tight);
  EXPECT_TRUE(theta[0].totally_nested);

  // In C_4 the two antipodal pairs cross each other, so neither is totally nested.
  auto c4 = two_separators_bruteforce(gen::cycle(4));
  ASSERT_EQ(c4.size(), 2u);
  for (const auto& s : c4) {
    EXPECT_TRUE(s.tight);
    EXPECT_FALSE(s.totally_nested);
  }
  EXPECT_FALSE(separators_nested(gen::cycle(4), c4[0].vertices, c4[1].vertices));
}

TEST(TwoSeparators, CutVerticesOfAPath) {
  auto seps = two_separators_bruteforce(gen::path(4));
  ASSERT_GE(seps.size(), 2u);
  EXPECT_EQ(seps[0].vertices, (std::vector<Vertex>{1}));
  EXPECT_EQ(seps[1].vertices, (std::vector<Vertex>{2}));
  EXPECT_TRUE(seps[0].totally_nested);
  EXPECT_TRUE(seps[1].totally_nested);
}

TEST(TwoSeparators, RefusesLargeOrDisconnected) {
  EXPECT_THROW(two_separators_bruteforce(gen::cycle(25)), std::invalid_argument);
  EXPECT_THROW(two_separators_bruteforce(Graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
}
