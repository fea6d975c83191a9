#include <gtest/gtest.h>

#include <algorithm>

#include "sepsys/bitset.hpp"
#include "sepsys/generators.hpp"
#include "sepsys/graph.hpp"

using namespace sepsys;

TEST(Graph, NormalizesEndpointsAndKeepsOrder) {
  Graph g(4, {{3, 1}, {0, 2}, {2, 1}});
  ASSERT_EQ(g.num_edges(), 3);
  EXPECT_EQ(g.edge(0), (Edge{1, 3}));
  EXPECT_EQ(g.edge(1), (Edge{0, 2}));
  EXPECT_EQ(g.edge(2), (Edge{1, 2}));
  EXPECT_EQ(*g.edge_id(3, 1), 0);
  EXPECT_FALSE(g.edge_id(0, 3));
  EXPECT_EQ(g.degree(1), 2);
}

TEST(Graph, RejectsLoopsParallelEdgesAndRange) {
  EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
}

TEST(Graph, EdgeListRoundTrip) {
  Graph g = gen::petersen();
  Graph back = parse_edge_list(format_edge_list(g));
  EXPECT_EQ(back.num_vertices(), 10);
  ASSERT_EQ(back.num_edges(), g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) EXPECT_EQ(back.edge(e), g.edge(e));
  EXPECT_EQ(host_hash(back), host_hash(g));
}

TEST(Graph, ParseErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("# comment\n3 2\n0 1\n1 x\n"), 4);
  EXPECT_EQ(line_of("3 2\n0 1\n"), 2);
  EXPECT_EQ(line_of("3 1\n2 1\n"), 2);
  EXPECT_EQ(line_of("3 1\n0 1\n0 2\n"), 3);
  EXPECT_EQ(line_of("3 1\n0 1\n0 1\n"), 3);
  EXPECT_EQ(line_of("3\n"), 1);
}

TEST(Graph, HostHashSeesEdgeOrder) {
  Graph a(3, {{0, 1}, {1, 2}});
  Graph b(3, {{1, 2}, {0, 1}});
  EXPECT_NE(host_hash(a), host_hash(b));
  EXPECT_EQ(host_hash_hex(a).size(), 16u);
}

TEST(Graph, InducedSubgraphMapsBack) {
  Graph g = gen::complete(5);
  std::vector<Vertex> keep{1, 3, 4};
  auto sub = induced_subgraph(g, keep);
  EXPECT_EQ(sub.graph.num_vertices(), 3);
  EXPECT_EQ(sub.graph.num_edges(), 3);
  for (EdgeId e = 0; e < sub.graph.num_edges(); ++e) {
    const auto& le = sub.graph.edge(e);
    const auto& pe = g.edge(sub.parent_edge[e]);
    EXPECT_EQ(std::minmax(sub.parent_vertex[le.u], sub.parent_vertex[le.v]), std::minmax(pe.u, pe.v));
  }
  EXPECT_EQ(sub.local_vertex(0), -1);
  EXPECT_EQ(sub.local_vertex(3), 1);
}

TEST(Graph, PathValidity) {
  Graph g = gen::cycle(5);
  EXPECT_TRUE((Path{{0, 1, 2}}).is_valid_in(g));
  EXPECT_FALSE((Path{{0, 2}}).is_valid_in(g));
  EXPECT_FALSE((Path{{0, 1, 0}}).is_valid_in(g));
  EXPECT_EQ((Path{{4, 0, 1}}).edge_ids(g).size(), 2u);
}

TEST(Generators, Sizes) {
  EXPECT_EQ(gen::complete(6).num_edges(), 15);
  EXPECT_EQ(gen::complete_bipartite(3, 4).num_edges(), 12);
  EXPECT_EQ(gen::grid(3, 4).num_edges(), 17);
  EXPECT_EQ(gen::prism().num_edges(), 9);
  EXPECT_EQ(gen::petersen().num_edges(), 15);
  EXPECT_EQ(gen::theta().num_vertices(), 5);
  EXPECT_EQ(gen::two_triangles().num_edges(), 5);
  EXPECT_EQ(gen::random_tree(30, 4).num_edges(), 29);
  EXPECT_EQ(gen::with_pendant_path(gen::complete(4), 0, 3).num_vertices(), 7);
}

TEST(Generators, SeededAndReproducible) {
  Graph a = gen::gnp(30, 0.4, 11), b = gen::gnp(30, 0.4, 11), c = gen::gnp(30, 0.4, 12);
  EXPECT_EQ(host_hash(a), host_hash(b));
  EXPECT_NE(host_hash(a), host_hash(c));
}

TEST(Bitset, BasicOps) {
  Bitset a(130), b(130);
  a.set(0);
  a.set(64);
  a.set(129);
  b.set(64);
  EXPECT_EQ(a.count(), 3u);
  EXPECT_TRUE(b.is_subset_of(a));
  EXPECT_FALSE(a.is_subset_of(b));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_EQ(a.count_and_not(b), 2u);
  EXPECT_EQ(a.to_indices(), (std::vector<std::size_t>{0, 64, 129}));
  Bitset all(130);
  all.set_all();
  EXPECT_EQ(all.count(), 130u);
  all.subtract(a);
  EXPECT_EQ(all.count(), 127u);
  EXPECT_EQ(a.find_next(64), 129u);
  EXPECT_EQ(a.find_next(129), Bitset::npos);
}
