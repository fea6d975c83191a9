#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "oracles.hpp"
#include "sepsys/bipartite.hpp"
#include "sepsys/connectivity.hpp"
#include "sepsys/cycles.hpp"
#include "sepsys/family.hpp"
#include "sepsys/generators.hpp"

using namespace sepsys;
namespace fs = std::filesystem;

namespace {

SeparatingFamily singles(const Graph& g) {
  SeparatingFamily f(g);
  for (EdgeId e = 0; e < g.num_edges(); ++e) f.add_edge(e);
  return f;
}

SeparatingFamily random_family(const Graph& g, std::mt19937_64& rng, int members) {
  SeparatingFamily f(g);
  for (int i = 0; i < members; ++i) {
    std::vector<EdgeId> ids;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
      if (gen::unit_draw(rng) < 0.5) ids.push_back(e);
    f.add_edge_set(ids);
  }
  return f;
}

fs::path scratch_dir(const std::string& name) {
  auto d = fs::temp_directory_path() / ("sepsys_test_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST(StrongSeparation, AllSingleEdgesPass) {
  Graph g = gen::petersen();
  EXPECT_TRUE(check_strong_separation(all_edges(g), singles(g)));
}

TEST(StrongSeparation, WholeGraphFailsWithFirstPair) {
  Graph g = gen::path(3);
  SeparatingFamily f(g);
  f.add_edge_set({0, 1});
  auto v = check_strong_separation(all_edges(g), f);
  EXPECT_FALSE(v);
  ASSERT_TRUE(v.failing_pair);
  EXPECT_EQ(*v.failing_pair, std::make_pair(EdgeId{0}, EdgeId{1}));
}

TEST(StrongSeparation, KnnOfTwo) {
  auto f = build_knn_system(2);
  EXPECT_EQ(f.size(), 4u);
  Graph host = gen::complete_bipartite(2, 2);
  EXPECT_TRUE(check_strong_separation(all_edges(host), f));
  EXPECT_TRUE(oracle::strongly_separates(oracle::member_sets(f), oracle::all_ids(host)));
}

TEST(StrongSeparation, EmptyOrSingletonGroundIsVacuous) {
  Graph g = gen::cycle(4);
  SeparatingFamily empty(g);
  EXPECT_TRUE(check_strong_separation(Bitset(4), empty));
  EXPECT_TRUE(check_strong_separation(make_edge_set(4, {2}), empty));
}

TEST(StrongSeparation, GroundRestriction) {
  Graph g = gen::cycle(4);
  SeparatingFamily f(g);
  f.add_edge_set({0, 1});
  f.add_edge_set({2});
  EXPECT_TRUE(check_strong_separation(make_edge_set(4, {1, 2}), f));
  EXPECT_FALSE(check_strong_separation(make_edge_set(4, {0, 1}), f));
}

TEST(WeakSeparation, Examples) {
  Graph g = gen::path(3);
  SeparatingFamily one(g);
  one.add_edge(0);
  EXPECT_TRUE(check_weak_separation(all_edges(g), one));
  EXPECT_FALSE(check_strong_separation(all_edges(g), one));
  SeparatingFamily none(g);
  auto v = check_weak_separation(all_edges(g), none);
  EXPECT_FALSE(v);
  EXPECT_TRUE(v.failing_pair);
}

TEST(Separation, AgreesWithOracleAndStrongImpliesWeak) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = gen::gnp(7, 0.6, static_cast<std::uint64_t>(trial));
    if (g.num_edges() < 2) continue;
    auto f = random_family(g, rng, 1 + trial % 6);
    auto ground = oracle::all_ids(g);
    auto sets = oracle::member_sets(f);
    bool strong = check_strong_separation(all_edges(g), f).ok;
    bool weak = check_weak_separation(all_edges(g), f).ok;
    EXPECT_EQ(strong, oracle::strongly_separates(sets, ground));
    EXPECT_EQ(weak, oracle::weakly_separates(sets, ground));
    if (strong) EXPECT_TRUE(weak);
  }
}

TEST(Separation, MonotoneUnderAddingMembers) {
  std::mt19937_64 rng(9);
  Graph g = gen::complete(5);
  auto f = build_sub_k3_system(g, all_edges(g));
  ASSERT_TRUE(check_strong_separation(all_edges(g), f));
  for (int i = 0; i < 20; ++i) {
    f.append(random_family(g, rng, 1));
    EXPECT_TRUE(check_strong_separation(all_edges(g), f));
  }
  // Deleting members can only turn pass into fail, never back.
  bool failed = false;
  while (!f.empty()) {
    f.erase(static_cast<std::size_t>(rng() % f.size()));
    bool ok = check_strong_separation(all_edges(g), f).ok;
    if (failed) EXPECT_FALSE(ok);
    failed = failed || !ok;
  }
  EXPECT_TRUE(failed);
}

TEST(Members, ValidationRejectsForeignPieces) {
  Graph g = gen::cycle(4);
  SeparatingFamily f(g);
  EXPECT_THROW(f.add_edge(4), std::invalid_argument);
  EXPECT_THROW(f.add_edge_set({0, 9}), std::invalid_argument);
  EXPECT_THROW(f.add_biclique(g, {0}, {2}), std::invalid_argument);
  EXPECT_THROW(f.add_biclique(g, {}, {1}), std::invalid_argument);
  SubdivisionCert bad{gen::complete(3), {0, 1, 2}, {Path{{0, 1}}, Path{{0, 2}}, Path{{1, 2}}}};
  EXPECT_THROW(f.add_cert(g, bad), std::invalid_argument);
  f.add_biclique(g, {0, 2}, {1, 3});
  EXPECT_EQ(f[0].edges.count(), 4u);
}

TEST(FamilyIo, RoundTripThroughDisk) {
  Graph g = gen::complete(5);
  SeparatingFamily f(g);
  f.add_edge(3);
  f.add_cert(g, SubdivisionCert{gen::complete(3), {0, 1, 2}, {Path{{0, 1}}, Path{{0, 3, 2}}, Path{{1, 2}}}});
  f.add_biclique(g, {0}, {1, 2});
  f.add_edge_set({0, 5, 9});
  auto dir = scratch_dir("roundtrip");
  write_family(dir / "fam.txt", f);
  EXPECT_TRUE(fs::exists(dir / "fam.txt.certs" / "0.cert"));
  auto back = read_family(dir / "fam.txt", g);
  ASSERT_EQ(back.size(), f.size());
  for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(back[i].edges, f[i].edges);
  EXPECT_EQ(back.count_certs(), 1u);

  // Rewriting gives identical bytes.
  auto text = format_family(back, "fam.txt.certs/");
  std::ifstream in(dir / "fam.txt");
  std::string disk((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text.family, disk);
}

TEST(FamilyIo, ParseErrors) {
  Graph g = gen::cycle(4);
  auto line_of = [&](const std::string& text) {
    try {
      parse_family(text, g, {});
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  const std::string head = "family " + host_hash_hex(g) + " ";
  EXPECT_EQ(line_of(head + "2\nedge 0\nedge 7\n"), 3);
  EXPECT_EQ(line_of(head + "1\nbogus 1\n"), 2);
  EXPECT_EQ(line_of(head + "2\nedge 0\n"), 2);
  EXPECT_EQ(line_of(head + "1\ncert missing.cert\n"), 2);
  EXPECT_EQ(line_of("family 0000000000000000 0\n"), 1);
  EXPECT_EQ(line_of(head + "1\nbiclique 0 | 2\n"), 2);
  EXPECT_EQ(line_of(head + "1\nset 0,x\n"), 2);
  EXPECT_NO_THROW(parse_family(head + "2\nset 0,1\nbiclique 0 | 1,3\n", g, {}));
}

TEST(LiftFamily, MapsComponentFamilyToHost) {
  Graph g(7, {{0, 1}, {4, 5}, {5, 6}, {4, 6}});
  std::vector<Vertex> comp{4, 5, 6};
  auto sub = induced_subgraph(g, comp);
  auto local = build_sub_k3_system(sub.graph, all_edges(sub.graph));
  auto lifted = lift_family(g, sub, local);
  EXPECT_EQ(lifted.size(), local.size());
  EXPECT_TRUE(check_strong_separation(make_edge_set(4, {1, 2, 3}), lifted));
  for (const auto& m : lifted.members()) EXPECT_FALSE(m.edges.test(0));
}
