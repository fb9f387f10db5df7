#include <gtest/gtest.h>

#include <random>

#include "critindep/critical.hpp"
#include "critindep/generators.hpp"
#include "critindep/oracle.hpp"
#include "named_graphs.hpp"

namespace critindep {
namespace {

using testing::graph_of;
using testing::triangle_with_tail;

TEST(CriticalDifference, Examples) {
  EXPECT_EQ(critical_difference(complete_graph(3)), 0);
  EXPECT_EQ(critical_difference(path_graph(3)), 1);
  EXPECT_EQ(critical_difference(star_graph(4)), 2);
  for (std::size_t n : {0u, 1u, 7u}) {
    EXPECT_EQ(critical_difference(empty_graph(n)), static_cast<std::int64_t>(n));
  }
}

TEST(CriticalDifference, MatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    Graph g = er_random(1 + rng() % 12, 0.05 + 0.1 * (rng() % 9), rng());
    EXPECT_EQ(critical_difference(g), oracle_report(g).d);
  }
}

TEST(IsCritical, Examples) {
  Graph k2 = complete_graph(2);
  EXPECT_TRUE(is_critical(k2, IndependentSet(k2, VertexSet{0})));
  EXPECT_TRUE(is_critical(k2, IndependentSet(k2, VertexSet{})));
  Graph p3 = path_graph(3);
  EXPECT_FALSE(is_critical(p3, IndependentSet(p3, VertexSet{1})));
  EXPECT_TRUE(is_critical(p3, IndependentSet(p3, VertexSet{0, 2})));
}

TEST(InSomeCriticalSet, Examples) {
  Graph p3 = path_graph(3);
  EXPECT_TRUE(in_some_critical_set(p3, 0));
  EXPECT_TRUE(in_some_critical_set(p3, 2));
  EXPECT_FALSE(in_some_critical_set(p3, 1));
  Graph k3 = complete_graph(3);
  for (Vertex v = 0; v < 3; ++v) EXPECT_FALSE(in_some_critical_set(k3, v));
  EXPECT_THROW(in_some_critical_set(p3, 3), GraphError);
}

TEST(InSomeCriticalSet, IsolatedVerticesAlwaysQualify) {
  Graph g = graph_of(5, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_TRUE(in_some_critical_set(g, 3));
  EXPECT_TRUE(in_some_critical_set(g, 4));
}

TEST(CriticalSeed, Examples) {
  EXPECT_EQ(critical_seed(path_graph(3)), (VertexSet{0, 2}));
  EXPECT_TRUE(critical_seed(complete_graph(3)).empty());
  EXPECT_EQ(critical_seed(empty_graph(4)), VertexSet::all(4));
  EXPECT_TRUE(critical_seed(Graph()).empty());
}

TEST(CriticalSetContaining, Examples) {
  EXPECT_EQ(critical_set_containing(path_graph(3), 0), (VertexSet{0, 2}));
  for (Vertex leaf = 1; leaf < 4; ++leaf) {
    EXPECT_EQ(critical_set_containing(star_graph(4), leaf), (VertexSet{1, 2, 3}));
  }
  Graph c4 = cycle_graph(4);
  for (Vertex v = 0; v < 4; ++v) {
    EXPECT_EQ(critical_set_containing(c4, v), (VertexSet{v, static_cast<Vertex>((v + 2) % 4)}));
  }
}

TEST(CriticalSetContaining, RejectsNonMember) {
  EXPECT_THROW(critical_set_containing(path_graph(3), 1), CriticalSetError);
  EXPECT_THROW(critical_set_containing(complete_graph(3), 0), CriticalSetError);
}

TEST(MergeCritical, Examples) {
  Graph c4 = cycle_graph(4);
  IndependentSet i02(c4, VertexSet{0, 2});
  IndependentSet i13(c4, VertexSet{1, 3});
  EXPECT_EQ(merge_critical(c4, i02, i02), i02);
  EXPECT_EQ(merge_critical(c4, i02, i13), i02);

  Graph two_k2 = graph_of(4, {{0, 1}, {2, 3}});
  IndependentSet merged =
      merge_critical(two_k2, IndependentSet(two_k2, VertexSet{0}), IndependentSet(two_k2, VertexSet{2}));
  EXPECT_EQ(merged, (VertexSet{0, 2}));
  EXPECT_TRUE(is_critical(two_k2, merged));
}

TEST(MergeCritical, RejectsNonCriticalInput) {
  Graph p3 = path_graph(3);
  EXPECT_THROW(merge_critical(p3, IndependentSet(p3, VertexSet{1}), IndependentSet(p3, VertexSet{0, 2})),
               CriticalSetError);
}

TEST(MaxCriticalIndependentSet, NamedGraphs) {
  EXPECT_EQ(max_critical_independent_set(complete_graph(2)).alpha_prime, 1u);
  auto k3 = max_critical_independent_set(complete_graph(3));
  EXPECT_EQ(k3.alpha_prime, 0u);
  EXPECT_TRUE(k3.critical_set.empty());
  EXPECT_EQ(max_critical_independent_set(cycle_graph(5)).alpha_prime, 0u);

  auto tb = max_critical_independent_set(triangle_with_tail());
  EXPECT_EQ(tb.critical_set, (VertexSet{0}));
  EXPECT_EQ(tb.alpha_prime, 1u);
  EXPECT_EQ(tb.d, 0);
  EXPECT_EQ(tb.per_vertex, (std::vector<bool>{true, false, false, false, false}));
}

TEST(MaxCriticalIndependentSet, EmptyGraph) {
  auto r = max_critical_independent_set(Graph());
  EXPECT_EQ(r.d, 0);
  EXPECT_EQ(r.alpha_prime, 0u);
  EXPECT_TRUE(r.critical_set.empty());
}

TEST(MaxCriticalIndependentSet, ReportInvariants) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 150; ++i) {
    Graph g = er_random(3 + rng() % 10, 0.1 + 0.1 * (rng() % 6), rng());
    auto r = max_critical_independent_set(g);
    EXPECT_EQ(set_difference_value(g, r.critical_set), r.d);
    EXPECT_EQ(r.alpha_prime, r.critical_set.size());
    EXPECT_EQ(r.alpha_prime, oracle_report(g).alpha_prime);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 0) {
        EXPECT_TRUE(r.critical_set.contains(v));
      }
    }
  }
}

// The pendant rule needs the pendant's neighbour to have another neighbour:
// in K2 ∪ K1 the two pendants are adjacent and no critical set holds both.
TEST(MaxCriticalIndependentSet, AdjacentPendantsCannotBothBeIncluded) {
  Graph g = graph_of(3, {{0, 1}});
  OracleReport o = oracle_report(g);
  EXPECT_EQ(o.alpha_prime, 2u);
  for (const auto& s : o.max_critical_sets) {
    EXPECT_FALSE(s.contains(0) && s.contains(1));
  }
  auto r = max_critical_independent_set(g);
  EXPECT_EQ(r.alpha_prime, 2u);
  EXPECT_TRUE(r.critical_set.contains(2));
}

// {0, 2} is a maximum critical set of P4 without pendant 3, so the solver
// has to pick one holding both pendants.
TEST(MaxCriticalIndependentSet, PrefersPendantsOverTheirNeighbours) {
  Graph p4 = path_graph(4);
  OracleReport o = oracle_report(p4);
  EXPECT_NE(std::find(o.max_critical_sets.begin(), o.max_critical_sets.end(), VertexSet{0, 2}),
            o.max_critical_sets.end());
  EXPECT_EQ(max_critical_independent_set(p4).critical_set, (VertexSet{0, 3}));
}

TEST(MaxCriticalIndependentSet, ScalesToThousandsOfVertices) {
  Graph g = er_random(2000, 10000.0 / (2000.0 * 1999.0 / 2.0), 1);
  auto r = max_critical_independent_set(g);
  EXPECT_EQ(set_difference_value(g, r.critical_set), r.d);
  EXPECT_GE(r.alpha_prime, critical_seed(g).size());
}

}  // namespace
}  // namespace critindep
