#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "critindep/generators.hpp"
#include "critindep/graph.hpp"
#include "critindep/io.hpp"
#include "named_graphs.hpp"

namespace critindep {
namespace {

using testing::graph_of;
using testing::triangle_with_tail;

TEST(ParseGraph, DimacsTriangle) {
  Graph g = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", Format::dimacs);
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g, complete_graph(3));
}

TEST(ParseGraph, DimacsSingleEdge) {
  Graph g = parse_graph("c a comment\np edge 2 1\ne 1 2\n", Format::dimacs);
  EXPECT_EQ(g, complete_graph(2));
}

TEST(ParseGraph, SelfLoopRejectedWithLine) {
  try {
    parse_graph("p edge 2 1\ne 1 1\n", Format::dimacs);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
  }
  EXPECT_THROW(parse_graph("2 1\n1 1\n", Format::edgelist), ParseError);
}

TEST(ParseGraph, RejectsOutOfRangeAndMalformed) {
  EXPECT_THROW(parse_graph("p edge 2 1\ne 1 3\n", Format::dimacs), ParseError);
  EXPECT_THROW(parse_graph("p edge 2 1\ne 0 1\n", Format::dimacs), ParseError);
  EXPECT_THROW(parse_graph("e 1 2\n", Format::dimacs), ParseError);
  EXPECT_THROW(parse_graph("p col 2 1\n", Format::dimacs), ParseError);
  EXPECT_THROW(parse_graph("p edge two 1\n", Format::dimacs), ParseError);
  EXPECT_THROW(parse_graph("p edge 2 1\ne 1 2 3\n", Format::dimacs), ParseError);
  EXPECT_THROW(parse_graph("", Format::dimacs), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 3\n", Format::edgelist), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 -1\n", Format::edgelist), ParseError);
  EXPECT_THROW(parse_graph("# only a comment\n", Format::edgelist), ParseError);
}

TEST(ParseGraph, DuplicateEdgesCollapse) {
  Graph g = parse_graph("# c4 with repeats\n4 6\n0 1\n1 0\n1 2\n2 3\n3 0\n0 1\n", Format::edgelist);
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g, cycle_graph(4));
}

TEST(ParseGraph, LabelsAttach) {
  Graph g = parse_graph("5 5\n# label 0 a\n# label 1 b\n0 1\n", Format::edgelist);
  EXPECT_EQ(g.name(0), "a");
  EXPECT_EQ(g.name(2), "2");
  EXPECT_EQ(g.find_label("b"), Vertex{1});
}

TEST(ParseGraph, DetectFormat) {
  EXPECT_EQ(detect_format("c hi\np edge 1 0\n"), Format::dimacs);
  EXPECT_EQ(detect_format("# hi\n1 0\n"), Format::edgelist);
}

TEST(Serialize, RoundTripProperty) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) {
    std::size_t n = rng() % 25;
    Graph g = er_random(n, static_cast<double>(rng() % 100) / 100.0, rng());
    for (Format f : {Format::dimacs, Format::edgelist}) {
      std::string text = serialize_graph(g, f);
      EXPECT_EQ(parse_graph(text, f), g);
      EXPECT_EQ(serialize_graph(parse_graph(text, f), f), text);
    }
  }
  Graph labelled = triangle_with_tail();
  for (Format f : {Format::dimacs, Format::edgelist}) {
    EXPECT_EQ(parse_graph(serialize_graph(labelled, f), f), labelled);
  }
}

TEST(Serialize, DimacsIsOneBased) {
  EXPECT_EQ(serialize_graph(path_graph(2), Format::dimacs), "p edge 2 1\ne 1 2\n");
  EXPECT_EQ(serialize_graph(path_graph(2), Format::edgelist), "2 1\n0 1\n");
}

TEST(Graph, AdjacencyIsSymmetricAndSorted) {
  Graph g = er_random(40, 0.3, 11);
  for (Vertex u = 0; u < g.order(); ++u) {
    auto nb = g.neighbors(u);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    for (Vertex w : nb) {
      EXPECT_NE(u, w);
      EXPECT_TRUE(g.adjacent(w, u));
    }
  }
}

TEST(Graph, RejectsInvalidConstruction) {
  EXPECT_THROW(Graph::from_edges(2, {{0, 0}}), GraphError);
  EXPECT_THROW(Graph::from_edges(2, {{0, 2}}), GraphError);
  EXPECT_THROW(Graph::from_edges(2, {}, {"only-one"}), GraphError);
}

TEST(Neighborhood, Examples) {
  EXPECT_EQ(neighborhood(cycle_graph(4), VertexSet{0, 2}), (VertexSet{1, 3}));
  EXPECT_EQ(neighborhood(complete_graph(3), VertexSet{0}), (VertexSet{1, 2}));
  EXPECT_EQ(neighborhood(path_graph(3), VertexSet{0, 1}), (VertexSet{0, 1, 2}));
  EXPECT_TRUE(neighborhood(path_graph(3), VertexSet{}).empty());
  EXPECT_THROW(neighborhood(path_graph(3), VertexSet{3}), GraphError);
}

TEST(Neighborhood, OfAllIsNonIsolated) {
  Graph g = graph_of(6, {{0, 1}, {1, 2}, {4, 5}});
  EXPECT_EQ(neighborhood(g, VertexSet::all(6)), (VertexSet{0, 1, 2, 4, 5}));
}

TEST(Neighborhood, DisjointFromIndependentSet) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    Graph g = er_random(15, 0.25, rng());
    IndependentSet s(g, VertexSet{});
    std::vector<Vertex> members;
    for (Vertex v = 0; v < g.order(); ++v) {
      members.push_back(v);
      if (!is_independent(g, VertexSet(members))) members.pop_back();
    }
    s = IndependentSet(g, VertexSet(members));
    EXPECT_TRUE(set_intersection(neighborhood(g, s), s).empty());
  }
}

TEST(IndependentSet, RejectsAdjacentMembers) {
  EXPECT_THROW(IndependentSet(path_graph(3), VertexSet{0, 1}), NotIndependentError);
  EXPECT_NO_THROW(IndependentSet(path_graph(3), VertexSet{0, 2}));
}

TEST(InducedSubgraph, Examples) {
  Graph c5 = cycle_graph(5);
  Subgraph all = induced_subgraph(c5, VertexSet::all(5));
  EXPECT_EQ(all.graph, c5);
  EXPECT_EQ(all.to_host, (std::vector<Vertex>{0, 1, 2, 3, 4}));

  Graph tb = triangle_with_tail();
  Subgraph tri = induced_subgraph(tb, VertexSet{2, 3, 4});
  EXPECT_EQ(tri.graph.edges(), complete_graph(3).edges());
  EXPECT_EQ(tri.graph.name(0), "t1");
  EXPECT_EQ(tri.lift(VertexSet{0, 2}), (VertexSet{2, 4}));

  EXPECT_EQ(induced_subgraph(tb, VertexSet{}).graph.order(), 0u);
}

TEST(InducedSubgraph, EdgeCountProperty) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    Graph g = er_random(20, 0.3, rng());
    std::vector<bool> keep(g.order());
    for (std::size_t v = 0; v < keep.size(); ++v) keep[v] = rng() & 1U;
    VertexSet s = VertexSet::from_mask(keep);
    std::size_t expected = 0;
    for (const auto& e : g.edges()) expected += keep[e.u] && keep[e.v];
    EXPECT_EQ(induced_subgraph(g, s).graph.size(), expected);
  }
}

TEST(Generators, NamedFamilies) {
  EXPECT_EQ(cycle_graph(5).size(), 5u);
  EXPECT_EQ(star_graph(4).size(), 3u);
  EXPECT_EQ(star_graph(4).degree(0), 3u);
  EXPECT_EQ(path_graph(4).size(), 3u);
  EXPECT_EQ(complete_graph(5).size(), 10u);
  EXPECT_THROW(cycle_graph(2), GraphError);
}

TEST(Generators, ErdosRenyi) {
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) EXPECT_EQ(er_random(10, 0.0, seed).size(), 0u);
  EXPECT_EQ(er_random(10, 1.0, 3).size(), 45u);
  EXPECT_EQ(er_random(30, 0.2, 42), er_random(30, 0.2, 42));
  EXPECT_NE(er_random(30, 0.2, 42), er_random(30, 0.2, 43));
  EXPECT_THROW(er_random(10, 1.5, 1), GraphError);
  EXPECT_THROW(er_random(10, -0.1, 1), GraphError);

  // Edge count concentrates around p * n(n-1)/2.
  Graph big = er_random(2000, 0.01, 5);
  const double expected = 0.01 * 2000 * 1999 / 2;
  EXPECT_NEAR(static_cast<double>(big.size()), expected, 5 * std::sqrt(expected));
}

TEST(Generators, AllLabeledGraphs) {
  EXPECT_EQ(all_labeled_graphs(3).size(), 8u);
  EXPECT_EQ(all_labeled_graphs(4).size(), 64u);
  EXPECT_EQ(all_labeled_graphs(0).size(), 1u);
}

TEST(Components, SplitsDisjointPieces) {
  Graph g = graph_of(6, {{0, 1}, {2, 3}, {3, 4}});
  auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (VertexSet{0, 1}));
  EXPECT_EQ(comps[1], (VertexSet{2, 3, 4}));
  EXPECT_EQ(comps[2], (VertexSet{5}));
}

}  // namespace
}  // namespace critindep
