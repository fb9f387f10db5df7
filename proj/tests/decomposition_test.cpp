#include <gtest/gtest.h>

#include <random>

#include "critindep/decomposition.hpp"
#include "critindep/generators.hpp"
#include "critindep/oracle.hpp"
#include "critindep/report.hpp"
#include "critindep/report_json.hpp"
#include "named_graphs.hpp"

namespace critindep {
namespace {

using testing::graph_of;
using testing::triangle_with_tail;

TEST(Decompose, Examples) {
  Decomposition tb = decompose(triangle_with_tail());
  EXPECT_EQ(tb.x, (VertexSet{0, 1}));
  EXPECT_EQ(tb.x_complement, (VertexSet{2, 3, 4}));
  EXPECT_EQ(tb.critical_set, (VertexSet{0}));

  Decomposition c4 = decompose(cycle_graph(4));
  EXPECT_EQ(c4.x, VertexSet::all(4));
  EXPECT_TRUE(c4.x_complement.empty());

  Decomposition c5 = decompose(cycle_graph(5));
  EXPECT_TRUE(c5.x.empty());
  EXPECT_EQ(c5.x_complement, VertexSet::all(5));
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(complete_graph(3)), Classification::irreducible);
  EXPECT_EQ(classify(cycle_graph(6)), Classification::totally_reducible);
  EXPECT_EQ(classify(triangle_with_tail()), Classification::reducible);
  EXPECT_EQ(classify(Graph()), Classification::totally_reducible);
  EXPECT_EQ(classify(empty_graph(4)), Classification::totally_reducible);
  EXPECT_EQ(classify(cycle_graph(7)), Classification::irreducible);
  EXPECT_EQ(classify(complete_graph(2)), Classification::totally_reducible);
}

TEST(KonigEgervary, Examples) {
  EXPECT_TRUE(is_konig_egervary(path_graph(3)));
  EXPECT_TRUE(is_konig_egervary(cycle_graph(4)));
  EXPECT_TRUE(is_konig_egervary(star_graph(4)));
  EXPECT_FALSE(is_konig_egervary(complete_graph(3)));
  EXPECT_FALSE(is_konig_egervary(cycle_graph(5)));
  // A triangle with a pendant on every corner is KE without being bipartite.
  EXPECT_TRUE(is_konig_egervary(graph_of(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}})));
}

TEST(KonigEgervary, BipartiteGraphsAlwaysQualify) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_bipartite(1 + rng() % 15, 1 + rng() % 15, 0.05 * (1 + rng() % 10), rng());
    EXPECT_TRUE(is_konig_egervary(g));
  }
}

TEST(IndependenceNumber, Examples) {
  Graph tb = triangle_with_tail();
  IndependenceResult r = independence_number(tb);
  EXPECT_EQ(r.alpha, 2u);
  EXPECT_TRUE(r.mis.contains(0));
  EXPECT_TRUE(is_independent(tb, r.mis));

  EXPECT_EQ(independence_number(cycle_graph(4)).alpha, 2u);
  IndependenceResult c5 = independence_number(cycle_graph(5));
  EXPECT_EQ(c5.alpha, 2u);
  EXPECT_TRUE(c5.decomposition.critical_set.empty());
}

TEST(IndependenceNumber, ResidualBudgetCarriesPartialCertificate) {
  // Three disjoint C5s: the whole graph is residual, and one node is not enough.
  std::vector<Edge> edges;
  for (Vertex c = 0; c < 3; ++c) {
    for (Vertex i = 0; i < 5; ++i) edges.push_back({5 * c + i, 5 * c + (i + 1) % 5});
  }
  Graph g = Graph::from_edges(15, edges);
  try {
    independence_number(g, 1);
    FAIL() << "expected ResidualBudgetExceeded";
  } catch (const ResidualBudgetExceeded& e) {
    EXPECT_TRUE(e.decomposition().x.empty());
    EXPECT_EQ(e.decomposition().x_complement.size(), 15u);
    EXPECT_GE(e.lower_bound(), 5u);
    EXPECT_LE(e.lower_bound(), 6u);
  }
  EXPECT_EQ(independence_number(g).alpha, 6u);
}

TEST(IndependenceNumber, AgreesWithOracle) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 150; ++i) {
    Graph g = er_random(1 + rng() % 14, 0.05 + 0.1 * (rng() % 8), rng());
    EXPECT_EQ(independence_number(g).alpha, oracle_report(g).alpha);
  }
}

TEST(Analyze, TriangleWithTail) {
  Analysis a = analyze(triangle_with_tail());
  const AnalysisReport& r = a.report;
  EXPECT_EQ(r.n, 5u);
  EXPECT_EQ(r.m, 5u);
  EXPECT_EQ(r.d, 0);
  EXPECT_EQ(r.alpha_prime, 1u);
  EXPECT_EQ(r.alpha, std::optional<std::size_t>(2));
  EXPECT_EQ(r.tau, std::optional<std::size_t>(3));
  EXPECT_EQ(r.mu, std::optional<std::size_t>(2));
  EXPECT_EQ(r.classification, Classification::reducible);
  EXPECT_FALSE(r.is_ke);
  EXPECT_TRUE(verify_report(triangle_with_tail(), r).empty());
}

TEST(Analyze, LargeKonigEgervaryGraphCertifiesMu) {
  Graph g = random_bipartite(40, 30, 0.08, 5);
  Analysis a = analyze(g);
  EXPECT_TRUE(a.report.is_ke);
  ASSERT_TRUE(a.report.mu.has_value());
  ASSERT_TRUE(a.report.alpha.has_value());
  EXPECT_EQ(*a.report.alpha + *a.report.mu, g.order());
  EXPECT_TRUE(verify_report(g, a.report).empty());
}

TEST(Analyze, BudgetExceededLeavesAlphaAbsent) {
  Graph g = cycle_graph(25);
  Analysis a = analyze(g, 1);
  EXPECT_TRUE(a.budget_exceeded);
  EXPECT_FALSE(a.report.alpha.has_value());
  EXPECT_FALSE(a.report.tau.has_value());
  EXPECT_GE(a.alpha_lower_bound, 10u);
  EXPECT_TRUE(verify_report(g, a.report).empty());
}

TEST(VerifyReport, DetectsPlantedViolations) {
  Graph k3 = complete_graph(3);
  AnalysisReport bad_ke = analyze(k3).report;
  bad_ke.is_ke = true;
  EXPECT_EQ(verify_report(k3, bad_ke), (std::vector<std::string>{"is_ke contradicts X ≠ V"}));

  Graph p3 = path_graph(3);
  AnalysisReport bad_ap = analyze(p3).report;
  bad_ap.alpha_prime = 1;
  EXPECT_EQ(verify_report(p3, bad_ap), (std::vector<std::string>{"alpha_prime mismatch"}));

  AnalysisReport bad_set = analyze(p3).report;
  bad_set.critical_set = VertexSet{0, 1};
  auto violations = verify_report(p3, bad_set);
  EXPECT_NE(std::find(violations.begin(), violations.end(), "I_c not independent"), violations.end());
}

TEST(VerifyReport, HashMismatchThrows) {
  AnalysisReport r = analyze(path_graph(3)).report;
  EXPECT_THROW(verify_report(path_graph(4), r), ReportMismatch);
}

TEST(ReportJson, FieldNamesAndRoundTrip) {
  Graph tb = triangle_with_tail();
  AnalysisReport r = analyze(tb).report;
  json j = to_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  std::sort(keys.begin(), keys.end());
  EXPECT_EQ(keys, (std::vector<std::string>{"I_c", "X", "X_complement", "alpha", "alpha_prime",
                                            "classification", "d", "graph_sha256", "is_ke", "m",
                                            "mu", "n", "tau"}));
  EXPECT_EQ(j["classification"], "reducible");
  EXPECT_EQ(j["X"], json::array({0, 1}));
  AnalysisReport back = report_from_json(json::parse(j.dump()));
  EXPECT_EQ(to_json(back), j);
  EXPECT_TRUE(verify_report(tb, back).empty());

  Analysis partial = analyze(cycle_graph(25), 1);
  json pj = to_json(partial.report);
  EXPECT_TRUE(pj["alpha"].is_null());
  EXPECT_TRUE(pj["tau"].is_null());
  EXPECT_EQ(to_json(report_from_json(pj)), pj);
}

}  // namespace
}  // namespace critindep
