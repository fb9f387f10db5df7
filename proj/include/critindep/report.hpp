#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "critindep/critical.hpp"
#include "critindep/decomposition.hpp"
#include "critindep/hash.hpp"
#include "critindep/matching.hpp"
#include "critindep/oracle.hpp"

namespace critindep {

/// Every number the library knows about a graph, with the decomposition as
/// certificate. alpha (and so tau) is absent when the exact budget ran out;
/// mu is absent when it could not be certified (see analyze()).
struct AnalysisReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::int64_t d = 0;
  std::size_t alpha_prime = 0;
  std::optional<std::size_t> alpha;
  std::optional<std::size_t> mu;
  std::optional<std::size_t> tau;
  Classification classification = Classification::totally_reducible;
  bool is_ke = false;
  VertexSet x;
  VertexSet x_complement;
  VertexSet critical_set;
  std::string graph_sha256;
};

struct Analysis {
  AnalysisReport report;
  Decomposition decomposition;
  std::optional<IndependentSet> mis;
  /// Best known lower bound on alpha (equal to alpha when it is known).
  std::size_t alpha_lower_bound = 0;
  bool budget_exceeded = false;
};

/// Largest order for which mu(G) is computed by exhaustive search.
inline constexpr std::size_t kBruteForceMatchingOrder = 20;

/// Runs the whole pipeline. mu(G) is exact by exhaustive search for small
/// graphs; for Konig-Egervary graphs of any size it equals |N(I_c)|, because
/// the saturating matching N(I_c) -> I_c and the vertex cover N(I_c) = V \ I_c
/// have the same size. Otherwise mu is left absent.
inline Analysis analyze(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget) {
  CriticalReport critical = max_critical_independent_set(g);
  Analysis out;
  out.decomposition = decompose(g, critical);
  const Decomposition& dec = out.decomposition;

  AnalysisReport& r = out.report;
  r.n = g.order();
  r.m = g.size();
  r.d = critical.d;
  r.alpha_prime = critical.alpha_prime;
  r.classification = classify(g, dec);
  r.is_ke = r.classification == Classification::totally_reducible;
  r.x = dec.x;
  r.x_complement = dec.x_complement;
  r.critical_set = dec.critical_set;
  r.graph_sha256 = graph_sha256(g);

  try {
    IndependenceResult res = independence_number(g, dec, node_budget);
    r.alpha = res.alpha;
    r.tau = g.order() - res.alpha;
    out.alpha_lower_bound = res.alpha;
    out.mis = std::move(res.mis);
  } catch (const ResidualBudgetExceeded& e) {
    out.budget_exceeded = true;
    out.alpha_lower_bound = e.lower_bound();
  }

  if (g.order() <= kBruteForceMatchingOrder) {
    r.mu = oracle::matching_number(g);
  } else if (r.is_ke) {
    VertexSet nb = neighborhood(g, dec.critical_set);
    if (saturating_matching(g, nb, dec.critical_set)) r.mu = nb.size();
  }
  return out;
}

class ReportMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Re-derives every checkable claim of `r` against `g`. Returns the list of
/// violated invariants; empty means the report is verified. Throws
/// ReportMismatch when the report belongs to a different graph.
inline std::vector<std::string> verify_report(const Graph& g, const AnalysisReport& r) {
  if (r.graph_sha256 != graph_sha256(g)) {
    throw ReportMismatch("report hash does not match graph");
  }
  std::vector<std::string> bad;
  if (r.n != g.order()) bad.emplace_back("n mismatch");
  if (r.m != g.size()) bad.emplace_back("m mismatch");
  if (!r.x.valid_for(g.order()) || !r.x_complement.valid_for(g.order()) ||
      !r.critical_set.valid_for(g.order())) {
    bad.emplace_back("vertex id out of range");
    return bad;
  }

  const std::int64_t d = critical_difference(g);
  if (r.d != d) bad.emplace_back("d mismatch");

  const bool independent = is_independent(g, r.critical_set);
  if (!independent) {
    bad.emplace_back("I_c not independent");
  }
  const VertexSet nb = neighborhood(g, r.critical_set);
  if (independent && set_difference_value(g, r.critical_set) != d) {
    bad.emplace_back("I_c not critical");
  }
  const std::size_t alpha_prime = max_critical_independent_set(g).alpha_prime;
  if (r.alpha_prime != r.critical_set.size() || r.alpha_prime != alpha_prime) {
    bad.emplace_back("alpha_prime mismatch");
  }
  if (independent && !saturating_matching(g, nb, r.critical_set)) {
    bad.emplace_back("no saturating matching N(I_c) -> I_c");
  }

  const VertexSet x = set_union(r.critical_set, nb);
  if (r.x != x) bad.emplace_back("X mismatch");
  if (r.x_complement != complement(g.order(), r.x)) bad.emplace_back("X_complement mismatch");

  const bool x_is_all = x.size() == g.order();
  Classification expected = x_is_all                   ? Classification::totally_reducible
                            : r.critical_set.empty() ? Classification::irreducible
                                                     : Classification::reducible;
  if (r.classification != expected) bad.emplace_back("classification mismatch");
  if (r.is_ke && !x_is_all) bad.emplace_back("is_ke contradicts X ≠ V");
  if (!r.is_ke && x_is_all) bad.emplace_back("is_ke contradicts X = V");

  if (r.tau && !r.alpha) bad.emplace_back("tau present without alpha");
  if (r.alpha) {
    if (!r.tau || *r.tau + *r.alpha != g.order()) bad.emplace_back("tau != n - alpha");
    if (*r.alpha < r.alpha_prime) bad.emplace_back("alpha below alpha_prime");
    if (*r.alpha > g.order()) bad.emplace_back("alpha exceeds n");
  }
  if (r.mu) {
    if (2 * *r.mu > g.order()) bad.emplace_back("mu exceeds n/2");
    if (independent && *r.mu < nb.size()) bad.emplace_back("mu below |N(I_c)|");
    if (r.alpha && (*r.alpha + *r.mu == g.order()) != x_is_all) {
      bad.emplace_back(x_is_all ? "alpha + mu ≠ n although X = V"
                                : "alpha + mu = n although X ≠ V");
    }
  }
  return bad;
}

}  // namespace critindep
