#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "critindep/critical.hpp"
#include "critindep/decomposition.hpp"
#include "critindep/exact_mis.hpp"
#include "critindep/matching.hpp"
#include "critindep/oracle.hpp"
#include "critindep/report.hpp"

namespace critindep {

// Oracle cross-checks for every identity the library relies on. Each check
// group compares polynomial-time results against exhaustive enumeration and
// records one pass/fail per invariant instance in an InvariantTally.

struct InvariantCount {
  std::size_t checked = 0;
  std::size_t violated = 0;
};

class InvariantTally {
 public:
  /// Records one instance; returns ok.
  bool record(const std::string& name, bool ok) {
    auto& c = counts_[name];
    ++c.checked;
    if (!ok) ++c.violated;
    return ok;
  }

  std::size_t violations() const {
    std::size_t total = 0;
    for (const auto& [name, c] : counts_) total += c.violated;
    return total;
  }

  std::size_t checks() const {
    std::size_t total = 0;
    for (const auto& [name, c] : counts_) total += c.checked;
    return total;
  }

  const std::map<std::string, InvariantCount>& counts() const noexcept { return counts_; }

  void merge(const InvariantTally& other) {
    for (const auto& [name, c] : other.counts_) {
      counts_[name].checked += c.checked;
      counts_[name].violated += c.violated;
    }
  }

 private:
  std::map<std::string, InvariantCount> counts_;
};

struct SuiteOptions {
  /// Maximum critical set solver under test. Replaceable so the harness can
  /// be exercised against a deliberately broken solver.
  std::function<CriticalReport(const Graph&)> solver = max_critical_independent_set;
  /// Saturating-matching and critical-pair checks run up to this order.
  std::size_t pair_order_limit = 10;
  /// Critical-sets-extend-to-MIS check up to this order.
  std::size_t extension_order_limit = 14;
};

/// Pendant vertices whose neighbour is not itself a pendant (pendants
/// outside K2 components), plus isolated vertices. Some maximum critical
/// independent set holds all of them, and the solver must return one.
inline VertexSet forced_vertices(const Graph& g) {
  std::vector<Vertex> out;
  if (g.order() < 3) return VertexSet{};
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) out.push_back(v);
    if (g.degree(v) == 1 && g.degree(g.neighbors(v)[0]) >= 2) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

/// d = n - mu(B(G)) against exhaustive enumeration, plus the bipartite engine
/// pieces that feed it.
inline bool check_critical_difference(const Graph& g, const OracleReport& o, InvariantTally& t) {
  bool ok = true;
  BipartiteDouble b(g);
  Matching m = max_matching(b.graph());
  const std::int64_t d = static_cast<std::int64_t>(g.order()) - static_cast<std::int64_t>(m.size());
  ok &= t.record("d = n - mu(B(G)) equals oracle max |I|-|N(I)|", d == o.d);
  ok &= t.record("critical_difference matches formula", critical_difference(g) == d);
  ok &= t.record("max over all subsets equals max over independent sets",
                 o.d_all_subsets == o.d);
  ok &= t.record("d >= 0", o.d >= 0 && d >= 0);

  VertexSet mis = bipartite_mis(b.graph(), m);
  bool independent = true;
  for (Vertex x : mis) {
    if (!b.is_plus(x)) continue;
    for (Vertex r : b.graph().neighbors(x)) independent &= !mis.contains(b.graph().right_id(r));
  }
  ok &= t.record("bipartite_mis independent with size |V(B)| - mu(B)",
                 independent && mis.size() == 2 * g.order() - m.size());

  // B(G) as an ordinary graph, matched by exhaustive search.
  if (2 * g.order() <= kOracleMaxOrder) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex w : g.neighbors(u)) edges.push_back({b.plus(u), b.minus(w)});
    }
    Graph doubled = Graph::from_edges(2 * g.order(), std::move(edges));
    ok &= t.record("max_matching equals brute-force mu(B(G))",
                   oracle::matching_number(doubled) == m.size());
  }
  return ok;
}

inline bool check_critical_solver(const Graph& g, const OracleReport& o, InvariantTally& t,
                                  const SuiteOptions& opt = {}) {
  bool ok = true;
  CriticalReport rep = opt.solver(g);
  ok &= t.record("alpha' equals oracle alpha'", rep.alpha_prime == o.alpha_prime &&
                                                    rep.critical_set.size() == o.alpha_prime);
  ok &= t.record("max critical set is independent", is_independent(g, rep.critical_set));
  ok &= t.record("max critical set is critical",
                 is_independent(g, rep.critical_set) &&
                     set_difference_value(g, rep.critical_set) == o.d);
  ok &= t.record("report d equals oracle d", rep.d == o.d);

  const VertexSet forced = forced_vertices(g);
  ok &= t.record("pendants and isolated vertices in I_c (n >= 3)",
                 set_difference(forced, rep.critical_set).empty());

  std::vector<bool> in_some(g.order(), false);
  for (const auto& c : o.critical_sets) {
    for (Vertex v : c) in_some[v] = true;
  }
  ok &= t.record("in_some_critical_set matches oracle", rep.per_vertex == in_some);

  IndependentSet seed = critical_seed(g);
  ok &= t.record("critical_seed is critical", set_difference_value(g, seed) == o.d);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!in_some[v]) continue;
    IndependentSet c = critical_set_containing(g, v);
    ok &= t.record("critical_set_containing is critical and contains v",
                   c.contains(v) && set_difference_value(g, c) == o.d);
  }

  ok &= t.record("alpha' <= alpha", o.alpha_prime <= o.alpha && rep.alpha_prime <= o.alpha);
  // alpha >= n/2 forces a non-empty critical set; checked contrapositively.
  if (rep.alpha_prime == 0 && g.order() > 0) {
    ok &= t.record("irreducible implies alpha < n/2", 2 * o.alpha < g.order());
  }
  return ok;
}

/// Decomposition: additivity, total reducibility of G[X], irreducibility of
/// G[X^c], and uniqueness of X over all maximum critical sets.
inline bool check_decomposition(const Graph& g, const OracleReport& o, InvariantTally& t,
                                const SuiteOptions& opt = {}) {
  bool ok = true;
  Decomposition dec = decompose(g, opt.solver(g));
  Subgraph in_x = induced_subgraph(g, dec.x);
  Subgraph in_xc = induced_subgraph(g, dec.x_complement);
  OracleReport ox = oracle_report(in_x.graph);
  const std::size_t alpha_xc = oracle::independence_number(in_xc.graph);

  ok &= t.record("alpha(G) = alpha(G[X]) + alpha(G[X^c])", o.alpha == ox.alpha + alpha_xc);
  ok &= t.record("alpha(G[X]) = alpha'(G[X]) = |I_c|",
                 ox.alpha == dec.critical_set.size() && ox.alpha_prime == dec.critical_set.size());
  ok &= t.record("G[X^c] is independence irreducible", oracle::irreducible(in_xc.graph));
  ok &= t.record("J_c ∪ N(J_c) = X for every maximum critical J_c",
                 o.x_candidates.size() == 1 && o.x_candidates.front() == dec.x);
  ok &= t.record("X and X^c partition V",
                 set_intersection(dec.x, dec.x_complement).empty() &&
                     dec.x.size() + dec.x_complement.size() == g.order());
  return ok;
}

/// alpha = alpha' exactly when tau = mu, with mu by exhaustive search.
inline bool check_konig_egervary(const Graph& g, const OracleReport& o, InvariantTally& t,
                                 const SuiteOptions& opt = {}) {
  bool ok = true;
  Decomposition dec = decompose(g, opt.solver(g));
  const bool ke = classify(g, dec) == Classification::totally_reducible;
  const std::size_t tau = g.order() - o.alpha;
  ok &= t.record("is_konig_egervary <=> tau = mu", ke == (tau == o.mu));
  ok &= t.record("alpha = alpha' <=> tau = mu", (o.alpha == o.alpha_prime) == (tau == o.mu));
  ok &= t.record("X = V <=> alpha = alpha'", (dec.x.size() == g.order()) == (o.alpha == o.alpha_prime));
  return ok;
}

/// Saturating matching N(I) -> I for every critical I, and the three merge
/// identities for every ordered pair of critical sets.
inline bool check_critical_pairs(const Graph& g, const OracleReport& o, InvariantTally& t) {
  bool ok = true;
  std::vector<VertexSet> nbs;
  nbs.reserve(o.critical_sets.size());
  for (const auto& c : o.critical_sets) {
    nbs.push_back(neighborhood(g, c));
    auto m = saturating_matching(g, nbs.back(), c);
    ok &= t.record("saturating matching N(I_c) -> I_c exists",
                   m.has_value() && m->size() == nbs.back().size() && is_matching_of(g, *m));
  }
  for (std::size_t i = 0; i < o.critical_sets.size(); ++i) {
    const VertexSet& ic = o.critical_sets[i];
    const VertexSet closed = set_union(ic, nbs[i]);
    for (std::size_t j = 0; j < o.critical_sets.size(); ++j) {
      const VertexSet& jc = o.critical_sets[j];
      ok &= t.record("|I_c ∩ N(J_c)| = |J_c ∩ N(I_c)|",
                     set_intersection(ic, nbs[j]).size() == set_intersection(jc, nbs[i]).size());
      ok &= t.record("|J_c \\ (I_c ∪ N(I_c))| >= |N(J_c) \\ (I_c ∪ N(I_c))|",
                     set_difference(jc, closed).size() >= set_difference(nbs[j], closed).size());
      IndependentSet merged = merge_critical(g, IndependentSet(g, ic), IndependentSet(g, jc));
      ok &= t.record("merge_critical is critical and contains I_c",
                     set_difference_value(g, merged) == o.d &&
                         set_difference(ic, merged).empty());
    }
  }
  return ok;
}

/// Every critical independent set extends to a maximum independent set.
inline bool check_extension(const Graph& /*g*/, const OracleReport& o, InvariantTally& t) {
  bool ok = true;
  for (const auto& c : o.critical_sets) {
    bool extends = false;
    for (const auto& mis : o.maximum_independent_sets) {
      if (set_difference(c, mis).empty()) {
        extends = true;
        break;
      }
    }
    ok &= t.record("critical set extends to a maximum independent set", extends);
  }
  return ok;
}

/// The decomposition-accelerated alpha, the direct solver, and the verified
/// report all agree with the oracle.
inline bool check_pipeline(const Graph& g, const OracleReport& o, InvariantTally& t,
                           const SuiteOptions& opt = {}) {
  bool ok = true;
  Decomposition dec = decompose(g, opt.solver(g));
  IndependenceResult res = independence_number(g, dec);
  ok &= t.record("independence_number equals oracle alpha",
                 res.alpha == o.alpha && is_independent(g, res.mis) &&
                     set_difference(dec.critical_set, res.mis).empty());
  ok &= t.record("exact_mis equals oracle alpha", exact_mis(g).size() == o.alpha);

  Analysis a = analyze(g);
  ok &= t.record("analyze report verifies", verify_report(g, a.report).empty());
  ok &= t.record("analyze mu, when present, equals oracle mu", !a.report.mu || *a.report.mu == o.mu);
  return ok;
}

/// Runs every group that applies at this order. Returns true when g
/// produced no violation.
inline bool check_all_invariants(const Graph& g, InvariantTally& t, const SuiteOptions& opt = {}) {
  OracleReport o = oracle_report(g);
  bool ok = true;
  ok &= check_critical_difference(g, o, t);
  ok &= check_critical_solver(g, o, t, opt);
  ok &= check_decomposition(g, o, t, opt);
  ok &= check_konig_egervary(g, o, t, opt);
  if (g.order() <= opt.pair_order_limit) ok &= check_critical_pairs(g, o, t);
  if (g.order() <= opt.extension_order_limit) ok &= check_extension(g, o, t);
  ok &= check_pipeline(g, o, t, opt);
  return ok;
}

}  // namespace critindep
