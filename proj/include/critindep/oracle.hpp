#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "critindep/graph.hpp"

namespace critindep {

// Ground truth by exhaustive enumeration over vertex subsets. Nothing here
// touches the bipartite engine or the critical solver, so the two can be
// checked against each other.

inline constexpr std::size_t kOracleMaxOrder = 22;

class OracleLimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OracleReport {
  std::int64_t d = 0;
  /// max |S| - |N(S)| over all subsets S, independent or not.
  std::int64_t d_all_subsets = 0;
  std::size_t alpha = 0;
  std::size_t alpha_prime = 0;
  std::size_t mu = 0;
  std::vector<VertexSet> critical_sets;
  std::vector<VertexSet> max_critical_sets;
  std::vector<VertexSet> maximum_independent_sets;
  /// Distinct values of J ∪ N(J) over maximum critical J.
  std::vector<VertexSet> x_candidates;
};

namespace oracle {

using Mask = std::uint32_t;

inline void require_small(const Graph& g) {
  if (g.order() > kOracleMaxOrder) {
    throw OracleLimitError("oracle limited to graphs of order <= " +
                           std::to_string(kOracleMaxOrder));
  }
}

inline std::vector<Mask> adjacency_masks(const Graph& g) {
  require_small(g);
  std::vector<Mask> adj(g.order(), 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

inline Mask neighbors_of(const std::vector<Mask>& adj, Mask s) {
  Mask out = 0;
  while (s) {
    out |= adj[std::countr_zero(s)];
    s &= s - 1;
  }
  return out;
}

inline bool independent(const std::vector<Mask>& adj, Mask s) {
  return (neighbors_of(adj, s) & s) == 0;
}

inline VertexSet to_set(Mask s) {
  std::vector<Vertex> out;
  while (s) {
    out.push_back(static_cast<Vertex>(std::countr_zero(s)));
    s &= s - 1;
  }
  return VertexSet(std::move(out));
}

inline Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) m |= Mask{1} << v;
  return m;
}

/// Sort key: by cardinality, then lexicographically by sorted members.
inline bool canonical_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

/// Matching number by exhaustive search over vertex masks: the lowest vertex
/// of the remaining set is either left unmatched or matched to one of its
/// remaining neighbours.
inline std::size_t matching_number(const Graph& g) {
  auto adj = adjacency_masks(g);
  const std::size_t n = g.order();
  std::vector<std::int8_t> memo(std::size_t{1} << n, -1);
  auto solve = [&](auto&& self, Mask s) -> std::int8_t {
    if (s == 0) return 0;
    if (memo[s] >= 0) return memo[s];
    int v = std::countr_zero(s);
    Mask rest = s & ~(Mask{1} << v);
    std::int8_t best = self(self, rest);
    Mask nb = adj[v] & rest;
    while (nb) {
      int w = std::countr_zero(nb);
      nb &= nb - 1;
      best = std::max<std::int8_t>(best, static_cast<std::int8_t>(1 + self(self, rest & ~(Mask{1} << w))));
    }
    return memo[s] = best;
  };
  return static_cast<std::size_t>(solve(solve, (Mask{1} << n) - 1));
}

inline std::size_t independence_number(const Graph& g) {
  auto adj = adjacency_masks(g);
  std::size_t best = 0;
  for (Mask s = 0; s < (Mask{1} << g.order()); ++s) {
    auto size = static_cast<std::size_t>(std::popcount(s));
    if (size > best && independent(adj, s)) best = size;
  }
  return best;
}

/// Exhaustive independence-irreducibility: every non-empty independent set
/// has strictly more neighbours than members.
inline bool irreducible(const Graph& g) {
  auto adj = adjacency_masks(g);
  for (Mask s = 1; s < (Mask{1} << g.order()); ++s) {
    if (independent(adj, s) &&
        std::popcount(neighbors_of(adj, s)) <= std::popcount(s)) {
      return false;
    }
  }
  return true;
}

}  // namespace oracle

/// Enumerates every vertex subset of g (order <= 22).
inline OracleReport oracle_report(const Graph& g) {
  using oracle::Mask;
  auto adj = oracle::adjacency_masks(g);
  const Mask limit = Mask{1} << g.order();

  OracleReport r;
  std::vector<Mask> independents;
  std::int64_t best_any = 0;
  std::int64_t best_indep = 0;
  for (Mask s = 0; s < limit; ++s) {
    Mask nb = oracle::neighbors_of(adj, s);
    std::int64_t diff = std::popcount(s) - std::popcount(nb);
    best_any = std::max(best_any, diff);
    if ((nb & s) == 0) {
      independents.push_back(s);
      best_indep = std::max(best_indep, diff);
      r.alpha = std::max<std::size_t>(r.alpha, std::popcount(s));
    }
  }
  r.d = best_indep;
  r.d_all_subsets = best_any;

  std::vector<Mask> critical;
  for (Mask s : independents) {
    Mask nb = oracle::neighbors_of(adj, s);
    if (std::popcount(s) - std::popcount(nb) == r.d) {
      critical.push_back(s);
      r.alpha_prime = std::max<std::size_t>(r.alpha_prime, std::popcount(s));
    }
    if (static_cast<std::size_t>(std::popcount(s)) == r.alpha) {
      r.maximum_independent_sets.push_back(oracle::to_set(s));
    }
  }
  std::set<std::vector<Vertex>> xs;
  for (Mask s : critical) {
    r.critical_sets.push_back(oracle::to_set(s));
    if (static_cast<std::size_t>(std::popcount(s)) == r.alpha_prime) {
      r.max_critical_sets.push_back(oracle::to_set(s));
      xs.insert(oracle::to_set(s | oracle::neighbors_of(adj, s)).members());
    }
  }
  for (const auto& x : xs) r.x_candidates.emplace_back(x);

  auto order = [](auto& v) { std::sort(v.begin(), v.end(), oracle::canonical_less); };
  order(r.critical_sets);
  order(r.max_critical_sets);
  order(r.maximum_independent_sets);
  r.mu = oracle::matching_number(g);
  return r;
}

}  // namespace critindep
