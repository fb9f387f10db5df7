#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "critindep/graph.hpp"
#include "critindep/matching.hpp"

namespace critindep {

// The critical difference of G is d(G) = max |J| - |N(J)| over independent J.
// Every quantity here is computed through the bipartite double B(G):
//
//   d(G) = n - mu(B(G)).
//
// For any S, S+ ∪ (V \ N(S))- is independent in B(G), so alpha(B) >= n + d.
// Conversely an independent A+ ∪ C- of B(G) has C ∩ N(A) = ∅, so
// |A| + |C| <= n + d. Konig gives alpha(B) = 2n - mu(B).

/// Result of the maximum critical independent set computation.
struct CriticalReport {
  std::int64_t d = 0;
  IndependentSet critical_set;
  std::size_t alpha_prime = 0;
  /// per_vertex[v]: v lies in some critical independent set.
  std::vector<bool> per_vertex;
};

class CriticalSetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::int64_t critical_difference(const Graph& g) {
  BipartiteDouble b(g);
  return static_cast<std::int64_t>(g.order()) -
         static_cast<std::int64_t>(max_matching(b.graph()).size());
}

/// |s| - |N(s)|.
inline std::int64_t set_difference_value(const Graph& g, const VertexSet& s) {
  return static_cast<std::int64_t>(s.size()) -
         static_cast<std::int64_t>(neighborhood(g, s).size());
}

inline bool is_critical(const Graph& g, const IndependentSet& s, std::int64_t d) {
  return set_difference_value(g, s) == d;
}

inline bool is_critical(const Graph& g, const IndependentSet& s) {
  return is_critical(g, s, critical_difference(g));
}

/// I = {v : v+ and v- both lie in a maximum independent set J of B(G)}.
///
/// J = A+ ∪ C- with C = V \ N(A) and |A| - |N(A)| = d, and I = A \ N(A) is
/// independent and critical.
inline IndependentSet critical_seed(const Graph& g) {
  BipartiteDouble b(g);
  VertexSet j = bipartite_mis(b.graph());
  std::vector<std::uint8_t> copies(g.order(), 0);
  for (Vertex x : j) ++copies[b.host_vertex(x)];
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (copies[v] == 2) out.push_back(v);
  }
  return IndependentSet(g, VertexSet(std::move(out)));
}

/// For independent I containing v, |I| - |N(I)| = 1 - deg(v) + (|I'| - |N(I')|)
/// with I' = I \ {v} taken in G - N[v]; maximizing both sides gives
/// "v lies in some critical set" <=> 1 - deg(v) + d(G - N[v]) = d(G).
inline bool in_some_critical_set(const Graph& g, Vertex v, std::int64_t d) {
  Subgraph rest = remove_closed_neighborhood(g, v);
  return 1 - static_cast<std::int64_t>(g.degree(v)) + critical_difference(rest.graph) == d;
}

inline bool in_some_critical_set(const Graph& g, Vertex v) {
  if (v >= g.order()) throw GraphError("vertex out of range");
  return in_some_critical_set(g, v, critical_difference(g));
}

/// Membership flag for every vertex; one matching run per vertex.
inline std::vector<bool> critical_membership(const Graph& g, std::int64_t d) {
  std::vector<bool> out(g.order(), false);
  for (Vertex v = 0; v < g.order(); ++v) out[v] = in_some_critical_set(g, v, d);
  return out;
}

namespace detail {

inline IndependentSet critical_set_containing_unchecked(const Graph& g, Vertex v) {
  Subgraph rest = remove_closed_neighborhood(g, v);
  VertexSet seed = rest.lift(critical_seed(rest.graph));
  std::vector<Vertex> members = seed.members();
  members.push_back(v);
  return IndependentSet(g, VertexSet(std::move(members)));
}

inline IndependentSet merge_unchecked(const Graph& g, const IndependentSet& ic,
                                      const IndependentSet& jc) {
  VertexSet closed = set_union(ic, neighborhood(g, ic));
  return IndependentSet(g, set_union(ic, set_difference(jc, closed)));
}

}  // namespace detail

/// {v} ∪ critical_seed(G - N[v]), lifted back to G. Critical whenever v lies
/// in some critical set; throws CriticalSetError otherwise.
inline IndependentSet critical_set_containing(const Graph& g, Vertex v) {
  if (!in_some_critical_set(g, v)) {
    throw CriticalSetError("vertex not in any critical set");
  }
  return detail::critical_set_containing_unchecked(g, v);
}

/// I_c ∪ (J_c \ (I_c ∪ N(I_c))). Both inputs must be critical; the result is
/// critical and contains I_c.
inline IndependentSet merge_critical(const Graph& g, const IndependentSet& ic,
                                     const IndependentSet& jc) {
  const std::int64_t d = critical_difference(g);
  if (!is_critical(g, ic, d) || !is_critical(g, jc, d)) {
    throw CriticalSetError("merge_critical: input set is not critical");
  }
  return detail::merge_unchecked(g, ic, jc);
}

/// Maximum critical independent set.
///
/// Starts from critical_seed(G) and, scanning vertices in ascending order,
/// merges in critical_set_containing(G, v) for every v that lies in some
/// critical set but is outside I_c ∪ N(I_c). Once no such vertex remains, any
/// critical J_c lies inside I_c ∪ N(I_c) and the matching argument
/// |I_c ∩ N(J_c)| = |J_c ∩ N(I_c)| bounds |J_c| <= |I_c|.
///
/// X = I_c ∪ N(I_c) only grows, so a single ascending pass suffices.
inline CriticalReport max_critical_independent_set(const Graph& g) {
  CriticalReport report;
  report.d = critical_difference(g);
  report.per_vertex = critical_membership(g, report.d);

  IndependentSet current = critical_seed(g);
  std::vector<bool> closed(g.order(), false);
  auto mark_closed = [&](const VertexSet& s) {
    for (Vertex u : s) {
      closed[u] = true;
      for (Vertex w : g.neighbors(u)) closed[w] = true;
    }
  };
  mark_closed(current);

  for (Vertex v = 0; v < g.order(); ++v) {
    if (!report.per_vertex[v] || closed[v]) continue;
    IndependentSet extra = detail::critical_set_containing_unchecked(g, v);
    current = detail::merge_unchecked(g, current, extra);
    mark_closed(current);
  }

  // A maximum critical set holds each pendant or its neighbour; trading the
  // neighbour for its pendants keeps the size and the difference.
  std::vector<Vertex> members = current.members();
  std::vector<Vertex> swapped;
  for (Vertex u : members) {
    std::vector<Vertex> pendants;
    if (g.degree(u) >= 2) {
      for (Vertex w : g.neighbors(u)) {
        if (g.degree(w) == 1) pendants.push_back(w);
      }
    }
    if (pendants.empty()) {
      swapped.push_back(u);
    } else {
      swapped.insert(swapped.end(), pendants.begin(), pendants.end());
    }
  }
  current = IndependentSet(g, VertexSet(std::move(swapped)));

  report.alpha_prime = current.size();
  report.critical_set = std::move(current);
  return report;
}

}  // namespace critindep
