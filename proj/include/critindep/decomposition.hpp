#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "critindep/critical.hpp"
#include "critindep/exact_mis.hpp"
#include "critindep/graph.hpp"

namespace critindep {

enum class Classification { irreducible, reducible, totally_reducible };

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::irreducible: return "irreducible";
    case Classification::reducible: return "reducible";
    case Classification::totally_reducible: return "totally_reducible";
  }
  return "unknown";
}

/// The independence decomposition V = X ∪ X^c with X = I_c ∪ N(I_c) for a
/// maximum critical independent set I_c. X does not depend on which maximum
/// critical set is used. G[X] is totally reducible (hence Konig-Egervary)
/// and G[X^c] is irreducible, and alpha(G) = alpha(G[X]) + alpha(G[X^c]).
struct Decomposition {
  VertexSet x;
  VertexSet x_complement;
  IndependentSet critical_set;
};

inline Decomposition decompose(const Graph& g, const CriticalReport& critical) {
  Decomposition dec;
  dec.critical_set = critical.critical_set;
  dec.x = set_union(critical.critical_set, neighborhood(g, critical.critical_set));
  dec.x_complement = complement(g.order(), dec.x);
  return dec;
}

inline Decomposition decompose(const Graph& g) {
  return decompose(g, max_critical_independent_set(g));
}

/// Irreducible iff alpha' = 0; totally reducible iff X = V, which is
/// equivalent to alpha = alpha' and needs no alpha computation. The empty
/// graph counts as totally reducible.
inline Classification classify(const Graph& g, const Decomposition& dec) {
  if (dec.x.size() == g.order()) return Classification::totally_reducible;
  if (dec.critical_set.empty()) return Classification::irreducible;
  return Classification::reducible;
}

inline Classification classify(const Graph& g) { return classify(g, decompose(g)); }

/// alpha + mu = n exactly when alpha = alpha', i.e. when I_c ∪ N(I_c) = V.
inline bool is_konig_egervary(const Graph& g) {
  return classify(g) == Classification::totally_reducible;
}

/// The residual G[X^c] was too large for the exact solver. Carries the
/// polynomial part of the answer.
class ResidualBudgetExceeded : public std::runtime_error {
 public:
  ResidualBudgetExceeded(const std::string& what, Decomposition dec, std::size_t lower)
      : std::runtime_error(what), decomposition_(std::move(dec)), lower_bound_(lower) {}

  const Decomposition& decomposition() const noexcept { return decomposition_; }
  /// |I_c| plus the best independent set found in the residual.
  std::size_t lower_bound() const noexcept { return lower_bound_; }

 private:
  Decomposition decomposition_;
  std::size_t lower_bound_;
};

struct IndependenceResult {
  std::size_t alpha = 0;
  IndependentSet mis;
  Decomposition decomposition;
};

/// Exact alpha(G) as |I_c| + alpha(G[X^c]). Only the irreducible residual is
/// searched, one connected component at a time; `node_budget` bounds the
/// total branch-and-bound nodes across components.
inline IndependenceResult independence_number(const Graph& g, const Decomposition& dec,
                                              std::uint64_t node_budget = kDefaultNodeBudget) {
  Subgraph residual = induced_subgraph(g, dec.x_complement);
  std::vector<Vertex> chosen = dec.critical_set.members();
  std::uint64_t remaining = node_budget;

  auto components = connected_components(residual.graph);
  for (std::size_t i = 0; i < components.size(); ++i) {
    Subgraph part = induced_subgraph(residual.graph, components[i]);
    try {
      std::uint64_t used = 0;
      IndependentSet local = exact_mis(part.graph, remaining, &used);
      remaining -= std::min(used, remaining);
      for (Vertex v : part.lift(local)) chosen.push_back(residual.to_host[v]);
    } catch (const BudgetExceeded& e) {
      std::size_t found = chosen.size() + e.lower_bound();
      for (std::size_t j = i + 1; j < components.size(); ++j) {
        found += greedy_independent_set(induced_subgraph(residual.graph, components[j]).graph).size();
      }
      std::size_t greedy = dec.critical_set.size() + greedy_independent_set(residual.graph).size();
      throw ResidualBudgetExceeded(
          "residual of order " + std::to_string(residual.graph.order()) +
              " exceeded the exact budget: " + e.what(),
          dec, std::max(found, greedy));
    }
  }
  IndependenceResult out;
  out.mis = IndependentSet(g, VertexSet(std::move(chosen)));
  out.alpha = out.mis.size();
  out.decomposition = dec;
  return out;
}

inline IndependenceResult independence_number(const Graph& g,
                                              std::uint64_t node_budget = kDefaultNodeBudget) {
  return independence_number(g, decompose(g), node_budget);
}

}  // namespace critindep
