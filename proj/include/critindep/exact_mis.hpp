#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <queue>
#include <utility>
#include <stdexcept>
#include <string>
#include <vector>

#include "critindep/graph.hpp"

namespace critindep {

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;
inline constexpr std::size_t kMaxExactOrder = 4096;

/// Branch and bound gave up. best() is the largest independent set found so
/// far, so lower_bound() = |best()| <= alpha.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, IndependentSet best)
      : std::runtime_error(what), best_(std::move(best)) {}

  std::size_t lower_bound() const noexcept { return best_.size(); }
  const IndependentSet& best() const noexcept { return best_; }

 private:
  IndependentSet best_;
};

/// Greedy minimum-degree independent set; a quick lower bound on alpha.
inline IndependentSet greedy_independent_set(const Graph& g) {
  std::vector<std::size_t> deg(g.order());
  std::vector<bool> alive(g.order(), true);
  using Entry = std::pair<std::size_t, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (Vertex v = 0; v < g.order(); ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<Vertex> out;
  auto kill = [&](Vertex u) {
    if (!alive[u]) return;
    alive[u] = false;
    for (Vertex w : g.neighbors(u)) {
      if (alive[w]) queue.emplace(--deg[w], w);
    }
  };
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (!alive[v] || d != deg[v]) continue;
    out.push_back(v);
    kill(v);
    for (Vertex w : g.neighbors(v)) kill(w);
  }
  return IndependentSet(g, VertexSet(std::move(out)));
}

namespace detail {

class MisSearch {
 public:
  using Bits = std::vector<std::uint64_t>;

  MisSearch(const Graph& g, std::uint64_t budget)
      : g_(g), n_(g.order()), words_((n_ + 63) / 64), budget_(budget), adj_(n_, Bits(words_, 0)) {
    for (const auto& e : g.edges()) {
      set(adj_[e.u], e.v);
      set(adj_[e.v], e.u);
    }
  }

  IndependentSet run() {
    best_ = greedy_independent_set(g_).members();
    Bits cand(words_, 0);
    for (Vertex v = 0; v < n_; ++v) set(cand, v);
    std::vector<Vertex> current;
    search(cand, current);
    return IndependentSet(g_, VertexSet(best_));
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  static void set(Bits& b, Vertex v) { b[v >> 6] |= std::uint64_t{1} << (v & 63); }
  static void reset(Bits& b, Vertex v) { b[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  static bool test(const Bits& b, Vertex v) { return (b[v >> 6] >> (v & 63)) & 1U; }

  template <typename F>
  static void for_each(const Bits& b, F&& f) {
    for (std::size_t w = 0; w < b.size(); ++w) {
      std::uint64_t word = b[w];
      while (word) {
        f(static_cast<Vertex>(w * 64 + std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  std::size_t degree_in(Vertex v, const Bits& cand) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += std::popcount(adj_[v][w] & cand[w]);
    return d;
  }

  void take(Bits& cand, Vertex v, std::vector<Vertex>& current) const {
    current.push_back(v);
    reset(cand, v);
    for (std::size_t w = 0; w < words_; ++w) cand[w] &= ~adj_[v][w];
  }

  // Greedy clique cover of cand, vertices in ascending order: each vertex
  // joins the first clique it is fully adjacent to. The number of cliques
  // bounds the independence number of G[cand].
  std::size_t clique_cover_bound(const Bits& cand) const {
    std::vector<Bits> common;
    for_each(cand, [&](Vertex v) {
      for (auto& c : common) {
        if (test(c, v)) {
          for (std::size_t w = 0; w < words_; ++w) c[w] &= adj_[v][w];
          return;
        }
      }
      Bits c(words_);
      for (std::size_t w = 0; w < words_; ++w) c[w] = adj_[v][w] & cand[w];
      common.push_back(std::move(c));
    });
    return common.size();
  }

  void search(Bits cand, std::vector<Vertex>& current) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("branch-and-bound node budget of " + std::to_string(budget_) +
                               " exceeded",
                           IndependentSet(g_, VertexSet(best_)));
    }
    const std::size_t depth = current.size();

    // Vertices of degree <= 1 in the candidate graph belong to some maximum
    // independent set of it; take them without branching.
    Vertex pivot = 0;
    std::size_t pivot_degree = 0;
    bool any = true;
    while (any) {
      any = false;
      bool reduced = false;
      pivot_degree = 0;
      for_each(cand, [&](Vertex v) {
        if (reduced || !test(cand, v)) return;
        std::size_t d = degree_in(v, cand);
        if (d <= 1) {
          take(cand, v, current);
          reduced = true;
          return;
        }
        if (!any || d > pivot_degree) {
          pivot = v;
          pivot_degree = d;
          any = true;
        }
      });
      if (reduced) {
        any = true;
        continue;
      }
      break;
    }

    if (!any) {
      if (current.size() > best_.size()) best_ = current;
      current.resize(depth);
      return;
    }
    if (current.size() + clique_cover_bound(cand) <= best_.size()) {
      current.resize(depth);
      return;
    }

    Bits with = cand;
    take(with, pivot, current);
    search(std::move(with), current);
    current.pop_back();

    reset(cand, pivot);
    search(std::move(cand), current);
    current.resize(depth);
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t words_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Bits> adj_;
  std::vector<Vertex> best_;
};

}  // namespace detail

/// Exact maximum independent set by branch and bound: degree <= 1 vertices
/// are taken greedily, otherwise branch on a maximum-degree vertex (lowest id
/// on ties), include first, pruning with a greedy clique cover bound.
/// Throws BudgetExceeded after `node_budget` search nodes or when the order
/// exceeds kMaxExactOrder. `nodes_used` receives the node count on success.
inline IndependentSet exact_mis(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget,
                                std::uint64_t* nodes_used = nullptr) {
  if (g.order() > kMaxExactOrder) {
    throw BudgetExceeded("graph order " + std::to_string(g.order()) +
                             " exceeds exact solver limit",
                         greedy_independent_set(g));
  }
  detail::MisSearch search(g, node_budget);
  IndependentSet best = search.run();
  if (nodes_used) *nodes_used = search.nodes();
  return best;
}

}  // namespace critindep
