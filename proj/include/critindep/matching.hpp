#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "critindep/graph.hpp"

namespace critindep {

/// Bipartite graph with declared sides. Left vertices are 0..left-1 and right
/// vertices are left..left+right-1 in the unified numbering used by Matching
/// and VertexSet results; adjacency is stored left-to-right with right
/// endpoints given as side-local indices.
class BipartiteGraph {
 public:
  BipartiteGraph() : offsets_(1, 0) {}

  /// `edges` are (left index, right index) pairs; duplicates are kept as given.
  BipartiteGraph(std::size_t left, std::size_t right,
                 const std::vector<std::pair<Vertex, Vertex>>& edges)
      : left_(left), right_(right), offsets_(left + 1, 0) {
    for (auto [l, r] : edges) {
      if (l >= left || r >= right) {
        throw std::out_of_range("bipartite edge endpoint out of range");
      }
      ++offsets_[l + 1];
    }
    for (std::size_t i = 0; i < left; ++i) offsets_[i + 1] += offsets_[i];
    targets_.resize(edges.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (auto [l, r] : edges) targets_[fill[l]++] = r;
  }

  std::size_t left_count() const noexcept { return left_; }
  std::size_t right_count() const noexcept { return right_; }
  std::size_t vertex_count() const noexcept { return left_ + right_; }
  std::size_t edge_count() const noexcept { return targets_.size(); }

  /// Right-side indices adjacent to left vertex l.
  std::span<const Vertex> neighbors(Vertex l) const {
    return {targets_.data() + offsets_[l], offsets_[l + 1] - offsets_[l]};
  }

  Vertex right_id(Vertex r) const noexcept { return static_cast<Vertex>(left_ + r); }

 private:
  std::size_t left_ = 0;
  std::size_t right_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

/// A set of pairwise non-incident edges, stored as a partial involution.
class Matching {
 public:
  static constexpr Vertex kUnmatched = std::numeric_limits<Vertex>::max();

  Matching() = default;
  explicit Matching(std::size_t vertex_count) : mate_(vertex_count, kUnmatched) {}

  void add(Vertex u, Vertex v) {
    if (u == v || u >= mate_.size() || v >= mate_.size()) {
      throw std::invalid_argument("invalid matching pair");
    }
    if (mate_[u] != kUnmatched || mate_[v] != kUnmatched) {
      throw std::invalid_argument("vertex already matched");
    }
    mate_[u] = v;
    mate_[v] = u;
    ++size_;
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t vertex_count() const noexcept { return mate_.size(); }
  bool is_matched(Vertex v) const { return mate_[v] != kUnmatched; }

  std::optional<Vertex> mate(Vertex v) const {
    if (mate_[v] == kUnmatched) return std::nullopt;
    return mate_[v];
  }

  /// Pairs as (smaller, larger), in ascending order.
  std::vector<Edge> pairs() const {
    std::vector<Edge> out;
    out.reserve(size_);
    for (Vertex v = 0; v < mate_.size(); ++v) {
      if (mate_[v] != kUnmatched && v < mate_[v]) out.push_back({v, mate_[v]});
    }
    return out;
  }

 private:
  std::vector<Vertex> mate_;
  std::size_t size_ = 0;
};

/// True when every pair of m is an edge of g and m is a valid involution.
inline bool is_matching_of(const Graph& g, const Matching& m) {
  if (m.vertex_count() != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto w = m.mate(v);
    if (!w) continue;
    if (m.mate(*w) != v || !g.adjacent(v, *w)) return false;
  }
  return true;
}

namespace detail {

// Hopcroft-Karp state over side-local indices. Each phase builds BFS layers
// from the free left vertices and then extracts vertex-disjoint augmenting
// paths along the layers with an explicit stack (paths can be long on
// sparse inputs, so no recursion).
struct HopcroftKarp {
  static constexpr Vertex kNil = std::numeric_limits<Vertex>::max();
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

  const BipartiteGraph& b;
  std::vector<Vertex> pair_left;
  std::vector<Vertex> pair_right;
  std::vector<std::uint32_t> dist;
  std::vector<std::size_t> cursor;
  std::vector<Vertex> queue;
  std::vector<Vertex> stack;

  explicit HopcroftKarp(const BipartiteGraph& graph)
      : b(graph),
        pair_left(graph.left_count(), kNil),
        pair_right(graph.right_count(), kNil),
        dist(graph.left_count(), kInf),
        cursor(graph.left_count(), 0) {}

  void greedy_start() {
    for (Vertex l = 0; l < b.left_count(); ++l) {
      for (Vertex r : b.neighbors(l)) {
        if (pair_right[r] == kNil) {
          pair_left[l] = r;
          pair_right[r] = l;
          break;
        }
      }
    }
  }

  bool build_layers() {
    queue.clear();
    for (Vertex l = 0; l < b.left_count(); ++l) {
      if (pair_left[l] == kNil) {
        dist[l] = 0;
        queue.push_back(l);
      } else {
        dist[l] = kInf;
      }
    }
    bool found = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex l = queue[head];
      for (Vertex r : b.neighbors(l)) {
        Vertex next = pair_right[r];
        if (next == kNil) {
          found = true;
        } else if (dist[next] == kInf) {
          dist[next] = dist[l] + 1;
          queue.push_back(next);
        }
      }
    }
    return found;
  }

  bool augment_from(Vertex root) {
    stack.clear();
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex l = stack.back();
      auto nb = b.neighbors(l);
      if (cursor[l] == nb.size()) {
        dist[l] = kInf;
        stack.pop_back();
        if (!stack.empty()) ++cursor[stack.back()];
        continue;
      }
      Vertex r = nb[cursor[l]];
      Vertex next = pair_right[r];
      if (next == kNil) {
        for (Vertex u : stack) {
          Vertex target = b.neighbors(u)[cursor[u]];
          pair_left[u] = target;
          pair_right[target] = u;
        }
        return true;
      }
      if (dist[next] == dist[l] + 1) {
        stack.push_back(next);
      } else {
        ++cursor[l];
      }
    }
    return false;
  }

  void run() {
    greedy_start();
    while (build_layers()) {
      std::fill(cursor.begin(), cursor.end(), 0);
      for (Vertex l = 0; l < b.left_count(); ++l) {
        if (pair_left[l] == kNil) augment_from(l);
      }
    }
  }
};

}  // namespace detail

/// Maximum-cardinality matching by Hopcroft-Karp, O(E sqrt(V)). The result is
/// expressed in unified ids (left l, right left+r).
inline Matching max_matching(const BipartiteGraph& b) {
  detail::HopcroftKarp hk(b);
  hk.run();
  Matching m(b.vertex_count());
  for (Vertex l = 0; l < b.left_count(); ++l) {
    if (hk.pair_left[l] != detail::HopcroftKarp::kNil) m.add(l, b.right_id(hk.pair_left[l]));
  }
  return m;
}

/// Maximum independent set of a bipartite graph via Konig's theorem: with Z
/// the vertices reachable from free left vertices by alternating paths, the
/// set (L ∩ Z) ∪ (R \ Z) is independent and has |V| - |M| members.
/// `maximum` must be a maximum matching of b.
inline VertexSet bipartite_mis(const BipartiteGraph& b, const Matching& maximum) {
  const std::size_t left = b.left_count();
  std::vector<bool> seen_left(left, false);
  std::vector<bool> seen_right(b.right_count(), false);
  std::vector<Vertex> queue;
  for (Vertex l = 0; l < left; ++l) {
    if (!maximum.is_matched(l)) {
      seen_left[l] = true;
      queue.push_back(l);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex l = queue[head];
    for (Vertex r : b.neighbors(l)) {
      if (seen_right[r]) continue;
      seen_right[r] = true;
      auto back = maximum.mate(b.right_id(r));
      if (back && !seen_left[*back]) {
        seen_left[*back] = true;
        queue.push_back(*back);
      }
    }
  }
  std::vector<Vertex> out;
  for (Vertex l = 0; l < left; ++l) {
    if (seen_left[l]) out.push_back(l);
  }
  for (Vertex r = 0; r < b.right_count(); ++r) {
    if (!seen_right[r]) out.push_back(b.right_id(r));
  }
  return VertexSet(std::move(out));
}

inline VertexSet bipartite_mis(const BipartiteGraph& b) {
  return bipartite_mis(b, max_matching(b));
}

/// The bipartite double B(G): copies v+ (left, id v) and v- (right, id n+v)
/// of every vertex, with u+v- an edge exactly when uv is an edge of G.
class BipartiteDouble {
 public:
  explicit BipartiteDouble(const Graph& g) : n_(g.order()) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(2 * g.size());
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex w : g.neighbors(u)) edges.emplace_back(u, w);
    }
    graph_ = BipartiteGraph(n_, n_, edges);
  }

  std::size_t host_order() const noexcept { return n_; }
  const BipartiteGraph& graph() const noexcept { return graph_; }

  Vertex plus(Vertex v) const noexcept { return v; }
  Vertex minus(Vertex v) const noexcept { return static_cast<Vertex>(n_ + v); }
  bool is_plus(Vertex b) const noexcept { return b < n_; }
  Vertex host_vertex(Vertex b) const noexcept {
    return b < n_ ? b : static_cast<Vertex>(b - n_);
  }

 private:
  std::size_t n_ = 0;
  BipartiteGraph graph_;
};

inline BipartiteDouble bipartite_double(const Graph& g) { return BipartiteDouble(g); }

/// A matching that saturates `from` using only G-edges into `into`, or
/// nullopt when none exists. The matching is expressed in G's vertex ids.
inline std::optional<Matching> saturating_matching(const Graph& g, const VertexSet& from,
                                                   const VertexSet& into) {
  require_valid(g, from);
  require_valid(g, into);
  constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> into_index(g.order(), kAbsent);
  for (std::size_t i = 0; i < into.size(); ++i) into_index[into[i]] = static_cast<Vertex>(i);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (into_index[from[i]] != kAbsent) {
      throw std::invalid_argument("saturating_matching: sides must be disjoint");
    }
    for (Vertex w : g.neighbors(from[i])) {
      if (into_index[w] != kAbsent) edges.emplace_back(static_cast<Vertex>(i), into_index[w]);
    }
  }
  BipartiteGraph b(from.size(), into.size(), edges);
  Matching local = max_matching(b);
  if (local.size() != from.size()) return std::nullopt;
  Matching out(g.order());
  for (Vertex i = 0; i < from.size(); ++i) {
    out.add(from[i], into[*local.mate(i) - static_cast<Vertex>(from.size())]);
  }
  return out;
}

}  // namespace critindep
