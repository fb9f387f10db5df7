#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace critindep {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored in compressed (CSR) form with every neighbour list
/// sorted ascending, so membership queries are a binary search. The edge list
/// is kept normalized (u < v) and sorted, which is also the serialization
/// order. Optional labels are carried through induced subgraphs.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Builds a graph from an arbitrary edge list. Duplicate edges (in either
  /// orientation) collapse to one; self-loops and out-of-range ids throw.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges,
                          std::vector<std::string> labels = {}) {
    if (n > static_cast<std::size_t>(UINT32_MAX)) {
      throw GraphError("graph order exceeds 32-bit vertex ids");
    }
    if (!labels.empty() && labels.size() != n) {
      throw GraphError("label count " + std::to_string(labels.size()) +
                       " does not match order " + std::to_string(n));
    }
    for (auto& e : edges) {
      if (e.u == e.v) {
        throw GraphError("self-loop on vertex " + std::to_string(e.u));
      }
      if (e.u >= n || e.v >= n) {
        throw GraphError("edge (" + std::to_string(e.u) + ", " +
                         std::to_string(e.v) + ") out of range for order " +
                         std::to_string(n));
      }
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.labels_ = std::move(labels);
    g.offsets_.assign(n + 1, 0);
    for (const auto& e : g.edges_) {
      ++g.offsets_[e.u + 1];
      ++g.offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.targets_.resize(2 * g.edges_.size());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    // Edges are sorted by (u, v), so pushing v into u's list and u into v's
    // list in this order leaves every list sorted without a second pass.
    for (const auto& e : g.edges_) g.targets_[fill[e.v]++] = e.u;
    for (const auto& e : g.edges_) g.targets_[fill[e.u]++] = e.v;
    return g;
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool adjacent(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Label if present, otherwise the decimal id.
  std::string name(Vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
  }

  std::optional<Vertex> find_label(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Vertex>(it - labels_.begin());
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<std::string> labels_;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  VertexSet(std::initializer_list<Vertex> members)
      : VertexSet(std::vector<Vertex>(members)) {}

  /// Collects the vertices whose flag is set.
  static VertexSet from_mask(const std::vector<bool>& mask) {
    VertexSet s;
    for (std::size_t v = 0; v < mask.size(); ++v) {
      if (mask[v]) s.members_.push_back(static_cast<Vertex>(v));
    }
    return s;
  }

  static VertexSet all(std::size_t n) {
    VertexSet s;
    s.members_.resize(n);
    for (std::size_t v = 0; v < n; ++v) s.members_[v] = static_cast<Vertex>(v);
    return s;
  }

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Vertex>& members() const noexcept { return members_; }

  bool contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }

  /// True when every member is a vertex of a graph of order n.
  bool valid_for(std::size_t n) const {
    return members_.empty() || members_.back() < n;
  }

  std::vector<bool> mask(std::size_t n) const {
    std::vector<bool> m(n, false);
    for (Vertex v : members_) m[v] = true;
    return m;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return VertexSet(std::move(out));
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return VertexSet(std::move(out));
}

inline VertexSet complement(std::size_t n, const VertexSet& s) {
  return set_difference(VertexSet::all(n), s);
}

inline void require_valid(const Graph& g, const VertexSet& s) {
  if (!s.valid_for(g.order())) {
    throw GraphError("vertex " + std::to_string(s.members().back()) +
                     " out of range for order " + std::to_string(g.order()));
  }
}

/// Union of the open neighbourhoods of the members of s. May intersect s
/// when s is not independent.
inline VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  require_valid(g, s);
  std::vector<bool> mark(g.order(), false);
  for (Vertex u : s) {
    for (Vertex w : g.neighbors(u)) mark[w] = true;
  }
  return VertexSet::from_mask(mark);
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
  if (!s.valid_for(g.order())) return false;
  std::vector<bool> in = s.mask(g.order());
  for (Vertex u : s) {
    for (Vertex w : g.neighbors(u)) {
      if (in[w]) return false;
    }
  }
  return true;
}

class NotIndependentError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// A vertex set certified pairwise non-adjacent in the graph it was built
/// against. The certificate is checked once at construction.
class IndependentSet : public VertexSet {
 public:
  IndependentSet() = default;

  IndependentSet(const Graph& g, VertexSet s) : VertexSet(std::move(s)) {
    require_valid(g, *this);
    if (!is_independent(g, *this)) {
      throw NotIndependentError("vertex set is not independent");
    }
  }
};

/// An induced subgraph together with the map back to host ids.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_host;

  VertexSet lift(const VertexSet& local) const {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(to_host[v]);
    return VertexSet(std::move(out));
  }
};

inline Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  require_valid(g, s);
  constexpr Vertex kAbsent = UINT32_MAX;
  std::vector<Vertex> local(g.order(), kAbsent);
  Subgraph sub;
  sub.to_host = s.members();
  for (std::size_t i = 0; i < s.size(); ++i) local[s[i]] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  for (Vertex u : s) {
    for (Vertex w : g.neighbors(u)) {
      if (u < w && local[w] != kAbsent) edges.push_back({local[u], local[w]});
    }
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(s.size());
    for (Vertex v : s) labels.push_back(g.labels()[v]);
  }
  sub.graph = Graph::from_edges(s.size(), std::move(edges), std::move(labels));
  return sub;
}

/// G - N[v]: deletes v and all of its neighbours.
inline Subgraph remove_closed_neighborhood(const Graph& g, Vertex v) {
  std::vector<bool> keep(g.order(), true);
  keep[v] = false;
  for (Vertex w : g.neighbors(v)) keep[w] = false;
  return induced_subgraph(g, VertexSet::from_mask(keep));
}

/// Connected components as vertex sets, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  constexpr Vertex kUnseen = UINT32_MAX;
  std::vector<Vertex> comp(g.order(), kUnseen);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] != kUnseen) continue;
    auto id = static_cast<Vertex>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      out.back().push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (comp[w] == kUnseen) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  std::vector<VertexSet> sets;
  sets.reserve(out.size());
  for (auto& c : out) sets.emplace_back(std::move(c));
  return sets;
}

}  // namespace critindep
