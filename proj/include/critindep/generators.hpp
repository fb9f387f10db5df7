#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "critindep/graph.hpp"

namespace critindep {

// Deterministic generators. Random graphs draw from std::mt19937_64, whose
// output sequence is fixed by the standard; only raw 64-bit outputs are used
// (no std:: distributions) so results do not depend on the library vendor.

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    edges.push_back({static_cast<Vertex>(v - 1), static_cast<Vertex>(v)});
  }
  return Graph::from_edges(n, std::move(edges));
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n)});
  }
  return Graph::from_edges(n, std::move(edges));
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(n, std::move(edges));
}

/// K_{1,n-1} with centre 0.
inline Graph star_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph::from_edges(n, std::move(edges));
}

inline Graph empty_graph(std::size_t n) { return Graph::from_edges(n, {}); }

/// Uniform double in [0, 1) from the top 53 bits of one engine output.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// G(n, p) by geometric skipping over the n(n-1)/2 vertex pairs, so the cost
/// is proportional to n + m rather than n^2.
inline Graph er_random(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw GraphError("edge probability must lie in [0, 1]");
  if (p == 0.0 || n < 2) return empty_graph(n);
  if (p == 1.0) return complete_graph(n);

  std::mt19937_64 rng(seed);
  const double log_q = std::log1p(-p);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p * static_cast<double>(n) * (n - 1) / 2 * 1.05) + 16);
  // Pairs (v, w) with w < v, enumerated row by row.
  std::int64_t v = 1;
  std::int64_t w = -1;
  const auto order = static_cast<std::int64_t>(n);
  while (v < order) {
    double r = unit_uniform(rng);
    double skip = std::floor(std::log1p(-r) / log_q);
    w += 1 + static_cast<std::int64_t>(std::min(skip, 9.0e15));
    while (w >= v && v < order) {
      w -= v;
      ++v;
    }
    if (v < order) edges.push_back({static_cast<Vertex>(w), static_cast<Vertex>(v)});
  }
  return Graph::from_edges(n, std::move(edges));
}

/// Random bipartite graph: sides 0..left-1 and left..left+right-1, each cross
/// pair present independently with probability p.
inline Graph random_bipartite(std::size_t left, std::size_t right, double p,
                              std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw GraphError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < left; ++u) {
    for (std::size_t v = 0; v < right; ++v) {
      if (unit_uniform(rng) < p) {
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(left + v)});
      }
    }
  }
  return Graph::from_edges(left + right, std::move(edges));
}

/// Labelled graph number `code` on n vertices: bit i of code selects the i-th
/// pair in lexicographic order. Codes range over [0, 2^(n(n-1)/2)).
inline Graph labeled_graph_from_code(std::size_t n, std::uint64_t code) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if ((code >> bit) & 1U) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

/// Every labelled graph on exactly n vertices (n <= 6).
inline std::vector<Graph> all_labeled_graphs(std::size_t n) {
  if (n > 6) throw GraphError("exhaustive enumeration limited to n <= 6");
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<Graph> out;
  out.reserve(std::size_t{1} << pairs);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    out.push_back(labeled_graph_from_code(n, code));
  }
  return out;
}

struct CorpusEntry {
  std::string id;
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  Graph graph;
};

/// Reproducible ER corpus: graph i has order orders[i % |orders|], density
/// densities[(i / |orders|) % |densities|], and a seed drawn from a master
/// engine seeded with `seed`.
inline std::vector<CorpusEntry> er_corpus(std::size_t count,
                                          const std::vector<std::size_t>& orders,
                                          const std::vector<double>& densities,
                                          std::uint64_t seed) {
  if (orders.empty() || densities.empty()) {
    throw GraphError("corpus needs at least one order and one density");
  }
  std::mt19937_64 master(seed);
  std::vector<CorpusEntry> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    CorpusEntry e;
    e.id = "er-" + std::to_string(i);
    e.n = orders[i % orders.size()];
    e.p = densities[(i / orders.size()) % densities.size()];
    e.seed = master();
    e.graph = er_random(e.n, e.p, e.seed);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace critindep
