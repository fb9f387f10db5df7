#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "critindep/decomposition.hpp"
#include "critindep/exact_mis.hpp"
#include "critindep/generators.hpp"

namespace critindep {

struct BenchRecord {
  std::string graph_id;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t x_size = 0;
  std::size_t xc_size = 0;
  double t_decompose = 0.0;
  double t_mis_with_preprocess = 0.0;
  double t_mis_without = 0.0;
  /// Absent when either route ran out of budget.
  std::optional<std::size_t> alpha;
  bool agreement = false;
};

/// Solves alpha(G) twice: directly by branch and bound, and by decomposing
/// first and searching only the residual. Times are in seconds.
inline BenchRecord bench_graph(const std::string& id, const Graph& g, std::uint64_t budget) {
  using Clock = std::chrono::steady_clock;
  auto seconds = [](Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
  };
  BenchRecord r;
  r.graph_id = id;
  r.n = g.order();
  r.m = g.size();

  auto t0 = Clock::now();
  Decomposition dec = decompose(g);
  auto t1 = Clock::now();
  std::optional<std::size_t> with;
  try {
    with = independence_number(g, dec, budget).alpha;
  } catch (const ResidualBudgetExceeded&) {
  }
  auto t2 = Clock::now();
  std::optional<std::size_t> without;
  try {
    without = exact_mis(g, budget).size();
  } catch (const BudgetExceeded&) {
  }
  auto t3 = Clock::now();

  r.x_size = dec.x.size();
  r.xc_size = dec.x_complement.size();
  r.t_decompose = seconds(t0, t1);
  r.t_mis_with_preprocess = seconds(t0, t2);
  r.t_mis_without = seconds(t2, t3);
  if (with && without) {
    r.agreement = *with == *without;
    r.alpha = *with;
  }
  return r;
}

inline std::vector<BenchRecord> run_bench(std::size_t n, double p, std::size_t count,
                                          std::uint64_t seed, std::uint64_t budget) {
  std::vector<BenchRecord> out;
  for (auto& entry : er_corpus(count, {n}, {p}, seed)) {
    out.push_back(bench_graph(entry.id, entry.graph, budget));
  }
  return out;
}

inline std::string bench_csv_header() {
  return "graph_id,n,m,x_size,xc_size,t_decompose,t_mis_with_preprocess,t_mis_without,alpha,"
         "agreement";
}

inline std::string to_csv(const BenchRecord& r) {
  std::ostringstream out;
  out.precision(6);
  out << std::fixed << r.graph_id << ',' << r.n << ',' << r.m << ',' << r.x_size << ','
      << r.xc_size << ',' << r.t_decompose << ',' << r.t_mis_with_preprocess << ','
      << r.t_mis_without << ',';
  if (r.alpha) out << *r.alpha;
  out << ',' << (r.agreement ? "true" : "false");
  return out.str();
}

}  // namespace critindep
