// critindep: command-line front end for critical independent sets and the
// independence decomposition.
//
// Machine-readable results go to stdout (JSON, CSV, or graph text); progress
// and human-readable summaries go to stderr. Exit codes: 0 success, 1 failed
// check or usage error, 2 unreadable or malformed input, 3 exact budget
// exceeded (a partial report is still printed).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "critindep/critindep.hpp"

namespace ci = critindep;
using ci::json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;

struct InputOptions {
  std::string path;
  std::string format = "auto";
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ci::Graph load_graph(const InputOptions& in, ci::Format* detected = nullptr) {
  std::string text;
  if (in.path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream file(in.path, std::ios::binary);
    if (!file) throw InputError("cannot open '" + in.path + "'");
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  ci::Format format = ci::Format::edgelist;
  if (in.format == "auto") {
    format = ci::detect_format(text);
  } else if (in.format == "dimacs") {
    format = ci::Format::dimacs;
  }
  if (detected) *detected = format;
  try {
    return ci::parse_graph(text, format);
  } catch (const ci::GraphError& e) {
    throw ci::ParseError(0, e.what());
  }
}

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("path", in.path, "graph file, or - for stdin")->required();
  cmd->add_option("--format", in.format, "input format")
      ->check(CLI::IsMember({"auto", "dimacs", "edgelist"}));
}

// Vertex names as a user would write them: labels when the graph has them,
// otherwise ids in the input file's numbering.
json names(const ci::Graph& g, const ci::VertexSet& s, ci::Format format) {
  json out = json::array();
  for (ci::Vertex v : s) {
    if (g.has_labels()) {
      out.push_back(g.name(v));
    } else {
      out.push_back(v + (format == ci::Format::dimacs ? 1 : 0));
    }
  }
  return out;
}

std::string brace(const ci::Graph& g, const ci::VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + g.name(s[i]);
  return out + "}";
}

int run_analyze(const InputOptions& in, std::uint64_t budget, bool as_json) {
  ci::Graph g = load_graph(in);
  ci::Analysis a = ci::analyze(g, budget);
  auto violations = ci::verify_report(g, a.report);
  if (!violations.empty()) {
    for (const auto& v : violations) std::cerr << "self-check failed: " << v << "\n";
    return kExitFailure;
  }
  const ci::AnalysisReport& r = a.report;
  if (as_json) {
    std::cout << ci::to_json(r).dump(2) << "\n";
  }
  std::cerr << "n=" << r.n << " m=" << r.m << " d=" << r.d << " alpha'=" << r.alpha_prime
            << " alpha=" << (r.alpha ? std::to_string(*r.alpha) : "?")
            << " mu=" << (r.mu ? std::to_string(*r.mu) : "?") << " class="
            << ci::to_string(r.classification) << " ke=" << (r.is_ke ? "yes" : "no") << "\n"
            << "X=" << brace(g, r.x) << " Xc=" << brace(g, r.x_complement) << "\n";
  if (a.budget_exceeded) {
    std::cerr << "exact budget exceeded; alpha >= " << a.alpha_lower_bound << "\n";
    return kExitBudget;
  }
  return 0;
}

int run_decompose(const InputOptions& in, const std::string& certificate) {
  ci::Format format{};
  ci::Graph g = load_graph(in, &format);
  ci::Decomposition dec = ci::decompose(g);
  ci::VertexSet nb = ci::neighborhood(g, dec.critical_set);
  auto matching = ci::saturating_matching(g, nb, dec.critical_set);
  if (!matching) {
    std::cerr << "internal error: no saturating matching N(I_c) -> I_c\n";
    return kExitFailure;
  }
  json pairs = json::array();
  for (ci::Vertex u : nb) {
    json p = names(g, ci::VertexSet{u}, format);
    p.push_back(names(g, ci::VertexSet{*matching->mate(u)}, format)[0]);
    pairs.push_back(p);
  }
  json out{
      {"X", names(g, dec.x, format)},
      {"X_complement", names(g, dec.x_complement, format)},
      {"I_c", names(g, dec.critical_set, format)},
      {"matching", pairs},
      {"classification", ci::to_string(ci::classify(g, dec))},
  };
  std::cout << out.dump(2) << "\n";
  if (!certificate.empty()) {
    std::ofstream file(certificate);
    if (!file) throw InputError("cannot write '" + certificate + "'");
    file << out.dump(2) << "\n";
  }
  std::cerr << "X=" << brace(g, dec.x) << " Xc=" << brace(g, dec.x_complement) << "\n";
  return 0;
}

int run_mis(const InputOptions& in, std::uint64_t budget) {
  ci::Format format{};
  ci::Graph g = load_graph(in, &format);
  try {
    ci::IndependenceResult r = ci::independence_number(g, budget);
    json out{{"alpha", r.alpha},
             {"mis", names(g, r.mis, format)},
             {"residual_order", r.decomposition.x_complement.size()}};
    std::cout << out.dump(2) << "\n";
    return 0;
  } catch (const ci::ResidualBudgetExceeded& e) {
    json out{{"alpha", nullptr},
             {"alpha_lower_bound", e.lower_bound()},
             {"residual_order", e.decomposition().x_complement.size()}};
    std::cout << out.dump(2) << "\n";
    std::cerr << e.what() << "\n";
    return kExitBudget;
  }
}

int run_ke(const InputOptions& in) {
  ci::Graph g = load_graph(in);
  ci::CriticalReport c = ci::max_critical_independent_set(g);
  ci::Decomposition dec = ci::decompose(g, c);
  bool ke = ci::classify(g, dec) == ci::Classification::totally_reducible;
  json out{{"is_ke", ke}, {"alpha_prime", c.alpha_prime}, {"x_size", dec.x.size()}, {"n", g.order()}};
  if (ke) out["alpha"] = c.alpha_prime;
  std::cout << out.dump(2) << "\n";
  return 0;
}

struct GenOptions {
  std::string kind;
  std::size_t n = 0;
  std::size_t right = 0;
  double p = 0.5;
  std::uint64_t seed = 1;
  std::string format = "edgelist";
};

int run_gen(const GenOptions& o) {
  ci::Graph g;
  if (o.kind == "path") g = ci::path_graph(o.n);
  else if (o.kind == "cycle") g = ci::cycle_graph(o.n);
  else if (o.kind == "complete") g = ci::complete_graph(o.n);
  else if (o.kind == "star") g = ci::star_graph(o.n);
  else if (o.kind == "empty") g = ci::empty_graph(o.n);
  else if (o.kind == "er_random") g = ci::er_random(o.n, o.p, o.seed);
  else g = ci::random_bipartite(o.n, o.right, o.p, o.seed);
  std::cout << ci::serialize_graph(g, o.format == "dimacs" ? ci::Format::dimacs : ci::Format::edgelist);
  return 0;
}

struct CheckOptions {
  std::size_t n = 8;
  std::string count = "200";
  double p = 0.3;
  std::uint64_t seed = 1;
  bool plant_bug = false;
};

int run_oracle_check(const CheckOptions& o) {
  ci::SuiteOptions suite;
  if (o.plant_bug) {
    // Drops the largest vertex from every non-empty maximum critical set.
    suite.solver = [](const ci::Graph& g) {
      ci::CriticalReport r = ci::max_critical_independent_set(g);
      if (!r.critical_set.empty()) {
        auto members = r.critical_set.members();
        members.pop_back();
        r.critical_set = ci::IndependentSet(g, ci::VertexSet(members));
        r.alpha_prime = members.size();
      }
      return r;
    };
  }
  if (o.n > ci::kOracleMaxOrder) throw CLI::ValidationError("--n", "oracle limited to n <= 22");

  std::vector<ci::Graph> graphs;
  if (o.count == "all-graphs") {
    graphs = ci::all_labeled_graphs(o.n);
  } else {
    std::size_t count = std::stoul(o.count);
    for (auto& e : ci::er_corpus(count, {o.n}, {o.p}, o.seed)) graphs.push_back(std::move(e.graph));
  }

  ci::InvariantTally tally;
  std::size_t failing = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!ci::check_all_invariants(graphs[i], tally, suite)) {
      ++failing;
      std::cerr << "violation in graph " << i << ":\n"
                << ci::serialize_graph(graphs[i], ci::Format::edgelist);
    }
  }
  json inv = json::object();
  for (const auto& [name, c] : tally.counts()) {
    inv[name] = {{"checked", c.checked}, {"violated", c.violated}};
    std::cerr << (c.violated ? "FAIL " : "ok   ") << name << ": " << c.checked - c.violated
              << "/" << c.checked << "\n";
  }
  json out{{"graphs", graphs.size()},
           {"failing_graphs", failing},
           {"violations", tally.violations()},
           {"invariants", inv}};
  std::cout << out.dump(2) << "\n";
  std::cerr << tally.violations() << " violations\n";
  return tally.violations() == 0 ? 0 : kExitFailure;
}

struct BenchOptions {
  std::size_t n = 40;
  double p = 0.1;
  std::size_t count = 10;
  std::uint64_t seed = 1;
  std::uint64_t budget = ci::kDefaultNodeBudget;
};

int run_bench(const BenchOptions& o) {
  auto rows = ci::run_bench(o.n, o.p, o.count, o.seed, o.budget);
  std::cout << ci::bench_csv_header() << "\n";
  bool all_agree = true;
  for (const auto& r : rows) {
    std::cout << ci::to_csv(r) << "\n";
    all_agree &= r.agreement;
  }
  std::cerr << rows.size() << " rows, agreement " << (all_agree ? "on every row" : "FAILED") << "\n";
  return all_agree ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical independent sets, independence decomposition, and Konig-Egervary recognition"};
  app.require_subcommand(1);

  InputOptions analyze_in;
  std::uint64_t analyze_budget = ci::kDefaultNodeBudget;
  bool analyze_json = false;
  auto* analyze = app.add_subcommand("analyze", "full report for one graph");
  add_input(analyze, analyze_in);
  analyze->add_option("--exact-budget", analyze_budget, "branch-and-bound node budget");
  analyze->add_flag("--json", analyze_json, "print the JSON report on stdout");

  InputOptions decompose_in;
  std::string certificate;
  auto* decompose = app.add_subcommand("decompose", "X / X^c with the matching certificate");
  add_input(decompose, decompose_in);
  decompose->add_option("--certificate", certificate, "also write the certificate JSON here");

  InputOptions mis_in;
  std::uint64_t mis_budget = ci::kDefaultNodeBudget;
  auto* mis = app.add_subcommand("mis", "maximum independent set via decomposition");
  add_input(mis, mis_in);
  mis->add_option("--exact-budget", mis_budget, "branch-and-bound node budget");

  InputOptions ke_in;
  auto* ke = app.add_subcommand("ke", "Konig-Egervary test");
  add_input(ke, ke_in);

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "generate a graph");
  gen->add_option("kind", gen_opt.kind)
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "complete", "star", "empty", "er_random", "bipartite"}));
  gen->add_option("--n", gen_opt.n, "order (left side for bipartite)")->required();
  gen->add_option("--right", gen_opt.right, "right side size for bipartite");
  gen->add_option("--p", gen_opt.p, "edge probability");
  gen->add_option("--seed", gen_opt.seed, "mt19937_64 seed");
  gen->add_option("--format", gen_opt.format)->check(CLI::IsMember({"dimacs", "edgelist"}));

  CheckOptions check_opt;
  auto* check = app.add_subcommand("oracle-check", "run the invariant suite against the oracle");
  check->add_option("--n", check_opt.n, "order of every generated graph");
  check->add_option("--count", check_opt.count, "number of random graphs, or all-graphs");
  check->add_option("--p", check_opt.p, "edge probability");
  check->add_option("--seed", check_opt.seed, "corpus seed");
  check->add_flag("--plant-bug", check_opt.plant_bug, "run against a deliberately broken solver");

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "MIS with and without decomposition preprocessing");
  bench->add_option("--n", bench_opt.n, "order");
  bench->add_option("--p", bench_opt.p, "edge probability");
  bench->add_option("--count", bench_opt.count, "number of graphs");
  bench->add_option("--seed", bench_opt.seed, "corpus seed");
  bench->add_option("--budget", bench_opt.budget, "branch-and-bound node budget per route");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(analyze_in, analyze_budget, analyze_json);
    if (*decompose) return run_decompose(decompose_in, certificate);
    if (*mis) return run_mis(mis_in, mis_budget);
    if (*ke) return run_ke(ke_in);
    if (*gen) return run_gen(gen_opt);
    if (*check) return run_oracle_check(check_opt);
    if (*bench) return run_bench(bench_opt);
  } catch (const ci::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InputError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
