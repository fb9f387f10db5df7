#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "critindep/oracle.hpp"
#include "critindep/report.hpp"

namespace critindep {

using nlohmann::json;

namespace detail {

inline json optional_json(const std::optional<std::size_t>& v) {
  return v ? json(*v) : json(nullptr);
}

inline std::optional<std::size_t> optional_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::size_t>();
}

inline json sets_json(const std::vector<VertexSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(s.members());
  return out;
}

}  // namespace detail

inline Classification classification_from_string(const std::string& s) {
  if (s == "irreducible") return Classification::irreducible;
  if (s == "reducible") return Classification::reducible;
  if (s == "totally_reducible") return Classification::totally_reducible;
  throw std::invalid_argument("unknown classification '" + s + "'");
}

/// Stable report schema; vertex ids are 0-based, absent values are null.
inline json to_json(const AnalysisReport& r) {
  return json{
      {"n", r.n},
      {"m", r.m},
      {"d", r.d},
      {"alpha_prime", r.alpha_prime},
      {"alpha", detail::optional_json(r.alpha)},
      {"mu", detail::optional_json(r.mu)},
      {"tau", detail::optional_json(r.tau)},
      {"classification", to_string(r.classification)},
      {"is_ke", r.is_ke},
      {"X", r.x.members()},
      {"X_complement", r.x_complement.members()},
      {"I_c", r.critical_set.members()},
      {"graph_sha256", r.graph_sha256},
  };
}

inline AnalysisReport report_from_json(const json& j) {
  AnalysisReport r;
  r.n = j.at("n").get<std::size_t>();
  r.m = j.at("m").get<std::size_t>();
  r.d = j.at("d").get<std::int64_t>();
  r.alpha_prime = j.at("alpha_prime").get<std::size_t>();
  r.alpha = detail::optional_from(j.at("alpha"));
  r.mu = detail::optional_from(j.at("mu"));
  r.tau = detail::optional_from(j.at("tau"));
  r.classification = classification_from_string(j.at("classification").get<std::string>());
  r.is_ke = j.at("is_ke").get<bool>();
  r.x = VertexSet(j.at("X").get<std::vector<Vertex>>());
  r.x_complement = VertexSet(j.at("X_complement").get<std::vector<Vertex>>());
  r.critical_set = VertexSet(j.at("I_c").get<std::vector<Vertex>>());
  r.graph_sha256 = j.at("graph_sha256").get<std::string>();
  return r;
}

inline json to_json(const OracleReport& r) {
  return json{
      {"d", r.d},
      {"d_all_subsets", r.d_all_subsets},
      {"alpha", r.alpha},
      {"alpha_prime", r.alpha_prime},
      {"mu", r.mu},
      {"critical_sets", detail::sets_json(r.critical_sets)},
      {"max_critical_sets", detail::sets_json(r.max_critical_sets)},
      {"maximum_independent_sets", detail::sets_json(r.maximum_independent_sets)},
      {"X_candidates", detail::sets_json(r.x_candidates)},
  };
}

}  // namespace critindep
