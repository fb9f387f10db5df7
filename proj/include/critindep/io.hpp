#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "critindep/graph.hpp"

namespace critindep {

enum class Format { dimacs, edgelist };

/// Rejected input. line() is 1-based, 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::uint64_t parse_count(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" +
                               std::string(tok) + "'");
  }
  return value;
}

struct RawGraph {
  bool has_header = false;
  std::uint64_t n = 0;
  std::vector<Edge> edges;
  std::vector<std::pair<std::uint64_t, std::string>> labels;
};

// Vertex ids in the file are shifted by `base` (1 for DIMACS, 0 otherwise).
inline Vertex to_vertex(std::string_view tok, const RawGraph& raw, unsigned base,
                        std::size_t line) {
  std::uint64_t id = parse_count(tok, line);
  if (id < base || id - base >= raw.n) {
    throw ParseError(line, "vertex id " + std::string(tok) +
                               " out of range for order " + std::to_string(raw.n));
  }
  return static_cast<Vertex>(id - base);
}

inline void record_label(RawGraph& raw, const std::vector<std::string_view>& tok,
                         unsigned base, std::size_t line) {
  if (tok.size() != 4) throw ParseError(line, "label line needs an id and a name");
  if (!raw.has_header) throw ParseError(line, "label before header");
  Vertex v = to_vertex(tok[2], raw, base, line);
  raw.labels.emplace_back(v, std::string(tok[3]));
}

inline Graph finish(RawGraph raw) {
  std::vector<std::string> labels;
  if (!raw.labels.empty()) {
    labels.resize(raw.n);
    for (std::uint64_t v = 0; v < raw.n; ++v) labels[v] = std::to_string(v);
    for (auto& [v, name] : raw.labels) labels[v] = std::move(name);
  }
  return Graph::from_edges(raw.n, std::move(raw.edges), std::move(labels));
}

inline Edge parse_edge(const std::vector<std::string_view>& tok, std::size_t first,
                       const RawGraph& raw, unsigned base, std::size_t line) {
  Vertex u = to_vertex(tok[first], raw, base, line);
  Vertex v = to_vertex(tok[first + 1], raw, base, line);
  if (u == v) {
    throw ParseError(line, "self-loop on vertex " + std::string(tok[first]));
  }
  return {u, v};
}

inline Graph parse_dimacs(std::string_view text) {
  RawGraph raw;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok[0] == "c") {
      if (tok.size() >= 2 && tok[1] == "label") record_label(raw, tok, 1, line_no);
      continue;
    }
    if (tok[0] == "p") {
      if (raw.has_header) throw ParseError(line_no, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "edge") {
        throw ParseError(line_no, "malformed problem line, expected 'p edge <n> <m>'");
      }
      raw.n = parse_count(tok[2], line_no);
      parse_count(tok[3], line_no);
      if (raw.n > UINT32_MAX) throw ParseError(line_no, "order too large");
      raw.has_header = true;
      continue;
    }
    if (tok[0] == "e") {
      if (!raw.has_header) throw ParseError(line_no, "edge before problem line");
      if (tok.size() != 3) throw ParseError(line_no, "malformed edge line");
      raw.edges.push_back(parse_edge(tok, 1, raw, 1, line_no));
      continue;
    }
    throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
  }
  if (!raw.has_header) throw ParseError(0, "missing problem line");
  return finish(std::move(raw));
}

inline Graph parse_edgelist(std::string_view text) {
  RawGraph raw;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok[0].front() == '#') {
      if (tok[0] == "#" && tok.size() >= 2 && tok[1] == "label") {
        record_label(raw, tok, 0, line_no);
      }
      continue;
    }
    if (tok.size() != 2) {
      throw ParseError(line_no, "expected two integers per line");
    }
    if (!raw.has_header) {
      raw.n = parse_count(tok[0], line_no);
      parse_count(tok[1], line_no);
      if (raw.n > UINT32_MAX) throw ParseError(line_no, "order too large");
      raw.has_header = true;
      continue;
    }
    raw.edges.push_back(parse_edge(tok, 0, raw, 0, line_no));
  }
  if (!raw.has_header) throw ParseError(0, "missing '<n> <m>' header");
  return finish(std::move(raw));
}

}  // namespace detail

/// Parses DIMACS (`p edge n m` / `e u v`, 1-based, `c` comments) or edge-list
/// (`n m` then `u v`, 0-based, `#` comments) text. Comment lines of the form
/// `c label <id> <name>` / `# label <id> <name>` attach vertex labels.
inline Graph parse_graph(std::string_view text, Format format) {
  return format == Format::dimacs ? detail::parse_dimacs(text)
                                  : detail::parse_edgelist(text);
}

/// Canonical text form: header, label lines, then edges in sorted order.
/// parse_graph(serialize_graph(g, f), f) == g.
inline std::string serialize_graph(const Graph& g, Format format) {
  std::ostringstream out;
  const unsigned base = format == Format::dimacs ? 1 : 0;
  if (format == Format::dimacs) {
    out << "p edge " << g.order() << ' ' << g.size() << '\n';
  } else {
    out << g.order() << ' ' << g.size() << '\n';
  }
  if (g.has_labels()) {
    const char* tag = format == Format::dimacs ? "c label " : "# label ";
    for (Vertex v = 0; v < g.order(); ++v) {
      out << tag << v + base << ' ' << g.labels()[v] << '\n';
    }
  }
  const char* prefix = format == Format::dimacs ? "e " : "";
  for (const auto& e : g.edges()) {
    out << prefix << e.u + base << ' ' << e.v + base << '\n';
  }
  return out.str();
}

/// Guesses the format from content: a `p` line means DIMACS.
inline Format detect_format(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto tok = detail::split_ws(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (tok.empty() || tok[0] == "c" || tok[0].front() == '#') continue;
    return tok[0] == "p" || tok[0] == "e" ? Format::dimacs : Format::edgelist;
  }
  return Format::edgelist;
}

}  // namespace critindep
