#pragma once

// Text formats.
//
// Hypergraph / cluster file:
//   n k                 first meaningful line
//   1 2 3               one hyperedge per line, 1-based vertices
//   components          optional; each following line is one component A_i
//   1 2 3
// '#' starts a comment; blank lines are ignored.
//
// Strategy file:
//   strategy n k        optional header; otherwise n and k come from the coins
//   coin 1-2-3 0        coin symbol: edge, repetition
//   say 1: 1-2-3/0 ^ 1-2-4/0

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hypershare/error.hpp"
#include "hypershare/hypergraph.hpp"
#include "hypershare/strategy.hpp"

namespace hypershare::io {

struct HypergraphFile {
  Hypergraph graph;
  std::optional<std::vector<VertexSet>> components;

  friend bool operator==(const HypergraphFile&, const HypergraphFile&) = default;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Splits text into (line number, content) pairs with comments and blank lines removed.
inline std::vector<std::pair<std::size_t, std::string>> meaningful_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.emplace_back(line_no, std::string(line));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

[[noreturn]] inline void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

inline std::uint64_t parse_number(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  const auto* end = tok.data() + tok.size();
  auto [p, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || p != end) fail(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

inline std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto b = s.find_first_not_of(" \t", pos);
    if (b == std::string_view::npos) break;
    const auto e = s.find_first_of(" \t", b);
    out.push_back(s.substr(b, e == std::string_view::npos ? std::string_view::npos : e - b));
    if (e == std::string_view::npos) break;
    pos = e;
  }
  return out;
}

inline VertexSet parse_vertex_list(const std::vector<std::string_view>& toks, Vertex n, std::size_t line) {
  std::vector<Vertex> vs;
  for (auto t : toks) {
    const auto v = parse_number(t, line);
    if (v < 1 || v > n) fail(line, "vertex " + std::string(t) + " outside 1.." + std::to_string(n));
    vs.push_back(static_cast<Vertex>(v));
  }
  try {
    return VertexSet(std::move(vs));
  } catch (const Error& e) {
    fail(line, e.what());
  }
}

}  // namespace detail

inline HypergraphFile parse_hypergraph(std::string_view text) {
  const auto lines = detail::meaningful_lines(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "line 1: missing 'n k' header");
  const auto header = detail::words(lines[0].second);
  if (header.size() != 2) detail::fail(lines[0].first, "header must be 'n k'");
  const auto n = static_cast<Vertex>(detail::parse_number(header[0], lines[0].first));
  const auto k = static_cast<std::size_t>(detail::parse_number(header[1], lines[0].first));

  std::vector<Edge> edges;
  std::optional<std::vector<VertexSet>> components;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [line_no, content] = lines[i];
    if (content == "components") {
      if (components) detail::fail(line_no, "repeated 'components' section");
      components.emplace();
      continue;
    }
    auto set = detail::parse_vertex_list(detail::words(content), n, line_no);
    if (components) {
      components->push_back(std::move(set));
      continue;
    }
    if (k > 0 && set.size() != k)
      detail::fail(line_no, "hyperedge has " + std::to_string(set.size()) + " vertices, expected " + std::to_string(k));
    if (std::find(edges.begin(), edges.end(), set) != edges.end())
      detail::fail(line_no, "duplicate hyperedge " + set.to_string());
    edges.push_back(std::move(set));
  }
  return {Hypergraph(n, k, std::move(edges)), std::move(components)};
}

inline std::string to_text(const HypergraphFile& f) {
  std::string out = std::to_string(f.graph.n()) + " " + std::to_string(f.graph.k()) + "\n";
  for (const auto& e : f.graph.edges()) out += e.to_string(' ') + "\n";
  if (f.components) {
    out += "components\n";
    for (const auto& a : *f.components) out += a.to_string(' ') + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Strategies

inline std::string to_text(const Strategy& s) {
  std::ostringstream os;
  os << "strategy " << s.n() << ' ' << s.k() << '\n';
  for (const auto& c : s.coins()) os << "coin " << c.edge.to_string() << ' ' << c.repetition << '\n';
  for (const auto& b : s.broadcasts()) {
    os << "say " << b.speaker << ':';
    for (std::size_t i = 0; i < b.parity_set.size(); ++i) os << (i ? " ^ " : " ") << b.parity_set[i].to_string();
    os << '\n';
  }
  return os.str();
}

namespace detail {

inline Edge parse_edge_token(std::string_view tok, std::size_t line) {
  std::vector<Vertex> vs;
  for (auto part : split(tok, '-')) {
    const auto v = parse_number(part, line);
    if (v < 1) fail(line, "vertex 0 in " + std::string(tok));
    vs.push_back(static_cast<Vertex>(v));
  }
  try {
    return Edge(std::move(vs));
  } catch (const Error& e) {
    fail(line, e.what());
  }
}

inline CoinSymbol parse_symbol_token(std::string_view tok, std::size_t line) {
  const auto slash = tok.find('/');
  if (slash == std::string_view::npos) fail(line, "coin symbol '" + std::string(tok) + "' lacks '/<rep>'");
  return {parse_edge_token(tok.substr(0, slash), line),
          static_cast<std::uint32_t>(parse_number(tok.substr(slash + 1), line))};
}

}  // namespace detail

inline bool looks_like_strategy(std::string_view text) {
  const auto lines = detail::meaningful_lines(text);
  if (lines.empty()) return false;
  const auto first = detail::words(lines[0].second).front();
  return first == "strategy" || first == "coin" || first == "say";
}

inline Strategy parse_strategy(std::string_view text) {
  std::optional<std::pair<Vertex, std::size_t>> header;
  std::vector<CoinSymbol> coins;
  std::vector<Broadcast> broadcasts;
  for (const auto& [line_no, content] : detail::meaningful_lines(text)) {
    const auto toks = detail::words(content);
    if (toks[0] == "strategy") {
      if (toks.size() != 3) detail::fail(line_no, "expected 'strategy n k'");
      if (header || !coins.empty() || !broadcasts.empty()) detail::fail(line_no, "'strategy' header must come first");
      header.emplace(static_cast<Vertex>(detail::parse_number(toks[1], line_no)),
                     static_cast<std::size_t>(detail::parse_number(toks[2], line_no)));
    } else if (toks[0] == "coin") {
      if (toks.size() != 3) detail::fail(line_no, "expected 'coin <edge> <rep>'");
      coins.push_back({detail::parse_edge_token(toks[1], line_no),
                       static_cast<std::uint32_t>(detail::parse_number(toks[2], line_no))});
    } else if (toks[0] == "say") {
      const auto colon = content.find(':');
      if (colon == std::string::npos) detail::fail(line_no, "expected 'say <speaker>: <symbol> ^ ...'");
      const auto speaker_tok = detail::trim(std::string_view(content).substr(3, colon - 3));
      const auto speaker = static_cast<Vertex>(detail::parse_number(speaker_tok, line_no));
      std::vector<CoinSymbol> symbols;
      for (auto tok : detail::split(std::string_view(content).substr(colon + 1), '^')) {
        if (tok.empty()) detail::fail(line_no, "empty coin symbol");
        symbols.push_back(detail::parse_symbol_token(tok, line_no));
      }
      broadcasts.emplace_back(speaker, std::move(symbols));
    } else {
      detail::fail(line_no, "unknown keyword '" + std::string(toks[0]) + "'");
    }
  }
  if (coins.empty()) throw Error(ErrorCode::ParseError, "strategy lists no coins");

  Vertex n = 0;
  std::size_t k = coins.front().edge.size();
  for (const auto& c : coins) {
    n = std::max(n, c.edge.back());
    if (c.edge.size() != k) k = 0;
  }
  if (header) {
    if (header->first < n) throw Error(ErrorCode::ParseError, "coin vertex exceeds n in 'strategy' header");
    n = header->first;
    k = header->second;
  }
  std::vector<Edge> edges;
  for (const auto& c : coins)
    if (std::find(edges.begin(), edges.end(), c.edge) == edges.end()) edges.push_back(c.edge);
  return {Hypergraph(n, k, std::move(edges)), std::move(coins), std::move(broadcasts), Scheme::Parsed};
}

// ---------------------------------------------------------------------------
// Fixtures reproducing the worked examples.

inline std::vector<std::string> standard_fixture_names() {
  return {"fig2_tree", "fig3", "fig9_cluster", "g1_nonexample", "g2_nonexample", "star_n3_k2", "forehead_4", "complete_5_3"};
}

namespace detail {

inline std::optional<std::vector<std::uint64_t>> numeric_suffix(std::string_view name, std::string_view prefix,
                                                               std::size_t count) {
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  auto rest = name.substr(prefix.size());
  std::vector<std::uint64_t> out;
  for (auto part : split(rest, '_')) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || p != part.data() + part.size() || part.empty()) return std::nullopt;
    out.push_back(v);
  }
  if (out.size() != count) return std::nullopt;
  return out;
}

}  // namespace detail

/// Canonical file for a fixture name: one of standard_fixture_names(),
/// forehead_<n>, or complete_<n>_<k> (also written complete(n,k)).
inline HypergraphFile fixture(std::string_view name) {
  if (name == "fig2_tree") return {Hypergraph(7, 2, {{1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}}), std::nullopt};
  if (name == "fig3")
    return {Hypergraph(5, 3, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {1, 2, 5}, {2, 3, 5}, {2, 4, 5}}), std::nullopt};
  if (name == "fig9_cluster")
    return {Hypergraph(6, 3, {{1, 2, 3}, {1, 4, 5}, {1, 4, 6}, {4, 5, 6}}),
            std::vector<VertexSet>{{1, 2, 3}, {1, 4, 5, 6}}};
  if (name == "g1_nonexample") return {nonexample_g1(), std::vector<VertexSet>{{1, 2, 3}, {1, 4, 5, 6}}};
  if (name == "g2_nonexample") return {nonexample_g2(), std::vector<VertexSet>{{1, 2, 4}, {1, 3, 5}, {2, 3, 6}}};
  if (name == "star_n3_k2") return {Hypergraph(3, 2, {{1, 3}, {2, 3}}), std::nullopt};

  std::string normalized(name);
  if (normalized.starts_with("complete(") && normalized.ends_with(")")) {
    normalized = "complete_" + normalized.substr(9, normalized.size() - 10);
    std::replace(normalized.begin(), normalized.end(), ',', '_');
  }
  if (auto nums = detail::numeric_suffix(normalized, "forehead_", 1)) {
    const auto n = (*nums)[0];
    if (n >= 2 && n <= 64) return {complete_hypergraph(static_cast<Vertex>(n), n - 1), std::nullopt};
  }
  if (auto nums = detail::numeric_suffix(normalized, "complete_", 2)) {
    const auto n = (*nums)[0];
    const auto k = (*nums)[1];
    if (k >= 1 && k <= n && n <= 64) return {complete_hypergraph(static_cast<Vertex>(n), k), std::nullopt};
  }
  throw Error(ErrorCode::UnknownFixture, "unknown fixture '" + std::string(name) + "'");
}

}  // namespace hypershare::io
