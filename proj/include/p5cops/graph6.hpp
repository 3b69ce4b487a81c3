#pragma once

// graph6 and edge-list text codecs.
//
// graph6 layout for n < 63: one size byte (n + 63), then the upper triangle
// x(i,j), j = 1..n-1 outer and i = 0..j-1 inner, packed big-endian six bits
// per byte, zero padded, each byte offset by +63.

#include <cctype>
#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "p5cops/errors.hpp"
#include "p5cops/graph.hpp"

namespace p5cops {

inline constexpr int kGraph6MaxOrder = 62;
inline constexpr std::string_view kGraph6Header = ">>graph6<<";

namespace detail {

inline std::size_t graph6_body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  return (bits + 5) / 6;
}

}  // namespace detail

inline Graph parse_graph6(std::string_view line) {
  std::size_t base = 0;
  if (line.starts_with(kGraph6Header)) {
    line.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw ParseError(ParseErrorKind::kEmpty, base, "empty graph6 string");

  const auto size_byte = static_cast<unsigned char>(line[0]);
  if (size_byte < 63 || size_byte > 126) {
    throw ParseError(ParseErrorKind::kByteOutOfRange, base, "size byte outside 63..126");
  }
  if (size_byte == 126) {
    throw ParseError(ParseErrorKind::kTooManyVertices, base, "graph6 graphs with n >= 63 are not supported");
  }
  const int n = size_byte - 63;
  const std::size_t expected = detail::graph6_body_length(n);
  const std::string_view body = line.substr(1);

  for (std::size_t k = 0; k < body.size() && k < expected; ++k) {
    const auto c = static_cast<unsigned char>(body[k]);
    if (c < 63 || c > 126) throw ParseError(ParseErrorKind::kByteOutOfRange, base + 1 + k, "byte outside 63..126");
  }
  if (body.size() < expected) {
    throw ParseError(ParseErrorKind::kBadLength, base + line.size(),
                     "graph6 body has " + std::to_string(body.size()) + " bytes, expected " + std::to_string(expected));
  }
  if (body.size() > expected) {
    throw ParseError(ParseErrorKind::kTrailingGarbage, base + 1 + expected, "trailing bytes after graph6 body");
  }

  std::array<std::uint64_t, kMaxVertices> rows{};
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int value = static_cast<unsigned char>(body[bit / 6]) - 63;
      if ((value >> (5 - bit % 6)) & 1) {
        rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
    }
  }
  if (bit % 6 != 0) {
    const int value = static_cast<unsigned char>(body[bit / 6]) - 63;
    if ((value & ((1 << (6 - bit % 6)) - 1)) != 0) {
      throw ParseError(ParseErrorKind::kNonzeroPadding, base + 1 + bit / 6, "nonzero padding bits");
    }
  }
  return Graph::from_rows(n, rows);
}

/// Canonical graph6 without header or newline.
inline std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw PreconditionError("graph6 output supports n <= 62, got " + std::to_string(n));
  std::string out;
  out.reserve(1 + detail::graph6_body_length(n));
  out.push_back(static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

namespace detail {

struct Token {
  std::string_view text;
  std::size_t offset;
};

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.push_back({text.substr(start, i - start), start});
  }
  return out;
}

inline long parse_int(const Token& t) {
  long value = 0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(ParseErrorKind::kBadHeader, t.offset, "expected an integer, got '" + std::string(t.text) + "'");
  }
  return value;
}

}  // namespace detail

/// Text "n m" followed by m lines "u v". Duplicate edges collapse.
inline Graph parse_edge_list(std::string_view text) {
  const auto tokens = detail::tokenize(text);
  if (tokens.empty()) throw ParseError(ParseErrorKind::kEmpty, 0, "empty edge list");
  if (tokens.size() < 2) throw ParseError(ParseErrorKind::kBadHeader, tokens[0].offset, "header must be 'n m'");
  const long n = detail::parse_int(tokens[0]);
  const long m = detail::parse_int(tokens[1]);
  if (n < 0 || n > kMaxVertices) {
    throw ParseError(ParseErrorKind::kTooManyVertices, tokens[0].offset, "vertex count outside 0..64");
  }
  if (m < 0) throw ParseError(ParseErrorKind::kBadHeader, tokens[1].offset, "negative edge count");
  if (tokens.size() != 2 + 2 * static_cast<std::size_t>(m)) {
    const std::size_t at = tokens.size() > 2 + 2 * static_cast<std::size_t>(m)
                               ? tokens[2 + 2 * static_cast<std::size_t>(m)].offset
                               : text.size();
    throw ParseError(ParseErrorKind::kEdgeCountMismatch, at,
                     "header announces " + std::to_string(m) + " edges but body has " +
                         std::to_string((tokens.size() - 2) / 2) + (tokens.size() % 2 ? " and a half" : ""));
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t k = 2; k + 1 < tokens.size(); k += 2) {
    const long u = detail::parse_int(tokens[k]);
    const long v = detail::parse_int(tokens[k + 1]);
    if (u < 0 || u >= n) throw ParseError(ParseErrorKind::kVertexOutOfRange, tokens[k].offset, "vertex out of range");
    if (v < 0 || v >= n) {
      throw ParseError(ParseErrorKind::kVertexOutOfRange, tokens[k + 1].offset, "vertex out of range");
    }
    if (u == v) throw ParseError(ParseErrorKind::kSelfLoop, tokens[k].offset, "self-loop");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(static_cast<int>(n), edges);
}

inline std::string write_edge_list(const Graph& g) {
  const auto edges = g.edges();
  std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
  for (const Edge& e : edges) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

enum class GraphFormat { kAuto, kGraph6, kEdgeList };

/// Edge lists start with a decimal digit, which is never a valid graph6 size byte.
inline GraphFormat detect_format(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return std::isdigit(static_cast<unsigned char>(c)) ? GraphFormat::kEdgeList : GraphFormat::kGraph6;
  }
  return GraphFormat::kGraph6;
}

/// One graph per non-empty line for graph6 input, a single graph for an edge list.
inline std::vector<Graph> parse_graphs(std::string_view text, GraphFormat format = GraphFormat::kAuto) {
  if (format == GraphFormat::kAuto) format = detect_format(text);
  if (format == GraphFormat::kEdgeList) return {parse_edge_list(text)};
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (!line.empty()) {
      try {
        out.push_back(parse_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(e.kind(), start + e.offset(), std::string("line at byte ") + std::to_string(start) + ": " + e.what());
      }
    }
    start = end + 1;
  }
  if (out.empty()) throw ParseError(ParseErrorKind::kEmpty, 0, "no graphs in input");
  return out;
}

}  // namespace p5cops
