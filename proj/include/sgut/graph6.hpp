#pragma once

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace sgut {

/// graph6 for 1 <= n <= 62: one order byte (n + 63), then the upper triangle
/// in column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per
/// byte, most significant first, each byte offset by 63, zero padded.
inline std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  int filled = 0;
  int acc = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        filled = 0;
        acc = 0;
      }
    }
  }
  if (filled != 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph graph6_decode(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorKind::MalformedHeader, "empty graph6 string");
  const int header = static_cast<unsigned char>(text[0]);
  if (header < 63 || header > 125) {
    throw Error(ErrorKind::MalformedHeader, "order byte outside the one-byte range (n <= 62)");
  }
  const int n = header - 63;
  if (n == 0) throw Error(ErrorKind::MalformedHeader, "graph6 order 0 is not a valid graph here");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - 1 < bytes) throw Error(ErrorKind::Truncated, "graph6 payload too short");
  if (text.size() - 1 > bytes) throw Error(ErrorKind::TrailingGarbage, "graph6 payload too long");

  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  std::size_t bit = 0;
  int i = 0;
  int j = 1;
  for (std::size_t b = 0; b < bytes; ++b) {
    const int c = static_cast<unsigned char>(text[1 + b]);
    if (c < 63 || c > 126) throw Error(ErrorKind::TrailingGarbage, "byte outside the graph6 alphabet");
    const int v = c - 63;
    for (int shift = 5; shift >= 0; --shift, ++bit) {
      const bool set = (v >> shift) & 1;
      if (bit >= bits) {
        if (set) throw Error(ErrorKind::NonCanonicalPadding, "nonzero padding bits");
        continue;
      }
      if (set) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_adjacency(std::move(rows));
}

/// Edge list text: '#' starts a comment, the first content line is "n <order>",
/// every further line is "u v" with 0-based vertices.
inline Graph parse_edge_list(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<Graph::Edge> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    const auto fail = [&](const std::string& why) {
      return Error(ErrorKind::ParseError, "edge list line " + std::to_string(line_no) + ": " + why);
    };
    if (n < 0) {
      if (first != "n" || !(ls >> n)) throw fail("expected 'n <order>'");
      std::string extra;
      if (ls >> extra) throw fail("unexpected text after order");
      continue;
    }
    int u = 0;
    int v = 0;
    try {
      std::size_t used = 0;
      u = std::stoi(first, &used);
      if (used != first.size()) throw fail("bad vertex '" + first + "'");
    } catch (const std::logic_error&) {
      throw fail("bad vertex '" + first + "'");
    }
    std::string extra;
    if (!(ls >> v) || (ls >> extra)) throw fail("expected 'u v'");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw Error(ErrorKind::ParseError, "edge list has no 'n <order>' line");
  return Graph::from_edge_list(n, edges);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline std::string format_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace sgut
