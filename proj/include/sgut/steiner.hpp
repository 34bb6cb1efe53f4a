#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace sgut {

/// Steiner distances are edge counts; kUnreachable marks sets spanning components.
using Distance = std::uint32_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

inline constexpr int kDefaultSteinerCap = 20;

/// d(S) for every nonempty S, indexed by mask. Entry 0 (empty set) is unused.
class SteinerTable {
 public:
  SteinerTable(int n, std::vector<std::uint8_t> dist) : n_(n), dist_(std::move(dist)) {}

  int order() const { return n_; }
  Distance operator[](VertexSet s) const { return decode(dist_[s.mask()]); }
  Distance at(std::uint64_t mask) const { return decode(dist_[mask]); }

  static constexpr std::uint8_t kSentinel = 0xFF;

 private:
  static Distance decode(std::uint8_t d) { return d == kSentinel ? kUnreachable : d; }

  int n_;
  std::vector<std::uint8_t> dist_;
};

/// d(S) = min{|T| - 1 : S subset of T, G[T] connected}, for all S at once.
///
/// Connected masks are found incrementally (T is connected iff some v in T has
/// T - v connected and adjacent to v), valued |T| - 1, and then pushed down to
/// every subset with a superset-minimum sweep. O(2^n * n).
inline SteinerTable steiner_all_subsets(const Graph& g, int cap = kDefaultSteinerCap) {
  const int n = g.order();
  if (n > cap) {
    throw Error(ErrorKind::OrderTooLarge,
                "all-subsets table capped at n=" + std::to_string(cap) + ", got " + std::to_string(n));
  }
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::uint8_t> connected(count, 0);
  std::vector<std::uint8_t> dist(count, SteinerTable::kSentinel);
  const auto& rows = g.rows();

  for (std::uint64_t t = 1; t < count; ++t) {
    if ((t & (t - 1)) == 0) {
      connected[t] = 1;
    } else {
      for (std::uint64_t m = t; m != 0; m &= m - 1) {
        const int v = std::countr_zero(m);
        const std::uint64_t rest = t & ~(std::uint64_t{1} << v);
        if (connected[rest] && (rows[v] & rest) != 0) {
          connected[t] = 1;
          break;
        }
      }
    }
    if (connected[t]) dist[t] = static_cast<std::uint8_t>(std::popcount(t) - 1);
  }

  for (int bit = 0; bit < n; ++bit) {
    const std::uint64_t b = std::uint64_t{1} << bit;
    for (std::uint64_t s = 1; s < count; ++s) {
      if ((s & b) == 0) dist[s] = std::min(dist[s], dist[s | b]);
    }
  }
  return SteinerTable(n, std::move(dist));
}

/// BFS distances from every vertex; kUnreachable across components.
inline std::vector<std::vector<Distance>> pairwise_distances(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<Distance>> d(n, std::vector<Distance>(n, kUnreachable));
  for (int src = 0; src < n; ++src) {
    std::uint64_t seen = std::uint64_t{1} << src;
    std::uint64_t frontier = seen;
    Distance level = 0;
    while (frontier != 0) {
      for (std::uint64_t m = frontier; m != 0; m &= m - 1) d[src][std::countr_zero(m)] = level;
      std::uint64_t next = 0;
      for (std::uint64_t m = frontier; m != 0; m &= m - 1) next |= g.rows()[std::countr_zero(m)];
      next &= ~seen;
      seen |= next;
      frontier = next;
      ++level;
    }
  }
  return d;
}

/// Dreyfus-Wagner over the terminals of s.
///
/// best[sub][v] is the size of a smallest tree spanning the terminals in sub
/// together with v. Subsets are built by merging two complementary halves at
/// a common vertex, then grown along shortest paths.
inline Distance steiner_single(const Graph& g, VertexSet s) {
  if (s.empty()) throw Error(ErrorKind::EmptySet, "steiner_single needs a nonempty set");
  const int n = g.order();
  std::vector<int> terminals;
  s.for_each([&](int v) { terminals.push_back(v); });
  const int k = static_cast<int>(terminals.size());
  if (k == 1) return 0;

  const auto dist = pairwise_distances(g);
  for (int i = 1; i < k; ++i)
    if (dist[terminals[0]][terminals[i]] == kUnreachable) return kUnreachable;

  // Only terminals 1..k-1 enter the DP; terminal 0 is the final root.
  const int rest = k - 1;
  const std::uint32_t subsets = std::uint32_t{1} << rest;
  constexpr std::uint64_t inf = std::numeric_limits<std::uint64_t>::max() / 4;
  std::vector<std::vector<std::uint64_t>> best(subsets, std::vector<std::uint64_t>(n, inf));

  for (int i = 0; i < rest; ++i) {
    for (int v = 0; v < n; ++v) {
      const Distance d = dist[terminals[i + 1]][v];
      if (d != kUnreachable) best[std::uint32_t{1} << i][v] = d;
    }
  }

  for (std::uint32_t sub = 1; sub < subsets; ++sub) {
    if ((sub & (sub - 1)) == 0) continue;
    auto& row = best[sub];
    for (std::uint32_t part = (sub - 1) & sub; part != 0; part = (part - 1) & sub) {
      if (part < (sub ^ part)) continue;  // each split once
      const auto& a = best[part];
      const auto& b = best[sub ^ part];
      for (int v = 0; v < n; ++v) row[v] = std::min(row[v], a[v] + b[v]);
    }
    std::vector<std::uint64_t> grown = row;
    for (int v = 0; v < n; ++v) {
      if (row[v] >= inf) continue;
      for (int u = 0; u < n; ++u) {
        if (dist[v][u] == kUnreachable) continue;
        grown[u] = std::min(grown[u], row[v] + dist[v][u]);
      }
    }
    row = std::move(grown);
  }
  const std::uint64_t result = best[subsets - 1][terminals[0]];
  return result >= inf ? kUnreachable : static_cast<Distance>(result);
}

/// Literal reading of the definition: the first connected superset, by size.
/// Meant for tests on small graphs.
inline Distance steiner_oracle(const Graph& g, VertexSet s) {
  if (s.empty()) throw Error(ErrorKind::EmptySet, "steiner_oracle needs a nonempty set");
  const std::uint64_t others = g.vertices().mask() & ~s.mask();
  const int free_bits = std::popcount(others);
  std::vector<int> free_vertices;
  VertexSet(others).for_each([&](int v) { free_vertices.push_back(v); });

  for (int extra = 0; extra <= free_bits; ++extra) {
    const std::uint64_t limit = std::uint64_t{1} << free_bits;
    for (std::uint64_t pick = 0; pick < limit; ++pick) {
      if (std::popcount(pick) != extra) continue;
      VertexSet t = s;
      for (int i = 0; i < free_bits; ++i)
        if ((pick >> i) & 1u) t.insert(free_vertices[i]);
      if (induced_connected(g, t)) return static_cast<Distance>(t.size() - 1);
    }
  }
  return kUnreachable;
}

}  // namespace sgut
