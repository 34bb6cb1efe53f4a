#pragma once

// Slow reference implementations used only by tests. They share nothing with
// the library beyond the Graph accessors.

#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include <sgut/graph.hpp>

namespace oracle {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

/// Does the vertex set `t` induce a connected subgraph? Union-find over edges.
inline bool induces_connected(const sgut::Graph& g, std::uint64_t t) {
  if (t == 0) return false;
  const int n = g.order();
  UnionFind uf(n);
  int merges = 0;
  for (int u = 0; u < n; ++u) {
    if (!((t >> u) & 1)) continue;
    for (int v = u + 1; v < n; ++v)
      if (((t >> v) & 1) && g.has_edge(u, v) && uf.unite(u, v)) ++merges;
  }
  return merges == std::popcount(t) - 1;
}

/// Smallest connected superset of s, minus one. -1 when none exists.
inline int steiner_distance(const sgut::Graph& g, std::uint64_t s) {
  const int n = g.order();
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  int best = -1;
  for (std::uint64_t t = 0; t <= full; ++t) {
    if ((t & s) != s || !induces_connected(g, t)) continue;
    const int d = std::popcount(t) - 1;
    if (best < 0 || d < best) best = d;
  }
  return best;
}

struct Sums {
  unsigned long long sw = 0;
  unsigned long long sdd = 0;
  unsigned long long sgut = 0;
};

/// Index sums over every k-subset, scanning all masks.
inline Sums index_sums(const sgut::Graph& g, int k) {
  Sums out;
  const int n = g.order();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (std::popcount(s) != k) continue;
    const unsigned long long d = static_cast<unsigned long long>(steiner_distance(g, s));
    unsigned long long deg_sum = 0;
    unsigned long long deg_prod = 1;
    for (int v = 0; v < n; ++v) {
      if ((s >> v) & 1) {
        deg_sum += static_cast<unsigned long long>(g.degree(v));
        deg_prod *= static_cast<unsigned long long>(g.degree(v));
      }
    }
    out.sw += d;
    out.sdd += deg_sum * d;
    out.sgut += deg_prod * d;
  }
  return out;
}

/// Floyd-Warshall pair distances; -1 for unreachable.
inline std::vector<std::vector<int>> floyd(const sgut::Graph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (int v = 0; v < n; ++v)
      if (g.has_edge(u, v)) d[u][v] = 1;
  }
  for (int w = 0; w < n; ++w)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (d[u][w] + d[w][v] < d[u][v]) d[u][v] = d[u][w] + d[w][v];
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

}  // namespace oracle
