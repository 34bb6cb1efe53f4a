#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "error.hpp"
#include "exact.hpp"
#include "graph.hpp"
#include "steiner.hpp"

namespace sgut {

namespace detail {

inline void require_connected(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "index defined for connected graphs only");
}

inline void require_k(const Graph& g, int k, int k_min) {
  if (k < k_min || k > g.order()) {
    throw Error(ErrorKind::KOutOfRange, "k=" + std::to_string(k) + " outside [" +
                                            std::to_string(k_min) + ", " +
                                            std::to_string(g.order()) + "]");
  }
}

}  // namespace detail

/// Visits every k-subset of {0..n-1} in increasing mask order.
template <typename F>
void for_each_k_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(VertexSet());
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < limit;) {
    f(VertexSet(s));
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

/// Sum over k-subsets of (product of degrees) * d(S).
inline Integer steiner_gutman(const Graph& g, const SteinerTable& table, int k) {
  detail::require_connected(g);
  detail::require_k(g, k, 2);
  Integer total = 0;
  for_each_k_subset(g.order(), k, [&](VertexSet s) {
    Integer weight = 1;
    s.for_each([&](int v) { weight *= g.degree(v); });
    total += weight * table[s];
  });
  return total;
}

/// Sum over k-subsets of d(S); accepts k = 1 (always 0).
inline Integer steiner_wiener(const Graph& g, const SteinerTable& table, int k) {
  detail::require_connected(g);
  detail::require_k(g, k, 1);
  Integer total = 0;
  for_each_k_subset(g.order(), k, [&](VertexSet s) { total += table[s]; });
  return total;
}

/// Sum over k-subsets of (sum of degrees) * d(S).
inline Integer steiner_degree_distance(const Graph& g, const SteinerTable& table, int k) {
  detail::require_connected(g);
  detail::require_k(g, k, 2);
  Integer total = 0;
  for_each_k_subset(g.order(), k, [&](VertexSet s) {
    std::int64_t weight = 0;
    s.for_each([&](int v) { weight += g.degree(v); });
    total += Integer(weight) * table[s];
  });
  return total;
}

inline Integer steiner_gutman(const Graph& g, int k) {
  detail::require_connected(g);
  return steiner_gutman(g, steiner_all_subsets(g), k);
}

inline Integer steiner_wiener(const Graph& g, int k) {
  detail::require_connected(g);
  return steiner_wiener(g, steiner_all_subsets(g), k);
}

inline Integer steiner_degree_distance(const Graph& g, int k) {
  detail::require_connected(g);
  return steiner_degree_distance(g, steiner_all_subsets(g), k);
}

/// Classical Gutman index from BFS distances over unordered pairs.
/// Shares no code with the Steiner table path.
inline Integer gutman(const Graph& g) {
  detail::require_connected(g);
  if (g.order() < 2) throw Error(ErrorKind::KOutOfRange, "Gutman index needs n >= 2");
  const auto d = pairwise_distances(g);
  Integer total = 0;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      total += Integer(g.degree(u)) * g.degree(v) * d[u][v];
  return total;
}

struct IndexReport {
  std::string graph_id;
  int k = 0;
  Integer sgut;
  Integer sw;
  Integer sdd;
  std::optional<Integer> gut;  // k = 2 only
};

inline IndexReport compute_indices(const Graph& g, const SteinerTable& table, int k,
                                   std::string graph_id = {}) {
  IndexReport r;
  r.graph_id = std::move(graph_id);
  r.k = k;
  r.sgut = steiner_gutman(g, table, k);
  r.sw = steiner_wiener(g, table, k);
  r.sdd = steiner_degree_distance(g, table, k);
  if (k == 2) r.gut = gutman(g);
  return r;
}

}  // namespace sgut
