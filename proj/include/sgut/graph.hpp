#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace sgut {

inline constexpr int kMaxOrder = 62;

/// Bitmask over vertex indices {0, ..., n-1}.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t mask) : mask_(mask) {}

  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int v) const { return (mask_ >> v) & 1u; }
  constexpr void insert(int v) { mask_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { mask_ &= ~(std::uint64_t{1} << v); }
  constexpr int first() const { return std::countr_zero(mask_); }
  constexpr bool subset_of(VertexSet other) const { return (mask_ & ~other.mask_) == 0; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.mask_ | b.mask_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & b.mask_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

  /// Calls f(v) for each member in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) f(std::countr_zero(m));
  }

 private:
  std::uint64_t mask_ = 0;
};

/// Immutable simple undirected graph on 1..62 vertices.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  static Graph from_edge_list(int n, const std::vector<Edge>& edges) {
    if (n < 1 || n > kMaxOrder) {
      throw Error(ErrorKind::InvalidOrder, "order must lie in [1, 62], got " + std::to_string(n));
    }
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside order " +
                        std::to_string(n));
      }
      if (u == v) throw Error(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(u));
      adj[u] |= std::uint64_t{1} << v;
      adj[v] |= std::uint64_t{1} << u;
    }
    return Graph(std::move(adj));
  }

  /// Rows must already be symmetric and loop-free.
  static Graph from_adjacency(std::vector<std::uint64_t> rows) {
    const int n = static_cast<int>(rows.size());
    if (n < 1 || n > kMaxOrder) {
      throw Error(ErrorKind::InvalidOrder, "order must lie in [1, 62], got " + std::to_string(n));
    }
    const std::uint64_t all = VertexSet::full(n).mask();
    for (int i = 0; i < n; ++i) {
      if ((rows[i] & ~all) != 0) throw Error(ErrorKind::IndexOutOfRange, "neighbor outside order");
      if ((rows[i] >> i) & 1u) throw Error(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(i));
      for (std::uint64_t m = rows[i]; m != 0; m &= m - 1) {
        const int j = std::countr_zero(m);
        if (((rows[j] >> i) & 1u) == 0) throw Error(ErrorKind::IndexOutOfRange, "asymmetric adjacency");
      }
    }
    return Graph(std::move(rows));
  }

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return m_; }
  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  int degree(int v) const { return std::popcount(adj_[v]); }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  const std::vector<std::uint64_t>& rows() const { return adj_; }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int j = 1; j < order(); ++j)
      for (int i = 0; i < j; ++i)
        if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
  }

  /// Relabels vertex v as perm[v].
  Graph permuted(const std::vector<int>& perm) const {
    std::vector<std::uint64_t> rows(adj_.size(), 0);
    for (int u = 0; u < order(); ++u)
      for (std::uint64_t m = adj_[u]; m != 0; m &= m - 1)
        rows[perm[u]] |= std::uint64_t{1} << perm[std::countr_zero(m)];
    return Graph(std::move(rows));
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  explicit Graph(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {
    int twice = 0;
    for (auto row : adj_) twice += std::popcount(row);
    m_ = twice / 2;
  }

  std::vector<std::uint64_t> adj_;
  int m_ = 0;
};

inline Graph complement(const Graph& g) {
  const int n = g.order();
  const std::uint64_t all = VertexSet::full(n).mask();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) rows[v] = all & ~g.rows()[v] & ~(std::uint64_t{1} << v);
  return Graph::from_adjacency(std::move(rows));
}

struct DegreeProfile {
  std::vector<int> degrees;
  int min_degree = 0;
  int max_degree = 0;
  int pendants = 0;
};

inline DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) p.degrees.push_back(g.degree(v));
  p.min_degree = *std::min_element(p.degrees.begin(), p.degrees.end());
  p.max_degree = *std::max_element(p.degrees.begin(), p.degrees.end());
  p.pendants = static_cast<int>(std::count(p.degrees.begin(), p.degrees.end(), 1));
  return p;
}

/// Vertices of `within` reachable from `start` inside the subgraph induced by `within`.
inline VertexSet reachable(const Graph& g, int start, VertexSet within) {
  std::uint64_t seen = std::uint64_t{1} << start;
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t m = frontier; m != 0; m &= m - 1) next |= g.rows()[std::countr_zero(m)];
    next &= within.mask() & ~seen;
    seen |= next;
    frontier = next;
  }
  return VertexSet(seen);
}

inline bool induced_connected(const Graph& g, VertexSet s) {
  if (s.empty()) throw Error(ErrorKind::EmptySet, "induced_connected needs a nonempty set");
  return reachable(g, s.first(), s) == s;
}

inline bool is_connected(const Graph& g) { return induced_connected(g, g.vertices()); }

/// Connected components as vertex sets, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet c = reachable(g, left.first(), left);
    out.push_back(c);
    left = left - c;
  }
  return out;
}

/// True iff n > t and deleting any fewer than t vertices leaves g connected.
inline bool is_k_connected(const Graph& g, int t) {
  const int n = g.order();
  if (t < 1 || n <= t) return false;
  const VertexSet all = g.vertices();
  for (int removed = 0; removed < t; ++removed) {
    if (removed == 0) {
      if (!is_connected(g)) return false;
      continue;
    }
    // Gosper's hack over all removed-size subsets of {0..n-1}.
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t d = (std::uint64_t{1} << removed) - 1; d < limit;) {
      if (!induced_connected(g, all - VertexSet(d))) return false;
      const std::uint64_t c = d & (~d + 1);
      const std::uint64_t r = d + c;
      d = (((r ^ d) >> 2) / c) | r;
    }
  }
  return true;
}

inline bool is_regular(const Graph& g) {
  const auto p = degree_profile(g);
  return p.min_degree == p.max_degree;
}

}  // namespace sgut
