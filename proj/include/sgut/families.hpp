#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "exact.hpp"
#include "graph.hpp"
#include "indices.hpp"
#include "steiner.hpp"

namespace sgut {

enum class Family { Path, Cycle, Star, Complete, CompleteMinusMatching };

constexpr std::string_view to_string(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Star: return "star";
    case Family::Complete: return "complete";
    case Family::CompleteMinusMatching: return "kn-minus-matching";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::Path, Family::Cycle, Family::Star, Family::Complete,
                   Family::CompleteMinusMatching}) {
    if (to_string(f) == name) return f;
  }
  if (name == "complete_minus_perfect_matching") return Family::CompleteMinusMatching;
  return std::nullopt;
}

struct FamilySpec {
  Family family;
  int n;
};

/// Fixed labelings: path 0-1-...-(n-1), cycle closes {n-1, 0}, star centred
/// at 0, and K_n minus the matching {2i, 2i+1}.
inline Graph generate(const FamilySpec& spec) {
  const int n = spec.n;
  const auto bad = [&](const std::string& why) {
    return Error(ErrorKind::InvalidFamilyOrder,
                 std::string(to_string(spec.family)) + " with n=" + std::to_string(n) + ": " + why);
  };
  if (n < 1 || n > kMaxOrder) throw bad("order must lie in [1, 62]");

  std::vector<Graph::Edge> edges;
  switch (spec.family) {
    case Family::Path:
      for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case Family::Cycle:
      if (n < 3) throw bad("cycle needs n >= 3");
      for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      edges.emplace_back(n - 1, 0);
      break;
    case Family::Star:
      for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case Family::Complete:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case Family::CompleteMinusMatching:
      if (n < 4 || n % 2 != 0) throw bad("needs even n >= 4");
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (!(u % 2 == 0 && v == u + 1)) edges.emplace_back(u, v);
      break;
  }
  return Graph::from_edge_list(n, edges);
}

namespace detail {

inline void require_family_k(int n, int k) {
  if (n < 2 || k < 2 || k > n) {
    throw Error(ErrorKind::KOutOfRange,
                "closed forms need 2 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

}  // namespace detail

/// (kn - 2k + 1) C(n-1, k-1)
inline Integer closed_form_star(int n, int k) {
  detail::require_family_k(n, k);
  return Integer(k * n - 2 * k + 1) * binomial(n - 1, k - 1);
}

/// C(n,k) (n-1)^n (k-1), with exponent n.
inline Integer closed_form_complete_printed(int n, int k) {
  detail::require_family_k(n, k);
  return binomial(n, k) * ipow(n - 1, static_cast<unsigned>(n)) * (k - 1);
}

/// C(n,k) (n-1)^k (k-1): every k-subset of K_n induces a tree of k-1 edges.
inline Integer closed_form_complete_corrected(int n, int k) {
  detail::require_family_k(n, k);
  return binomial(n, k) * ipow(n - 1, static_cast<unsigned>(k)) * (k - 1);
}

/// 2^k (k-1) C(n, k+1)
inline Integer closed_form_path_printed(int n, int k) {
  detail::require_family_k(n, k);
  return ipow(2, static_cast<unsigned>(k)) * (k - 1) * binomial(n, k + 1);
}

struct FormulaAudit {
  Family family;
  int n = 0;
  int k = 0;
  Integer printed_value;
  Integer computed_value;
  bool agrees = false;
};

/// Printed closed forms for complete graphs, stars and paths against the
/// Steiner engine, for every 2 <= k <= n <= n_max. Reports, never corrects.
inline std::vector<FormulaAudit> audit_formulas(int n_max, int cap = kDefaultSteinerCap) {
  if (n_max > cap) {
    throw Error(ErrorKind::OrderTooLarge, "audit n_max above Steiner cap " + std::to_string(cap));
  }
  std::vector<FormulaAudit> out;
  for (Family f : {Family::Complete, Family::Star, Family::Path}) {
    for (int n = 2; n <= n_max; ++n) {
      const Graph g = generate({f, n});
      const SteinerTable table = steiner_all_subsets(g, cap);
      for (int k = 2; k <= n; ++k) {
        FormulaAudit a{f, n, k, 0, 0, false};
        switch (f) {
          case Family::Complete: a.printed_value = closed_form_complete_printed(n, k); break;
          case Family::Star: a.printed_value = closed_form_star(n, k); break;
          default: a.printed_value = closed_form_path_printed(n, k); break;
        }
        a.computed_value = steiner_gutman(g, table, k);
        a.agrees = a.printed_value == a.computed_value;
        out.push_back(std::move(a));
      }
    }
  }
  return out;
}

}  // namespace sgut
