#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "exact.hpp"
#include "graph.hpp"
#include "indices.hpp"
#include "steiner.hpp"

namespace sgut {

enum class BoundDirection { Upper, Lower };

/// A bound value, stored either directly or as its square when the bound
/// itself may be irrational (half-integer powers).
class BoundValue {
 public:
  BoundValue() = default;
  static BoundValue exact(ExactScalar v) { return BoundValue(std::move(v), false); }

  /// The bound sqrt(square); collapses to an exact value when square is a rational square.
  static BoundValue sqrt_of(const ExactScalar& square) {
    ExactScalar root;
    if (exact_sqrt(square, root)) return exact(root);
    return BoundValue(square, true);
  }

  bool is_sqrt() const { return is_sqrt_; }
  /// The exact bound; only meaningful when !is_sqrt().
  const ExactScalar& value() const { return stored_; }
  ExactScalar squared() const { return is_sqrt_ ? stored_ : stored_ * stored_; }

  /// -1, 0, 1 as x is below, equal to, above the bound. x must be >= 0 for sqrt bounds.
  int compare(const ExactScalar& x) const {
    if (!is_sqrt_) return x < stored_ ? -1 : (x == stored_ ? 0 : 1);
    const ExactScalar sq = x * x;
    return sq < stored_ ? -1 : (sq == stored_ ? 0 : 1);
  }

  /// "num/den", or "sqrt(num/den)" for an irrational bound.
  std::string str() const {
    return is_sqrt_ ? "sqrt(" + to_exact_string(stored_) + ")" : to_exact_string(stored_);
  }

  std::string decimal(unsigned digits) const {
    return is_sqrt_ ? sqrt_to_decimal(stored_, digits) : to_decimal(stored_, digits);
  }

  friend bool operator==(const BoundValue&, const BoundValue&) = default;

 private:
  BoundValue(ExactScalar v, bool is_sqrt) : stored_(std::move(v)), is_sqrt_(is_sqrt) {}

  ExactScalar stored_ = 0;
  bool is_sqrt_ = false;
};

struct BoundCheck {
  std::string bound_id;
  std::string case_label;
  BoundDirection direction = BoundDirection::Upper;
  BoundValue bound;
  ExactScalar actual = 0;
  bool holds = false;
  bool tight = false;
  /// False only for the weaker of two overlapping case branches.
  bool binding = true;
};

inline BoundCheck make_check(std::string id, std::string case_label, BoundDirection dir,
                             BoundValue bound, const ExactScalar& actual) {
  BoundCheck c;
  c.bound_id = std::move(id);
  c.case_label = std::move(case_label);
  c.direction = dir;
  const int cmp = bound.compare(actual);
  c.holds = dir == BoundDirection::Upper ? cmp <= 0 : cmp >= 0;
  c.tight = cmp == 0;
  c.bound = std::move(bound);
  c.actual = actual;
  return c;
}

/// Stable public bound identifiers, in evaluation order.
inline constexpr std::array<std::string_view, 16> kBoundIds = {
    "prop21.upper",          "prop21.lower",           "lem22.upper",
    "lem22.lower",           "thm32.1.sum_upper",      "thm32.1.product_upper",
    "thm32.2.sum_lower",     "thm32.3.product_lower",  "cor41.1.sum_upper",
    "cor41.1.sum_lower",     "cor41.2.product_upper",  "cor41.2.product_lower",
    "ps.product_lower",      "ps.product_upper",       "amgm.sum_lower",
    "amgm.sum_upper",
};

inline constexpr std::array<std::string_view, 6> kBoundGroups = {"prop21", "lem22", "thm32",
                                                                 "cor41",  "ps",    "amgm"};

inline std::string_view group_of(std::string_view bound_id) {
  return bound_id.substr(0, bound_id.find('.'));
}

/// Everything the bound formulas need about one graph: G, its complement,
/// degree data, and SGut_k for every k on both sides (when connected).
struct Instance {
  Graph g;
  Graph gc;
  DegreeProfile deg;
  DegreeProfile deg_c;
  bool connected = false;
  bool co_connected = false;
  std::vector<Integer> sgut;    // by k; valid for 2 <= k <= n when connected
  std::vector<Integer> sgut_c;  // same for the complement

  static Instance make(const Graph& g, int cap = kDefaultSteinerCap) {
    Instance inst{g, complement(g), degree_profile(g), {}, false, false, {}, {}};
    inst.deg_c = degree_profile(inst.gc);
    inst.connected = is_connected(inst.g);
    inst.co_connected = is_connected(inst.gc);
    const int n = g.order();
    if (inst.connected) {
      const SteinerTable t = steiner_all_subsets(inst.g, cap);
      inst.sgut.assign(n + 1, 0);
      for (int k = 2; k <= n; ++k) inst.sgut[k] = steiner_gutman(inst.g, t, k);
    }
    if (inst.co_connected) {
      const SteinerTable t = steiner_all_subsets(inst.gc, cap);
      inst.sgut_c.assign(n + 1, 0);
      for (int k = 2; k <= n; ++k) inst.sgut_c[k] = steiner_gutman(inst.gc, t, k);
    }
    return inst;
  }

  int n() const { return g.order(); }
  int m() const { return g.size(); }
};

namespace detail {

using Q = ExactScalar;

inline Q C(int a, int b) { return Q(binomial(a, b)); }
inline Q pw(const Q& base, int e) { return rpow(base, static_cast<unsigned>(e)); }

inline void require_bound_k(const Instance& in, int k) {
  if (k < 2 || k > in.n()) {
    throw Error(ErrorKind::KOutOfRange,
                "k=" + std::to_string(k) + " outside [2, " + std::to_string(in.n()) + "]");
  }
}

inline void require_connected(const Instance& in) {
  if (!in.connected) throw Error(ErrorKind::Disconnected, "bound needs a connected graph");
}

inline void require_nordhaus(const Instance& in, int k) {
  require_connected(in);
  if (!in.co_connected) {
    throw Error(ErrorKind::ComplementDisconnected, "bound needs a connected complement");
  }
  require_bound_k(in, k);
}

enum class DegreeCase { MinAtLeast2MaxAtMostNm3, MinAtLeast2MaxNm2, Min1MaxAtMostNm3, Min1MaxNm2 };

inline DegreeCase degree_case(const Instance& in) {
  const int n = in.n();
  const int lo = in.deg.min_degree;
  const int hi = in.deg.max_degree;
  if (lo < 1 || hi >= n - 1) {
    throw Error(ErrorKind::NoCaseApplies, "no (delta, Delta) case for delta=" + std::to_string(lo) +
                                              " Delta=" + std::to_string(hi) +
                                              " n=" + std::to_string(n));
  }
  if (lo >= 2) return hi <= n - 3 ? DegreeCase::MinAtLeast2MaxAtMostNm3 : DegreeCase::MinAtLeast2MaxNm2;
  return hi <= n - 3 ? DegreeCase::Min1MaxAtMostNm3 : DegreeCase::Min1MaxNm2;
}

inline std::string_view label(DegreeCase c) {
  switch (c) {
    case DegreeCase::MinAtLeast2MaxAtMostNm3: return "delta>=2,Delta<=n-3";
    case DegreeCase::MinAtLeast2MaxNm2: return "delta>=2,Delta=n-2";
    case DegreeCase::Min1MaxAtMostNm3: return "delta=1,Delta<=n-3";
    case DegreeCase::Min1MaxNm2: return "delta=1,Delta=n-2";
  }
  return "";
}

inline Q sum_actual(const Instance& in, int k) { return Q(in.sgut[k] + in.sgut_c[k]); }
inline Q product_actual(const Instance& in, int k) { return Q(in.sgut[k] * in.sgut_c[k]); }

/// Lower bound from the min-degree branch and from the max-degree branch of
/// a (delta + Delta) vs n-1 split; both are emitted on the boundary.
inline std::vector<BoundCheck> split_lower(const Instance& in, const std::string& id,
                                           const BoundValue& min_branch,
                                           const BoundValue& max_branch, const Q& actual) {
  const int n = in.n();
  const int s = in.deg.min_degree + in.deg.max_degree;
  std::vector<BoundCheck> out;
  if (s <= n - 1)
    out.push_back(make_check(id, "Delta+delta<=n-1", BoundDirection::Lower, min_branch, actual));
  if (s >= n - 1)
    out.push_back(make_check(id, "Delta+delta>=n-1", BoundDirection::Lower, max_branch, actual));
  if (out.size() == 2) {
    const auto a = out[0].bound.squared();
    const auto b = out[1].bound.squared();
    out[0].binding = a >= b;
    out[1].binding = b >= a;
  }
  return out;
}

}  // namespace detail

/// Degree-based upper bound and the delta-cased lower bound on SGut_k(G).
inline std::pair<BoundCheck, BoundCheck> prop21(const Instance& in, int k) {
  using namespace detail;
  require_connected(in);
  if (in.n() < 3) throw Error(ErrorKind::KOutOfRange, "needs order n >= 3");
  require_bound_k(in, k);
  const int n = in.n();
  const Q two_m = 2 * in.m();
  const int lo = in.deg.min_degree;
  const int hi = in.deg.max_degree;
  const Q actual(in.sgut[k]);

  const Q upper = two_m * (n - 1) * C(n - 1, k - 1) * pw(hi, k - 1) / k;
  BoundCheck up = make_check("prop21.upper", "", BoundDirection::Upper, BoundValue::exact(upper), actual);

  if (lo >= 2) {
    const Q lower = two_m * (k - 1) * C(n - 1, k - 1) * pw(lo, k - 1) / k;
    return {up, make_check("prop21.lower", "delta>=2", BoundDirection::Lower, BoundValue::exact(lower), actual)};
  }
  const int p = in.deg.pendants;
  const int q = std::max(k - p, 1);
  const Q lower = Q(k) * C(p, k) + pw(2, q) * (k - 1) * (C(n, k) - C(p, k));
  return {up, make_check("prop21.lower", "delta=1", BoundDirection::Lower, BoundValue::exact(lower), actual)};
}

/// m-based upper and lower bounds on SGut_k(G).
inline std::pair<BoundCheck, BoundCheck> lem22(const Instance& in, int k) {
  using namespace detail;
  require_connected(in);
  require_bound_k(in, k);
  const int n = in.n();
  const Q two_m = 2 * in.m();
  const Q actual(in.sgut[k]);

  const Q upper = Q(n - 1) * pw(two_m / k, k) * pw(C(n - 1, k - 1), k);
  BoundCheck up = make_check("lem22.upper", "", BoundDirection::Upper, BoundValue::exact(upper), actual);
  if (in.deg.min_degree >= 2) {
    const Q lower = two_m * (k - 1) * C(n - 1, k - 1);
    return {up, make_check("lem22.lower", "delta>=2", BoundDirection::Lower, BoundValue::exact(lower), actual)};
  }
  const Q lower = Q(k - 1) * C(n, k);
  return {up, make_check("lem22.lower", "delta=1", BoundDirection::Lower, BoundValue::exact(lower), actual)};
}

/// Nordhaus-Gaddum sum/product bounds in n, m, delta, Delta.
/// Order: sum upper, product upper, sum lower, product lower.
inline std::vector<BoundCheck> thm32(const Instance& in, int k) {
  using namespace detail;
  require_nordhaus(in, k);
  const int n = in.n();
  const Q two_m = 2 * in.m();
  const Q two_m_c = Q(n * (n - 1)) - two_m;  // 2m of the complement
  const int lo = in.deg.min_degree;
  const int hi = in.deg.max_degree;
  const Q sum = sum_actual(in, k);
  const Q product = product_actual(in, k);
  const Q c_nk = C(n, k);
  const Q c_n1 = C(n - 1, k - 1);

  std::vector<BoundCheck> out;
  const int s1 = std::max(hi, n - lo - 1);
  out.push_back(make_check("thm32.1.sum_upper", "s1=max", BoundDirection::Upper,
                           BoundValue::exact(Q((n - 1) * (n - 1)) * c_nk * pw(s1, k - 1)), sum));
  out.push_back(make_check(
      "thm32.1.product_upper", "", BoundDirection::Upper,
      BoundValue::exact(two_m * two_m_c * Q((n - 1) * (n - 1)) * c_n1 * c_n1 * pw(hi, k - 1) *
                        pw(n - lo - 1, k - 1) / (k * k)),
      product));

  const DegreeCase dc = degree_case(in);
  const std::string lab(label(dc));
  const int t1 = std::min(lo, n - hi - 1);
  Q sum_lower;
  Q product_lower;
  switch (dc) {
    case DegreeCase::MinAtLeast2MaxAtMostNm3:
      sum_lower = Q(n - 1) * (k - 1) * c_nk * pw(t1, k - 1);
      product_lower = two_m * two_m_c * Q((k - 1) * (k - 1)) * c_n1 * c_n1 * pw(lo, k - 1) *
                      pw(n - hi - 1, k - 1) / (k * k);
      break;
    case DegreeCase::MinAtLeast2MaxNm2:
      sum_lower = two_m * (k - 1) * c_n1 * pw(lo, k - 1) / k + Q(k) * c_nk;
      product_lower = two_m * (k - 1) * c_nk * c_n1 * pw(lo, k - 1);
      break;
    case DegreeCase::Min1MaxAtMostNm3:
      sum_lower = Q(k) * c_nk + two_m_c * (k - 1) * c_n1 * pw(n - hi - 1, k - 1) / k;
      product_lower = two_m_c * (k - 1) * c_nk * c_n1 * pw(n - hi - 1, k - 1);
      break;
    case DegreeCase::Min1MaxNm2:
      sum_lower = Q(2 * k) * c_nk;
      product_lower = Q(k * k) * c_nk * c_nk;
      break;
  }
  out.push_back(make_check("thm32.2.sum_lower", lab, BoundDirection::Lower, BoundValue::exact(sum_lower), sum));
  out.push_back(make_check("thm32.3.product_lower", lab, BoundDirection::Lower,
                           BoundValue::exact(product_lower), product));
  return out;
}

/// m-free corollary forms, for n >= 4. The sum upper bound uses
/// s1 = min{Delta, n-delta-1}; thm32 uses the max.
inline std::vector<BoundCheck> cor41(const Instance& in, int k) {
  using namespace detail;
  require_nordhaus(in, k);
  const int n = in.n();
  if (n < 4) throw Error(ErrorKind::KOutOfRange, "needs order n >= 4");
  const int lo = in.deg.min_degree;
  const int hi = in.deg.max_degree;
  const Q sum = sum_actual(in, k);
  const Q product = product_actual(in, k);
  const Q c_nk = C(n, k);
  const Q c_n1 = C(n - 1, k - 1);

  std::vector<BoundCheck> out;
  const int s1 = std::min(hi, n - lo - 1);
  out.push_back(make_check("cor41.1.sum_upper", "s1=min", BoundDirection::Upper,
                           BoundValue::exact(Q((n - 1) * (n - 1)) * c_nk * pw(s1, k - 1)), sum));

  const DegreeCase dc = degree_case(in);
  const std::string lab(label(dc));
  const int t1 = std::min(lo, n - hi - 1);
  Q sum_lower;
  Q product_lower;
  switch (dc) {
    case DegreeCase::MinAtLeast2MaxAtMostNm3:
      sum_lower = Q(n - 1) * (k - 1) * c_nk * pw(t1, k - 1);
      product_lower =
          Q(n * n) * Q((k - 1) * (k - 1)) * c_n1 * c_n1 * pw(lo, k) * pw(n - hi - 1, k) / (k * k);
      break;
    case DegreeCase::MinAtLeast2MaxNm2:
      sum_lower = Q(n) * (k - 1) * c_n1 * pw(lo, k) / k + Q(k) * c_nk;
      product_lower = Q(n) * (k - 1) * c_nk * c_n1 * pw(lo, k);
      break;
    case DegreeCase::Min1MaxAtMostNm3:
      sum_lower = Q(k) * c_nk + Q(n) * (k - 1) * c_n1 * pw(n - hi - 1, k) / k;
      product_lower = Q(n) * (k - 1) * c_nk * c_n1 * pw(n - hi - 1, k);
      break;
    case DegreeCase::Min1MaxNm2:
      sum_lower = Q(2 * k) * c_nk;
      product_lower = Q(k * k) * c_nk * c_nk;
      break;
  }
  out.push_back(make_check("cor41.1.sum_lower", lab, BoundDirection::Lower, BoundValue::exact(sum_lower), sum));
  out.push_back(make_check(
      "cor41.2.product_upper", "", BoundDirection::Upper,
      BoundValue::exact(Q(n * n) * c_n1 * c_n1 * pw(hi, k - 1) * pw(n - lo - 1, k - 1) *
                        pw(n - 1, 4) / (4 * k * k)),
      product));
  out.push_back(make_check("cor41.2.product_lower", lab, BoundDirection::Lower,
                           BoundValue::exact(product_lower), product));
  return out;
}

/// Product bounds from Cauchy-Schwarz (lower) and Polya-Szego (upper).
/// The lower bound yields one check per applicable branch.
inline std::vector<BoundCheck> ps_product(const Instance& in, int k) {
  using namespace detail;
  require_nordhaus(in, k);
  const int n = in.n();
  const int lo = in.deg.min_degree;
  const int hi = in.deg.max_degree;
  if (lo == 0 || n - hi - 1 == 0) {
    throw Error(ErrorKind::DegenerateDegrees, "delta * (n - Delta - 1) = 0");
  }
  const Q product = product_actual(in, k);
  const Q c2 = C(n, k) * C(n, k);
  const Q kk = Q((k - 1) * (k - 1));

  std::vector<BoundCheck> out = split_lower(
      in, "ps.product_lower", BoundValue::exact(kk * pw(lo, k) * pw(n - lo - 1, k) * c2),
      BoundValue::exact(kk * pw(hi, k) * pw(n - hi - 1, k) * c2), product);

  const Q x = Q(hi * (n - lo - 1)) / Q(lo * (n - hi - 1));
  const Q upper = pw(n - 1, 2 * k + 2) / pw(2, 2 * k + 2) * c2 * (pw(x, k) + pw(1 / x, k) + 2);
  out.push_back(make_check("ps.product_upper", "", BoundDirection::Upper, BoundValue::exact(upper), product));
  return out;
}

/// Sum bounds from AM-GM. The lower bound carries k/2 powers and is compared
/// by squaring both (nonnegative) sides.
inline std::vector<BoundCheck> amgm_sum(const Instance& in, int k) {
  using namespace detail;
  require_nordhaus(in, k);
  const int n = in.n();
  const int lo = in.deg.min_degree;
  const int hi = in.deg.max_degree;
  const Q sum = sum_actual(in, k);
  const Q c_nk = C(n, k);
  const Q coef = Q(2 * (k - 1)) * c_nk;

  // (2 (k-1) C(n,k))^2 (x (n-x-1))^k is the square of the bound.
  const auto branch = [&](int x) { return BoundValue::sqrt_of(coef * coef * pw(Q(x) * (n - x - 1), k)); };
  std::vector<BoundCheck> out = split_lower(in, "amgm.sum_lower", branch(lo), branch(hi), sum);

  const Q upper = Q(n - 1) * (pw(hi, k) + pw(n - lo - 1, k)) * c_nk;
  out.push_back(make_check("amgm.sum_upper", "", BoundDirection::Upper, BoundValue::exact(upper), sum));
  return out;
}

inline std::pair<BoundCheck, BoundCheck> prop21(const Graph& g, int k) { return prop21(Instance::make(g), k); }
inline std::pair<BoundCheck, BoundCheck> lem22(const Graph& g, int k) { return lem22(Instance::make(g), k); }
inline std::vector<BoundCheck> thm32(const Graph& g, int k) { return thm32(Instance::make(g), k); }
inline std::vector<BoundCheck> cor41(const Graph& g, int k) { return cor41(Instance::make(g), k); }
inline std::vector<BoundCheck> ps_product(const Graph& g, int k) { return ps_product(Instance::make(g), k); }
inline std::vector<BoundCheck> amgm_sum(const Graph& g, int k) { return amgm_sum(Instance::make(g), k); }

/// Whether the group's hypotheses hold for (instance, k).
inline bool applicable(std::string_view group, const Instance& in, int k) {
  if (!in.connected || k < 2 || k > in.n()) return false;
  if (group == "prop21") return in.n() >= 3;
  if (group == "lem22") return true;
  if (!in.co_connected) return false;
  if (group == "cor41") return in.n() >= 4;
  return group == "thm32" || group == "ps" || group == "amgm";
}

inline std::vector<BoundCheck> evaluate_group(std::string_view group, const Instance& in, int k) {
  if (group == "prop21") {
    auto [u, l] = prop21(in, k);
    return {u, l};
  }
  if (group == "lem22") {
    auto [u, l] = lem22(in, k);
    return {u, l};
  }
  if (group == "thm32") return thm32(in, k);
  if (group == "cor41") return cor41(in, k);
  if (group == "ps") return ps_product(in, k);
  if (group == "amgm") return amgm_sum(in, k);
  throw Error(ErrorKind::UnknownBound, std::string(group));
}

/// A set of bound ids. Parsed from "all" or a comma list of ids and group names.
class BoundSelection {
 public:
  static BoundSelection all() {
    BoundSelection s;
    for (auto id : kBoundIds) s.ids_.emplace_back(id);
    return s;
  }

  static BoundSelection parse(std::string_view text) {
    BoundSelection s;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t comma = std::min(text.find(',', pos), text.size());
      const std::string_view token = text.substr(pos, comma - pos);
      pos = comma + 1;
      if (token.empty()) continue;
      if (token == "all") return all();
      bool matched = false;
      for (auto id : kBoundIds) {
        if (id == token || group_of(id) == token) {
          s.add(id);
          matched = true;
        }
      }
      if (!matched) throw Error(ErrorKind::UnknownBound, "unknown bound id '" + std::string(token) + "'");
    }
    // Keep the canonical evaluation order regardless of input order.
    std::vector<std::string> ordered;
    for (auto id : kBoundIds)
      if (s.contains(id)) ordered.emplace_back(id);
    s.ids_ = std::move(ordered);
    return s;
  }

  bool contains(std::string_view id) const {
    return std::find(ids_.begin(), ids_.end(), id) != ids_.end();
  }

  bool touches_group(std::string_view group) const {
    return std::any_of(ids_.begin(), ids_.end(), [&](const auto& id) { return group_of(id) == group; });
  }

  const std::vector<std::string>& ids() const { return ids_; }

 private:
  void add(std::string_view id) {
    if (!contains(id)) ids_.emplace_back(id);
  }
  std::vector<std::string> ids_;
};

/// Every applicable check for (instance, k) whose id is selected, in kBoundIds group order.
inline std::vector<BoundCheck> evaluate(const Instance& in, int k, const BoundSelection& sel) {
  std::vector<BoundCheck> out;
  for (auto group : kBoundGroups) {
    if (!sel.touches_group(group) || !applicable(group, in, k)) continue;
    for (auto& c : evaluate_group(group, in, k))
      if (sel.contains(c.bound_id)) out.push_back(std::move(c));
  }
  return out;
}

/// Structural predicates that characterize equality cases.
struct EqualityDiagnosis {
  bool regular = false;
  bool k_equals_n = false;
  bool vertex_connected_n_minus_k_plus_1 = false;
  bool all_k_subsets_connected = false;
  bool tree_distance_both_sides = false;  // d_G(S) = d_Gbar(S) = k-1 for every k-set
  bool half_regular_odd_order = false;    // ((n-1)/2)-regular with n odd
  bool is_path = false;
  bool p3_with_k2 = false;

  friend bool operator==(const EqualityDiagnosis&, const EqualityDiagnosis&) = default;
};

inline EqualityDiagnosis diagnose(const Graph& g, int k) {
  const int n = g.order();
  const DegreeProfile deg = degree_profile(g);
  const Graph gc = complement(g);
  EqualityDiagnosis d;
  d.regular = deg.min_degree == deg.max_degree;
  d.k_equals_n = k == n;
  d.vertex_connected_n_minus_k_plus_1 = is_k_connected(g, n - k + 1);
  d.all_k_subsets_connected = true;
  d.tree_distance_both_sides = true;
  for_each_k_subset(n, k, [&](VertexSet s) {
    const bool in_g = induced_connected(g, s);
    d.all_k_subsets_connected = d.all_k_subsets_connected && in_g;
    d.tree_distance_both_sides = d.tree_distance_both_sides && in_g && induced_connected(gc, s);
  });
  d.half_regular_odd_order = n % 2 == 1 && d.regular && deg.min_degree == (n - 1) / 2;
  d.is_path = is_connected(g) && g.size() == n - 1 && deg.max_degree <= 2;
  d.p3_with_k2 = d.is_path && n == 3 && k == 2;
  return d;
}

inline EqualityDiagnosis equality_witness(const Graph& g, int k, const BoundCheck& check) {
  if (!check.tight) throw Error(ErrorKind::NotTight, check.bound_id + " is not tight");
  return diagnose(g, k);
}

}  // namespace sgut
