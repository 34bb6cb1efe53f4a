#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "error.hpp"
#include "exact.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "graph6.hpp"

namespace sgut {

inline constexpr int kMaxEnumerationOrder = 8;

// ---------------------------------------------------------------------------
// Canonical form

struct CanonicalForm {
  Graph graph;               // g relabeled by `perm`
  std::vector<int> perm;     // perm[v] = canonical label of v
  std::string key;           // graph6 of `graph`
};

/// Lexicographically smallest upper-triangle bitstring (graph6 bit order) over
/// all n! relabelings.
///
/// Column j of the bitstring depends only on the first j+1 vertices placed, so
/// the minimum is found level by level: keep every partial placement whose
/// prefix is minimal, extend by one vertex, keep the minimal extensions again.
inline CanonicalForm canonical_form(const Graph& g) {
  const int n = g.order();
  const auto& rows = g.rows();
  struct Partial {
    std::vector<int> placed;
    std::uint64_t used = 0;
  };
  std::vector<Partial> frontier;
  for (int v = 0; v < n; ++v) frontier.push_back({{v}, std::uint64_t{1} << v});

  for (int j = 1; j < n; ++j) {
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<Partial> next;
    for (const Partial& p : frontier) {
      for (int v = 0; v < n; ++v) {
        if ((p.used >> v) & 1u) continue;
        // First bit of the column is the most significant.
        std::uint64_t col = 0;
        for (int i = 0; i < j; ++i) col = (col << 1) | ((rows[p.placed[i]] >> v) & 1u);
        if (col > best) continue;
        if (col < best) {
          best = col;
          next.clear();
        }
        Partial q = p;
        q.placed.push_back(v);
        q.used |= std::uint64_t{1} << v;
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }

  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[frontier.front().placed[i]] = i;
  Graph canon = g.permuted(perm);
  std::string key = graph6_encode(canon);
  return {std::move(canon), std::move(perm), std::move(key)};
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_form(a).key == canonical_form(b).key;
}

// ---------------------------------------------------------------------------
// Enumeration

struct EnumerationSpec {
  int n_min = 1;
  int n_max = 1;
  bool require_connected = true;
  bool require_coconnected = false;
  bool dedup_isomorphism = true;
  std::vector<int> k_values;  // empty means every k in [2, n]

  static EnumerationSpec order(int n) {
    EnumerationSpec s;
    s.n_min = s.n_max = n;
    return s;
  }

  bool wants_k(int k) const {
    return k_values.empty() || std::find(k_values.begin(), k_values.end(), k) != k_values.end();
  }
};

namespace detail {

inline void check_enumeration_order(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw Error(ErrorKind::OrderTooLarge,
                "enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationOrder) +
                    ", got " + std::to_string(n));
  }
}

inline bool passes(const Graph& g, const EnumerationSpec& spec) {
  if (spec.require_connected && !is_connected(g)) return false;
  if (spec.require_coconnected && !is_connected(complement(g))) return false;
  return true;
}

/// Adjacency rows for labeled graph number `mask`; bit b is the b-th pair in graph6 order.
inline Graph graph_from_pair_mask(int n, std::uint64_t mask) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  int b = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++b) {
      if ((mask >> b) & 1u) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  return Graph::from_adjacency(std::move(rows));
}

/// One canonical representative per isomorphism class on n vertices (all
/// graphs, or connected ones only), sorted by canonical key. Levels are
/// memoized per process.
///
/// Built by vertex augmentation: every graph on n vertices is some graph on
/// n-1 vertices plus one vertex, and every connected graph has a vertex whose
/// removal keeps it connected.
inline const std::vector<Graph>& unlabeled_graphs(int n, bool connected_only) {
  check_enumeration_order(n);
  static std::mutex lock;
  static std::map<std::pair<int, bool>, std::vector<Graph>> memo;
  {
    std::lock_guard guard(lock);
    if (auto it = memo.find({n, connected_only}); it != memo.end()) return it->second;
  }
  std::vector<Graph> level;
  if (n == 1) {
    level.push_back(Graph::from_edge_list(1, {}));
  } else {
    std::map<std::string, Graph> seen;
    const std::uint64_t choices = std::uint64_t{1} << (n - 1);
    for (const Graph& base : unlabeled_graphs(n - 1, connected_only)) {
      for (std::uint64_t nbrs = connected_only ? 1 : 0; nbrs < choices; ++nbrs) {
        std::vector<std::uint64_t> rows = base.rows();
        rows.push_back(nbrs);
        for (int v = 0; v < n - 1; ++v)
          if ((nbrs >> v) & 1u) rows[v] |= std::uint64_t{1} << (n - 1);
        CanonicalForm cf = canonical_form(Graph::from_adjacency(std::move(rows)));
        seen.try_emplace(std::move(cf.key), std::move(cf.graph));
      }
    }
    for (auto& [key, g] : seen) level.push_back(std::move(g));
  }
  std::lock_guard guard(lock);
  return memo.try_emplace({n, connected_only}, std::move(level)).first->second;
}

}  // namespace detail

/// Calls f(graph) for every graph of order n passing the spec filters: labeled
/// graphs in ascending pair-mask order, or canonical representatives in
/// ascending canonical-key order. Labeled mode streams; mask range [lo, hi)
/// restricts it to one shard.
template <typename F>
void for_each_graph(int n, const EnumerationSpec& spec, F&& f,
                    std::optional<std::pair<std::uint64_t, std::uint64_t>> shard = std::nullopt) {
  detail::check_enumeration_order(n);
  if (spec.dedup_isomorphism) {
    const auto& reps = detail::unlabeled_graphs(n, spec.require_connected);
    const std::uint64_t lo = shard ? shard->first : 0;
    const std::uint64_t hi = shard ? std::min<std::uint64_t>(shard->second, reps.size()) : reps.size();
    for (std::uint64_t i = lo; i < hi; ++i)
      if (detail::passes(reps[i], spec)) f(reps[i]);
    return;
  }
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  const std::uint64_t lo = shard ? shard->first : 0;
  const std::uint64_t hi = shard ? std::min(shard->second, total) : total;
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    Graph g = detail::graph_from_pair_mask(n, mask);
    if (detail::passes(g, spec)) f(g);
  }
}

/// Materialized form of for_each_graph over every order in the spec.
inline std::vector<Graph> enumerate_graphs(const EnumerationSpec& spec) {
  std::vector<Graph> out;
  for (int n = spec.n_min; n <= spec.n_max; ++n)
    for_each_graph(n, spec, [&](const Graph& g) { out.push_back(g); });
  return out;
}

/// Size of the index space for_each_graph shards over at order n.
inline std::uint64_t shard_space(int n, const EnumerationSpec& spec) {
  detail::check_enumeration_order(n);
  if (spec.dedup_isomorphism) return detail::unlabeled_graphs(n, spec.require_connected).size();
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

// ---------------------------------------------------------------------------
// Sweep

struct SweepSelection {
  BoundSelection bounds;
  bool audit = false;

  /// "all", bound ids, group names, and "audit" (the printed-formula audit).
  static SweepSelection parse(std::string_view text) {
    SweepSelection s;
    std::string rest;
    std::size_t pos = 0;
    bool any_bound = false;
    while (pos <= text.size()) {
      const std::size_t comma = std::min(text.find(',', pos), text.size());
      const std::string_view token = text.substr(pos, comma - pos);
      pos = comma + 1;
      if (token.empty()) continue;
      if (token == "audit") {
        s.audit = true;
        continue;
      }
      if (!rest.empty()) rest += ',';
      rest += token;
      any_bound = true;
    }
    if (any_bound) s.bounds = BoundSelection::parse(rest);
    return s;
  }
};

struct Violation {
  std::string graph6;
  int n = 0;
  int k = 0;
  std::string bound_id;
  std::string case_label;
  BoundValue bound_value;
  ExactScalar actual = 0;
};

struct TightCase {
  std::string graph6;
  int n = 0;
  int k = 0;
  std::string bound_id;
  std::string case_label;
  EqualityDiagnosis diagnosis;
};

struct CheckRow {
  std::string graph6;
  int n = 0;
  int k = 0;
  BoundCheck check;
};

struct VerificationReport {
  EnumerationSpec spec;
  std::vector<std::string> bound_set;
  bool audit = false;
  std::uint64_t graphs_scanned = 0;
  std::uint64_t checks_run = 0;
  std::vector<Violation> violations;
  std::vector<TightCase> tight_cases;
  std::vector<FormulaAudit> formula_audit_findings;
  std::vector<CheckRow> checks;  // only with SweepOptions::record_checks

  /// Appends a later shard. Associative; order of calls fixes the result order.
  void merge(VerificationReport&& other) {
    graphs_scanned += other.graphs_scanned;
    checks_run += other.checks_run;
    std::move(other.violations.begin(), other.violations.end(), std::back_inserter(violations));
    std::move(other.tight_cases.begin(), other.tight_cases.end(), std::back_inserter(tight_cases));
    std::move(other.formula_audit_findings.begin(), other.formula_audit_findings.end(),
              std::back_inserter(formula_audit_findings));
    std::move(other.checks.begin(), other.checks.end(), std::back_inserter(checks));
  }

  bool audit_disagreements() const {
    return std::any_of(formula_audit_findings.begin(), formula_audit_findings.end(),
                       [](const FormulaAudit& a) { return !a.agrees; });
  }
  bool clean() const { return violations.empty() && !audit_disagreements(); }
};

struct SweepOptions {
  int jobs = 1;
  bool record_checks = false;
  int steiner_cap = kDefaultSteinerCap;
};

namespace detail {

inline void sweep_graph(const Graph& g, const EnumerationSpec& spec, const BoundSelection& sel,
                        const SweepOptions& opt, VerificationReport& out) {
  ++out.graphs_scanned;
  const Instance inst = Instance::make(g, opt.steiner_cap);
  const int n = g.order();
  std::string g6;
  for (int k = 2; k <= n; ++k) {
    if (!spec.wants_k(k)) continue;
    const std::vector<BoundCheck> checks = evaluate(inst, k, sel);
    if (checks.empty()) continue;
    if (g6.empty()) g6 = graph6_encode(g);
    std::optional<EqualityDiagnosis> diag;
    for (const BoundCheck& c : checks) {
      ++out.checks_run;
      if (!c.holds) out.violations.push_back({g6, n, k, c.bound_id, c.case_label, c.bound, c.actual});
      if (c.tight) {
        if (!diag) diag = diagnose(g, k);
        out.tight_cases.push_back({g6, n, k, c.bound_id, c.case_label, *diag});
      }
      if (opt.record_checks) out.checks.push_back({g6, n, k, c});
    }
  }
}

}  // namespace detail

/// Checks every selected bound on every enumerated graph and k. Violations
/// are data, never exceptions. With jobs > 1 each order's index space is cut
/// into `jobs` fixed contiguous shards whose partial reports are merged in
/// shard order, so the report does not depend on `jobs`.
inline VerificationReport sweep(const EnumerationSpec& spec, const SweepSelection& selection,
                                const SweepOptions& options = {}) {
  VerificationReport report;
  report.spec = spec;
  report.bound_set = selection.bounds.ids();
  report.audit = selection.audit;
  const int jobs = std::max(1, options.jobs);
  for (int n = spec.n_min; n <= spec.n_max; ++n) detail::check_enumeration_order(n);

  for (int n = spec.n_min; n <= spec.n_max; ++n) {
    const std::uint64_t space = shard_space(n, spec);
    std::vector<VerificationReport> parts(static_cast<std::size_t>(jobs));
    const auto run = [&](int shard) {
      const std::uint64_t lo = space * shard / jobs;
      const std::uint64_t hi = space * (shard + 1) / jobs;
      for_each_graph(
          n, spec,
          [&](const Graph& g) { detail::sweep_graph(g, spec, selection.bounds, options, parts[shard]); },
          std::make_pair(lo, hi));
    };
    if (jobs == 1) {
      run(0);
    } else {
      std::vector<std::thread> workers;
      for (int s = 0; s < jobs; ++s) workers.emplace_back(run, s);
      for (auto& w : workers) w.join();
    }
    for (auto& p : parts) report.merge(std::move(p));
  }

  if (selection.audit) report.formula_audit_findings = audit_formulas(spec.n_max, options.steiner_cap);
  return report;
}

// ---------------------------------------------------------------------------
// Extremal search

enum class Extreme { Max, Min };
enum class Quantity { SGut, SumWithComplement, ProductWithComplement };

struct Objective {
  Extreme extreme = Extreme::Max;
  Quantity quantity = Quantity::SGut;

  /// max-sgut, min-sgut, max-sum, min-sum, max-product, min-product.
  static std::optional<Objective> parse(std::string_view text) {
    const auto dash = text.find('-');
    if (dash == std::string_view::npos) return std::nullopt;
    Objective o;
    const auto e = text.substr(0, dash);
    const auto q = text.substr(dash + 1);
    if (e == "max") o.extreme = Extreme::Max;
    else if (e == "min") o.extreme = Extreme::Min;
    else return std::nullopt;
    if (q == "sgut") o.quantity = Quantity::SGut;
    else if (q == "sum") o.quantity = Quantity::SumWithComplement;
    else if (q == "product") o.quantity = Quantity::ProductWithComplement;
    else return std::nullopt;
    return o;
  }
};

/// Every enumerated graph attaining the extreme value at this k (ties kept,
/// enumeration order). Sum/product objectives skip graphs with a
/// disconnected complement.
inline std::vector<std::pair<Graph, Integer>> find_extremal(const EnumerationSpec& spec, int k,
                                                            Objective objective) {
  std::vector<std::pair<Graph, Integer>> best;
  const bool needs_complement = objective.quantity != Quantity::SGut;
  for (int n = spec.n_min; n <= spec.n_max; ++n) {
    if (k < 2 || k > n) continue;
    for_each_graph(n, spec, [&](const Graph& g) {
      if (!is_connected(g)) return;
      Integer value = steiner_gutman(g, k);
      if (needs_complement) {
        const Graph gc = complement(g);
        if (!is_connected(gc)) return;
        const Integer other = steiner_gutman(gc, k);
        value = objective.quantity == Quantity::SumWithComplement ? value + other : value * other;
      }
      if (!best.empty()) {
        const Integer& cur = best.front().second;
        const bool better = objective.extreme == Extreme::Max ? value > cur : value < cur;
        if (better) best.clear();
        else if (value != cur) return;
      }
      best.emplace_back(g, std::move(value));
    });
  }
  return best;
}

}  // namespace sgut
