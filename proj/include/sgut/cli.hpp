#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bounds.hpp"
#include "families.hpp"
#include "graph6.hpp"
#include "indices.hpp"
#include "report_io.hpp"
#include "verifier.hpp"

namespace sgut {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFindings = 2;

namespace cli_detail {

struct NamedGraph {
  std::string id;  // graph6 of the graph as read
  Graph graph;
};

/// Reads graphs from a path or "-" (stdin). graph6 input holds one graph per
/// non-blank line; an edge list holds exactly one graph.
inline std::vector<NamedGraph> read_graphs(const std::string& source, const std::string& format,
                                           std::istream& in) {
  std::ifstream file;
  std::istream* stream = &in;
  if (source != "-") {
    file.open(source);
    if (!file) throw Error(ErrorKind::ParseError, "cannot open '" + source + "'");
    stream = &file;
  }
  std::vector<NamedGraph> out;
  if (format == "edgelist") {
    Graph g = parse_edge_list(*stream);
    out.push_back({graph6_encode(g), std::move(g)});
    return out;
  }
  std::string line;
  while (std::getline(*stream, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    line.erase(0, start);
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    Graph g = graph6_decode(line);
    out.push_back({line, std::move(g)});
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, "no graph6 lines in input");
  return out;
}

/// "all" gives 2..n, otherwise a single integer.
inline std::vector<int> k_values(const std::string& text, int n) {
  std::vector<int> ks;
  if (text == "all") {
    for (int k = 2; k <= n; ++k) ks.push_back(k);
    return ks;
  }
  std::size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(text, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw CLI::ValidationError("--k", "expected an integer or 'all'");
  ks.push_back(k);
  return ks;
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline void write_to(const std::string& path, const std::string& payload, std::ostream& out) {
  if (path == "-") {
    out << payload;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
  file << payload;
  if (!file) throw Error(ErrorKind::ParseError, "write to '" + path + "' failed");
}

}  // namespace cli_detail

/// The `sgut` command line. Returns 0 on success, 1 on usage or input
/// errors, 2 when checks ran and found violations or formula disagreements.
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
  using namespace cli_detail;

  CLI::App app{"Steiner-distance graph invariants and their bounds", "sgut"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // compute
  std::string graph_src = "-";
  std::string graph_fmt = "g6";
  std::string k_text = "all";
  std::string out_fmt = "json";
  std::string indices_text = "sgut,sw,sdd,gut";
  auto* compute = app.add_subcommand("compute", "Steiner indices of one or more graphs");
  compute->add_option("--graph", graph_src, "Input file or - for stdin")->capture_default_str();
  compute->add_option("--format", graph_fmt, "Input format")->check(CLI::IsMember({"g6", "edgelist"}))
      ->capture_default_str();
  compute->add_option("--k", k_text, "Subset size or 'all' (2..n)")->capture_default_str();
  compute->add_option("--indices", indices_text, "Comma list of sgut, sw, sdd, gut")->capture_default_str();
  compute->add_option("--out", out_fmt, "Output format")->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  // bounds
  std::string set_text = "all";
  std::optional<unsigned> decimal;
  auto* bounds = app.add_subcommand("bounds", "Evaluate bounds against the actual index");
  bounds->add_option("--graph", graph_src, "Input file or - for stdin")->capture_default_str();
  bounds->add_option("--format", graph_fmt, "Input format")->check(CLI::IsMember({"g6", "edgelist"}))
      ->capture_default_str();
  bounds->add_option("--k", k_text, "Subset size or 'all' (2..n)")->capture_default_str();
  bounds->add_option("--set", set_text, "'all' or comma list of bound ids and groups")->capture_default_str();
  bounds->add_option("--out", out_fmt, "Output format")->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  bounds->add_option("--decimal", decimal, "Add a decimal rendering with this many digits");

  // family
  std::string family_name;
  int family_n = 0;
  std::string emit = "g6";
  auto* family = app.add_subcommand("family", "Emit a named graph family member");
  family->add_option("--name", family_name, "path|cycle|star|complete|kn-minus-matching")->required();
  family->add_option("--n", family_n, "Order")->required();
  family->add_option("--emit", emit, "Output format")->check(CLI::IsMember({"g6", "edgelist"}))
      ->capture_default_str();

  // verify
  int n_min = 1;
  int n_max = 0;
  bool dedup = false;
  bool coconnected = false;
  std::string report_path = "-";
  std::string report_fmt = "json";
  int jobs = 1;
  std::string verify_k = "all";
  auto* verify = app.add_subcommand("verify", "Exhaustive bound sweep over small connected graphs");
  verify->add_option("--n-min", n_min, "Smallest order")->capture_default_str();
  verify->add_option("--n-max", n_max, "Largest order (<= 8)")->required();
  verify->add_flag("--dedup", dedup, "One graph per isomorphism class");
  verify->add_flag("--coconnected", coconnected, "Require a connected complement");
  verify->add_option("--set", set_text, "'all', bound ids, groups, and/or 'audit'")->capture_default_str();
  verify->add_option("--k", verify_k, "Subset size or 'all'")->capture_default_str();
  verify->add_option("--out", report_path, "Report path or - for stdout")->capture_default_str();
  verify->add_option("--format", report_fmt, "Report format")->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();
  verify->add_option("--decimal", decimal, "CSV only: add a decimal bound column");

  // audit-formulas
  int audit_n_max = 0;
  auto* audit = app.add_subcommand("audit-formulas", "Compare the printed closed forms with computation");
  audit->add_option("--n-max", audit_n_max, "Largest order")->required()->check(CLI::Range(2, kDefaultSteinerCap));
  audit->add_option("--out", out_fmt, "Output format")->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  // extremal
  int ext_n = 0;
  int ext_k = 0;
  std::string objective_text;
  auto* extremal = app.add_subcommand("extremal", "All graphs of order n attaining an extreme value");
  extremal->add_option("--n", ext_n, "Order (<= 8)")->required();
  extremal->add_option("--k", ext_k, "Subset size")->required();
  extremal->add_option("--objective", objective_text,
                       "max-sgut|min-sgut|max-sum|min-sum|max-product|min-product")->required();
  extremal->add_flag("--coconnected", coconnected, "Require a connected complement");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (msg.empty()) msg = e.get_name();
    err << "sgut: " << msg << "\n";
    return kExitUsage;
  }

  try {
    if (compute->parsed()) {
      bool want_sgut = false, want_sw = false, want_sdd = false, want_gut = false;
      for (const auto& name : split_list(indices_text)) {
        if (name == "sgut") want_sgut = true;
        else if (name == "sw") want_sw = true;
        else if (name == "sdd") want_sdd = true;
        else if (name == "gut") want_gut = true;
        else throw CLI::ValidationError("--indices", "unknown index '" + name + "'");
      }
      Json rows = Json::array();
      std::vector<std::string> header = {"graph6", "n", "k"};
      if (want_sgut) header.push_back("sgut");
      if (want_sw) header.push_back("sw");
      if (want_sdd) header.push_back("sdd");
      if (want_gut) header.push_back("gut");
      std::string csv = csv_row(header);
      for (const auto& [id, g] : read_graphs(graph_src, graph_fmt, in)) {
        if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "graph " + id + " is disconnected");
        const SteinerTable table = steiner_all_subsets(g);
        for (int k : k_values(k_text, g.order())) {
          if (k < 2 || k > g.order()) {
            throw Error(ErrorKind::KOutOfRange, "k=" + std::to_string(k) + " outside [2, " +
                                                    std::to_string(g.order()) + "]");
          }
          const IndexReport r = compute_indices(g, table, k, id);
          Json row{{"graph6", id}, {"n", g.order()}, {"k", k}};
          std::vector<std::string> fields = {id, std::to_string(g.order()), std::to_string(k)};
          const auto put = [&](bool want, const char* name, const std::optional<Integer>& v) {
            if (!want) return;
            const std::string s = v ? to_exact_string(*v) : "";
            if (v) row[name] = s;
            else row[name] = nullptr;
            fields.push_back(s);
          };
          put(want_sgut, "sgut", r.sgut);
          put(want_sw, "sw", r.sw);
          put(want_sdd, "sdd", r.sdd);
          put(want_gut, "gut", r.gut);
          rows.push_back(std::move(row));
          csv += csv_row(fields);
        }
      }
      if (out_fmt == "json") out << rows.dump(2) << "\n";
      else out << csv;
      return kExitOk;
    }

    if (bounds->parsed()) {
      const BoundSelection sel = BoundSelection::parse(set_text);
      const bool explicit_k = k_text != "all";
      bool violated = false;
      Json rows = Json::array();
      std::vector<std::string> header = check_csv_header();
      header.insert(header.begin() + 5, "direction");
      if (decimal) header.push_back("bound_decimal");
      std::string csv = csv_row(header);
      for (const auto& [id, g] : read_graphs(graph_src, graph_fmt, in)) {
        const Instance inst = Instance::make(g);
        if (!inst.connected) throw Error(ErrorKind::Disconnected, "graph " + id + " is disconnected");
        for (int k : k_values(k_text, g.order())) {
          std::vector<BoundCheck> checks;
          if (explicit_k) {
            // Surface hypothesis failures instead of silently skipping them.
            for (auto group : kBoundGroups) {
              if (!sel.touches_group(group)) continue;
              for (auto& c : evaluate_group(group, inst, k))
                if (sel.contains(c.bound_id)) checks.push_back(std::move(c));
            }
          } else {
            checks = evaluate(inst, k, sel);
          }
          for (const BoundCheck& c : checks) {
            violated = violated || !c.holds;
            Json row{{"graph6", id}, {"n", g.order()}, {"k", k}};
            row.update(to_json(c, decimal));
            rows.push_back(std::move(row));
            auto fields = check_csv_fields(id, g.order(), k, c, decimal);
            fields.insert(fields.begin() + 5, c.direction == BoundDirection::Upper ? "upper" : "lower");
            csv += csv_row(fields);
          }
        }
      }
      if (out_fmt == "json") out << rows.dump(2) << "\n";
      else out << csv;
      return violated ? kExitFindings : kExitOk;
    }

    if (family->parsed()) {
      const auto f = parse_family(family_name);
      if (!f) throw CLI::ValidationError("--name", "unknown family '" + family_name + "'");
      const Graph g = generate({*f, family_n});
      out << (emit == "g6" ? graph6_encode(g) + "\n" : format_edge_list(g));
      return kExitOk;
    }

    if (verify->parsed()) {
      EnumerationSpec spec;
      spec.n_min = n_min;
      spec.n_max = n_max;
      spec.require_connected = true;
      spec.require_coconnected = coconnected;
      spec.dedup_isomorphism = dedup;
      if (n_min < 1 || n_min > n_max) throw CLI::ValidationError("--n-min", "must lie in [1, n-max]");
      if (verify_k != "all") spec.k_values = k_values(verify_k, n_max);
      const SweepSelection selection = SweepSelection::parse(set_text);
      SweepOptions options;
      options.jobs = jobs;
      options.record_checks = report_fmt == "csv";
      const VerificationReport report = sweep(spec, selection, options);
      if (report_fmt == "json") {
        write_to(report_path, to_json(report).dump(2) + "\n", out);
      } else {
        std::string csv = csv_row([&] {
          auto h = check_csv_header();
          if (decimal) h.push_back("bound_decimal");
          return h;
        }());
        for (const auto& row : report.checks)
          csv += csv_row(check_csv_fields(row.graph6, row.n, row.k, row.check, decimal));
        write_to(report_path, csv, out);
      }
      err << "sgut: scanned " << report.graphs_scanned << " graphs, " << report.checks_run << " checks, "
          << report.violations.size() << " violations, " << report.tight_cases.size() << " tight\n";
      return report.clean() ? kExitOk : kExitFindings;
    }

    if (audit->parsed()) {
      const auto findings = audit_formulas(audit_n_max);
      bool disagree = false;
      Json rows = Json::array();
      std::string csv = csv_row({"family", "n", "k", "printed_value", "computed_value", "agrees"});
      for (const auto& a : findings) {
        disagree = disagree || !a.agrees;
        rows.push_back(to_json(a));
        csv += csv_row({std::string(to_string(a.family)), std::to_string(a.n), std::to_string(a.k),
                        to_exact_string(a.printed_value), to_exact_string(a.computed_value),
                        a.agrees ? "true" : "false"});
      }
      if (out_fmt == "json") out << rows.dump(2) << "\n";
      else out << csv;
      return disagree ? kExitFindings : kExitOk;
    }

    if (extremal->parsed()) {
      const auto objective = Objective::parse(objective_text);
      if (!objective) throw CLI::ValidationError("--objective", "unknown objective '" + objective_text + "'");
      EnumerationSpec spec = EnumerationSpec::order(ext_n);
      spec.require_coconnected = coconnected;
      if (ext_k < 2 || ext_k > ext_n) {
        throw Error(ErrorKind::KOutOfRange, "k=" + std::to_string(ext_k) + " outside [2, n]");
      }
      const auto best = find_extremal(spec, ext_k, *objective);
      Json graphs = Json::array();
      for (const auto& [g, v] : best) graphs.push_back(graph6_encode(g));
      Json result{{"objective", objective_text},
                  {"n", ext_n},
                  {"k", ext_k},
                  {"value", best.empty() ? Json(nullptr) : Json(to_exact_string(best.front().second))},
                  {"graphs", std::move(graphs)}};
      out << result.dump(2) << "\n";
      return kExitOk;
    }
  } catch (const CLI::ParseError& e) {
    err << "sgut: " << e.get_name() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "sgut: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "sgut: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sgut
