#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sgut/cli.hpp>

using namespace sgut;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, FamilyThenCompute) {
  const CliRun fam = run({"family", "--name", "cycle", "--n", "5", "--emit", "g6"});
  ASSERT_EQ(fam.code, 0);
  EXPECT_EQ(fam.out, "Dhc\n");
  const CliRun r = run({"compute", "--graph", "-", "--k", "5", "--indices", "sgut", "--out", "json"}, fam.out);
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["sgut"], "128");
  EXPECT_FALSE(j[0].contains("sw"));
}

TEST(Cli, ComputeAllKRows) {
  const CliRun r = run({"compute", "--k", "all", "--out", "csv"}, "Dhc\n");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(line_count(r.out), 1u + 4u);  // header + k = 2..5
  EXPECT_NE(r.out.find("Dhc,5,2,60,15,60,60"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("Dhc,5,3,200,25,150,\n"), std::string::npos) << r.out;
}

TEST(Cli, ComputeBatchStdin) {
  const CliRun r = run({"compute", "--k", "2", "--indices", "gut", "--out", "csv"}, "Dhc\nC~\n\nBw\n");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "graph6,n,k,gut\nDhc,5,2,60\nC~,4,2,54\nBw,3,2,12\n");
}

TEST(Cli, ComputeEdgeListFile) {
  const auto path = std::filesystem::temp_directory_path() / "sgut_cli_p4.edgelist";
  std::ofstream(path) << "n 4\n0 1\n1 2\n2 3\n";
  const CliRun r = run({"compute", "--graph", path.string(), "--format", "edgelist", "--k", "2", "--indices",
                     "sgut", "--out", "csv"});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "graph6,n,k,sgut\nCh,4,2,19\n");
}

TEST(Cli, JsonAndCsvAgree) {
  const CliRun j = run({"compute", "--k", "all", "--out", "json"}, "C~\n");
  const CliRun c = run({"compute", "--k", "all", "--out", "csv"}, "C~\n");
  const Json rows = Json::parse(j.out);
  std::istringstream lines(c.out);
  std::string line;
  std::getline(lines, line);
  for (const auto& row : rows) {
    std::getline(lines, line);
    std::string expected = row["graph6"].get<std::string>() + "," + std::to_string(row["n"].get<int>()) + "," +
                           std::to_string(row["k"].get<int>()) + "," + row["sgut"].get<std::string>() + "," +
                           row["sw"].get<std::string>() + "," + row["sdd"].get<std::string>() + "," +
                           (row["gut"].is_null() ? "" : row["gut"].get<std::string>());
    EXPECT_EQ(line, expected);
  }
}

TEST(Cli, BoundsTight) {
  const CliRun r = run({"bounds", "--k", "5", "--set", "thm32.1.sum_upper", "--out", "json"}, "Dhc\n");
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["bound_value"], "256");
  EXPECT_EQ(j[0]["tight"], true);
}

TEST(Cli, BoundsViolationExitsTwo) {
  // "DBg" is P5; its sum at k = 5 is 320 against the s1=min bound 256.
  const CliRun r = run({"bounds", "--k", "5", "--set", "cor41.1.sum_upper", "--out", "csv"}, "DBg\n");
  EXPECT_EQ(r.code, 2) << r.err;
  EXPECT_NE(r.out.find("false"), std::string::npos);
}

TEST(Cli, BoundsCsvQuotesCaseLabels) {
  const CliRun r = run({"bounds", "--k", "5", "--set", "thm32.2.sum_lower", "--out", "csv", "--decimal", "2"}, "Dhc\n");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"delta>=2,Delta<=n-3\""), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("256.00"), std::string::npos);
}

TEST(Cli, BoundsHypothesisFailureIsUsageError) {
  const CliRun r = run({"bounds", "--k", "2", "--set", "thm32"}, "Cl\n");  // C4
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("ComplementDisconnected"), std::string::npos) << r.err;
  EXPECT_EQ(line_count(r.err), 1u);
}

TEST(Cli, AuditExitsTwo) {
  const CliRun r = run({"audit-formulas", "--n-max", "5"});
  EXPECT_EQ(r.code, 2);
  const Json j = Json::parse(r.out);
  bool complete = false;
  bool path = false;
  for (const auto& a : j) {
    if (a["agrees"] == false && a["family"] == "complete") complete = true;
    if (a["agrees"] == false && a["family"] == "path") path = true;
    if (a["family"] == "star") EXPECT_EQ(a["agrees"], true);
  }
  EXPECT_TRUE(complete);
  EXPECT_TRUE(path);
}

TEST(Cli, VerifyWritesReport) {
  const auto path = std::filesystem::temp_directory_path() / "sgut_cli_verify.json";
  const CliRun r = run({"verify", "--n-max", "5", "--dedup", "--coconnected", "--set", "thm32,ps,amgm", "--out",
                     path.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  const Json j = Json::parse(in);
  std::filesystem::remove(path);
  EXPECT_EQ(j["graphs_scanned"], 10);  // K1, P4 and the eight on five vertices
  EXPECT_TRUE(j["violations"].empty());
}

TEST(Cli, VerifyCsvToStdout) {
  const CliRun r = run({"verify", "--n-max", "4", "--dedup", "--set", "lem22", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("graph6,n,k,bound_id,case_label,bound_value,actual,holds,tight\n", 0), 0u);
}

TEST(Cli, Extremal) {
  const CliRun r = run({"extremal", "--n", "4", "--k", "2", "--objective", "max-sgut"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["value"], "54");
  EXPECT_EQ(j["graphs"].size(), 1u);
}

TEST(Cli, UsageErrors) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"bogus"},
           {"family", "--name", "wheel", "--n", "5"},
           {"family", "--name", "cycle", "--n", "2"},
           {"verify", "--n-max", "9"},
           {"compute", "--k", "x"},
           {"bounds", "--set", "nope"},
           {"extremal", "--n", "4", "--k", "2", "--objective", "max-foo"}}) {
    const CliRun r = run(args, "Dhc\n");
    EXPECT_EQ(r.code, 1) << (args.empty() ? "" : args[0]);
    EXPECT_EQ(line_count(r.err), 1u) << r.err;
  }
}

TEST(Cli, MalformedGraph6IsUsageError) {
  const CliRun r = run({"compute"}, "A`\n");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("NonCanonicalPadding"), std::string::npos);
}

TEST(Cli, Help) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}
