#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "decomp1d/cli.hpp"
#include "decomp1d/format.hpp"

using namespace decomp1d;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto& row = rows.emplace_back();
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(cell);
  }
  return rows;
}

}  // namespace

TEST(Cli, SolveEmitsOneRow) {
  const auto r = run({"solve", "--problem", "ex1", "--N", "512", "--M", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), kErrorCsvHeader);
  EXPECT_EQ(rows[1][0], "ex1");
  EXPECT_EQ(rows[1][1], "512");
  EXPECT_EQ(rows[1][2], "4");
  EXPECT_EQ(rows[1][3], "improved");
  EXPECT_EQ(rows[1][6], "closed_form");
  EXPECT_GT(std::stod(rows[1][4]), 0.0);
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(Cli, DirectSolveBaseline) {
  const auto r = run({"solve", "--problem", "ex1", "--N", "512", "--M", "4", "--method", "direct"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LE(std::stod(parse_csv(r.out)[1][4]), 5e-6);
}

TEST(Cli, TableIsRowMajorAndSorted) {
  const auto r = run({"table", "--problem", "ex3", "--N-list", "32,8", "--M-list", "4,2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[1][1] + "/" + rows[1][2], "8/2");
  EXPECT_EQ(rows[2][1] + "/" + rows[2][2], "8/4");
  EXPECT_EQ(rows[3][1] + "/" + rows[3][2], "32/2");
  EXPECT_EQ(rows[4][1] + "/" + rows[4][2], "32/4");
}

TEST(Cli, TableTextUsesParenthesizedExponents) {
  const auto r = run({"table", "--problem", "ex1", "--N-list", "8", "--M-list", "2", "--format",
                      "text"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("M=2"), std::string::npos);
  EXPECT_NE(r.out.find("(-0"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"table", "--problem", "ex4", "--N-list", "8,32", "--M-list",
                                      "2,4"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, WritesToFile) {
  const auto path = std::filesystem::temp_directory_path() / "decomp1d_cli_test.csv";
  const auto r = run({"solve", "--problem", "ex2", "--N", "16", "--M", "2", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, kErrorCsvHeader);
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"solve", "--problem", "ex9", "--N", "8", "--M", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "--problem", "ex1", "--N", "x", "--M", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "--problem", "ex1", "--M", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "--problem", "ex1", "--N", "8"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "--problem", "ex1", "--N", "8", "--M", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"table", "--problem", "ex1", "--M-list", "2,-1"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--suite", "everything"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
}

TEST(Cli, HelpDocumentsDefaults) {
  const auto r = run({"solve", "--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("improved"), std::string::npos);
  EXPECT_NE(r.out.find("--quad"), std::string::npos);
  EXPECT_NE(r.out.find("3"), std::string::npos);
}

TEST(Cli, VerifyEquivalenceSuite) {
  const auto r = run({"verify", "--problem", "ex1", "--suite", "equivalence"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS m1_equivalence ex1"), std::string::npos);
}

TEST(Cli, VerifyTheoremTriples) {
  const auto r = run({"verify", "--problem", "ex2", "--M-list", "1,2,4,8", "--suite", "theorem"});
  EXPECT_EQ(r.code, 0) << r.out;
  for (const char* m : {"M=1", "M=2", "M=4", "M=8"}) EXPECT_NE(r.out.find(m), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyDefaultRunPasses) {
  const auto r = run({"verify"});
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, BenchRows) {
  const auto r = run({"bench", "--problem", "ex1", "--N", "8", "--M", "1", "--reps", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[1][3], "original");
  EXPECT_EQ(rows[2][3], "improved");
  EXPECT_NEAR(std::stod(rows[1][8]), std::stod(rows[2][8]), 1e-12);
}
