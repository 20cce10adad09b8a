#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "schubert/cli.hpp"

using namespace schubert;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void expect_golden(const std::vector<std::string>& args, const std::string& name) {
  const CliRun r = run(args);
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const auto path = std::filesystem::path(GOLDEN_DIR) / name;
  ASSERT_TRUE(std::filesystem::exists(path)) << path;
  EXPECT_EQ(r.out, read_file(path)) << name;
}

}  // namespace

TEST(CliGolden, EhrhartSetTwoFour) { expect_golden({"ehrhart", "--set", "{2,4}", "--tmax", "3"}, "ehrhart_set_2_4.json"); }

TEST(CliGolden, EhrhartUniformCsv) {
  expect_golden({"ehrhart", "--family", "uniform", "--k", "2", "--n", "4", "--format", "csv"}, "ehrhart_uniform_2_4.csv");
}

TEST(CliGolden, EhrhartThreeSixEightVerify) {
  expect_golden({"ehrhart", "--r", "2,1,2,1,1,1", "--t", "1", "--verify"}, "ehrhart_r_2_1_2_1_1_1_verify.json");
}

TEST(CliGolden, EhrhartCatalanFamily) {
  expect_golden({"ehrhart", "--family", "catalan", "--n", "3", "--a", "1", "--b", "1", "--tmax", "2"},
                "ehrhart_catalan_3_1_1.json");
}

TEST(CliGolden, Classify) {
  expect_golden({"classify", "--set", "{2,4,5}"}, "classify_2_4_5.json");
  expect_golden({"classify", "--set", "{2,6,7,10}"}, "classify_2_6_7_10.json");
  expect_golden({"classify", "--set", "{2,4}"}, "classify_2_4.json");
}

TEST(CliGolden, Scans) {
  expect_golden({"scan", "f-positivity", "--max", "4"}, "scan_f_positivity_4.json");
  expect_golden({"scan", "bounds", "--max-n", "8"}, "scan_bounds_8.json");
  expect_golden({"scan", "identities"}, "scan_identities.json");
  expect_golden({"scan", "catalan", "--max-n", "4", "--max", "2"}, "scan_catalan_4_2.json");
}

TEST(Cli, VerifyAgreesWithOracles) {
  const CliRun r = run({"ehrhart", "--set", "{2,4}", "--tmax", "3", "--verify"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("\"agree\": true"), std::string::npos);
}

TEST(Cli, ByteStableAcrossJobCounts) {
  const CliRun one = run({"scan", "f-positivity", "--max", "3", "--jobs", "1"});
  const CliRun four = run({"scan", "f-positivity", "--max", "3", "--jobs", "4"});
  EXPECT_EQ(one.out, four.out);
}

TEST(Cli, TimingIsOptIn) {
  EXPECT_EQ(run({"scan", "bounds", "--max-n", "5"}).out.find("elapsed_ms"), std::string::npos);
  EXPECT_NE(run({"scan", "bounds", "--max-n", "5", "--timing"}).out.find("elapsed_ms"), std::string::npos);
}

TEST(Cli, ScanCsv) {
  const CliRun r = run({"scan", "f-positivity", "--max", "1", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "label,params,verdict,witnesses,zero_coefficients\n"
            "f,a=1;b=1;c=-1,positive,,0\n"
            "f,a=1;b=1;c=0,positive,,\n"
            "f,a=1;b=1;c=1,positive,,0\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"scan", "bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"ehrhart"}).code, kExitUsage);
  EXPECT_EQ(run({"ehrhart", "--set", "{2,x}"}).code, kExitUsage);
  EXPECT_EQ(run({"ehrhart", "--set", "{2}", "--r", "1,1"}).code, kExitUsage);
  EXPECT_EQ(run({"ehrhart", "--family", "uniform", "--k", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"ehrhart", "--family", "weird", "--k", "2", "--n", "4"}).code, kExitUsage);
  EXPECT_EQ(run({"ehrhart", "--r", "1,2", "--format", "xml"}).code, kExitUsage);
  const CliRun bad = run({"ehrhart", "--set", "{2,x}"});
  EXPECT_FALSE(bad.err.empty());
  EXPECT_TRUE(bad.out.empty());
}

TEST(Cli, HelpExitsZero) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("ehrhart"), std::string::npos);
}

TEST(Cli, BudgetErrors) {
  EXPECT_EQ(run({"ehrhart", "--r", "1,9", "--t", "1", "--verify"}).code, kExitBudget);
  EXPECT_EQ(run({"ehrhart", "--r", "1,2", "--t", "5", "--verify"}).code, kExitBudget);
  EXPECT_EQ(run({"ehrhart", "--r", "1,2", "--t", "5", "--verify", "--max-dilation", "5"}).code, kExitOk);
  EXPECT_EQ(run({"classify", "--r", "10,10"}).code, kExitBudget);
  EXPECT_EQ(run({"classify", "--r", "10,10", "--classify-max-n", "20"}).code, kExitOk);
}

TEST(Cli, ConfigFile) {
  const auto path = std::filesystem::temp_directory_path() / "schubert_cli_config_test.json";
  {
    std::ofstream out(path);
    out << R"({"max_dilation": 6, "max_boxes": 20})";
  }
  EXPECT_EQ(run({"ehrhart", "--r", "1,2", "--t", "6", "--verify", "--config", path.string()}).code, kExitOk);
  EXPECT_EQ(run({"ehrhart", "--r", "1,2", "--t", "6", "--verify", "--config", path.string(), "--max-dilation", "4"}).code,
            kExitBudget);
  {
    std::ofstream out(path);
    out << R"({"unknown": 1})";
  }
  EXPECT_EQ(run({"scan", "bounds", "--config", path.string()}).code, kExitUsage);
  EXPECT_EQ(run({"scan", "bounds", "--config", "/nonexistent/config.json"}).code, kExitUsage);
  std::filesystem::remove(path);
}

TEST(Cli, BinaryExitCodes) {
  const std::string binary = CLI_BINARY;
  auto status = [&](const std::string& args) {
    const int raw = std::system((binary + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("ehrhart --set '{2,4}' --tmax 3"), 0);
  EXPECT_EQ(status("scan nonsense"), 1);
  EXPECT_EQ(status("ehrhart --r 1,9 --t 1 --verify"), 2);
}
