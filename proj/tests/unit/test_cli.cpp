#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "json.hpp"
#include "robinsq/export.hpp"
#include "robinsq/spectrum2d.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(ROBINSQ_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("robinsq_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, SpectrumDirichletMatchesTable) {
  const auto r = run("spectrum --h inf --lmax 66");
  ASSERT_EQ(r.status, 0);
  const auto rows = robinsq::table_rows(robinsq::enumerate_spectrum(robinsq::RobinParam::infinity(), 66.0));
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "p,q,value,k_min,k_max");
  std::size_t count = 0;
  while (std::getline(in, line)) ++count;
  EXPECT_EQ(count, rows.size());
}

TEST_F(CliTest, SpectrumNearFirstCrossing) {
  const auto r = run("spectrum --h 1.6970 --lmax 12");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\n3,0,11.45"), std::string::npos);
  EXPECT_NE(r.out.find("\n2,2,11.45"), std::string::npos);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run("spectrum --h nope").status, 2);
  EXPECT_EQ(run("spectrum --h 1 --format svg").status, 2);
  EXPECT_EQ(run("nodal --h 1 --resolution 10").status, 2);
  EXPECT_EQ(run("figures --id 9").status, 2);
  EXPECT_EQ(run("verify --only nothing").status, 2);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("crossings --a 1,1").status, 2);
}

TEST_F(CliTest, OutWritesAtomicallyAndDeterministically) {
  const auto a = dir_ / "a.json";
  const auto b = dir_ / "b.json";
  ASSERT_EQ(run("spectrum --h 2.5 --lmax 40 --format json --out " + a.string()).status, 0);
  ASSERT_EQ(run("spectrum --h 2.5 --lmax 40 --format json --out " + b.string()).status, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(fs::exists(dir_ / "a.json.tmp"));
  EXPECT_NO_THROW(nlohmann::json::parse(slurp(a)));
}

TEST_F(CliTest, EnvironmentDirectoryIsDefault) {
  ASSERT_EQ(run("tables --format csv", "ROBINSQ_OUT_DIR=" + dir_.string()).status, 0);
  const auto text = slurp(dir_ / "tables.csv");
  EXPECT_EQ(text.rfind("table,m,n,value,k_min,k_max\n", 0), 0u);
}

TEST_F(CliTest, FailedCommandLeavesNoFile) {
  const auto target = dir_ / "x.csv";
  EXPECT_NE(run("fk --h 1 --n 3 --lambda 1 --out " + target.string()).status, 0);
  EXPECT_FALSE(fs::exists(target));
}

TEST_F(CliTest, CrossingsSingleAndScan) {
  const auto one = run("crossings --a 2,2 --b 3,0 --format json");
  ASSERT_EQ(one.status, 0);
  const auto j = nlohmann::json::parse(one.out);
  EXPECT_NEAR(j["crossings"][0]["h_star"].get<double>(), 1.6970, 2e-3);
  const auto scan = run("crossings --labels 9,4 7,7 10,0 8,6 10,1");
  ASSERT_EQ(scan.status, 0);
  EXPECT_EQ(std::count(scan.out.begin(), scan.out.end(), '\n'), 5);
}

TEST_F(CliTest, NodalFormats) {
  const auto j = run("nodal --h inf --theta 2.356194490192345 --label 0,2 --format json --resolution 256");
  ASSERT_EQ(j.status, 0);
  EXPECT_EQ(nlohmann::json::parse(j.out)["domains"], 4);
  const auto svg = run("nodal --h 20 --theta 0.3 --label 5,1 --format svg");
  ASSERT_EQ(svg.status, 0);
  EXPECT_EQ(svg.out.rfind("<svg", 0), 0u);
}

TEST_F(CliTest, FkReportsGroundState) {
  const auto r = run("fk --h 1 --n 520 --lambda 600 --format json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["excluded"].get<bool>());
  EXPECT_GT(j["lambda1"].get<double>(), 0.0);
}

TEST_F(CliTest, FiguresWriteDataAndPlots) {
  ASSERT_EQ(run("figures --out " + dir_.string()).status, 0);
  for (int id = 1; id <= 6; ++id) {
    EXPECT_TRUE(fs::exists(dir_ / ("figure" + std::to_string(id) + ".csv"))) << id;
    EXPECT_TRUE(fs::exists(dir_ / ("figure" + std::to_string(id) + ".svg"))) << id;
  }
  // figure 1 intercepts at h = 0 are 0, pi, 2pi
  std::istringstream f1(slurp(dir_ / "figure1.csv"));
  std::string line;
  std::getline(f1, line);
  int seen = 0;
  while (std::getline(f1, line)) {
    if (line.find(",0,") == std::string::npos) continue;
    const double v = std::stod(line.substr(line.rfind(',') + 1));
    EXPECT_NEAR(v, seen * std::numbers::pi, 1e-12);
    ++seen;
  }
  EXPECT_EQ(seen, 3);
  // figure 6 decreases toward 1 and stays above it
  std::istringstream f6(slurp(dir_ / "figure6.csv"));
  std::getline(f6, line);
  double prev = INFINITY;
  while (std::getline(f6, line)) {
    const double g = std::stod(line.substr(line.rfind(',') + 1));
    EXPECT_GT(g, 1.0);
    EXPECT_LT(g, prev);
    prev = g;
  }
  // figure 2 carries the eleven labelled curves
  const auto f2 = slurp(dir_ / "figure2.csv");
  for (const char* name : {"\"(0,0)\"", "\"(2,2)\"", "\"(3,0)\"", "\"(4,1)\""}) EXPECT_NE(f2.find(name), std::string::npos);
  const auto again = dir_ / "again";
  ASSERT_EQ(run("figures --id 2 --out " + again.string()).status, 0);
  EXPECT_EQ(slurp(again / "figure2.svg"), slurp(dir_ / "figure2.svg"));
}

TEST_F(CliTest, VerifySubsetAndFaultInjection) {
  const auto ok = run("verify --only crossings");
  EXPECT_EQ(ok.status, 0);
  EXPECT_EQ(std::count(ok.out.begin(), ok.out.end(), '\n'), 4);
  const auto bad = run("verify --only thresholds --inject-alpha-tolerance 1e-2");
  EXPECT_EQ(bad.status, 1);
  EXPECT_EQ(bad.out.rfind("FAIL 4 thresholds", 0), 0u);
  const auto report = dir_ / "v.json";
  ASSERT_EQ(run("verify --only candidates --format json --out " + report.string()).status, 0);
  EXPECT_TRUE(nlohmann::json::parse(slurp(report))["passed"].get<bool>());
}
