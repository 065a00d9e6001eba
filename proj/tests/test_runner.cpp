#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "holesat/errors.hpp"
#include "holesat/runner.hpp"

using namespace holesat;
namespace fs = std::filesystem;

namespace {

const std::string kSolve = std::string(HOLESAT_CLI) + " solve --quiet --cnf {cnf}";

// (x1 | x2) & !x2: the cube {x1} is SAT, {-x1} is UNSAT
CnfFormula base() {
  CnfFormula f;
  f.num_vars = 3;
  f.add({1, 2});
  f.add({-2});
  return f;
}

std::vector<Cube> cubes() { return {{1}, {-1}, {1, 3}, {-1, -3}, {1, -3}}; }

std::string strip_times(const CampaignReport &r) {
  std::ostringstream out;
  for (const auto &c : r.results)
    out << c.index << ' ' << to_string(c.status) << ' ' << c.exit_code << ' '
        << (c.checked ? (*c.checked ? "v" : "r") : "-") << '\n';
  return out.str();
}

fs::path scratch(const std::string &name) {
  auto d = fs::temp_directory_path() / ("holesat-runner-" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

} // namespace

TEST(Runner, SolvesEveryCube) {
  CampaignOptions opt;
  opt.solver = kSolve;
  auto r = run_campaign(base(), cubes(), opt);
  ASSERT_EQ(r.results.size(), 5u);
  EXPECT_EQ(r.sat, 3u);
  EXPECT_EQ(r.unsat, 2u);
  EXPECT_EQ(r.results[1].status, CubeResult::Status::Unsat);
  EXPECT_EQ(r.results[1].exit_code, 20);
  EXPECT_EQ(r.verdict, CampaignReport::Verdict::Sat);
}

TEST(Runner, OutcomeIndependentOfParallelism) {
  CampaignOptions a;
  a.solver = kSolve;
  CampaignOptions b = a;
  b.jobs = 4;
  std::vector<Cube> many;
  for (int i = 0; i < 24; ++i)
    many.push_back(i % 3 ? Cube{-1} : Cube{1, (i % 2 ? 3 : -3)});
  EXPECT_EQ(strip_times(run_campaign(base(), many, a)), strip_times(run_campaign(base(), many, b)));
}

TEST(Runner, AggregateIgnoresOrder) {
  std::vector<CubeResult> rs;
  for (std::size_t i = 0; i < 10; ++i)
    rs.push_back({i, i % 4 ? CubeResult::Status::Unsat : CubeResult::Status::Timeout,
                  0.5 * static_cast<double>(i), i % 4 ? 20 : -1, std::nullopt});
  auto shuffled = rs;
  std::shuffle(shuffled.begin(), shuffled.end(), std::mt19937(5));
  auto a = aggregate(rs), b = aggregate(shuffled);
  EXPECT_EQ(strip_times(a), strip_times(b));
  EXPECT_EQ(a.timeout, 3u);
  EXPECT_DOUBLE_EQ(a.total_seconds, b.total_seconds);
  EXPECT_DOUBLE_EQ(a.max_seconds, 4.5);
  EXPECT_EQ(a.verdict, CampaignReport::Verdict::Unknown);
  for (auto &c : rs)
    c.status = CubeResult::Status::Unsat;
  EXPECT_EQ(aggregate(rs).verdict, CampaignReport::Verdict::Unsat);
}

TEST(Runner, EmptyCubeListSolvesBase) {
  CampaignOptions opt;
  opt.solver = kSolve;
  auto r = run_campaign(base(), {}, opt);
  ASSERT_EQ(r.results.size(), 1u);
  EXPECT_EQ(r.results[0].status, CubeResult::Status::Sat);
}

TEST(Runner, Timeout) {
  CampaignOptions opt;
  opt.solver = "sleep 30; exit 20";
  opt.timeout = 0.5;
  opt.jobs = 2;
  auto t0 = std::chrono::steady_clock::now();
  auto r = run_campaign(base(), {{1}, {-1}}, opt);
  auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_EQ(r.timeout, 2u);
  EXPECT_LT(dt, 10.0);
  EXPECT_EQ(r.verdict, CampaignReport::Verdict::Unknown);
}

TEST(Runner, CrashRaisesAfterReport) {
  auto dir = scratch("crash");
  CampaignOptions opt;
  opt.solver = "exit 3";
  opt.report_csv = (dir / "report.csv").string();
  EXPECT_THROW(run_campaign(base(), {{1}, {-1}}, opt), SolverCrashed);
  std::ifstream in(*opt.report_csv);
  std::string header, line;
  std::getline(in, header);
  EXPECT_EQ(header, "cube_index,status,seconds,exit_code,checked");
  int rows = 0;
  while (std::getline(in, line)) {
    EXPECT_NE(line.find("ERROR"), std::string::npos);
    ++rows;
  }
  EXPECT_EQ(rows, 2);
  fs::remove_all(dir);
}

TEST(Runner, CheckerThroughPipe) {
  // the solver writes a token to the proof pipe, the checker reads it back
  CampaignOptions opt;
  opt.solver = kSolve + " >/dev/null; s=$?; echo proof-{cnf} > {proof}; exit $s";
  opt.checker = "grep -q proof- {proof}";
  opt.jobs = 2;
  auto r = run_campaign(base(), cubes(), opt);
  for (const auto &c : r.results)
    if (c.status == CubeResult::Status::Unsat) {
      ASSERT_TRUE(c.checked.has_value());
      EXPECT_TRUE(*c.checked);
    }
  EXPECT_EQ(r.unsat, 2u);
}

TEST(Runner, CheckerRejection) {
  CampaignOptions opt;
  opt.solver = kSolve + " >/dev/null; s=$?; echo junk > {proof}; exit $s";
  opt.checker = "grep -q proof- {proof}";
  EXPECT_THROW(run_campaign(base(), {{-1}}, opt), CheckerRejected);
}

TEST(Runner, SolverThatNeverOpensThePipe) {
  // the checker must still be released when the solver writes nothing
  CampaignOptions opt;
  opt.solver = kSolve;
  opt.checker = "cat {proof} >/dev/null";
  opt.timeout = 20;
  auto r = run_campaign(base(), {{-1}}, opt);
  ASSERT_EQ(r.results.size(), 1u);
  EXPECT_EQ(r.results[0].status, CubeResult::Status::Unsat);
}

TEST(Runner, CsvFormat) {
  CampaignReport r = aggregate({{0, CubeResult::Status::Unsat, 1.25, 20, true},
                                {1, CubeResult::Status::Sat, 0.5, 10, std::nullopt}});
  std::ostringstream out;
  write_csv(r, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  EXPECT_EQ(line.substr(0, 8), "0,UNSAT,");
  EXPECT_NE(line.find(",20,verified"), std::string::npos);
  std::getline(in, line);
  EXPECT_EQ(line.substr(0, 6), "1,SAT,");
  EXPECT_FALSE(summary(r).empty());
}
