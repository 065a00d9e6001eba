#include <gtest/gtest.h>

#include <unordered_map>

#include "holesat/encoder.hpp"
#include "holesat/errors.hpp"
#include "holesat/minisolver.hpp"
#include "holesat/partition.hpp"
#include "holesat/signotope.hpp"

using namespace holesat;

namespace {

bool forbidden_run(const std::string &s) {
  return s.find("111") != std::string::npos || s.find("0000") != std::string::npos;
}

// Expected cube count from first principles: strings without the forbidden
// runs, kept when the mirrored window positions compare lexicographically
// <=, each "101" occurrence doubling the count.
std::size_t oracle_count(int n, int len, int start, bool sbp) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 0;; ++j) {
    int x = (n + 1) / 2 - 1 - j, y = n / 2 + 1 + j;
    if (x < start || y > start + len - 1)
      break;
    pairs.emplace_back(x - start, y - start);
  }
  std::size_t total = 0;
  for (std::uint32_t m = 0; m < (1u << len); ++m) {
    std::string s;
    for (int j = 0; j < len; ++j)
      s.push_back((m >> (len - 1 - j)) & 1 ? '1' : '0');
    if (forbidden_run(s))
      continue;
    if (sbp) {
      bool greater = false;
      for (auto [x, y] : pairs)
        if (s[x] != s[y]) {
          greater = s[x] > s[y];
          break;
        }
      if (greater)
        continue;
    }
    std::size_t mult = 1;
    for (std::size_t b = 0; b + 2 < s.size(); ++b)
      if (s.compare(b, 3, "101") == 0)
        mult *= 2;
    total += mult;
  }
  return total;
}

bool clash(const Cube &a, const Cube &b) {
  for (int x : a)
    for (int y : b)
      if (x == -y)
        return true;
  return false;
}

} // namespace

TEST(Partition, RawPatterns) {
  EXPECT_EQ(raw_patterns(1), (std::vector<std::string>{"0", "1"}));
  EXPECT_EQ(raw_patterns(3).size(), 7u);
  EXPECT_EQ(raw_patterns(4).size(), 12u);
  for (int len = 1; len <= 14; ++len) {
    auto p = raw_patterns(len);
    EXPECT_TRUE(std::is_sorted(p.begin(), p.end()));
    std::size_t expect = 0;
    for (std::uint32_t m = 0; m < (1u << len); ++m) {
      std::string s;
      for (int j = 0; j < len; ++j)
        s.push_back((m >> (len - 1 - j)) & 1 ? '1' : '0');
      expect += !forbidden_run(s);
    }
    EXPECT_EQ(p.size(), expect) << len;
    for (const auto &s : p)
      EXPECT_FALSE(forbidden_run(s));
  }
  EXPECT_THROW(raw_patterns(0), PreconditionViolated);
}

TEST(Partition, WindowBounds) {
  EXPECT_THROW(generate_cubes(10, 8), WindowTooLong);
  EXPECT_NO_THROW(generate_cubes(10, 6));
  EXPECT_EQ(centered_window_start(24, 7), 9);
  PartitionRules r;
  r.start = 1;
  EXPECT_THROW(generate_cubes(17, 8, r), PreconditionViolated);
}

TEST(Partition, CountsMatchOracle) {
  for (int n : {12, 17, 24, 30})
    for (int len = 3; len <= std::min(n - 4, 14); ++len)
      for (bool sbp : {false, true}) {
        PartitionRules r;
        r.sbp = sbp ? PartitionRules::Sbp::NonStrict : PartitionRules::Sbp::Off;
        auto cs = generate_cubes(n, len, r);
        EXPECT_EQ(cs.cubes.size(), oracle_count(n, len, cs.start, sbp))
            << "n=" << n << " len=" << len << " sbp=" << sbp;
      }
}

TEST(Partition, CubeShape) {
  auto cs = generate_cubes(24, 9);
  for (const auto &c : cs.cubes) {
    ASSERT_GE(c.size(), 9u);
    for (int j = 0; j < 9; ++j)
      EXPECT_EQ(std::abs(c[j]), orientation_id(24, cs.start + j, cs.start + j + 1, cs.start + j + 2));
    std::vector<int> vars;
    for (int l : c)
      vars.push_back(std::abs(l));
    std::sort(vars.begin(), vars.end());
    EXPECT_EQ(std::adjacent_find(vars.begin(), vars.end()), vars.end());
  }
}

TEST(Partition, Deterministic) {
  auto a = generate_cubes(30, 12), b = generate_cubes(30, 12);
  EXPECT_EQ(a.cubes, b.cubes);
}

TEST(Partition, PairwiseDisjoint) {
  for (auto [n, len] : {std::pair{17, 8}, std::pair{24, 11}, std::pair{29, 9}}) {
    auto cs = generate_cubes(n, len);
    for (std::size_t i = 0; i < cs.cubes.size(); ++i)
      for (std::size_t j = i + 1; j < cs.cubes.size(); ++j)
        ASSERT_TRUE(clash(cs.cubes[i], cs.cubes[j])) << i << " " << j;
  }
}

TEST(Partition, Coverage) {
  for (auto [n, len] : {std::pair{17, 8}, std::pair{24, 7}, std::pair{20, 11}}) {
    auto cs = generate_cubes(n, len);
    EXPECT_EQ(solve(coverage_formula(cs)), SolveResult::Unsat) << n << " " << len;
  }
  // removing any cube leaves an uncovered assignment
  auto cs = generate_cubes(17, 8);
  for (std::size_t drop : {std::size_t{0}, cs.cubes.size() / 2, cs.cubes.size() - 1}) {
    CubeSet partial = cs;
    partial.cubes.erase(partial.cubes.begin() + static_cast<std::ptrdiff_t>(drop));
    std::vector<int> model;
    ASSERT_EQ(solve(coverage_formula(partial), &model), SolveResult::Sat);
    for (int l : cs.cubes[drop])
      EXPECT_EQ(model[std::abs(l) - 1], l);
  }
}

TEST(Partition, VariantsOfTheRule) {
  PartitionRules off, strict, plain;
  off.sbp = PartitionRules::Sbp::Off;
  strict.sbp = PartitionRules::Sbp::Strict;
  plain.refine = false;
  auto base = generate_cubes(24, 9).cubes.size();
  EXPECT_GT(generate_cubes(24, 9, off).cubes.size(), base);
  EXPECT_LT(generate_cubes(24, 9, strict).cubes.size(), base);
  EXPECT_LT(generate_cubes(24, 9, plain).cubes.size(), base);
  // without refinement and symmetry breaking the cubes are the raw patterns
  PartitionRules bare;
  bare.sbp = PartitionRules::Sbp::Off;
  bare.refine = false;
  EXPECT_EQ(generate_cubes(24, 9, bare).cubes.size(), raw_patterns(9).size());
}

TEST(Partition, ImpliedClausesHoldForHoleFreeModels) {
  // every model of the 6-hole encoding satisfies the implied window clauses
  EncodingConfig cfg{16, {Target::hole(6)}, Variant::T};
  auto f = encode(cfg);
  auto implied = implied_window_clauses(16);
  MiniSolver s;
  s.add_formula(f);
  for (std::size_t i = 0; i < implied.size(); ++i) {
    std::vector<int> neg;
    for (int l : implied[i])
      neg.push_back(-l);
    EXPECT_EQ(s.solve(neg), SolveResult::Unsat) << i;
  }
}
