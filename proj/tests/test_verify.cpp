#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "holesat/errors.hpp"
#include "holesat/minisolver.hpp"
#include "holesat/verify.hpp"
#include "support.hpp"

using namespace holesat;

TEST(Verify, EntailmentHoldsForSmallN) {
  for (int n = 6; n <= 7; ++n)
    EXPECT_EQ(solve(entailment_formula(n)), SolveResult::Unsat) << n;
  EXPECT_THROW(entailment_formula(5), PreconditionViolated);
}

TEST(Verify, EntailmentFormulaShape) {
  // one selector per blocking clause on top of the base encoding
  EncodingConfig cfg{7, {Target::hole(6)}, Variant::T};
  VarMap vm(cfg);
  auto block = o1_blocking_clauses(vm, Target::hole(6));
  block.canonicalize();
  auto f = entailment_formula(7);
  EXPECT_EQ(f.num_vars, vm.num_vars() + static_cast<int>(block.size()));
  EXPECT_EQ(f[f.size() - 1].size(), block.size());
}

TEST(Verify, ParseModel) {
  std::istringstream in("c x\ns SATISFIABLE\nv 1 -2 3\nv -4 0\n");
  EXPECT_EQ(parse_model(in), (std::vector<int>{1, -2, 3, -4}));
}

TEST(Verify, DecodeRoundTrip) {
  std::mt19937_64 rng(31);
  auto o = induced_assignment(testsupport::sorted_by_x(testsupport::random_points(rng, 9)));
  std::vector<int> model;
  for (std::size_t v = 0; v < o.values().size(); ++v)
    model.push_back(o.values()[v] ? static_cast<int>(v + 1) : -static_cast<int>(v + 1));
  model.push_back(9999); // auxiliary ids beyond the orientation block are ignored
  EXPECT_EQ(decode_model(model, 9), o);
  // sign sequence + - + + on a single 4-tuple
  std::vector<int> bad{1, -2, 3, 4};
  EXPECT_THROW(decode_model(bad, 4), AxiomViolation);
}

TEST(Verify, Witness) {
  PointSet hex{{0, 0}, {1, -2}, {3, -3}, {5, -1}, {4, 2}, {2, 2}};
  ASSERT_EQ(enumerate_holes(hex, 6), 1u);
  auto o = induced_assignment(testsupport::sorted_by_x(hex));
  auto r = check_witness(o, {Target::hole(6), Target::gon(7)});
  ASSERT_EQ(r.entries.size(), 2u);
  EXPECT_TRUE(r.entries[0].present);
  EXPECT_FALSE(r.entries[1].present);
  EXPECT_FALSE(r.avoids_all());

  auto s = testsupport::sorted_by_x(read_points(HOLESAT_DATA_DIR "/overmars29.txt"));
  auto w = check_witness(induced_assignment(s), {Target::hole(6), Target::gon(8)});
  EXPECT_TRUE(w.avoids_all());
  EXPECT_TRUE(check_witness(induced_assignment(s), {Target::gon(7)}).entries[0].present);
}

// Models of each encoding at n = 6, projected to the orientations, are
// exactly the assignments without 6-holes (up to reflection for O4).
TEST(Verify, ModelSetsMatchEnumeration) {
  const int n = 6;
  std::set<OrientationAssignment> expected;
  enumerate(n, [&](const OrientationAssignment &o) {
    if (!contains_khole(o, 6))
      expected.insert(o);
    return true;
  }, EnumerateOptions{8, true});
  std::vector<int> proj;
  for (int v = 1; v <= binom(n, 3); ++v)
    proj.push_back(v);
  for (Variant var : {Variant::T, Variant::O1, Variant::O2, Variant::O3, Variant::O4}) {
    auto f = encode({n, {Target::hole(6)}, var});
    std::set<OrientationAssignment> got;
    enumerate_models(f, proj, [&](const std::vector<int> &m) {
      got.insert(decode_model(m, n));
      return true;
    });
    if (var != Variant::O4) {
      EXPECT_EQ(got, expected) << to_string(var);
      continue;
    }
    for (const auto &o : got)
      EXPECT_TRUE(expected.count(o));
    for (const auto &o : expected)
      EXPECT_TRUE(got.count(o) || got.count(reflect(o)));
  }
}
