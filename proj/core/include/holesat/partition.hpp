#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holesat/cnf.hpp"

namespace holesat {

struct CubeSet {
  int n = 0;
  int len = 0;   // window length
  int start = 0; // window covers o_{start} .. o_{start+len-1}
  std::vector<Cube> cubes;
};

// Length-len strings over {'0','1'} without "111" or "0000", in
// lexicographic order.
std::vector<std::string> raw_patterns(int len);

// Knobs for the cube generator. The defaults are the shipped rule; the
// alternatives exist for the comparison in docs/cube-counts.md.
struct PartitionRules {
  std::optional<int> start; // window start, centered when unset
  enum class Sbp { Off, NonStrict, Strict } sbp = Sbp::NonStrict;
  bool refine = true; // split on o(b,b+2,b+4) at every "101"
};

int centered_window_start(int n, int len);

// Throws WindowTooLong when len > n-3.
CubeSet generate_cubes(int n, int len, const PartitionRules &rules = {});

// Window literals o(a,a+1,a+2) use the orientation ids shared by every
// variant (1 + lexicographic triple rank).
int orientation_id(int n, int a, int b, int c);

// (!o_a | !o_{a+1} | !o_{a+2}) and (o_a | o_{a+1} | o_{a+2} | o_{a+3}) over
// consecutive-triple variables o_a = o(a,a+1,a+2), a >= 2.
CnfFormula implied_window_clauses(int n);

// Negated cubes + sbp + implied. UNSAT iff the cubes cover every assignment
// allowed by sbp and implied.
CnfFormula tautology_formula(const CubeSet &cs, const CnfFormula &sbp,
                             const CnfFormula &implied);

// tautology_formula with the reflection predicate and the implied clause
// families for cs.n.
CnfFormula coverage_formula(const CubeSet &cs);

} // namespace holesat
