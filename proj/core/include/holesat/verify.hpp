#pragma once

#include <iosfwd>
#include <vector>

#include "holesat/cnf.hpp"
#include "holesat/encoder.hpp"
#include "holesat/signotope.hpp"

namespace holesat {

// T for 6-holes plus one selector per O1 blocking clause: at least one
// selector holds and each selector falsifies its clause. UNSAT means every
// blocking clause is implied by T.
CnfFormula entailment_formula(int n);

// Signed literals as printed on solver "v" lines (terminating 0 optional).
std::vector<int> parse_model(std::istream &in);

// Projects a model onto the orientation block of an n-point map. Variables
// missing from the model count as false. Throws AxiomViolation when the
// projection is not a valid assignment.
OrientationAssignment decode_model(const std::vector<int> &model, int n);

struct WitnessReport {
  struct Entry {
    Target target;
    bool present = false;
  };
  std::vector<Entry> entries;
  bool avoids_all() const {
    for (const auto &e : entries)
      if (e.present)
        return false;
    return true;
  }
};

WitnessReport check_witness(const OrientationAssignment &a,
                            const std::vector<Target> &targets);

} // namespace holesat
