#include "holesat/verify.hpp"

#include "holesat/errors.hpp"

#include <cstdlib>
#include <istream>
#include <sstream>
#include <string>

namespace holesat {

CnfFormula entailment_formula(int n) {
  if (n < 6)
    throw PreconditionViolated("entailment_formula needs n >= 6");
  EncodingConfig cfg{n, {Target::hole(6)}, Variant::T};
  CnfFormula f = encode(cfg);
  VarMap vm(cfg);
  CnfFormula block = o1_blocking_clauses(vm, Target::hole(6));
  block.canonicalize();
  int next = vm.num_vars();
  std::vector<int> any;
  for (std::size_t i = 0; i < block.size(); ++i) {
    const int s = ++next;
    any.push_back(s);
    for (int l : block[i])
      f.add({-s, -l});
  }
  f.add(any);
  f.num_vars = next;
  return f;
}

std::vector<int> parse_model(std::istream &in) {
  std::vector<int> lits;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t p = line.find_first_not_of(" \t");
    if (p == std::string::npos || line[p] != 'v')
      continue;
    std::istringstream ls(line.substr(p + 1));
    long v;
    while (ls >> v)
      if (v != 0)
        lits.push_back(static_cast<int>(v));
  }
  return lits;
}

OrientationAssignment decode_model(const std::vector<int> &model, int n) {
  OrientationAssignment o(n);
  const int t3 = static_cast<int>(binom(n, 3));
  std::vector<std::uint8_t> &val = o.values();
  for (int l : model) {
    const int v = std::abs(l);
    if (v >= 1 && v <= t3)
      val[v - 1] = l > 0;
  }
  AxiomCheck chk = check_axioms(o);
  if (!chk.valid)
    throw AxiomViolation("decoded model violates the axioms at (" +
                         std::to_string(chk.quad[0]) + "," + std::to_string(chk.quad[1]) +
                         "," + std::to_string(chk.quad[2]) + "," +
                         std::to_string(chk.quad[3]) + ")");
  return o;
}

WitnessReport check_witness(const OrientationAssignment &a,
                            const std::vector<Target> &targets) {
  WitnessReport r;
  for (const Target &t : targets) {
    bool present = t.kind == Target::Kind::Hole ? contains_khole(a, t.k)
                                                : contains_kgon(a, t.k);
    r.entries.push_back({t, present});
  }
  return r;
}

} // namespace holesat
