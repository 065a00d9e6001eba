#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace holesat {

// Clause list over variables 1..num_vars, stored flat.
class CnfFormula {
public:
  int num_vars = 0;

  void add(std::span<const int> lits);
  void add(std::initializer_list<int> lits) {
    add(std::span<const int>(lits.begin(), lits.size()));
  }

  std::size_t size() const { return start_.size(); }
  bool empty() const { return start_.empty(); }
  std::size_t num_literals() const { return lits_.size(); }

  std::span<const int> operator[](std::size_t i) const {
    std::size_t e = i + 1 < start_.size() ? start_[i + 1] : lits_.size();
    return {lits_.data() + start_[i], e - start_[i]};
  }

  void append(const CnfFormula &other);

  // Sorts literals by variable id, drops repeated literals and tautologies,
  // removes duplicate clauses (first occurrence kept).
  void canonicalize();

  void clear() {
    lits_.clear();
    start_.clear();
  }

private:
  std::vector<int> lits_;
  std::vector<std::size_t> start_;
};

void emit_dimacs(const CnfFormula &f, std::ostream &out);
CnfFormula parse_dimacs(std::istream &in);

using Cube = std::vector<int>;

struct IcnfProblem {
  CnfFormula formula;
  std::vector<Cube> cubes;
};

// "p inccnf" header, clause lines, then "a <lits> 0" cube lines.
void emit_icnf(const CnfFormula &f, const std::vector<Cube> &cubes,
               std::ostream &out);
IcnfProblem parse_icnf(std::istream &in);

// Cube lines only ("a ... 0"), as found in a cube file.
std::vector<Cube> parse_cubes(std::istream &in);

} // namespace holesat
