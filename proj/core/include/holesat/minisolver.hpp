#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

#include "holesat/cnf.hpp"

namespace holesat {

struct SolverOptions {
  std::int64_t conflict_budget = -1; // per solve call; negative = unlimited
  int restart_first = 100;
  double restart_inc = 1.5;
  double var_decay = 0.95;
  double clause_decay = 0.999;
  bool default_phase = false;
};

enum class SolveResult { Sat, Unsat };

// CDCL with two watched literals, first-UIP learning, VSIDS, phase saving
// and geometric restarts. Clauses may be added between solve calls.
class MiniSolver {
public:
  explicit MiniSolver(SolverOptions opt = {});
  ~MiniSolver();
  MiniSolver(MiniSolver &&) noexcept;
  MiniSolver &operator=(MiniSolver &&) noexcept;

  void ensure_vars(int n);
  // false once the clause set is known to be unsatisfiable
  bool add_clause(std::span<const int> lits);
  bool add_clause(std::initializer_list<int> lits) {
    return add_clause(std::span<const int>(lits.begin(), lits.size()));
  }
  bool add_formula(const CnfFormula &f);

  // Throws ResourceLimit when the conflict budget runs out.
  SolveResult solve(std::span<const int> assumptions = {});

  // Unit propagation only: false when asserting the literals in order
  // yields a conflict. Leaves the solver at decision level 0.
  bool propagate(std::span<const int> assumptions);
  bool propagate(std::initializer_list<int> lits) {
    return propagate(std::span<const int>(lits.begin(), lits.size()));
  }

  // Values from the last satisfiable call.
  bool value(int var) const;
  std::vector<int> model() const;

  int num_vars() const;
  std::uint64_t conflicts() const;
  std::uint64_t decisions() const;
  std::uint64_t propagations() const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

SolveResult solve(const CnfFormula &f, std::vector<int> *model = nullptr,
                  std::span<const int> assumptions = {}, SolverOptions opt = {});

// Enumerates models distinct on `projection` (variable ids) by adding a
// blocking clause after each one. visit returns false to stop. Returns the
// number of models visited.
std::size_t enumerate_models(const CnfFormula &f, std::span<const int> projection,
                             const std::function<bool(const std::vector<int> &)> &visit,
                             SolverOptions opt = {});

} // namespace holesat
