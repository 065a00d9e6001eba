#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "holesat/cnf.hpp"

namespace holesat {

enum class Variant { T, O1, O2, O3, O4 };

Variant parse_variant(std::string_view s);
std::string to_string(Variant v);

struct Target {
  enum class Kind { Hole, Gon };
  Kind kind = Kind::Hole;
  int k = 6;

  static Target hole(int k) { return {Kind::Hole, k}; }
  static Target gon(int k) { return {Kind::Gon, k}; }
  friend bool operator==(const Target &, const Target &) = default;
};

struct EncodingConfig {
  int n = 0;
  std::vector<Target> targets;
  Variant variant = Variant::T;
};

// Deterministic numbering: orientation o(a,b,c), containment I(i;a,b,c) in
// lexicographic (a,b,c,i), 3-hole H(a,b,c), then triple-indexed auxiliary
// blocks (u4, u5, v4 first, further chain families after them).
class VarMap {
public:
  struct Block {
    std::string name;
    int base = 0; // ids base+1 .. base+count
    int count = 0;
  };

  VarMap() = default;
  explicit VarMap(const EncodingConfig &cfg);

  int n() const { return n_; }
  int num_vars() const { return num_vars_; }
  const std::vector<Block> &blocks() const { return blocks_; }

  int orient(int a, int b, int c) const;
  int inside(int i, int a, int b, int c) const;
  int hole(int a, int b, int c) const;

  // -1 when no block of that name exists.
  int block_index(std::string_view name) const;
  int aux(int block, int a, int c, int d) const;
  int aux(std::string_view name, int a, int c, int d) const {
    return aux(block_index(name), a, c, d);
  }

  bool is_aux(int var) const { return var > aux_begin_; }
  std::string describe(int var) const;

private:
  int add_triple_block(const std::string &name);

  int n_ = 0;
  int num_vars_ = 0;
  int aux_begin_ = 0;
  std::vector<Block> blocks_;
  std::vector<int> inside_base_; // per triple rank
};

VarMap build_varmap(const EncodingConfig &cfg);

// Throws UnsupportedVariant for undefined variant/target combinations.
CnfFormula encode(const EncodingConfig &cfg);

// Orientation variable pairs (x_j, y_j) compared by the reflection
// symmetry-breaking predicate, innermost pair first; o_a = o(a,a+1,a+2).
std::vector<std::pair<int, int>> sbp_pairs(int n);

// Lexicographic X <= Y over sbp_pairs(n) (false < true), without auxiliary
// variables: 2^m - 1 clauses for m pairs.
CnfFormula symmetry_breaking_clauses(const VarMap &vm);

// The clause family replacing the k-subset constraint in O1: one clause per
// split of a k-subset into an upper and lower chain (at least two inner points
// above), and a single lower-chain clause for subsets through point 1.
CnfFormula o1_blocking_clauses(const VarMap &vm, const Target &t);

// Davis-Putnam resolution on every auxiliary variable of vm, followed by
// removal of tautologies, duplicates and subsumed clauses.
CnfFormula eliminate_aux(const CnfFormula &f, const VarMap &vm);

// Removes clauses subsumed by another clause of f (unit clauses included).
CnfFormula remove_subsumed(const CnfFormula &f);

} // namespace holesat
