#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "holesat/geometry.hpp"

namespace holesat {

constexpr std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k)
    return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

// 0-based lexicographic rank of the triple a<b<c among all triples of 1..n.
constexpr std::int64_t triple_rank(int n, int a, int b, int c) {
  return binom(n, 3) - binom(n - a + 1, 3) + binom(n - a, 2) -
         binom(n - b + 1, 2) + (c - b - 1);
}

// Orientation values o_{a,b,c} for 1 <= a < b < c <= n (true = positive).
class OrientationAssignment {
public:
  OrientationAssignment() = default;
  explicit OrientationAssignment(int n, bool value = false)
      : n_(n), val_(static_cast<std::size_t>(binom(n, 3)), value) {}

  int n() const { return n_; }
  bool get(int a, int b, int c) const { return val_[triple_rank(n_, a, b, c)]; }
  void set(int a, int b, int c, bool v) { val_[triple_rank(n_, a, b, c)] = v; }
  const std::vector<std::uint8_t> &values() const { return val_; }
  std::vector<std::uint8_t> &values() { return val_; }

  friend bool operator==(const OrientationAssignment &,
                         const OrientationAssignment &) = default;
  friend auto operator<=>(const OrientationAssignment &a,
                          const OrientationAssignment &b) {
    if (a.n_ != b.n_)
      return a.n_ <=> b.n_;
    return a.val_ <=> b.val_;
  }

private:
  int n_ = 0;
  std::vector<std::uint8_t> val_;
};

struct AxiomCheck {
  bool valid = true;
  std::array<int, 4> quad{}; // first violating a<b<c<d when !valid
};

AxiomCheck check_axioms(const OrientationAssignment &a);

struct EnumerateOptions {
  int bound = 8;
  bool first_point_positive = false; // fix o_{1,b,c} = true
};

// Visits every valid assignment on n elements in lexicographic order of the
// value vector (false < true). visit returns false to stop early.
// filter, when set, decides which complete assignments are visited.
void enumerate(int n,
               const std::function<bool(const OrientationAssignment &)> &visit,
               const EnumerateOptions &opt = {},
               const std::function<bool(const OrientationAssignment &)> &filter = {});

// Containment of i in triangle (a,b,c) derived from orientations alone.
// Requires a<b<c, a<i<c, i != b.
bool contained(const OrientationAssignment &o, int i, int a, int b, int c);

bool contains_khole(const OrientationAssignment &o, int k);
bool contains_kgon(const OrientationAssignment &o, int k);

// Reflection (a,b,c) -> (n-c+2, n-b+2, n-a+2) on elements 2..n; element 1
// stays fixed. Requires o_{1,b,c} = true everywhere.
OrientationAssignment reflect(const OrientationAssignment &o);

OrientationAssignment induced_assignment(const PointSet &s);

std::string serialize(const OrientationAssignment &o);
OrientationAssignment parse_assignment(std::istream &in);

} // namespace holesat
