#pragma once

// Independent oracles for the unit tests. Nothing here calls into the code
// under test except for plain data types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "holesat/cnf.hpp"
#include "holesat/geometry.hpp"
#include "holesat/signotope.hpp"

namespace testsupport {

using holesat::Point;
using holesat::PointSet;

inline int det_sign(const Point &a, const Point &b, const Point &c) {
  mpq_class d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(d);
}

// Random integer points in general position (distinct x as well).
inline PointSet random_points(std::mt19937_64 &rng, int n, long range = 1000) {
  std::uniform_int_distribution<long> d(-range, range);
  for (;;) {
    PointSet s;
    while (static_cast<int>(s.size()) < n) {
      Point p(d(rng), d(rng));
      bool ok = true;
      for (const auto &q : s)
        ok = ok && q.x != p.x;
      for (std::size_t i = 0; ok && i < s.size(); ++i)
        for (std::size_t j = i + 1; ok && j < s.size(); ++j)
          ok = det_sign(s[i], s[j], p) != 0;
      if (ok)
        s.push_back(p);
    }
    return s;
  }
}

// Lowest point first (ties cannot happen on x), the rest counterclockwise
// around it. Every triple (p1, pi, pj), i < j, is then positive.
inline PointSet radially_sorted(PointSet s) {
  auto lo = std::min_element(s.begin(), s.end(), [](const Point &a, const Point &b) {
    return a.y < b.y || (a.y == b.y && a.x < b.x);
  });
  std::iter_swap(s.begin(), lo);
  const Point p = s[0];
  std::sort(s.begin() + 1, s.end(),
            [&](const Point &a, const Point &b) { return det_sign(p, a, b) > 0; });
  return s;
}

// Strictly increasing x, then the returned set satisfies o_{abc} = "c above ab".
inline PointSet sorted_by_x(PointSet s) {
  std::sort(s.begin(), s.end(), [](const Point &a, const Point &b) { return a.x < b.x; });
  return s;
}

// Point q strictly inside the triangle abc.
inline bool in_triangle(const Point &q, const Point &a, const Point &b, const Point &c) {
  int s1 = det_sign(a, b, q), s2 = det_sign(b, c, q), s3 = det_sign(c, a, q);
  return (s1 > 0 && s2 > 0 && s3 > 0) || (s1 < 0 && s2 < 0 && s3 < 0);
}

// Convex position: no member inside a triangle of three others.
// Hole: additionally no other point inside any triangle of members.
inline bool brute_gon(const PointSet &s, const std::vector<int> &idx) {
  const int k = static_cast<int>(idx.size());
  for (int q = 0; q < k; ++q)
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        for (int c = b + 1; c < k; ++c)
          if (q != a && q != b && q != c &&
              in_triangle(s[idx[q]], s[idx[a]], s[idx[b]], s[idx[c]]))
            return false;
  return true;
}

inline bool brute_hole(const PointSet &s, const std::vector<int> &idx) {
  if (!brute_gon(s, idx))
    return false;
  const int k = static_cast<int>(idx.size());
  for (int q = 0; q < static_cast<int>(s.size()); ++q) {
    if (std::find(idx.begin(), idx.end(), q) != idx.end())
      continue;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        for (int c = b + 1; c < k; ++c)
          if (in_triangle(s[q], s[idx[a]], s[idx[b]], s[idx[c]]))
            return false;
  }
  return true;
}

inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int> &)> &f) {
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int pos, int from) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (int i = from; i <= n - (k - pos); ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

inline std::uint64_t brute_count(const PointSet &s, int k, bool holes) {
  std::uint64_t c = 0;
  for_each_subset(static_cast<int>(s.size()), k, [&](const std::vector<int> &idx) {
    if (holes ? brute_hole(s, idx) : brute_gon(s, idx))
      ++c;
  });
  return c;
}

// Orientation table indexed by 0-based (a,b,c), independent of triple_rank.
struct Table {
  int n;
  std::vector<std::uint8_t> v;
  explicit Table(int n_) : n(n_), v(static_cast<std::size_t>(n_ * n_ * n_), 0) {}
  std::uint8_t &at(int a, int b, int c) { return v[(a * n + b) * n + c]; }
  std::uint8_t at(int a, int b, int c) const { return v[(a * n + b) * n + c]; }
};

// Every 4-tuple's sequence (abc, abd, acd, bcd) changes sign at most once.
inline bool monotone(const Table &t) {
  for (int a = 0; a < t.n; ++a)
    for (int b = a + 1; b < t.n; ++b)
      for (int c = b + 1; c < t.n; ++c)
        for (int d = c + 1; d < t.n; ++d) {
          int s[4] = {t.at(a, b, c), t.at(a, b, d), t.at(a, c, d), t.at(b, c, d)};
          int changes = 0;
          for (int i = 0; i < 3; ++i)
            changes += s[i] != s[i + 1];
          if (changes > 1)
            return false;
        }
  return true;
}

inline Table table_of(const holesat::OrientationAssignment &o) {
  Table t(o.n());
  for (int a = 1; a <= o.n(); ++a)
    for (int b = a + 1; b <= o.n(); ++b)
      for (int c = b + 1; c <= o.n(); ++c)
        t.at(a - 1, b - 1, c - 1) = o.get(a, b, c);
  return t;
}

inline bool satisfies(const holesat::CnfFormula &f, const std::vector<bool> &val) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    bool sat = false;
    for (int l : f[i])
      sat = sat || (l > 0 ? val[l] : !val[-l]);
    if (!sat)
      return false;
  }
  return true;
}

// Number of models over variables 1..nv (nv <= 24).
inline std::uint64_t brute_models(const holesat::CnfFormula &f, int nv) {
  std::uint64_t count = 0;
  std::vector<bool> val(nv + 1);
  for (std::uint64_t m = 0; m < (1ull << nv); ++m) {
    for (int v = 1; v <= nv; ++v)
      val[v] = (m >> (v - 1)) & 1;
    count += satisfies(f, val);
  }
  return count;
}

inline holesat::CnfFormula random_ksat(std::mt19937_64 &rng, int nv, int nc, int k) {
  holesat::CnfFormula f;
  f.num_vars = nv;
  std::uniform_int_distribution<int> var(1, nv), sign(0, 1);
  for (int i = 0; i < nc; ++i) {
    std::vector<int> c;
    while (static_cast<int>(c.size()) < k) {
      int v = var(rng);
      if (std::find(c.begin(), c.end(), v) == c.end() &&
          std::find(c.begin(), c.end(), -v) == c.end())
        c.push_back(sign(rng) ? v : -v);
    }
    f.add(c);
  }
  return f;
}

inline bool model_satisfies(const holesat::CnfFormula &f, const std::vector<int> &model) {
  std::vector<bool> val(f.num_vars + 1, false);
  for (int l : model)
    if (l > 0 && l <= f.num_vars)
      val[l] = true;
  return satisfies(f, val);
}

} // namespace testsupport
