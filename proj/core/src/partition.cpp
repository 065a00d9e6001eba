#include "holesat/partition.hpp"

#include "holesat/encoder.hpp"
#include "holesat/errors.hpp"
#include "holesat/signotope.hpp"

#include <algorithm>
#include <cstdlib>

namespace holesat {

std::vector<std::string> raw_patterns(int len) {
  if (len < 1)
    throw PreconditionViolated("raw_patterns: length must be positive");
  std::vector<std::string> out;
  std::string cur;
  // depth-first with '0' before '1' gives lexicographic order
  auto rec = [&](auto &&self) -> void {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (char ch : {'0', '1'}) {
      cur.push_back(ch);
      const std::size_t m = cur.size();
      bool bad = (ch == '1' && m >= 3 && cur.compare(m - 3, 3, "111") == 0) ||
                 (ch == '0' && m >= 4 && cur.compare(m - 4, 4, "0000") == 0);
      if (!bad)
        self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

int orientation_id(int n, int a, int b, int c) {
  return 1 + static_cast<int>(triple_rank(n, a, b, c));
}

int centered_window_start(int n, int len) {
  int a0 = (n - len) / 2 + 1;
  return std::clamp(a0, 2, std::max(2, n - len - 1));
}

CubeSet generate_cubes(int n, int len, const PartitionRules &rules) {
  if (len < 1)
    throw PreconditionViolated("generate_cubes: length must be positive");
  if (len > n - 3)
    throw WindowTooLong("window length " + std::to_string(len) +
                        " exceeds n-3 = " + std::to_string(n - 3));
  CubeSet cs{n, len, rules.start ? *rules.start : centered_window_start(n, len), {}};
  const int a0 = cs.start;
  if (a0 < 2 || a0 + len - 1 > n - 2)
    throw PreconditionViolated("generate_cubes: window outside o_2 .. o_{n-2}");
  if (rules.refine && a0 + len + 1 > n)
    throw PreconditionViolated("generate_cubes: refinement needs start <= n-len-1");

  // pairs compared by the reflection predicate that lie inside the window
  std::vector<std::pair<int, int>> inner;
  for (auto [x, y] : sbp_pairs(n)) {
    if (x < a0 || y > a0 + len - 1)
      break;
    inner.emplace_back(x - a0, y - a0);
  }

  std::vector<int> splits;
  for (const std::string &p : raw_patterns(len)) {
    if (rules.sbp != PartitionRules::Sbp::Off) {
      int cmp = 0;
      for (auto [x, y] : inner)
        if (p[x] != p[y]) {
          cmp = p[x] < p[y] ? -1 : 1;
          break;
        }
      if (cmp > 0 || (cmp == 0 && rules.sbp == PartitionRules::Sbp::Strict && !inner.empty()))
        continue;
    }
    Cube base;
    for (int j = 0; j < len; ++j) {
      const int v = orientation_id(n, a0 + j, a0 + j + 1, a0 + j + 2);
      base.push_back(p[j] == '1' ? v : -v);
    }
    splits.clear();
    if (rules.refine)
      for (int b = 0; b + 2 < len; ++b)
        if (p[b] == '1' && p[b + 1] == '0' && p[b + 2] == '1')
          splits.push_back(orientation_id(n, a0 + b, a0 + b + 2, a0 + b + 4));
    const std::size_t m = splits.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      Cube c = base;
      for (std::size_t j = 0; j < m; ++j) {
        const bool neg = (mask >> (m - 1 - j)) & 1;
        c.push_back(neg ? -splits[j] : splits[j]);
      }
      cs.cubes.push_back(std::move(c));
    }
  }
  return cs;
}

CnfFormula implied_window_clauses(int n) {
  CnfFormula f;
  auto ov = [n](int a) { return orientation_id(n, a, a + 1, a + 2); };
  for (int a = 2; a + 2 <= n - 2; ++a)
    f.add({-ov(a), -ov(a + 1), -ov(a + 2)});
  for (int a = 2; a + 3 <= n - 2; ++a)
    f.add({ov(a), ov(a + 1), ov(a + 2), ov(a + 3)});
  return f;
}

CnfFormula tautology_formula(const CubeSet &cs, const CnfFormula &sbp,
                             const CnfFormula &implied) {
  CnfFormula f;
  std::vector<int> neg;
  for (const Cube &c : cs.cubes) {
    neg.clear();
    for (int l : c)
      neg.push_back(-l);
    f.add(neg);
  }
  f.append(sbp);
  f.append(implied);
  if (cs.n >= 3)
    f.num_vars = std::max(f.num_vars, static_cast<int>(binom(cs.n, 3)));
  return f;
}

CnfFormula coverage_formula(const CubeSet &cs) {
  EncodingConfig cfg{cs.n, {}, Variant::T};
  VarMap vm(cfg);
  CnfFormula sbp = symmetry_breaking_clauses(vm);
  sbp.num_vars = 0;
  for (std::size_t i = 0; i < sbp.size(); ++i)
    for (int l : sbp[i])
      sbp.num_vars = std::max(sbp.num_vars, std::abs(l));
  return tautology_formula(cs, sbp, implied_window_clauses(cs.n));
}

} // namespace holesat
