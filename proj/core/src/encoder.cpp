#include "families.hpp"

#include "holesat/errors.hpp"
#include "holesat/signotope.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>

namespace holesat {

namespace {

using detail::FamilySpec;

void for_each_subset(int n, int k, const std::function<void(const std::vector<int> &)> &fn) {
  if (k > n || k <= 0)
    return;
  std::vector<int> x(k);
  for (int i = 0; i < k; ++i)
    x[i] = i + 1;
  while (true) {
    fn(x);
    int i = k - 1;
    while (i >= 0 && x[i] == n - k + 1 + i)
      --i;
    if (i < 0)
      return;
    ++x[i];
    for (int j = i + 1; j < k; ++j)
      x[j] = x[j - 1] + 1;
  }
}

struct Builder {
  const EncodingConfig &cfg;
  const VarMap &vm;
  int n;
  CnfFormula f;

  int o(int a, int b, int c) const { return vm.orient(a, b, c); }
  int h(int a, int b, int c) const {
    int lo = std::min({a, b, c}), hi = std::max({a, b, c});
    return vm.hole(lo, a + b + c - lo - hi, hi);
  }

  void units() {
    for (int a = 2; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        f.add({o(1, a, b)});
  }

  // I(i;a,b,c) with the two orientation conditions; both directions when full.
  void containment(bool full) {
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        for (int c = b + 1; c <= n; ++c) {
          const int P = o(a, b, c);
          for (int i = a + 1; i < c; ++i) {
            if (i == b)
              continue;
            const int I = vm.inside(i, a, b, c);
            int X, Y;
            if (i < b) {
              X = -o(a, i, b);
              Y = o(a, i, c);
            } else {
              X = o(a, i, c);
              Y = -o(b, i, c);
            }
            // I <-> (P -> X & Y) & (!P -> !X & !Y)
            f.add({-I, -P, X});
            f.add({-I, -P, Y});
            f.add({-I, P, -X});
            f.add({-I, P, -Y});
            if (full) {
              f.add({I, -P, -X, -Y});
              f.add({I, P, X, Y});
            }
          }
        }
  }

  void holes(bool full) {
    std::vector<int> cl;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        for (int c = b + 1; c <= n; ++c) {
          const int H = vm.hole(a, b, c);
          cl.assign(1, H);
          for (int i = a + 1; i < c; ++i)
            if (i != b)
              cl.push_back(vm.inside(i, a, b, c));
          f.add(cl);
          if (full)
            for (std::size_t j = 1; j < cl.size(); ++j)
              f.add({-H, -cl[j]});
        }
  }

  // Axioms on 4-tuples avoiding point 1 (those are satisfied by the units).
  // full: all eight alternation clauses. Otherwise the first pair plus the
  // halves of the second pair not covered by chain auxiliaries.
  void axioms(bool full, bool keep_a, bool keep_b) {
    for (int a = 2; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        for (int c = b + 1; c <= n; ++c) {
          const int abc = o(a, b, c);
          for (int d = c + 1; d <= n; ++d) {
            const int abd = o(a, b, d), acd = o(a, c, d), bcd = o(b, c, d);
            f.add({-abc, -acd, abd});
            f.add({abc, acd, -abd});
            if (full || keep_a)
              f.add({-abc, -bcd, acd});
            if (full || keep_b)
              f.add({abc, bcd, -acd});
            if (full) {
              f.add({-abc, -bcd, abd});
              f.add({abc, bcd, -abd});
              f.add({-abd, -bcd, acd});
              f.add({abd, bcd, -acd});
            }
          }
        }
  }

  void trusted_target(const Target &t) {
    std::vector<int> cl;
    for_each_subset(n, t.k, [&](const std::vector<int> &x) {
      cl.clear();
      const int k = t.k;
      for (int p = 0; p < k; ++p)
        for (int q = p + 1; q < k; ++q)
          for (int r = q + 1; r < k; ++r) {
            const int a = x[p], b = x[q], c = x[r];
            if (t.kind == Target::Kind::Hole) {
              cl.push_back(-vm.hole(a, b, c));
              continue;
            }
            for (int s = p + 1; s < r; ++s)
              if (s != q)
                cl.push_back(vm.inside(x[s], a, b, c));
          }
      f.add(cl);
    });
  }

  struct Chain {
    const Builder &bd;
    int k;
    bool hole;
    std::vector<int> cap, cup; // block index per length, -1 if absent

    int cap_lit(int j, int a, int c, int d) const {
      return j == 3 ? -bd.o(a, c, d) : bd.vm.aux(cap[j], a, c, d);
    }
    int cup_lit(int j, int a, int c, int d) const {
      return j == 3 ? bd.o(a, c, d) : bd.vm.aux(cup[j], a, c, d);
    }
  };

  Chain make_chain(const FamilySpec &fs) const {
    Chain ch{*this, fs.target.k, fs.target.kind == Target::Kind::Hole,
             std::vector<int>(fs.target.k, -1), std::vector<int>(fs.target.k, -1)};
    for (int j = 0; j < fs.target.k; ++j) {
      if (!fs.cap[j].empty())
        ch.cap[j] = vm.block_index(fs.cap[j]);
      if (!fs.cup[j].empty())
        ch.cup[j] = vm.block_index(fs.cup[j]);
    }
    return ch;
  }

  // A j-point chain starting at a and ending (c,d) needs c >= a+j-2.
  void chain_family(const Chain &ch) {
    const int k = ch.k;
    // upper chains grow: cap_j(a,c,d) & !o(c,d,e) [& H(a,c,e)] -> cap_{j+1}(a,d,e)
    for (int j = 3; j + 1 <= k - 1; ++j)
      for (int a = 2; a <= n; ++a)
        for (int c = a + j - 2; c <= n; ++c)
          for (int d = c + 1; d <= n; ++d)
            for (int e = d + 1; e <= n; ++e) {
              if (ch.hole && j + 1 == 5)
                f.add({-ch.cap_lit(j, a, c, d), o(c, d, e), -h(a, c, e),
                       ch.cap_lit(j + 1, a, d, e)});
              else
                f.add({-ch.cap_lit(j, a, c, d), o(c, d, e), ch.cap_lit(j + 1, a, d, e)});
            }
    for (int j = 3; j + 1 <= k - 2; ++j)
      for (int a = 2; a <= n; ++a)
        for (int c = a + j - 2; c <= n; ++c)
          for (int d = c + 1; d <= n; ++d)
            for (int e = d + 1; e <= n; ++e)
              f.add({-ch.cup_lit(j, a, c, d), -o(c, d, e), ch.cup_lit(j + 1, a, d, e)});

    // all k points above the line from the first to the last
    for (int a = 2; a <= n; ++a)
      for (int c = a + k - 3; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d)
          for (int e = d + 1; e <= n; ++e)
            f.add({-ch.cap_lit(k - 1, a, c, d), o(c, d, e)});

    // point 1 plus a lower chain of k-1 points
    if (k - 1 == 3) {
      for (int a = 2; a <= n; ++a)
        for (int d = a + 1; d <= n; ++d)
          for (int e = d + 1; e <= n; ++e)
            f.add({-o(a, d, e)});
    } else {
      for (int a = 2; a <= n; ++a)
        for (int c = a + k - 4; c <= n; ++c)
          for (int d = c + 1; d <= n; ++d)
            for (int e = d + 1; e <= n; ++e) {
              if (ch.hole)
                f.add({-ch.cup_lit(k - 2, a, c, d), -o(c, d, e), -h(a, c, e)});
              else
                f.add({-ch.cup_lit(k - 2, a, c, d), -o(c, d, e)});
            }
    }

    // p points on or above, q on or below the line, sharing both endpoints
    for (int p = 4; p <= k - 1; ++p) {
      const int q = k + 2 - p;
      for (int a = 2; a <= n; ++a)
        for (int fl = a + 2; fl <= n; ++fl)
          for (int c = a + p - 2; c < fl; ++c)
            for (int c2 = a + q - 2; c2 < fl; ++c2) {
              if (c2 == c)
                continue;
              if (ch.hole && p == 4 && q == 4)
                f.add({-ch.cap_lit(p, a, c, fl), -ch.cup_lit(q, a, c2, fl), -h(a, c, c2)});
              else
                f.add({-ch.cap_lit(p, a, c, fl), -ch.cup_lit(q, a, c2, fl)});
            }
    }
  }

  // u4 -> !o(a,c,d), v4 -> o(a,c,d): with the u4/v4 definitions this yields
  // the second axiom pair.
  void compact_axioms(int cap4, int cup4) {
    for (int a = 2; a <= n; ++a)
      for (int c = a + 2; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          if (cap4 >= 0)
            f.add({-vm.aux(cap4, a, c, d), -o(a, c, d)});
          if (cup4 >= 0)
            f.add({-vm.aux(cup4, a, c, d), o(a, c, d)});
        }
  }
};

} // namespace

std::vector<std::pair<int, int>> sbp_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  const int up = (n + 1) / 2, down = n / 2;
  for (int j = 0; up - 1 - j >= 2; ++j) {
    const int xa = up - 1 - j, ya = down + 1 + j;
    out.emplace_back(xa, ya);
  }
  return out;
}

CnfFormula symmetry_breaking_clauses(const VarMap &vm) {
  CnfFormula f;
  const auto pairs = sbp_pairs(vm.n());
  const int m = static_cast<int>(pairs.size());
  if (m >= 30)
    throw PreconditionViolated("symmetry breaking: too many pairs");
  auto ov = [&](int a) { return vm.orient(a, a + 1, a + 2); };
  std::vector<int> cl;
  for (int k = 0; k < m; ++k)
    for (std::uint32_t p = 0; p < (1u << k); ++p) {
      cl.clear();
      for (int j = 0; j < k; ++j) {
        const int x = ov(pairs[j].first), y = ov(pairs[j].second);
        if ((p >> j) & 1) {
          cl.push_back(-x);
          cl.push_back(-y);
        } else {
          cl.push_back(x);
          cl.push_back(y);
        }
      }
      cl.push_back(-ov(pairs[k].first));
      cl.push_back(ov(pairs[k].second));
      f.add(cl);
    }
  f.num_vars = std::max(f.num_vars, vm.num_vars());
  return f;
}

CnfFormula o1_blocking_clauses(const VarMap &vm, const Target &t) {
  const int n = vm.n(), k = t.k;
  const bool hole = t.kind == Target::Kind::Hole;
  if (k < 4)
    throw UnsupportedVariant("blocking clauses need k >= 4");
  if (hole && k != 6)
    throw UnsupportedVariant("blocking clauses for holes only exist for k = 6");
  CnfFormula f;
  auto hl = [&](int a, int b, int c) {
    int lo = std::min({a, b, c}), hi = std::max({a, b, c});
    return vm.hole(lo, a + b + c - lo - hi, hi);
  };
  std::vector<int> cl, up, low;
  for_each_subset(n, k, [&](const std::vector<int> &x) {
    if (x[0] == 1) {
      // point 1 above everything: only the lower chain through x[1..] counts
      cl.clear();
      for (int j = 1; j + 2 < k; ++j)
        cl.push_back(-vm.orient(x[j], x[j + 1], x[j + 2]));
      if (hole)
        cl.push_back(-hl(x[1], x[3], x[5]));
      f.add(cl);
      return;
    }
    const int inner = k - 2;
    for (std::uint32_t mask = 0; mask < (1u << inner); ++mask) {
      if (std::popcount(mask) < 2)
        continue;
      up.assign(1, x[0]);
      low.assign(1, x[0]);
      for (int j = 0; j < inner; ++j)
        ((mask >> j) & 1 ? up : low).push_back(x[j + 1]);
      up.push_back(x[k - 1]);
      low.push_back(x[k - 1]);
      cl.clear();
      for (std::size_t j = 0; j + 2 < up.size(); ++j)
        cl.push_back(vm.orient(up[j], up[j + 1], up[j + 2]));
      for (std::size_t j = 0; j + 2 < low.size(); ++j)
        cl.push_back(-vm.orient(low[j], low[j + 1], low[j + 2]));
      if (hole) {
        if (up.size() >= 5)
          cl.push_back(-hl(up[0], up[2], up[4]));
        else
          cl.push_back(-hl(up[0], up[2], low[2]));
      }
      f.add(cl);
    }
  });
  f.num_vars = std::max(f.num_vars, vm.num_vars());
  return f;
}

CnfFormula encode(const EncodingConfig &cfg) {
  detail::validate(cfg);
  VarMap vm(cfg);
  Builder bd{cfg, vm, cfg.n, {}};
  const auto targets = detail::normalized_targets(cfg);
  const bool any_hole = std::any_of(targets.begin(), targets.end(), [](const Target &t) {
    return t.kind == Target::Kind::Hole;
  });
  const bool any_gon = std::any_of(targets.begin(), targets.end(), [](const Target &t) {
    return t.kind == Target::Kind::Gon;
  });
  const Variant v = cfg.variant;
  const bool full_defs = v == Variant::T || v == Variant::O1 || v == Variant::O2;

  bd.units();
  if (any_hole || (v == Variant::T && any_gon))
    bd.containment(full_defs);
  if (any_hole)
    bd.holes(full_defs);

  const auto fams = detail::chain_families(cfg);
  std::vector<Builder::Chain> chains;
  for (const auto &fs : fams)
    chains.push_back(bd.make_chain(fs));
  int cap4 = -1, cup4 = -1;
  for (const auto &ch : chains) {
    if (cap4 < 0 && ch.k > 4)
      cap4 = ch.cap[4];
    if (cup4 < 0 && ch.k > 5)
      cup4 = ch.cup[4];
  }

  if (full_defs)
    bd.axioms(true, true, true);
  else
    bd.axioms(false, cup4 < 0, cap4 < 0);

  for (const Target &t : targets) {
    if (v == Variant::T)
      bd.trusted_target(t);
    else if (v == Variant::O1)
      bd.f.append(o1_blocking_clauses(vm, t));
  }
  for (const auto &ch : chains)
    bd.chain_family(ch);
  if (!full_defs)
    bd.compact_axioms(cap4, cup4);
  if (v == Variant::O4)
    bd.f.append(symmetry_breaking_clauses(vm));

  bd.f.canonicalize();
  bd.f.num_vars = vm.num_vars();
  return std::move(bd.f);
}

} // namespace holesat
