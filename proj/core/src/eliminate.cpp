#include "holesat/encoder.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace holesat {

namespace {

using Clause = std::vector<int>;

bool lit_less(int a, int b) {
  int va = std::abs(a), vb = std::abs(b);
  return va != vb ? va < vb : a < b;
}

// Caps (u*) before cups (v*), longer chains first.
int elimination_rank(const std::string &name) {
  const bool cup = name[0] == 'v' || name.find(".cup") != std::string::npos;
  std::size_t p = name.find_last_not_of("0123456789");
  int len = std::stoi(name.substr(p + 1));
  return (cup ? 1000 : 0) - len;
}

} // namespace

CnfFormula remove_subsumed(const CnfFormula &f) {
  const std::size_t m = f.size();
  std::vector<Clause> cls(m);
  for (std::size_t i = 0; i < m; ++i) {
    cls[i].assign(f[i].begin(), f[i].end());
    std::sort(cls[i].begin(), cls[i].end(), lit_less);
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cls[a].size() < cls[b].size();
  });
  const int nv = f.num_vars;
  auto li = [nv](int l) { return static_cast<std::size_t>(l > 0 ? l : nv - l); };
  std::vector<std::vector<std::size_t>> occ(2 * static_cast<std::size_t>(nv) + 2);
  std::vector<char> mark(occ.size(), 0), keep(m, 0);
  for (std::size_t idx : order) {
    const Clause &c = cls[idx];
    for (int l : c)
      mark[li(l)] = 1;
    bool subsumed = false;
    for (int l : c) {
      for (std::size_t d : occ[li(l)]) {
        bool all = true;
        for (int x : cls[d])
          if (!mark[li(x)]) {
            all = false;
            break;
          }
        if (all) {
          subsumed = true;
          break;
        }
      }
      if (subsumed)
        break;
    }
    for (int l : c)
      mark[li(l)] = 0;
    if (subsumed || c.empty())
      continue;
    keep[idx] = 1;
    occ[li(c[0])].push_back(idx);
  }
  CnfFormula out;
  for (std::size_t i = 0; i < m; ++i)
    if (keep[i] || cls[i].empty())
      out.add(cls[i]);
  out.num_vars = f.num_vars;
  return out;
}

CnfFormula eliminate_aux(const CnfFormula &f, const VarMap &vm) {
  std::vector<int> blocks;
  for (int b = 3; b < static_cast<int>(vm.blocks().size()); ++b)
    blocks.push_back(b);
  std::stable_sort(blocks.begin(), blocks.end(), [&](int x, int y) {
    return elimination_rank(vm.blocks()[x].name) < elimination_rank(vm.blocks()[y].name);
  });

  std::vector<Clause> cls;
  cls.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    cls.emplace_back(f[i].begin(), f[i].end());
  std::vector<char> alive(cls.size(), 1);
  const int nv = std::max(f.num_vars, vm.num_vars());
  std::vector<std::vector<std::size_t>> occ(static_cast<std::size_t>(nv) + 1);
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (int l : cls[i])
      occ[std::abs(l)].push_back(i);

  Clause r;
  for (int b : blocks) {
    const auto &blk = vm.blocks()[b];
    for (int v = blk.base + 1; v <= blk.base + blk.count; ++v) {
      std::vector<std::size_t> pos, neg;
      for (std::size_t i : occ[v]) {
        if (!alive[i])
          continue;
        bool p = std::find(cls[i].begin(), cls[i].end(), v) != cls[i].end();
        (p ? pos : neg).push_back(i);
        alive[i] = 0;
      }
      occ[v].clear();
      for (std::size_t i : pos)
        for (std::size_t j : neg) {
          r.clear();
          for (int l : cls[i])
            if (l != v)
              r.push_back(l);
          for (int l : cls[j])
            if (l != -v)
              r.push_back(l);
          std::sort(r.begin(), r.end(), lit_less);
          r.erase(std::unique(r.begin(), r.end()), r.end());
          bool taut = false;
          for (std::size_t t = 1; t < r.size(); ++t)
            if (r[t] == -r[t - 1])
              taut = true;
          if (taut)
            continue;
          cls.push_back(r);
          alive.push_back(1);
          for (int l : r)
            occ[std::abs(l)].push_back(cls.size() - 1);
        }
    }
  }
  CnfFormula out;
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (alive[i])
      out.add(cls[i]);
  out.canonicalize();
  out.num_vars = f.num_vars;
  return remove_subsumed(out);
}

} // namespace holesat
