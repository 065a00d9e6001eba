#include "families.hpp"

#include "holesat/errors.hpp"
#include "holesat/signotope.hpp"

#include <algorithm>
#include <array>

namespace holesat {

Variant parse_variant(std::string_view s) {
  if (s == "T")
    return Variant::T;
  if (s == "O1")
    return Variant::O1;
  if (s == "O2")
    return Variant::O2;
  if (s == "O3")
    return Variant::O3;
  if (s == "O4")
    return Variant::O4;
  throw UnsupportedVariant("unknown variant '" + std::string(s) + "'");
}

std::string to_string(Variant v) {
  switch (v) {
  case Variant::T:
    return "T";
  case Variant::O1:
    return "O1";
  case Variant::O2:
    return "O2";
  case Variant::O3:
    return "O3";
  case Variant::O4:
    return "O4";
  }
  return "?";
}

namespace detail {

std::vector<Target> normalized_targets(const EncodingConfig &cfg) {
  std::vector<Target> t = cfg.targets;
  std::sort(t.begin(), t.end(), [](const Target &x, const Target &y) {
    if (x.kind != y.kind)
      return x.kind == Target::Kind::Hole;
    return x.k < y.k;
  });
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

void validate(const EncodingConfig &cfg) {
  if (cfg.n < 3)
    throw PreconditionViolated("encoding needs n >= 3");
  for (const Target &t : cfg.targets) {
    const bool hole = t.kind == Target::Kind::Hole;
    if (t.k < 3)
      throw UnsupportedVariant("target size must be at least 3");
    if (cfg.variant == Variant::T)
      continue;
    if (hole && t.k != 6)
      throw UnsupportedVariant("variant " + to_string(cfg.variant) +
                               " is only defined for 6-holes, got " +
                               std::to_string(t.k) + "-hole");
    if (!hole && t.k < 4)
      throw UnsupportedVariant("variant " + to_string(cfg.variant) +
                               " needs gon size >= 4");
  }
}

std::vector<FamilySpec> chain_families(const EncodingConfig &cfg) {
  std::vector<FamilySpec> out;
  if (cfg.variant == Variant::T || cfg.variant == Variant::O1)
    return out;
  bool primary_used = false;
  for (const Target &t : normalized_targets(cfg)) {
    FamilySpec f{t, std::vector<std::string>(t.k), std::vector<std::string>(t.k)};
    if (t.k == 6 && !primary_used) {
      f.cap[4] = "u4";
      f.cap[5] = "u5";
      f.cup[4] = "v4";
      primary_used = true;
    } else {
      const std::string p = (t.kind == Target::Kind::Hole ? "h" : "g") +
                            std::to_string(t.k) + ".";
      for (int j = 4; j <= t.k - 1; ++j)
        f.cap[j] = p + "cap" + std::to_string(j);
      for (int j = 4; j <= t.k - 2; ++j)
        f.cup[j] = p + "cup" + std::to_string(j);
    }
    out.push_back(std::move(f));
  }
  return out;
}

} // namespace detail

VarMap::VarMap(const EncodingConfig &cfg) : n_(cfg.n) {
  detail::validate(cfg);
  const int n = n_;
  const int t3 = static_cast<int>(binom(n, 3));
  blocks_.push_back({"o", 0, t3});
  int next = t3;
  inside_base_.resize(static_cast<std::size_t>(t3));
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        inside_base_[triple_rank(n, a, b, c)] = next;
        next += c - a - 2;
      }
  blocks_.push_back({"I", t3, next - t3});
  num_vars_ = next;
  add_triple_block("H");
  aux_begin_ = num_vars_;
  for (const auto &f : detail::chain_families(cfg)) {
    // u4, u5, v4 order for the primary family: caps then cups.
    for (const auto &name : f.cap)
      if (!name.empty() && block_index(name) < 0)
        add_triple_block(name);
    for (const auto &name : f.cup)
      if (!name.empty() && block_index(name) < 0)
        add_triple_block(name);
  }
}

int VarMap::add_triple_block(const std::string &name) {
  const int cnt = static_cast<int>(binom(n_, 3));
  blocks_.push_back({name, num_vars_, cnt});
  num_vars_ += cnt;
  return static_cast<int>(blocks_.size()) - 1;
}

int VarMap::orient(int a, int b, int c) const {
  return 1 + static_cast<int>(triple_rank(n_, a, b, c));
}

int VarMap::inside(int i, int a, int b, int c) const {
  return inside_base_[triple_rank(n_, a, b, c)] + 1 + (i - a - 1) - (i > b ? 1 : 0);
}

int VarMap::hole(int a, int b, int c) const {
  return blocks_[2].base + 1 + static_cast<int>(triple_rank(n_, a, b, c));
}

int VarMap::block_index(std::string_view name) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i].name == name)
      return static_cast<int>(i);
  return -1;
}

int VarMap::aux(int block, int a, int c, int d) const {
  if (block < 3 || block >= static_cast<int>(blocks_.size()))
    throw PreconditionViolated("aux: no such auxiliary block");
  return blocks_[block].base + 1 + static_cast<int>(triple_rank(n_, a, c, d));
}

namespace {

std::array<int, 3> unrank(int n, int r) {
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      const int first = static_cast<int>(triple_rank(n, a, b, b + 1));
      const int cnt = n - b;
      if (r < first + cnt)
        return {a, b, b + 1 + (r - first)};
    }
  return {0, 0, 0};
}

std::string fmt(const std::string &name, std::array<int, 3> t) {
  return name + "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
         std::to_string(t[2]) + ")";
}

} // namespace

std::string VarMap::describe(int var) const {
  if (var < 1 || var > num_vars_)
    throw PreconditionViolated("describe: variable out of range");
  const Block &ib = blocks_[1];
  if (var > ib.base && var <= ib.base + ib.count) {
    auto it = std::upper_bound(inside_base_.begin(), inside_base_.end(), var - 1);
    // several triples may share a base (zero entries); take the last <= var-1
    int r = static_cast<int>(it - inside_base_.begin()) - 1;
    auto t = unrank(n_, r);
    int idx = var - 1 - inside_base_[r];
    int i = t[0] + 1 + idx;
    if (i >= t[1])
      ++i;
    return "I(" + std::to_string(i) + ";" + std::to_string(t[0]) + "," +
           std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
  }
  for (const Block &b : blocks_)
    if (b.name != "I" && var > b.base && var <= b.base + b.count)
      return fmt(b.name, unrank(n_, var - b.base - 1));
  return "?";
}

VarMap build_varmap(const EncodingConfig &cfg) { return VarMap(cfg); }

} // namespace holesat
