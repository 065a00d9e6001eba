#include "holesat/cnf.hpp"

#include "holesat/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_set>

namespace holesat {

void CnfFormula::add(std::span<const int> lits) {
  start_.push_back(lits_.size());
  for (int l : lits) {
    lits_.push_back(l);
    num_vars = std::max(num_vars, std::abs(l));
  }
}

void CnfFormula::append(const CnfFormula &other) {
  for (std::size_t i = 0; i < other.size(); ++i)
    add(other[i]);
  num_vars = std::max(num_vars, other.num_vars);
}

namespace {

struct ClauseRef {
  const std::vector<int> *lits;
  std::size_t begin, end;
};

struct RefHash {
  std::size_t operator()(const ClauseRef &r) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = r.begin; i < r.end; ++i) {
      h ^= static_cast<std::uint32_t>((*r.lits)[i]);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct RefEq {
  bool operator()(const ClauseRef &a, const ClauseRef &b) const {
    return std::equal(a.lits->begin() + a.begin, a.lits->begin() + a.end,
                      b.lits->begin() + b.begin, b.lits->begin() + b.end);
  }
};

bool lit_less(int a, int b) {
  int va = std::abs(a), vb = std::abs(b);
  return va != vb ? va < vb : a < b;
}

} // namespace

void CnfFormula::canonicalize() {
  std::vector<int> out;
  std::vector<std::size_t> starts;
  out.reserve(lits_.size());
  starts.reserve(start_.size());
  std::unordered_set<ClauseRef, RefHash, RefEq> seen;
  seen.reserve(start_.size() * 2);
  std::vector<int> tmp;
  for (std::size_t i = 0; i < size(); ++i) {
    auto c = (*this)[i];
    tmp.assign(c.begin(), c.end());
    std::sort(tmp.begin(), tmp.end(), lit_less);
    tmp.erase(std::unique(tmp.begin(), tmp.end()), tmp.end());
    bool taut = false;
    for (std::size_t j = 1; j < tmp.size(); ++j)
      if (tmp[j] == -tmp[j - 1])
        taut = true;
    if (taut)
      continue;
    std::size_t b = out.size();
    out.insert(out.end(), tmp.begin(), tmp.end());
    // `out` may reallocate; references store offsets into it.
    ClauseRef ref{&out, b, out.size()};
    if (!seen.insert(ref).second) {
      out.resize(b);
      continue;
    }
    starts.push_back(b);
  }
  lits_ = std::move(out);
  start_ = std::move(starts);
}

void emit_dimacs(const CnfFormula &f, std::ostream &out) {
  std::string buf;
  buf.reserve(1 << 16);
  buf += "p cnf " + std::to_string(f.num_vars) + " " +
         std::to_string(f.size()) + "\n";
  char num[16];
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (int l : f[i]) {
      auto [p, ec] = std::to_chars(num, num + sizeof num, l);
      buf.append(num, p);
      buf.push_back(' ');
    }
    buf += "0\n";
    if (buf.size() > (1 << 16) - 256) {
      out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
      buf.clear();
    }
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out)
    throw IoFailure("failed writing DIMACS output");
}

void emit_icnf(const CnfFormula &f, const std::vector<Cube> &cubes,
               std::ostream &out) {
  std::string buf = "p inccnf\n";
  char num[16];
  auto flush = [&] {
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    buf.clear();
  };
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (int l : f[i]) {
      auto [p, ec] = std::to_chars(num, num + sizeof num, l);
      buf.append(num, p);
      buf.push_back(' ');
    }
    buf += "0\n";
    if (buf.size() > (1 << 16))
      flush();
  }
  for (const Cube &c : cubes) {
    buf += "a ";
    for (int l : c) {
      auto [p, ec] = std::to_chars(num, num + sizeof num, l);
      buf.append(num, p);
      buf.push_back(' ');
    }
    buf += "0\n";
    if (buf.size() > (1 << 16))
      flush();
  }
  flush();
  if (!out)
    throw IoFailure("failed writing iCNF output");
}

namespace {

void parse_any(std::istream &in, CnfFormula *f, std::vector<Cube> *cubes) {
  std::string line;
  std::vector<int> cur;
  bool in_cube = false;
  int declared = 0;
  auto finish = [&] {
    if (in_cube) {
      if (!cubes)
        throw IoFailure("unexpected cube line in DIMACS input");
      cubes->push_back(cur);
    } else if (f) {
      f->add(cur);
    }
    cur.clear();
    in_cube = false;
  };
  while (std::getline(in, line)) {
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos)
      continue;
    char ch = line[pos];
    if (ch == 'c' || ch == '%')
      continue;
    if (ch == 'p') {
      std::size_t q = line.find("cnf", pos);
      if (q != std::string::npos) {
        const char *p = line.c_str() + q + 3;
        declared = static_cast<int>(std::strtol(p, nullptr, 10));
      }
      continue;
    }
    if (ch == 'a') {
      if (!cur.empty())
        throw IoFailure("cube line inside an unterminated clause");
      in_cube = true;
      ++pos;
    }
    const char *p = line.c_str() + pos;
    const char *end = line.c_str() + line.size();
    while (p < end) {
      while (p < end && (*p == ' ' || *p == '\t' || *p == '\r'))
        ++p;
      if (p >= end)
        break;
      int v = 0;
      auto [next, ec] = std::from_chars(p, end, v);
      if (ec != std::errc())
        throw IoFailure("malformed literal in CNF input: " + line);
      p = next;
      if (v == 0)
        finish();
      else
        cur.push_back(v);
    }
  }
  if (!cur.empty())
    throw IoFailure("unterminated clause at end of CNF input");
  if (f)
    f->num_vars = std::max(f->num_vars, declared);
}

} // namespace

CnfFormula parse_dimacs(std::istream &in) {
  CnfFormula f;
  parse_any(in, &f, nullptr);
  return f;
}

IcnfProblem parse_icnf(std::istream &in) {
  IcnfProblem p;
  parse_any(in, &p.formula, &p.cubes);
  return p;
}

std::vector<Cube> parse_cubes(std::istream &in) {
  CnfFormula ignored;
  std::vector<Cube> cubes;
  parse_any(in, &ignored, &cubes);
  return cubes;
}

} // namespace holesat
