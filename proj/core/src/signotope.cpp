#include "holesat/signotope.hpp"

#include "holesat/errors.hpp"

#include <istream>
#include <sstream>

namespace holesat {

namespace {

// The four clauses of the realizability axioms on one 4-tuple.
bool quad_ok(bool abc, bool abd, bool acd, bool bcd) {
  if (abc && acd && !abd)
    return false;
  if (!abc && !acd && abd)
    return false;
  if (abc && bcd && !acd)
    return false;
  if (!abc && !bcd && acd)
    return false;
  return true;
}

} // namespace

AxiomCheck check_axioms(const OrientationAssignment &o) {
  const int n = o.n();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d)
          if (!quad_ok(o.get(a, b, c), o.get(a, b, d), o.get(a, c, d),
                       o.get(b, c, d)))
            return {false, {a, b, c, d}};
  return {};
}

namespace {

struct Enumerator {
  int n;
  const EnumerateOptions &opt;
  const std::function<bool(const OrientationAssignment &)> &visit;
  const std::function<bool(const OrientationAssignment &)> &filter;
  OrientationAssignment cur;
  std::vector<std::array<int, 3>> order;
  bool stop = false;

  bool consistent(int b, int c, int d) const {
    // (b,c,d) is the lexicographically last triple of every 4-tuple a<b<c<d
    for (int a = 1; a < b; ++a)
      if (!quad_ok(cur.get(a, b, c), cur.get(a, b, d), cur.get(a, c, d),
                   cur.get(b, c, d)))
        return false;
    return true;
  }

  void run(std::size_t t) {
    if (stop)
      return;
    if (t == order.size()) {
      if (!filter || filter(cur))
        stop = !visit(cur);
      return;
    }
    auto [a, b, c] = order[t];
    for (int v = 0; v <= 1 && !stop; ++v) {
      if (opt.first_point_positive && a == 1 && v == 0)
        continue;
      cur.set(a, b, c, v != 0);
      if (consistent(a, b, c))
        run(t + 1);
    }
  }
};

} // namespace

void enumerate(int n,
               const std::function<bool(const OrientationAssignment &)> &visit,
               const EnumerateOptions &opt,
               const std::function<bool(const OrientationAssignment &)> &filter) {
  if (n > opt.bound)
    throw BoundExceeded("enumerate: n=" + std::to_string(n) +
                        " exceeds bound " + std::to_string(opt.bound));
  if (n < 0)
    throw PreconditionViolated("enumerate: negative n");
  Enumerator e{n, opt, visit, filter, OrientationAssignment(n), {}, false};
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        e.order.push_back({a, b, c});
  e.run(0);
}

bool contained(const OrientationAssignment &o, int i, int a, int b, int c) {
  const bool abc = o.get(a, b, c);
  if (i < b) {
    const bool aib = o.get(a, i, b), aic = o.get(a, i, c);
    return abc ? (!aib && aic) : (aib && !aic);
  }
  const bool aic = o.get(a, i, c), bic = o.get(b, i, c);
  return abc ? (aic && !bic) : (!aic && bic);
}

namespace {

void require_valid(const OrientationAssignment &o) {
  AxiomCheck chk = check_axioms(o);
  if (!chk.valid)
    throw InvalidAssignment("assignment violates the axioms at (" +
                            std::to_string(chk.quad[0]) + "," +
                            std::to_string(chk.quad[1]) + "," +
                            std::to_string(chk.quad[2]) + "," +
                            std::to_string(chk.quad[3]) + ")");
}

// i inside the triangle spanned by three other elements (any order).
bool inside_any(const OrientationAssignment &o, int i, int x, int y, int z) {
  int a = std::min({x, y, z}), c = std::max({x, y, z});
  int b = x + y + z - a - c;
  if (i <= a || i >= c)
    return false;
  return contained(o, i, a, b, c);
}

struct Search {
  const OrientationAssignment &o;
  int k;
  bool holes;
  std::vector<char> empty; // per triple rank
  std::vector<int> cur;

  bool tri_empty(int a, int b, int c) const {
    return empty[triple_rank(o.n(), a, b, c)] != 0;
  }

  bool extendable(int p) const {
    const std::size_t m = cur.size();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        if (holes) {
          if (!tri_empty(cur[i], cur[j], p))
            return false;
          continue;
        }
        for (std::size_t l = j + 1; l < m; ++l)
          if (inside_any(o, p, cur[i], cur[j], cur[l]))
            return false;
        for (std::size_t l = 0; l < m; ++l)
          if (l != i && l != j && inside_any(o, cur[l], cur[i], cur[j], p))
            return false;
      }
    return true;
  }

  bool run(int from) {
    if (static_cast<int>(cur.size()) == k)
      return true;
    for (int p = from; p <= o.n() - (k - static_cast<int>(cur.size())) + 1;
         ++p) {
      if (!extendable(p))
        continue;
      cur.push_back(p);
      if (run(p + 1))
        return true;
      cur.pop_back();
    }
    return false;
  }
};

bool search(const OrientationAssignment &o, int k, bool holes) {
  require_valid(o);
  if (k < 3)
    throw PreconditionViolated("k must be at least 3");
  const int n = o.n();
  if (k > n)
    return false;
  Search s{o, k, holes, {}, {}};
  if (holes) {
    s.empty.assign(static_cast<std::size_t>(binom(n, 3)), 1);
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        for (int c = b + 1; c <= n; ++c)
          for (int i = a + 1; i < c; ++i)
            if (i != b && contained(o, i, a, b, c)) {
              s.empty[triple_rank(n, a, b, c)] = 0;
              break;
            }
  }
  return s.run(1);
}

} // namespace

bool contains_khole(const OrientationAssignment &o, int k) {
  return search(o, k, true);
}

bool contains_kgon(const OrientationAssignment &o, int k) {
  return search(o, k, false);
}

OrientationAssignment reflect(const OrientationAssignment &o) {
  const int n = o.n();
  OrientationAssignment r(n);
  for (int b = 2; b <= n; ++b)
    for (int c = b + 1; c <= n; ++c) {
      if (!o.get(1, b, c))
        throw PreconditionViolated("reflect: o_{1,b,c} must be positive");
      r.set(1, b, c, true);
    }
  for (int a = 2; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        r.set(n - c + 2, n - b + 2, n - a + 2, o.get(a, b, c));
  return r;
}

OrientationAssignment induced_assignment(const PointSet &s) {
  const int n = static_cast<int>(s.size());
  OrientationAssignment o(n);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        o.set(a, b, c, orient3(s[a - 1], s[b - 1], s[c - 1]) == Sign::Positive);
  return o;
}

std::string serialize(const OrientationAssignment &o) {
  std::ostringstream out;
  const int n = o.n();
  out << n << '\n';
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        out << a << ' ' << b << ' ' << c << ' ' << (o.get(a, b, c) ? '+' : '-')
            << '\n';
  return out.str();
}

OrientationAssignment parse_assignment(std::istream &in) {
  int n = 0;
  if (!(in >> n) || n < 0)
    throw IoFailure("assignment: missing element count");
  OrientationAssignment o(n);
  std::vector<char> seen(o.values().size(), 0);
  int a, b, c;
  std::string s;
  while (in >> a >> b >> c >> s) {
    if (!(1 <= a && a < b && b < c && c <= n) || (s != "+" && s != "-"))
      throw IoFailure("assignment: bad triple line");
    o.set(a, b, c, s == "+");
    seen[triple_rank(n, a, b, c)] = 1;
  }
  for (char v : seen)
    if (!v)
      throw IoFailure("assignment: missing triples");
  return o;
}

} // namespace holesat
