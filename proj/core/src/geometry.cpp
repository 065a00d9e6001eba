#include "holesat/geometry.hpp"

#include "holesat/errors.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

namespace holesat {

int orient_sign(const Point &pa, const Point &pb, const Point &pc) {
  // det[[1,1,1],[xa,xb,xc],[ya,yb,yc]] = (xb-xa)(yc-ya) - (xc-xa)(yb-ya)
  mpq_class d = (pb.x - pa.x) * (pc.y - pa.y) - (pc.x - pa.x) * (pb.y - pa.y);
  return sgn(d);
}

Sign orient3(const Point &pa, const Point &pb, const Point &pc) {
  int s = orient_sign(pa, pb, pc);
  if (s == 0)
    throw CollinearInput("collinear triple (" + pa.x.get_str() + "," +
                         pa.y.get_str() + "), (" + pb.x.get_str() + "," +
                         pb.y.get_str() + "), (" + pc.x.get_str() + "," +
                         pc.y.get_str() + ")");
  return s > 0 ? Sign::Positive : Sign::Negative;
}

bool is_general_position(const PointSet &s) {
  const int n = static_cast<int>(s.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (orient_sign(s[a], s[b], s[c]) == 0)
          return false;
  return true;
}

namespace {

// Orientation of every index triple, computed once with exact arithmetic.
class SignTable {
public:
  explicit SignTable(const PointSet &s) : n_(static_cast<int>(s.size())) {
    sign_.assign(static_cast<std::size_t>(n_) * n_ * n_, 0);
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        for (int c = b + 1; c < n_; ++c) {
          int v = static_cast<int>(orient3(s[a], s[b], s[c]));
          // fill all six permutations
          set(a, b, c, v);
          set(b, c, a, v);
          set(c, a, b, v);
          set(b, a, c, -v);
          set(a, c, b, -v);
          set(c, b, a, -v);
        }
  }

  int operator()(int a, int b, int c) const {
    return sign_[(static_cast<std::size_t>(a) * n_ + b) * n_ + c];
  }

  // q strictly inside triangle abc
  bool inside(int q, int a, int b, int c) const {
    int s1 = (*this)(a, b, q);
    return s1 == (*this)(b, c, q) && s1 == (*this)(c, a, q);
  }

  int size() const { return n_; }

private:
  void set(int a, int b, int c, int v) {
    sign_[(static_cast<std::size_t>(a) * n_ + b) * n_ + c] =
        static_cast<signed char>(v);
  }

  int n_;
  std::vector<signed char> sign_;
};

void check_gp(const PointSet &s) {
  if (!is_general_position(s))
    throw CollinearInput("point set is not in general position");
}

} // namespace

PointSet normalize(const PointSet &s) {
  const int n = static_cast<int>(s.size());
  if (n <= 1)
    return s;
  check_gp(s);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (orient3(s[0], s[i], s[j]) != Sign::Positive)
        throw PreconditionViolated(
            "p1 is not extremal or p2..pn are not sorted counterclockwise "
            "around p1 (points " +
            std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");

  // Translate p1 to the origin.
  std::vector<Point> q(n);
  for (int i = 0; i < n; ++i)
    q[i] = Point(s[i].x - s[0].x, s[i].y - s[0].y);

  // Linear map M with det M > 0 sending direction q2 to (-1,3) and qn to
  // (-3,1). All directions lie in the cone spanned by q2 and qn, so their
  // images lie strictly inside the second quadrant.
  mpq_class d11, d12, d21, d22; // columns q2 and a second direction
  d11 = q[1].x;
  d21 = q[1].y;
  mpq_class t11 = -1, t21 = 3, t12, t22;
  if (n >= 3) {
    d12 = q[n - 1].x;
    d22 = q[n - 1].y;
    t12 = -3;
    t22 = 1;
  } else {
    d12 = -q[1].y;
    d22 = q[1].x;
    t12 = -3;
    t22 = -1;
  }
  mpq_class det = d11 * d22 - d12 * d21; // positive by the radial order
  // M = T * D^{-1}
  mpq_class i11 = d22 / det, i12 = -d12 / det, i21 = -d21 / det,
            i22 = d11 / det;
  mpq_class m11 = t11 * i11 + t12 * i21, m12 = t11 * i12 + t12 * i22;
  mpq_class m21 = t21 * i11 + t22 * i21, m22 = t21 * i12 + t22 * i22;
  for (int i = 1; i < n; ++i) {
    mpq_class x = m11 * q[i].x + m12 * q[i].y;
    mpq_class y = m21 * q[i].x + m22 * q[i].y;
    q[i] = Point(x, y);
  }

  std::vector<int> want;
  want.reserve(static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        want.push_back(orient_sign(s[a], s[b], s[c]));

  // Lift p1 to (0, eps) and apply (x,y) -> (-x/y, 1/y), which has
  // determinant +1 on homogeneous coordinates; all y are positive.
  mpq_class eps(1, 2);
  for (int attempt = 0; attempt < 4096; ++attempt) {
    PointSet out(n);
    out[0] = Point(mpq_class(0), 1 / eps);
    for (int i = 1; i < n; ++i)
      out[i] = Point(-q[i].x / q[i].y, 1 / q[i].y);
    bool ok = true;
    std::size_t t = 0;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b)
        for (int c = b + 1; c < n && ok; ++c)
          ok = orient_sign(out[a], out[b], out[c]) == want[t++];
    for (int i = 1; i < n && ok; ++i)
      ok = out[i - 1].x < out[i].x;
    if (ok)
      return out;
    eps /= 2;
  }
  throw PreconditionViolated("normalize: epsilon search did not converge");
}

std::vector<int> convex_hull(const PointSet &s, std::span<const int> idx) {
  std::vector<int> p(idx.begin(), idx.end());
  std::sort(p.begin(), p.end(), [&](int a, int b) {
    if (s[a].x != s[b].x)
      return s[a].x < s[b].x;
    return s[a].y < s[b].y;
  });
  if (p.size() < 3)
    return p;
  std::vector<int> h(2 * p.size());
  std::size_t k = 0;
  for (int i : p) {
    while (k >= 2 && orient_sign(s[h[k - 2]], s[h[k - 1]], s[i]) <= 0)
      --k;
    h[k++] = i;
  }
  for (std::size_t t = p.size() - 1, lo = k + 1; t-- > 0;) {
    int i = p[t];
    while (k >= lo && orient_sign(s[h[k - 2]], s[h[k - 1]], s[i]) <= 0)
      --k;
    h[k++] = i;
  }
  h.resize(k - 1);
  return h;
}

SubsetClass classify_subset(const PointSet &s, std::span<const int> idx) {
  const int n = static_cast<int>(s.size());
  for (int i : idx)
    if (i < 0 || i >= n)
      throw PreconditionViolated("classify_subset: index out of range");
  if (idx.size() < 3)
    throw PreconditionViolated("classify_subset: need at least 3 points");
  SubsetClass r;
  std::vector<int> hull = convex_hull(s, idx);
  r.is_gon = hull.size() == idx.size();
  if (!r.is_gon)
    return r;
  std::vector<char> member(n, 0);
  for (int i : idx)
    member[i] = 1;
  r.is_hole = true;
  const std::size_t h = hull.size();
  for (int q = 0; q < n && r.is_hole; ++q) {
    if (member[q])
      continue;
    bool in = true;
    for (std::size_t e = 0; e < h && in; ++e)
      in = orient_sign(s[hull[e]], s[hull[(e + 1) % h]], s[q]) > 0;
    if (in)
      r.is_hole = false;
  }
  return r;
}

std::vector<int> hull_layers(const PointSet &s) {
  check_gp(s);
  std::vector<int> rest(s.size());
  std::iota(rest.begin(), rest.end(), 0);
  std::vector<int> layers;
  while (!rest.empty()) {
    std::vector<int> hull = convex_hull(s, rest);
    layers.push_back(static_cast<int>(hull.size()));
    std::vector<char> on(s.size(), 0);
    for (int i : hull)
      on[i] = 1;
    std::erase_if(rest, [&](int i) { return on[i] != 0; });
  }
  return layers;
}

namespace {

struct SubsetSearch {
  const SignTable &t;
  int k;
  bool holes;
  std::vector<char> empty_tri; // holes only
  std::vector<int> cur;
  std::uint64_t count = 0;
  std::vector<std::vector<int>> *listing;

  bool tri_empty(int a, int b, int c) const {
    const int n = t.size();
    return empty_tri[(static_cast<std::size_t>(a) * n + b) * n + c] != 0;
  }

  // Can p (larger than every element of cur) be added?
  bool extendable(int p) const {
    const std::size_t m = cur.size();
    if (holes) {
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
          if (!tri_empty(cur[i], cur[j], p))
            return false;
      return true;
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        for (std::size_t l = j + 1; l < m; ++l)
          if (t.inside(p, cur[i], cur[j], cur[l]))
            return false;
        for (std::size_t l = 0; l < m; ++l)
          if (l != i && l != j && t.inside(cur[l], cur[i], cur[j], p))
            return false;
      }
    return true;
  }

  void run(int from) {
    if (static_cast<int>(cur.size()) == k) {
      ++count;
      if (listing)
        listing->push_back(cur);
      return;
    }
    const int n = t.size();
    for (int p = from; p <= n - (k - static_cast<int>(cur.size())); ++p) {
      if (!extendable(p))
        continue;
      cur.push_back(p);
      run(p + 1);
      cur.pop_back();
    }
  }
};

std::uint64_t search(const PointSet &s, int k, bool holes,
                     std::vector<std::vector<int>> *listing) {
  const int n = static_cast<int>(s.size());
  if (k < 3 || k > n)
    return 0;
  SignTable t(s);
  SubsetSearch ss{t, k, holes, {}, {}, 0, listing};
  if (holes) {
    ss.empty_tri.assign(static_cast<std::size_t>(n) * n * n, 0);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) {
          bool e = true;
          for (int q = 0; q < n && e; ++q)
            if (q != a && q != b && q != c && t.inside(q, a, b, c))
              e = false;
          ss.empty_tri[(static_cast<std::size_t>(a) * n + b) * n + c] = e;
        }
  }
  ss.run(0);
  return ss.count;
}

} // namespace

std::uint64_t enumerate_holes(const PointSet &s, int k,
                              std::vector<std::vector<int>> *listing) {
  return search(s, k, true, listing);
}

std::uint64_t enumerate_gons(const PointSet &s, int k,
                             std::vector<std::vector<int>> *listing) {
  return search(s, k, false, listing);
}

PointSet parse_points(std::istream &in) {
  PointSet out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    std::istringstream ls(line);
    std::string xs, ys, extra;
    if (!(ls >> xs >> ys) || (ls >> extra))
      throw IoFailure("point file line " + std::to_string(lineno) +
                      ": expected two integers");
    mpz_class x, y;
    if (x.set_str(xs, 10) != 0 || y.set_str(ys, 10) != 0)
      throw IoFailure("point file line " + std::to_string(lineno) +
                      ": not an integer");
    out.emplace_back(mpq_class(x), mpq_class(y));
  }
  return out;
}

PointSet read_points(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw IoFailure("cannot open " + path.string());
  return parse_points(in);
}

} // namespace holesat
