#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace holesat {

struct Point {
  mpq_class x;
  mpq_class y;

  Point() = default;
  Point(mpq_class px, mpq_class py) : x(std::move(px)), y(std::move(py)) {}
  Point(long px, long py) : x(px), y(py) {}

  friend bool operator==(const Point &a, const Point &b) {
    return a.x == b.x && a.y == b.y;
  }
};

using PointSet = std::vector<Point>;

enum class Sign : int { Negative = -1, Positive = 1 };

// Sign of det[[1,1,1],[xa,xb,xc],[ya,yb,yc]]. Throws CollinearInput on zero.
Sign orient3(const Point &pa, const Point &pb, const Point &pc);

// Raw determinant sign in {-1,0,1}; never throws.
int orient_sign(const Point &pa, const Point &pb, const Point &pc);

bool is_general_position(const PointSet &s);

// Order-type preserving map to strictly increasing x (p1 first).
// Requires p1 extremal and p2..pn counterclockwise around p1, i.e. every
// triple (p1, pi, pj) with i < j positively oriented.
PointSet normalize(const PointSet &s);

struct SubsetClass {
  bool is_gon = false;
  bool is_hole = false;
};

// idx are 0-based indices into s, pairwise distinct, at least 3 of them.
SubsetClass classify_subset(const PointSet &s, std::span<const int> idx);

// Counterclockwise convex hull vertices of s restricted to idx (0-based).
std::vector<int> convex_hull(const PointSet &s, std::span<const int> idx);

std::vector<int> hull_layers(const PointSet &s);

// Exhaustive counts over all k-subsets. When listing is non-null every
// witness subset (sorted 0-based indices) is appended to it.
std::uint64_t enumerate_holes(const PointSet &s, int k,
                              std::vector<std::vector<int>> *listing = nullptr);
std::uint64_t enumerate_gons(const PointSet &s, int k,
                             std::vector<std::vector<int>> *listing = nullptr);

// '#' starts a comment line; otherwise two integers per line.
PointSet parse_points(std::istream &in);
PointSet read_points(const std::filesystem::path &path);

} // namespace holesat
