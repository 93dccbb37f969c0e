#pragma once

#include <array>
#include <optional>

#include "rainbow/rational.hpp"

namespace rainbow {

struct Point {
  Scalar x;
  Scalar y;

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator*(const Scalar& s, const Point& a) { return {s * a.x, s * a.y}; }

inline Scalar cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline Scalar dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }

/// Sign of the exact determinant (b-a) x (c-a).
/// +1 = counterclockwise turn, 0 = collinear, -1 = clockwise.
int orient(const Point& a, const Point& b, const Point& c);

/// Strict interior test; boundary points return false.
/// Throws if a, b, c are collinear.
bool point_in_triangle_strict(const Point& p, const Point& a, const Point& b, const Point& c);

/// If the four points are in convex position, returns indices 0..3 giving a
/// counterclockwise cyclic order of the inputs; otherwise nullopt.
/// Throws if any three of the points are collinear.
std::optional<std::array<int, 4>> is_convex_quadrilateral(const Point& a, const Point& b,
                                                          const Point& c, const Point& d);

/// L-infinity norm; exact, used for cluster radii.
Scalar linf_norm(const Point& v);

/// dist(p, line(a,b)) >= eps, compared exactly through squares.
bool line_distance_at_least(const Point& p, const Point& a, const Point& b, const Scalar& eps);

/// True iff direction u lies strictly inside the counterclockwise arc from
/// direction a to direction b (all nonzero vectors anchored at the origin).
bool ccw_strictly_between(const Point& a, const Point& u, const Point& b);

/// Comparator for sorting nonzero direction vectors counterclockwise starting
/// just above the positive x-axis. Exact; ties (parallel same-direction
/// vectors) compare equal.
bool ccw_direction_less(const Point& u, const Point& v);

}  // namespace rainbow
