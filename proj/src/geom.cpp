#include "rainbow/geom.hpp"

#include <stdexcept>

namespace rainbow {

int orient(const Point& a, const Point& b, const Point& c) {
  const Scalar d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sign_of(d);
}

bool point_in_triangle_strict(const Point& p, const Point& a, const Point& b, const Point& c) {
  const int o = orient(a, b, c);
  if (o == 0) throw std::invalid_argument("point_in_triangle_strict: degenerate triangle");
  return orient(a, b, p) == o && orient(b, c, p) == o && orient(c, a, p) == o;
}

std::optional<std::array<int, 4>> is_convex_quadrilateral(const Point& a, const Point& b,
                                                          const Point& c, const Point& d) {
  const Point* pts[4] = {&a, &b, &c, &d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int l = j + 1; l < 4; ++l)
        if (orient(*pts[i], *pts[j], *pts[l]) == 0)
          throw std::invalid_argument("is_convex_quadrilateral: collinear triple");

  // One point inside the triangle of the other three rules out convex position.
  for (int i = 0; i < 4; ++i) {
    int o[3];
    int n = 0;
    for (int j = 0; j < 4; ++j)
      if (j != i) o[n++] = j;
    if (point_in_triangle_strict(*pts[i], *pts[o[0]], *pts[o[1]], *pts[o[2]]))
      return std::nullopt;
  }

  // Convex position: order 0, then the rest counterclockwise around point 0's
  // hull neighbors. With only four points, sort 1..3 by angle around 0 using
  // orientation; the result is the hull order up to starting point.
  std::array<int, 4> order = {0, 1, 2, 3};
  // Insertion sort of the three others into ccw order as seen from point 0,
  // anchored at direction to point 1.
  auto before = [&](int u, int v) {
    // u precedes v in ccw order around pts[0], starting at pts[order[1]].
    return orient(*pts[0], *pts[u], *pts[v]) > 0;
  };
  if (!before(order[1], order[2])) std::swap(order[1], order[2]);
  if (!before(order[2], order[3])) {
    std::swap(order[2], order[3]);
    if (!before(order[1], order[2])) std::swap(order[1], order[2]);
  }
  // For points in convex position this angular order around a vertex is the
  // cyclic hull order.
  return order;
}

Scalar linf_norm(const Point& v) {
  Scalar ax = abs_of(v.x), ay = abs_of(v.y);
  return ax > ay ? ax : ay;
}

bool line_distance_at_least(const Point& p, const Point& a, const Point& b, const Scalar& eps) {
  const Point u = b - a;
  const Scalar twice_area = cross(u, p - a);
  return twice_area * twice_area >= eps * eps * dot(u, u);
}

namespace {
// Half-plane rank for ccw ordering starting just above the positive x-axis:
// 0 for vectors with (y > 0) or (y == 0 && x > 0), 1 otherwise.
int half(const Point& v) {
  if (v.y > 0 || (v.y == 0 && v.x > 0)) return 0;
  return 1;
}
}  // namespace

bool ccw_direction_less(const Point& u, const Point& v) {
  const int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  return cross(u, v) > 0;
}

bool ccw_strictly_between(const Point& a, const Point& u, const Point& b) {
  const Scalar c = cross(a, b);
  if (c > 0) return cross(a, u) > 0 && cross(u, b) > 0;
  if (c < 0) return cross(a, u) > 0 || cross(u, b) > 0;
  // a and b parallel: same direction -> empty open arc; opposite -> half plane.
  if (dot(a, b) > 0) return false;
  return cross(a, u) > 0;
}

}  // namespace rainbow
