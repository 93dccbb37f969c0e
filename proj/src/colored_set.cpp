#include "rainbow/colored_set.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rainbow {

std::vector<int> ColoredPointSet::class_sizes() const {
  std::vector<int> sizes(k + 1, 0);
  for (ColorId c : colors) {
    if (c < 1 || c > k) throw std::invalid_argument("color id out of range");
    ++sizes[c];
  }
  return sizes;
}

bool ColoredPointSet::has_equal_color_classes() const {
  if (k < 1 || colors.size() != points.size()) return false;
  auto sizes = class_sizes();
  for (int c = 2; c <= k; ++c)
    if (sizes[c] != sizes[1]) return false;
  return k >= 1 && sizes[1] > 0;
}

int ColoredPointSet::points_per_color() const {
  if (!has_equal_color_classes())
    throw std::invalid_argument("color classes are not equal-sized");
  return class_sizes()[1];
}

bool is_general_position(const ColoredPointSet& s) {
  const int n = s.size();
  std::set<Scalar> xs;
  for (const Point& p : s.points)
    if (!xs.insert(p.x).second) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int l = j + 1; l < n; ++l)
        if (orient(s.points[i], s.points[j], s.points[l]) == 0) return false;
  return true;
}

void validate(const ColoredPointSet& s, bool require_equal_classes) {
  if (s.colors.size() != s.points.size())
    throw std::invalid_argument("colors/points length mismatch");
  if (s.k < 1) throw std::invalid_argument("k must be positive");
  for (ColorId c : s.colors)
    if (c < 1 || c > s.k) throw std::invalid_argument("color id out of range");
  if (require_equal_classes && !s.has_equal_color_classes())
    throw std::invalid_argument("color classes are not equal-sized");
  if (!is_general_position(s))
    throw std::invalid_argument("set is not in general position");
}

namespace {

bool triangle_empty(const ColoredPointSet& s, int a, int b, int c) {
  const int n = s.size();
  for (int p = 0; p < n; ++p) {
    if (p == a || p == b || p == c) continue;
    if (point_in_triangle_strict(s.points[p], s.points[a], s.points[b], s.points[c]))
      return false;
  }
  return true;
}

}  // namespace

bool revalidate_witness(const ColoredPointSet& s, const PolygonWitness& w) {
  const int n = s.size();
  const int sz = w.size();
  for (int i = 0; i < sz; ++i) {
    if (w.vertices[i] < 0 || w.vertices[i] >= n) return false;
    for (int j = i + 1; j < sz; ++j)
      if (w.vertices[i] == w.vertices[j]) return false;
  }

  if (w.shape == Shape::Triangle) {
    const int a = w.vertices[0], b = w.vertices[1], c = w.vertices[2];
    if (orient(s.points[a], s.points[b], s.points[c]) == 0) return false;
    const bool empty = triangle_empty(s, a, b, c);
    const bool rainbow = s.colors[a] != s.colors[b] && s.colors[a] != s.colors[c] &&
                         s.colors[b] != s.colors[c];
    return w.convex == true && w.empty == empty && w.rainbow == rainbow;
  }

  const Point& a = s.points[w.vertices[0]];
  const Point& b = s.points[w.vertices[1]];
  const Point& c = s.points[w.vertices[2]];
  const Point& d = s.points[w.vertices[3]];
  auto order = is_convex_quadrilateral(a, b, c, d);
  const bool convex = order.has_value();
  bool empty = false;
  if (convex) {
    // A convex quadrilateral splits into two triangles along a diagonal; a
    // point of S on the open diagonal would violate general position.
    const Point* q[4] = {&a, &b, &c, &d};
    const Point& v0 = *q[(*order)[0]];
    const Point& v1 = *q[(*order)[1]];
    const Point& v2 = *q[(*order)[2]];
    const Point& v3 = *q[(*order)[3]];
    empty = true;
    for (int p = 0; p < n && empty; ++p) {
      if (p == w.vertices[0] || p == w.vertices[1] || p == w.vertices[2] || p == w.vertices[3])
        continue;
      if (point_in_triangle_strict(s.points[p], v0, v1, v2) ||
          point_in_triangle_strict(s.points[p], v0, v2, v3))
        empty = false;
    }
  }
  std::set<ColorId> cs;
  for (int i = 0; i < 4; ++i) cs.insert(s.colors[w.vertices[i]]);
  const bool rainbow = cs.size() == 4;
  return w.convex == convex && w.empty == empty && w.rainbow == rainbow;
}

}  // namespace rainbow
