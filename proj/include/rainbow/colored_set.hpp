#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/geom.hpp"

namespace rainbow {

using ColorId = int;  // colors are 1..k

enum class Shape { Triangle, Quadrilateral };

/// An index tuple into a point set plus recomputable certificates.
struct PolygonWitness {
  Shape shape = Shape::Triangle;
  std::array<int, 4> vertices{-1, -1, -1, -1};  // ascending; [3] unused for triangles
  bool convex = false;
  bool empty = false;
  bool rainbow = false;

  int size() const { return shape == Shape::Triangle ? 3 : 4; }

  bool operator==(const PolygonWitness& o) const {
    return shape == o.shape && vertices == o.vertices;
  }
  bool operator<(const PolygonWitness& o) const {
    if (shape != o.shape) return shape < o.shape;
    return vertices < o.vertices;
  }
};

struct ColoredPointSet {
  std::vector<Point> points;
  std::vector<ColorId> colors;  // same length as points; 1..k
  int k = 0;

  int size() const { return static_cast<int>(points.size()); }

  /// Size of the (equal) color classes. Throws if classes are unequal.
  int points_per_color() const;

  /// True iff every class 1..k is nonempty and all classes have equal size.
  bool has_equal_color_classes() const;

  std::vector<int> class_sizes() const;  // index 0 unused
};

/// No three points collinear and all x-coordinates pairwise distinct.
bool is_general_position(const ColoredPointSet& s);

/// Throws std::invalid_argument with a description if the set is malformed
/// (bad color ids, size mismatch, degenerate geometry).
void validate(const ColoredPointSet& s, bool require_equal_classes);

/// Recomputes the convex/empty/rainbow flags of w against s and returns true
/// iff they match the stored ones (and the polygon is a genuine empty witness
/// of its kind).
bool revalidate_witness(const ColoredPointSet& s, const PolygonWitness& w);

}  // namespace rainbow
