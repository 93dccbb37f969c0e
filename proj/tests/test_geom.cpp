#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "rainbow/colored_set.hpp"
#include "rainbow/geom.hpp"

using namespace rainbow;

namespace {

Point pt(long long x, long long y) { return Point{Scalar(x), Scalar(y)}; }

Point rand_pt(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-50, 50), den(1, 20);
  return Point{Scalar(num(rng), den(rng)), Scalar(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("orient canonical examples") {
  CHECK(orient(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
  CHECK(orient(pt(0, 0), pt(1, 1), pt(2, 2)) == 0);
  CHECK(orient(pt(0, 0), pt(0, 1), pt(1, 0)) == -1);
}

TEST_CASE("orient antisymmetry and cyclic invariance on random rational triples") {
  std::mt19937 rng(7);
  for (int it = 0; it < 300; ++it) {
    const Point a = rand_pt(rng), b = rand_pt(rng), c = rand_pt(rng);
    const int o = orient(a, b, c);
    CHECK(orient(a, c, b) == -o);
    CHECK(orient(b, c, a) == o);
    CHECK(orient(c, a, b) == o);
  }
}

TEST_CASE("orient invariant under translation and positive scaling") {
  std::mt19937 rng(11);
  const std::vector<Scalar> scales = {Scalar(2), Scalar(1, 3), Scalar(997, 5)};
  for (int it = 0; it < 100; ++it) {
    const Point a = rand_pt(rng), b = rand_pt(rng), c = rand_pt(rng);
    const Point t = rand_pt(rng);
    const int o = orient(a, b, c);
    CHECK(orient(a + t, b + t, c + t) == o);
    for (const Scalar& s : scales) CHECK(orient(s * a, s * b, s * c) == o);
  }
}

TEST_CASE("orient exactness with denominators up to 2^256") {
  const Scalar tiny = Scalar(1) / Scalar(Int(1) << 256);
  const Point off{Scalar(123456789), Scalar(-987654321)};
  // Shrink canonical triples to width 2^-256 and translate far away; the
  // signs must be unchanged.
  auto map = [&](const Point& p) { return tiny * p + off; };
  CHECK(orient(map(pt(0, 0)), map(pt(1, 0)), map(pt(0, 1))) == 1);
  CHECK(orient(map(pt(0, 0)), map(pt(1, 1)), map(pt(2, 2))) == 0);
  CHECK(orient(map(pt(0, 0)), map(pt(0, 1)), map(pt(1, 0))) == -1);
  // A perturbation of 2^-257 below the collinear case must be detected.
  Point c = map(pt(2, 2));
  c.y -= tiny / 2;
  CHECK(orient(map(pt(0, 0)), map(pt(1, 1)), c) == -1);
}

TEST_CASE("point_in_triangle_strict examples") {
  const Point a = pt(0, 0), b = pt(3, 0), c = pt(0, 3);
  CHECK(point_in_triangle_strict(pt(1, 1), a, b, c));
  CHECK_FALSE(point_in_triangle_strict(a, a, b, c));            // vertex
  CHECK_FALSE(point_in_triangle_strict(pt(2, 2), a, b, c));     // outside edge bc
  CHECK_FALSE(point_in_triangle_strict(pt(1, 0), a, b, c));     // on edge ab
  CHECK_THROWS(point_in_triangle_strict(pt(1, 1), pt(0, 0), pt(1, 1), pt(2, 2)));
}

TEST_CASE("point_in_triangle_strict is invariant under vertex permutations") {
  std::mt19937 rng(13);
  for (int it = 0; it < 100; ++it) {
    Point a = rand_pt(rng), b = rand_pt(rng), c = rand_pt(rng), p = rand_pt(rng);
    if (orient(a, b, c) == 0) continue;
    const bool in = point_in_triangle_strict(p, a, b, c);
    CHECK(point_in_triangle_strict(p, b, c, a) == in);
    CHECK(point_in_triangle_strict(p, c, a, b) == in);
    CHECK(point_in_triangle_strict(p, a, c, b) == in);
    CHECK(point_in_triangle_strict(p, b, a, c) == in);
    CHECK(point_in_triangle_strict(p, c, b, a) == in);
  }
}

namespace {

// Validates that `order` is a counterclockwise cyclic convex ordering.
void check_convex_order(const std::vector<Point>& q, const std::array<int, 4>& order) {
  for (int i = 0; i < 4; ++i)
    CHECK(orient(q[order[i]], q[order[(i + 1) % 4]], q[order[(i + 2) % 4]]) == 1);
}

}  // namespace

TEST_CASE("is_convex_quadrilateral examples") {
  const std::vector<Point> square = {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)};
  auto o1 = is_convex_quadrilateral(square[0], square[1], square[2], square[3]);
  REQUIRE(o1.has_value());
  check_convex_order(square, *o1);

  CHECK_FALSE(is_convex_quadrilateral(pt(0, 0), pt(3, 0), pt(0, 3), pt(1, 1)).has_value());

  const std::vector<Point> conv = {pt(0, 0), pt(2, 0), pt(3, 2), pt(1, 3)};
  auto o2 = is_convex_quadrilateral(conv[0], conv[1], conv[2], conv[3]);
  REQUIRE(o2.has_value());
  check_convex_order(conv, *o2);

  CHECK_THROWS(is_convex_quadrilateral(pt(0, 0), pt(1, 1), pt(2, 2), pt(0, 5)));
}

TEST_CASE("is_convex_quadrilateral agrees with brute-force orientation check") {
  std::mt19937 rng(17);
  for (int it = 0; it < 200; ++it) {
    std::vector<Point> q = {rand_pt(rng), rand_pt(rng), rand_pt(rng), rand_pt(rng)};
    bool degenerate = false, distinct = true;
    for (int i = 0; i < 4 && !degenerate; ++i)
      for (int j = i + 1; j < 4; ++j) {
        if (q[i] == q[j]) distinct = false;
        for (int l = j + 1; l < 4; ++l)
          if (orient(q[i], q[j], q[l]) == 0) degenerate = true;
      }
    if (degenerate || !distinct) continue;
    // Convex position iff no point is inside the triangle of the other three.
    bool convex = true;
    for (int i = 0; i < 4; ++i) {
      int o[3], t = 0;
      for (int j = 0; j < 4; ++j)
        if (j != i) o[t++] = j;
      if (point_in_triangle_strict(q[i], q[o[0]], q[o[1]], q[o[2]])) convex = false;
    }
    auto res = is_convex_quadrilateral(q[0], q[1], q[2], q[3]);
    CHECK(res.has_value() == convex);
    if (res) check_convex_order(q, *res);
  }
}

TEST_CASE("is_general_position examples and oracle") {
  ColoredPointSet tri;
  tri.k = 1;
  tri.points = {pt(0, 0), pt(4, 1), pt(2, 7)};
  tri.colors = {1, 1, 1};
  CHECK(is_general_position(tri));

  ColoredPointSet bad = tri;
  bad.points.push_back(pt(8, 2));  // collinear with (0,0),(4,1)
  bad.colors.push_back(1);
  CHECK_FALSE(is_general_position(bad));

  ColoredPointSet dup = tri;
  dup.points.push_back(pt(4, 99));  // duplicate x with (4,1)
  dup.colors.push_back(1);
  CHECK_FALSE(is_general_position(dup));

  std::mt19937 rng(19);
  for (int it = 0; it < 30; ++it) {
    ColoredPointSet s;
    s.k = 1;
    for (int i = 0; i < 10; ++i) {
      s.points.push_back(rand_pt(rng));
      s.colors.push_back(1);
    }
    // Oracle: O(n^3) triple scan plus the duplicate-x scan.
    bool ok = true;
    for (int i = 0; i < 10; ++i)
      for (int j = i + 1; j < 10; ++j) {
        if (s.points[i].x == s.points[j].x) ok = false;
        for (int l = j + 1; l < 10; ++l)
          if (orient(s.points[i], s.points[j], s.points[l]) == 0) ok = false;
      }
    CHECK(is_general_position(s) == ok);
  }
}

TEST_CASE("direction predicates") {
  CHECK(linf_norm(pt(-3, 2)) == Scalar(3));
  CHECK(linf_norm(pt(1, -7)) == Scalar(7));

  CHECK(line_distance_at_least(pt(0, 5), pt(-1, 0), pt(1, 0), Scalar(5)));
  CHECK_FALSE(line_distance_at_least(pt(0, 5), pt(-1, 0), pt(1, 0), Scalar(6)));

  CHECK(ccw_strictly_between(pt(1, 0), pt(1, 1), pt(0, 1)));
  CHECK_FALSE(ccw_strictly_between(pt(1, 0), pt(1, -1), pt(0, 1)));
  CHECK_FALSE(ccw_strictly_between(pt(1, 0), pt(1, 0), pt(0, 1)));  // endpoint

  CHECK(ccw_direction_less(pt(1, 1), pt(0, 1)));
  CHECK(ccw_direction_less(pt(0, 1), pt(-1, 0)));
  CHECK(ccw_direction_less(pt(-1, 0), pt(0, -1)));
  CHECK_FALSE(ccw_direction_less(pt(2, 2), pt(1, 1)));  // parallel: equal
  CHECK_FALSE(ccw_direction_less(pt(1, 1), pt(2, 2)));
}
