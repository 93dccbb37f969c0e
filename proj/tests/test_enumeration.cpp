#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "rainbow/constructions.hpp"
#include "rainbow/enumeration.hpp"
#include "rainbow/geom.hpp"
#include "rainbow/horton.hpp"

using namespace rainbow;

namespace {

Point pt(long long x, long long y) { return Point{Scalar(x), Scalar(y)}; }

ColoredPointSet make_set(std::vector<Point> pts, std::vector<ColorId> colors, int k) {
  ColoredPointSet s;
  s.points = std::move(pts);
  s.colors = std::move(colors);
  s.k = k;
  return s;
}

std::set<std::array<int, 4>> vertex_sets(const std::vector<PolygonWitness>& ws) {
  std::set<std::array<int, 4>> out;
  for (const PolygonWitness& w : ws) out.insert(w.vertices);
  return out;
}

}  // namespace

TEST_CASE("empty_triangles_naive examples") {
  CHECK(empty_triangles_naive(make_set({pt(0, 0), pt(3, 1), pt(1, 4)}, {1, 1, 1}, 1)).size() == 1);

  // 4 points in convex position: all 4 triples are empty.
  const auto convex4 =
      make_set({pt(0, 0), pt(4, 1), pt(5, 6), pt(1, 5)}, {1, 1, 1, 1}, 1);
  CHECK(empty_triangles_naive(convex4).size() == 4);

  // One point inside the triangle of the other three: 3 empty sub-triangles.
  const auto inner4 = make_set({pt(0, 0), pt(6, 0), pt(1, 6), pt(2, 1)}, {1, 1, 1, 1}, 1);
  const auto ts = empty_triangles_naive(inner4);
  CHECK(ts.size() == 3);
  for (const PolygonWitness& w : ts) {
    CHECK(w.empty);
    CHECK(w.convex);
    CHECK(revalidate_witness(inner4, w));
  }

  CHECK_THROWS(empty_triangles_naive(make_set({pt(0, 0), pt(1, 1), pt(2, 2)}, {1, 1, 1}, 1)));
}

TEST_CASE("empty_rainbow_triangles examples") {
  CHECK(empty_rainbow_triangles(make_set({pt(0, 0), pt(3, 1), pt(1, 4)}, {1, 2, 3}, 3)).size() == 1);
  CHECK(empty_rainbow_triangles(make_set({pt(0, 0), pt(4, 1), pt(5, 6), pt(1, 5)},
                                         {1, 1, 1, 1}, 1))
            .empty());

  // Equals the rainbow filter of the naive enumeration on random sets.
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    const ColoredPointSet s = random_colored_set(4, 3, seed);
    std::vector<PolygonWitness> filtered;
    for (const PolygonWitness& w : empty_triangles_naive(s))
      if (w.rainbow) filtered.push_back(w);
    CHECK(vertex_sets(empty_rainbow_triangles(s)) == vertex_sets(filtered));
  }
}

TEST_CASE("empty_rainbow_quadrilaterals examples") {
  // 4 points, 4 colors, convex position, nothing else: exactly 1.
  const auto q4 = make_set({pt(0, 0), pt(4, 1), pt(5, 6), pt(1, 5)}, {1, 2, 3, 4}, 4);
  CHECK(empty_rainbow_quadrilaterals(q4).size() == 1);
  CHECK(empty_rainbow_quadrilaterals_naive(q4).size() == 1);

  // A 5th point inside kills it (and the count still matches the oracle).
  // (3,2) lies inside triangle {0,1,2}, so the other rainbow 4-subset
  // {0,1,2,4} is not in convex position either.
  const auto q5 = make_set({pt(0, 0), pt(4, 1), pt(5, 6), pt(1, 5), pt(3, 2)},
                           {1, 2, 3, 4, 4}, 4);
  CHECK(vertex_sets(empty_rainbow_quadrilaterals(q5)) ==
        vertex_sets(empty_rainbow_quadrilaterals_naive(q5)));
  CHECK(empty_rainbow_quadrilaterals(q5).empty());
}

TEST_CASE("non-convex rainbow 4-gons are reported separately") {
  // (2,1) lies inside the triangle of the other three: the 4-subset is
  // non-convex, so there is no convex quadrilateral, but an empty simple
  // (reflex) one exists.
  const auto s = make_set({pt(0, 0), pt(6, 0), pt(1, 6), pt(2, 1)}, {1, 2, 3, 4}, 4);
  CHECK(empty_rainbow_quadrilaterals(s).empty());
  const auto nc = empty_rainbow_simple_nonconvex_quads(s);
  CHECK(nc.size() == 1);
  CHECK_FALSE(nc[0].convex);
  CHECK(nc[0].rainbow);
}

TEST_CASE("optimized vs naive on random sets") {
  std::mt19937 rng(23);
  for (int it = 0; it < 60; ++it) {
    const ColoredPointSet s = random_colored_set(3 + it % 3, 2 + it % 2, 1000 + it);
    CHECK(vertex_sets(empty_rainbow_quadrilaterals(s)) ==
          vertex_sets(empty_rainbow_quadrilaterals_naive(s)));
  }
}

TEST_CASE("has_r_hole examples") {
  // Any 5 points in general position contain a 4-hole.
  const auto s5 = make_set({pt(0, 0), pt(4, 1), pt(5, 6), pt(1, 5), pt(2, 3)},
                           {1, 1, 1, 1, 1}, 1);
  CHECK(has_r_hole(s5, 4));

  // Horton sets contain no 7-hole.
  HortonSet h = generate_horton(16);
  ColoredPointSet hs;
  hs.k = 1;
  hs.points = h.points;
  hs.colors.assign(16, 1);
  CHECK_FALSE(has_r_hole(hs, 7));

  // 7 points in convex position (on a parabola): a 7-hole.
  ColoredPointSet par;
  par.k = 1;
  for (int i = 0; i < 7; ++i) {
    par.points.push_back(pt(i, i * i));
    par.colors.push_back(1);
  }
  CHECK(has_r_hole(par, 7));

  CHECK_THROWS(has_r_hole(s5, 2));
  CHECK_THROWS(has_r_hole(s5, 8));
}

TEST_CASE("budget guard throws BudgetExceededError") {
  const ColoredPointSet s = random_colored_set(4, 3, 77);
  EnumOptions tiny;
  tiny.budget = 5;
  CHECK_THROWS_AS(empty_triangles_naive(s, tiny), BudgetExceededError);
  CHECK_THROWS_AS(empty_rainbow_quadrilaterals_naive(s, tiny), BudgetExceededError);
  CHECK_THROWS_AS(has_r_hole(s, 5, tiny), BudgetExceededError);
}

TEST_CASE("thread count does not change results") {
  const ColoredPointSet s = random_colored_set(4, 4, 99);
  EnumOptions one, four;
  one.threads = 1;
  four.threads = 4;
  CHECK(empty_triangles_naive(s, one) == empty_triangles_naive(s, four));
  CHECK(empty_rainbow_quadrilaterals(s, one) == empty_rainbow_quadrilaterals(s, four));
}

TEST_CASE("color permutation invariance") {
  const ColoredPointSet s = random_colored_set(4, 3, 5);
  ColoredPointSet relabeled = s;
  const int perm[5] = {0, 3, 1, 4, 2};  // bijection on {1..4}
  for (ColorId& c : relabeled.colors) c = perm[c];
  const auto a = enumerate_report(s);
  const auto b = enumerate_report(relabeled);
  CHECK(a.empty_triangles == b.empty_triangles);
  CHECK(a.empty_rainbow_triangles == b.empty_rainbow_triangles);
  CHECK(a.empty_monochromatic_triangles == b.empty_monochromatic_triangles);
}

TEST_CASE("orientation-preserving affine invariance") {
  const ColoredPointSet s = random_colored_set(4, 3, 9);
  ColoredPointSet mapped = s;
  // (x, y) -> (2x + 1, x + 3y - 2): determinant 6 > 0, x-order preserved.
  for (Point& p : mapped.points) {
    const Scalar nx = 2 * p.x + 1, ny = p.x + 3 * p.y - 2;
    p = Point{nx, ny};
  }
  REQUIRE(is_general_position(mapped));
  const auto a = enumerate_report(s);
  const auto b = enumerate_report(mapped);
  CHECK(a.empty_triangles == b.empty_triangles);
  CHECK(a.empty_rainbow_triangles == b.empty_rainbow_triangles);
  CHECK(vertex_sets(empty_rainbow_triangles(s)) == vertex_sets(empty_rainbow_triangles(mapped)));
}

TEST_CASE("enumerate_report is consistent with the witness lists") {
  const ColoredPointSet s = random_colored_set(4, 3, 42);
  const auto rep = enumerate_report(s, {}, /*with_witnesses=*/true,
                                    ShapeFilter::Triangle, ColorFilter::Rainbow);
  REQUIRE(rep.witnesses.has_value());
  CHECK(static_cast<std::int64_t>(rep.witnesses->size()) == rep.empty_rainbow_triangles);
  for (const PolygonWitness& w : *rep.witnesses) CHECK(revalidate_witness(s, w));
  CHECK(rep.empty_rainbow_triangles + rep.empty_monochromatic_triangles <=
        rep.empty_triangles);

  const auto all = enumerate_report(s);
  CHECK(all.empty_triangles ==
        static_cast<std::int64_t>(empty_triangles_naive(s).size()));
}
