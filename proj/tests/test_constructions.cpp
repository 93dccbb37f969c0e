#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "rainbow/constructions.hpp"
#include "rainbow/enumeration.hpp"
#include "rainbow/horton.hpp"

using namespace rainbow;

TEST_CASE("lower_bound_formula frozen values") {
  CHECK(lower_bound_formula(3, 3) == 1);
  CHECK(lower_bound_formula(3, 7) == 1);   // m >= k branch is m-independent
  CHECK(lower_bound_formula(4, 4) == 4);
  CHECK(lower_bound_formula(4, 9) == 4);
  CHECK(lower_bound_formula(4, 2) == 3);
  CHECK(lower_bound_formula(3, 1) == 0);
  CHECK(lower_bound_formula(5, 5) == 10);  // k(k-1)(k-2)/6
  CHECK(lower_bound_formula(8, 8) == 56);
  CHECK_THROWS(lower_bound_formula(2, 1));
  CHECK_THROWS(lower_bound_formula(3, 0));
}

TEST_CASE("closed forms equal the per-color summation") {
  for (int k = 3; k <= 40; ++k)
    for (int m = 1; m <= 40; ++m) {
      const LowerBoundBreakdown b = lower_bound_breakdown(k, m);
      CHECK(b.total == lower_bound_formula(k, m));
      Int sum = 0;
      for (const auto& pc : b.per_color) {
        CHECK(pc.r_i == std::min(pc.i, m));
        CHECK(pc.guaranteed >= 0);
        sum += pc.guaranteed;
      }
      CHECK(sum == b.total);
    }
}

TEST_CASE("lower_bound_witnesses on random sets") {
  for (std::uint64_t seed : {1u, 2u, 3u, 10u, 11u}) {
    const int k = 3 + static_cast<int>(seed % 3), m = 2 + static_cast<int>(seed % 3);
    const ColoredPointSet s = random_colored_set(k, m, seed);
    const auto wits = lower_bound_witnesses(s);
    CHECK(Int(wits.size()) >= lower_bound_formula(k, m));
    std::set<std::array<int, 4>> distinct;
    for (const PolygonWitness& w : wits) {
      CHECK(revalidate_witness(s, w));
      CHECK(w.rainbow);
      CHECK(w.empty);
      distinct.insert(w.vertices);
    }
    CHECK(distinct.size() == wits.size());
  }
}

TEST_CASE("build_upper_bound_set basic structure") {
  // m = 1 degenerates to a colored Horton set.
  const auto [s1, sched1] = build_upper_bound_set(4, 1);
  CHECK(s1.size() == 4);
  CHECK(is_horton(s1.points));
  for (int i = 0; i < 4; ++i) CHECK(s1.colors[i] == i + 1);

  const auto [s, sched] = build_upper_bound_set(5, 4);
  CHECK(s.size() == 20);
  CHECK(s.k == 5);
  CHECK(s.points_per_color() == 4);
  CHECK(is_general_position(s));
  // Epsilon schedule strictly decreasing and positive.
  REQUIRE(sched.epsilons.size() >= 2);
  for (std::size_t t = 1; t + 1 < sched.epsilons.size(); ++t)
    CHECK(sched.epsilons[t] > sched.epsilons[t + 1]);
  CHECK(sched.epsilons.back() > 0);
  // Cluster rosters partition each color class: |B'| + |B''| + fillers = m.
  for (const auto& c : sched.clusters)
    CHECK(c.paired_blockers.size() + c.gap_blockers.size() + c.fillers.size() == 4);
}

TEST_CASE("blocking obligations verify exactly at k=8, m=8") {
  const auto [s, sched] = build_upper_bound_set(8, 8);
  CHECK_FALSE(sched.obligations.empty());
  CHECK(verify_blocking(s, sched));
}

TEST_CASE("verify_theorem1_upper frozen cases") {
  const Theorem1Report r42 = verify_theorem1_upper(4, 2);
  CHECK(r42.pass);
  CHECK(r42.lower == 3);
  CHECK(r42.count >= 3);

  const Theorem1Report r84 = verify_theorem1_upper(8, 4);
  CHECK(r84.pass);
  CHECK(r84.bound == Int(384) * 64 * 4);  // m < k branch

  const Theorem1Report r612 = verify_theorem1_upper(6, 12);
  CHECK(r612.pass);
  CHECK(r612.bound == Int(384) * 36 * 12);  // m' = k + 2 ceil(log2 k) = 12
}

TEST_CASE("rainbow triangles of the construction span three distinct clusters") {
  const auto [s, sched] = build_upper_bound_set(4, 3);
  for (const PolygonWitness& w : empty_rainbow_triangles(s)) {
    std::set<ColorId> cs;
    for (int i = 0; i < 3; ++i) cs.insert(s.colors[w.vertices[i]]);
    CHECK(cs.size() == 3);  // clusters are the color classes
  }
}

TEST_CASE("lemma4 gadget determines no empty rainbow quadrilateral") {
  const ColoredPointSet g = lemma4_gadget();
  CHECK(g.size() == 9);
  CHECK(g.k == 4);
  CHECK(is_general_position(g));
  CHECK(empty_rainbow_quadrilaterals_naive(g).empty());
  CHECK(empty_rainbow_simple_nonconvex_quads(g).empty());
  CHECK_FALSE(empty_rainbow_triangles(g).empty());
  CHECK(verify_no_empty_rainbow_quad(g).ok);
}

TEST_CASE("lemma4 gadget ablations expose a rainbow quadrilateral") {
  for (int v = 0; v < 3; ++v) {
    const ColoredPointSet g = lemma4_gadget_without_pair(v);
    CHECK(g.size() == 7);
    const std::size_t convex = empty_rainbow_quadrilaterals_naive(g).size();
    const std::size_t nonconvex = empty_rainbow_simple_nonconvex_quads(g).size();
    CHECK(convex + nonconvex >= 1);
  }
  CHECK_THROWS(lemma4_gadget_without_pair(3));
}

TEST_CASE("no-rainbow-quad construction at k=4") {
  const ColoredPointSet s = build_no_rainbow_quad_set(4);
  CHECK(s.size() == 24);
  CHECK(s.k == 4);
  CHECK(s.points_per_color() == 6);  // m = 2k^2 - 8k + 6
  CHECK(is_general_position(s));
  CHECK(no_rainbow_quad_margin(4) > 0);

  const auto res = verify_no_empty_rainbow_quad(s);
  CHECK(res.ok);
  CHECK_FALSE(res.counterexample.has_value());
  // Paired enumerator cross-checked by the naive 4-subset oracle.
  CHECK(empty_rainbow_quadrilaterals(s).empty());
  CHECK(empty_rainbow_quadrilaterals_naive(s).empty());

  CHECK_THROWS(build_no_rainbow_quad_set(3));
}

TEST_CASE("verify_no_empty_rainbow_quad reports a counterexample") {
  ColoredPointSet s;
  s.k = 4;
  s.points = {Point{Scalar(0), Scalar(0)}, Point{Scalar(4), Scalar(1)},
              Point{Scalar(5), Scalar(6)}, Point{Scalar(1), Scalar(5)}};
  s.colors = {1, 2, 3, 4};
  const auto res = verify_no_empty_rainbow_quad(s);
  CHECK_FALSE(res.ok);
  REQUIRE(res.counterexample.has_value());
  CHECK(revalidate_witness(s, *res.counterexample));
}

TEST_CASE("random_colored_set is valid and deterministic") {
  for (std::uint64_t seed : {0u, 1u, 42u}) {
    const ColoredPointSet a = random_colored_set(5, 3, seed);
    const ColoredPointSet b = random_colored_set(5, 3, seed);
    CHECK(a.points == b.points);
    CHECK(a.colors == b.colors);
    CHECK(a.k == 5);
    CHECK(a.points_per_color() == 3);
    CHECK(is_general_position(a));
  }
  const ColoredPointSet a = random_colored_set(4, 3, 1);
  const ColoredPointSet c = random_colored_set(4, 3, 2);
  CHECK(a.points != c.points);  // different seeds differ
}

TEST_CASE("constructions are deterministic") {
  {
    const auto a = build_upper_bound_set(5, 4), b = build_upper_bound_set(5, 4);
    CHECK(a.first.points == b.first.points);
    CHECK(a.first.colors == b.first.colors);
  }
  {
    const auto a = build_no_rainbow_quad_set(4), b = build_no_rainbow_quad_set(4);
    CHECK(a.points == b.points);
  }
  CHECK(lemma4_gadget().points == lemma4_gadget().points);
}
