#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rainbow/colored_set.hpp"
#include "rainbow/enumeration.hpp"
#include "rainbow/horton.hpp"

namespace rainbow {

// ---------------------------------------------------------------------------
// Lower bound (radial-sweep counting)
// ---------------------------------------------------------------------------

struct LowerBoundBreakdown {
  struct PerColor {
    int i = 0;           // 1-based color position (by x of leftmost point)
    int r_i = 0;         // min(i, m)
    Int guaranteed = 0;  // (r_i-1)(2i-r_i-2)/2, clamped at 0
  };
  std::vector<PerColor> per_color;
  Int total = 0;
};

/// Closed-form minimum number of empty rainbow triangles:
/// k(k-1)(k-2)/6 when m >= k, else
/// (3k^2 m - 3k m^2 + m^3 - 3k^2 + 3k - m)/6.
Int lower_bound_formula(int k, int m);

/// Term-by-term summation over colors; totals the same value as the closed
/// forms (checked by the acceptance suite for all k,m <= 200).
LowerBoundBreakdown lower_bound_breakdown(int k, int m);

/// Constructive re-enactment of the counting proof: per color, radially sweep
/// around each of the first r_i - 1 points of that color and harvest the
/// adjacent-pair empty rainbow triangles. Every witness is re-verified.
std::vector<PolygonWitness> lower_bound_witnesses(const ColoredPointSet& s);

// ---------------------------------------------------------------------------
// Upper bound (Horton clusters with blockers)
// ---------------------------------------------------------------------------

struct BlockerSchedule {
  std::vector<Scalar> epsilons;  // eps_1 > ... > eps_{r+1} > 0
  int r = 0;

  struct Cluster {
    int center = -1;                  // index into the Horton set
    std::vector<int> paired_blockers; // B_i' (indices into the final set)
    std::vector<int> gap_blockers;    // B_i''
    std::vector<int> fillers;
  };
  std::vector<Cluster> clusters;

  // A blocker must lie strictly inside every realized triangle with one
  // vertex in its own cluster closer to the center than the blocker itself
  // and the other two anywhere in clusters j and l.
  struct Obligation {
    int cluster = -1;      // i
    int blocker = -1;      // point index into the final set
    Scalar inner_radius;   // strict L-infinity threshold for the apex vertex
    int j = -1;            // other cluster (Horton index)
    int l = -1;
  };
  std::vector<Obligation> obligations;

  HortonSet centers;
};

/// Horton set of k points, each replaced by an m-point monochromatic cluster
/// with layered blockers. Deterministic: same (k, m) gives identical output.
std::pair<ColoredPointSet, BlockerSchedule> build_upper_bound_set(int k, int m);

/// Exhaustively checks every blocking obligation against the realized points,
/// with exact predicates. Returns false and reports nothing else on failure.
bool verify_blocking(const ColoredPointSet& s, const BlockerSchedule& schedule);

struct Theorem1Report {
  int k = 0, m = 0;
  Int count = 0;        // empty rainbow triangles of the built set
  Int bound = 0;        // 384 k^2 min{m, k + 2 ceil(log2 k)}
  Int lower = 0;        // lower_bound_formula(k, m)
  bool pass = false;    // lower <= count <= bound
  std::vector<std::int64_t> layer_histogram;  // [t] = empty rainbow triangles at layer t (1-based)
  std::vector<Int> layer_triangle_bounds;     // 8 k^2 / 2^{t-1} Horton-triangle bound per layer
};

Theorem1Report verify_theorem1_upper(int k, int m, const EnumOptions& opt = {});

// ---------------------------------------------------------------------------
// Rainbow quadrilaterals (gadget and polygon construction)
// ---------------------------------------------------------------------------

/// The three-vertex gadget with two auxiliary fourth-color points tucked near
/// each vertex; it determines no empty rainbow quadrilateral, convex or
/// simple non-convex.
ColoredPointSet lemma4_gadget();

/// The gadget with the auxiliary pair near vertex 0, 1, or 2 removed;
/// at least one empty rainbow (simple) quadrilateral appears.
ColoredPointSet lemma4_gadget_without_pair(int vertex);

/// k-colored set (k >= 4) with m = 2k^2 - 8k + 6 points per class and no
/// empty rainbow quadrilateral: clusters on a rational convex surrogate of
/// the regular (k-1)-gon plus color-k points along the rotated copy's edges.
ColoredPointSet build_no_rainbow_quad_set(int k);

/// Exact epsilon used by build_no_rainbow_quad_set(k) for the line-distance
/// margin of the color-k points (cluster radius is eps/4).
Scalar no_rainbow_quad_margin(int k);

struct NoQuadVerifyResult {
  bool ok = false;
  std::optional<PolygonWitness> counterexample;
};

NoQuadVerifyResult verify_no_empty_rainbow_quad(const ColoredPointSet& s,
                                                const EnumOptions& opt = {});

// ---------------------------------------------------------------------------
// Seeded random sets (integer grid, collinear triples and duplicate x rejected)
// ---------------------------------------------------------------------------

ColoredPointSet random_colored_set(int k, int m, std::uint64_t seed);

}  // namespace rainbow
