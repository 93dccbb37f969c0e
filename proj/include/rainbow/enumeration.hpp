#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rainbow/colored_set.hpp"

namespace rainbow {

struct BudgetExceededError : std::runtime_error {
  BudgetExceededError() : std::runtime_error("enumeration budget exceeded") {}
};

struct EnumOptions {
  std::int64_t budget = 1'000'000'000;  // elementary predicate calls
  int threads = 0;                      // 0 = hardware concurrency
};

struct EnumerationReport {
  std::int64_t empty_triangles = 0;
  std::int64_t empty_rainbow_triangles = 0;
  std::int64_t empty_monochromatic_triangles = 0;
  std::int64_t empty_quadrilaterals = 0;  // convex 4-holes under the active filter
  std::int64_t empty_rainbow_quadrilaterals = 0;
  // Simple but non-convex rainbow 4-gons admitting an empty realization,
  // reported separately; "quadrilateral" elsewhere always means convex.
  std::int64_t empty_rainbow_simple_nonconvex_quads = 0;
  std::optional<std::vector<PolygonWitness>> witnesses;
};

/// Integer-scaled copy of a point set. Independent positive scaling of each
/// axis preserves every orientation sign, so all predicates run on integers.
class ScaledView {
 public:
  explicit ScaledView(const std::vector<Point>& pts);

  int size() const { return static_cast<int>(xs_.size()); }
  int orient(int a, int b, int c) const;
  bool in_triangle_strict(int p, int a, int b, int c) const;

  /// Indices sorted by x; used to prune emptiness scans to the x-range of the
  /// candidate polygon.
  const std::vector<int>& by_x() const { return by_x_; }
  /// Rank of index i in the x-order.
  const std::vector<int>& x_rank() const { return x_rank_; }

 private:
  std::vector<Int> xs_, ys_;
  std::vector<int> by_x_, x_rank_;
};

/// All empty triangles, O(n^4) with x-range pruning; deterministic index order.
std::vector<PolygonWitness> empty_triangles_naive(const ColoredPointSet& s,
                                                  const EnumOptions& opt = {});

/// Empty triangles with three pairwise-distinct vertex colors.
std::vector<PolygonWitness> empty_rainbow_triangles(const ColoredPointSet& s,
                                                    const EnumOptions& opt = {});

/// Empty convex rainbow quadrilaterals via diagonal pairing of empty rainbow
/// triangles; contract: equals the naive 4-subset scan.
std::vector<PolygonWitness> empty_rainbow_quadrilaterals(const ColoredPointSet& s,
                                                         const EnumOptions& opt = {});

/// Independent oracle: direct scan of all 4-subsets.
std::vector<PolygonWitness> empty_rainbow_quadrilaterals_naive(const ColoredPointSet& s,
                                                               const EnumOptions& opt = {});

/// Non-convex 4-subsets with four distinct colors that admit an empty simple
/// quadrilateral (one of the three reflex realizations has empty interior).
std::vector<PolygonWitness> empty_rainbow_simple_nonconvex_quads(const ColoredPointSet& s,
                                                                 const EnumOptions& opt = {});

/// True iff some r-subset (3 <= r <= 7) is in convex position and empty.
bool has_r_hole(const ColoredPointSet& s, int r, const EnumOptions& opt = {});

enum class ShapeFilter { Triangle, Quadrilateral };
enum class ColorFilter { Any, Rainbow, Monochromatic };

EnumerationReport enumerate_report(const ColoredPointSet& s, const EnumOptions& opt = {},
                                   bool with_witnesses = false,
                                   std::optional<ShapeFilter> shape = std::nullopt,
                                   ColorFilter color = ColorFilter::Any);

}  // namespace rainbow
