#pragma once

#include <string>
#include <vector>

#include "rainbow/colored_set.hpp"
#include "rainbow/geom.hpp"

namespace rainbow {

/// Binary string over '0'/'1'; bit t selects the parity taken at recursion
/// depth t ('0' = even-indexed subsequence, '1' = odd-indexed).
using BinaryAddress = std::string;

struct HortonSet {
  std::vector<Point> points;  // strictly increasing x

  int size() const { return static_cast<int>(points.size()); }
};

struct VisibleEdge {
  enum class Side { Above, Below };
  int i = -1;  // i < j, indices into the x-sorted point sequence
  int j = -1;
  Side side = Side::Above;

  bool operator==(const VisibleEdge& o) const {
    return i == o.i && j == o.j && side == o.side;
  }
  bool operator<(const VisibleEdge& o) const {
    if (i != o.i) return i < o.i;
    if (j != o.j) return j < o.j;
    return side < o.side;
  }
};

/// Deterministic n-point Horton set with integer coordinates, x(p_i) = i.
/// The odd-indexed half is lifted by an exactly computed offset large enough
/// for the high-above condition; is_horton accepts the result for every n.
HortonSet generate_horton(int n);

/// Recursive check of the parity decomposition and both high-above
/// directions, all with exact orientation tests.
/// Throws on duplicate x-coordinates.
bool is_horton(const std::vector<Point>& pts);

/// Indices (into an n-point x-sorted sequence) of the subset H_s.
std::vector<int> subset_indices(int n, const BinaryAddress& s);

/// H_s by iterated parity selection. Throws if the address is too deep
/// (H_s would be empty).
HortonSet subset_by_address(const HortonSet& h, const BinaryAddress& s);

/// All visible edges per the above/below definition, sorted by (i, j).
/// Throws if the input is not a Horton set.
std::vector<VisibleEdge> visible_edges(const HortonSet& h);

/// The complete list of empty triangles of a Horton set, computed by the
/// recursive visible-edge characterization. Witnesses carry convex/empty
/// flags; rainbow is false (the set is uncolored). Sorted canonically.
/// Throws if the input is not a Horton set.
std::vector<PolygonWitness> empty_triangles_horton(const HortonSet& h);

/// Layer |s|+1 where s is the deepest address containing all three vertices.
int triangle_layer(const HortonSet& h, const PolygonWitness& t);

}  // namespace rainbow
