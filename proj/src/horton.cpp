#include "rainbow/horton.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rainbow {

namespace {

// y-values for x = 0..n-1. The odd-indexed half is lifted by an offset
// derived from exact max/min/span evaluations: any line through two points of
// a set with vertical span S, evaluated across a window of width n, stays
// within S*(n-1) of the set's y-range (same-parity x-gaps are at least 1).
std::vector<Scalar> horton_ys(int n) {
  if (n == 1) return {Scalar(0)};
  const int n0 = (n + 1) / 2;  // even indices
  const int n1 = n / 2;        // odd indices
  std::vector<Scalar> a = horton_ys(n0);
  std::vector<Scalar> b = horton_ys(n1);

  auto span = [](const std::vector<Scalar>& v) {
    auto [mn, mx] = std::minmax_element(v.begin(), v.end());
    return std::pair<Scalar, Scalar>(*mn, *mx);
  };
  const auto [min_a, max_a] = span(a);
  const auto [min_b, max_b] = span(b);
  const Scalar span_a = max_a - min_a;
  const Scalar span_b = max_b - min_b;
  const Scalar delta = (max_a - min_b) + Scalar(n) * std::max(span_a, span_b) + 1;

  std::vector<Scalar> ys(n);
  for (int i = 0; i < n0; ++i) ys[2 * i] = a[i];
  for (int i = 0; i < n1; ++i) ys[2 * i + 1] = b[i] + delta;
  return ys;
}

// Convex hull vertices (monotone chain, exact arithmetic). Collinear hull
// points are dropped; they are never the unique extremizer of an affine form.
std::vector<Point> hull_vertices(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Point& a, const Point& b) {
                          return a.x == b.x && a.y == b.y;
                        }),
            pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return pts;
  std::vector<Point> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

// Every line through two points of hi is above every point of lo, and every
// line through two points of lo is below every point of hi. orient is affine
// in each argument, so extremes over hi x hi x lo occur at hull vertices;
// checking hull vertices only is exact.
bool high_above(const std::vector<Point>& hi_all, const std::vector<Point>& lo_all) {
  // The orient signs below encode "q below line(a, b)" and rely on a.x < b.x,
  // so restore x-order after the hull computation.
  std::vector<Point> hi = hull_vertices(hi_all);
  std::vector<Point> lo = hull_vertices(lo_all);
  auto by_x = [](const Point& a, const Point& b) { return a.x < b.x; };
  std::sort(hi.begin(), hi.end(), by_x);
  std::sort(lo.begin(), lo.end(), by_x);
  for (std::size_t u = 0; u < hi.size(); ++u)
    for (std::size_t v = u + 1; v < hi.size(); ++v)
      for (const Point& q : lo)
        if (orient(hi[u], hi[v], q) >= 0) return false;
  for (std::size_t u = 0; u < lo.size(); ++u)
    for (std::size_t v = u + 1; v < lo.size(); ++v)
      for (const Point& q : hi)
        if (orient(lo[u], lo[v], q) <= 0) return false;
  return true;
}

bool is_horton_sorted(const std::vector<Point>& pts) {
  const int n = static_cast<int>(pts.size());
  if (n <= 1) return true;
  std::vector<Point> even, odd;
  for (int i = 0; i < n; ++i) (i % 2 == 0 ? even : odd).push_back(pts[i]);
  if (!high_above(odd, even)) return false;
  return is_horton_sorted(even) && is_horton_sorted(odd);
}

void require_horton(const HortonSet& h) {
  if (!is_horton(h.points)) throw std::invalid_argument("not a Horton set");
}

// Candidate addresses 1 0^t (below) or 0 1^t (above), filtered against the
// visibility definition; the filter scans intermediate same-parity points.
void collect_visible(const std::vector<Point>& pts, std::set<VisibleEdge>& out) {
  const int n = static_cast<int>(pts.size());
  for (int below = 0; below <= 1; ++below) {
    const char first = below ? '1' : '0';
    const char trail = below ? '0' : '1';
    BinaryAddress s(1, first);
    for (;; s.push_back(trail)) {
      const std::vector<int> idx = subset_indices(n, s);
      if (idx.size() < 2) break;
      for (std::size_t t = 0; t + 1 < idx.size(); ++t) {
        const int i = idx[t], j = idx[t + 1];
        bool ok = true;
        for (int l = i + 2; l < j && ok; l += 2) {
          const int o = orient(pts[i], pts[j], pts[l]);
          ok = below ? (o > 0) : (o < 0);
        }
        if (ok)
          out.insert(VisibleEdge{i, j, below ? VisibleEdge::Side::Below
                                             : VisibleEdge::Side::Above});
      }
    }
  }
}

// Empty triangles of pts (a Horton set given by original indices idx into the
// root set); emptiness is relative to pts, which coincides with emptiness in
// the root set for parity-closed subsets.
void empty_triangles_rec(const std::vector<Point>& root, const std::vector<int>& idx,
                         std::vector<PolygonWitness>& out) {
  const int n = static_cast<int>(idx.size());
  if (n < 3) return;
  std::vector<Point> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = root[idx[i]];

  std::set<VisibleEdge> edges;
  collect_visible(pts, edges);
  for (const VisibleEdge& e : edges) {
    const bool below = e.side == VisibleEdge::Side::Below;
    for (int l = below ? 0 : 1; l < n; l += 2) {
      PolygonWitness w;
      w.shape = Shape::Triangle;
      std::array<int, 3> v = {idx[e.i], idx[e.j], idx[l]};
      std::sort(v.begin(), v.end());
      w.vertices = {v[0], v[1], v[2], -1};
      w.convex = true;
      w.empty = true;
      w.rainbow = false;
      out.push_back(w);
    }
  }

  std::vector<int> even, odd;
  for (int i = 0; i < n; ++i) (i % 2 == 0 ? even : odd).push_back(idx[i]);
  empty_triangles_rec(root, even, out);
  empty_triangles_rec(root, odd, out);
}

}  // namespace

HortonSet generate_horton(int n) {
  if (n < 1) throw std::invalid_argument("generate_horton: n must be positive");
  std::vector<Scalar> ys = horton_ys(n);
  HortonSet h;
  h.points.resize(n);
  for (int i = 0; i < n; ++i) h.points[i] = Point{Scalar(i), ys[i]};
  return h;
}

bool is_horton(const std::vector<Point>& pts) {
  std::vector<Point> sorted = pts;
  std::sort(sorted.begin(), sorted.end(),
            [](const Point& a, const Point& b) { return a.x < b.x; });
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
    if (sorted[i].x == sorted[i + 1].x)
      throw std::invalid_argument("is_horton: duplicate x-coordinate");
  return is_horton_sorted(sorted);
}

std::vector<int> subset_indices(int n, const BinaryAddress& s) {
  int pattern = 0;
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (s[t] != '0' && s[t] != '1')
      throw std::invalid_argument("subset_indices: address must be binary");
    if (s[t] == '1') pattern |= 1 << t;
  }
  if (s.size() >= 31) throw std::invalid_argument("subset_indices: address too deep");
  const int mask = (1 << s.size()) - 1;
  std::vector<int> idx;
  for (int i = 0; i < n; ++i)
    if ((i & mask) == pattern) idx.push_back(i);
  return idx;
}

HortonSet subset_by_address(const HortonSet& h, const BinaryAddress& s) {
  const std::vector<int> idx = subset_indices(h.size(), s);
  if (idx.empty()) throw std::invalid_argument("subset_by_address: address too deep");
  HortonSet sub;
  for (int i : idx) sub.points.push_back(h.points[i]);
  return sub;
}

std::vector<VisibleEdge> visible_edges(const HortonSet& h) {
  require_horton(h);
  std::set<VisibleEdge> edges;
  collect_visible(h.points, edges);
  return std::vector<VisibleEdge>(edges.begin(), edges.end());
}

std::vector<PolygonWitness> empty_triangles_horton(const HortonSet& h) {
  require_horton(h);
  std::vector<PolygonWitness> out;
  std::vector<int> idx(h.size());
  for (int i = 0; i < h.size(); ++i) idx[i] = i;
  empty_triangles_rec(h.points, idx, out);
  std::sort(out.begin(), out.end());
  return out;
}

int triangle_layer(const HortonSet& h, const PolygonWitness& t) {
  (void)h;
  int a = t.vertices[0], b = t.vertices[1], c = t.vertices[2];
  int layer = 1;
  while ((a & 1) == (b & 1) && (b & 1) == (c & 1)) {
    ++layer;
    a >>= 1;
    b >>= 1;
    c >>= 1;
  }
  return layer;
}

}  // namespace rainbow
