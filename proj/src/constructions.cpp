#include "rainbow/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace rainbow {

namespace {

int ceil_log2(int k) {
  int t = 0;
  while ((1 << t) < k) ++t;
  return t;
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

/// Nearest multiple of 2^-bits.
Scalar snap_to_grid(const Scalar& v, int bits) {
  Int n = (num(v) << (bits + 1)) + den(v);
  Int q = floor_div(n, den(v) << 1);
  return Scalar(q, Int(1) << bits);
}

/// Positive rational q with q^2 <= s.
Scalar sqrt_lower(const Scalar& s) {
  if (!(s > 0)) throw std::logic_error("sqrt_lower of non-positive value");
  for (int shift = 32; shift <= 8192; shift += 32) {
    Int t = floor_div(num(s) << (2 * shift), den(s));
    Int a = boost::multiprecision::sqrt(t);
    if (a > 0) return Scalar(a, Int(1) << shift);
  }
  throw std::logic_error("sqrt_lower underflow");
}

Scalar line_dist_sq(const Point& p, const Point& a, const Point& b) {
  Point u = b - a, w = p - a;
  Scalar cr = cross(u, w);
  return cr * cr / dot(u, u);
}

Point line_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  Point u = b - a, v = d - c;
  Scalar denom = cross(u, v);
  if (denom == 0) throw std::logic_error("parallel lines in line_intersect");
  Scalar t = cross(c - a, v) / denom;
  return a + t * u;
}

Point unit_linf(const Point& d) {
  Scalar n = linf_norm(d);
  if (n == 0) throw std::logic_error("zero direction");
  return {d.x / n, d.y / n};
}

/// A direction strictly inside the counterclockwise arc from a to c, with
/// balanced angular margin to both endpoints whenever possible.
Point direction_between(const Point& a, const Point& c) {
  Point ua = unit_linf(a), uc = unit_linf(c);
  std::vector<Point> candidates;
  int s = sign_of(cross(a, c));
  if (s > 0) {
    candidates.push_back(ua + uc);
  } else if (s < 0) {
    candidates.push_back(Point{-(ua.x + uc.x), -(ua.y + uc.y)});
  } else if (sign_of(dot(a, c)) < 0) {
    candidates.push_back(Point{-a.y, a.x});
  } else {
    candidates.push_back(Point{-a.x, -a.y});
  }
  // Fallback: rotate off a by ever smaller counterclockwise nudges.
  Scalar mu(1, 8);
  Point perp{-ua.y, ua.x};
  for (int i = 0; i < 64; ++i, mu /= 8) candidates.push_back(ua + mu * perp);
  for (const Point& cand : candidates) {
    if (cand.x == 0 && cand.y == 0) continue;
    if (ccw_strictly_between(a, cand, c)) return cand;
  }
  throw std::logic_error("direction_between found no admissible direction");
}

/// Rotates dir by a tiny seed-dependent counterclockwise angle while staying
/// strictly inside the arc from lo to hi. De-aligns blocker directions that
/// would otherwise be exactly parallel or antipodal (e.g. the two flanking
/// blockers of a singleton arc with a singleton complement).
Point skew_into_gap(const Point& dir, const Point& lo, const Point& hi, int seed) {
  const Point u = unit_linf(dir);
  const Point perp{-u.y, u.x};
  Scalar delta(1, 1024 + 64 * seed);
  for (int it = 0; it < 512; ++it, delta /= 2) {
    Point cand = u + delta * perp;
    if (ccw_strictly_between(lo, cand, hi)) return cand;
  }
  throw std::logic_error("skew_into_gap: no admissible rotation");
}

/// Strict membership of direction u in the (< pi) wedge spanned by d1, d2.
bool wedge_contains(const Point& d1, const Point& d2, const Point& u) {
  int s = sign_of(cross(d1, d2));
  if (s > 0) return sign_of(cross(d1, u)) > 0 && sign_of(cross(u, d2)) > 0;
  if (s < 0) return sign_of(cross(d2, u)) > 0 && sign_of(cross(u, d1)) > 0;
  throw std::logic_error("degenerate wedge");
}

/// Orientation sign invariant under moving each vertex anywhere within its
/// L-infinity eps-square. The determinant is multi-affine per coordinate, so
/// checking the 64 corner combinations is exact.
bool triple_orient_stable(const Point& a, const Point& b, const Point& c, const Scalar& e) {
  int s0 = orient(a, b, c);
  if (s0 == 0) return false;
  for (int mask = 0; mask < 64; ++mask) {
    Point pa{a.x + ((mask & 1) ? e : -e), a.y + ((mask & 2) ? e : -e)};
    Point pb{b.x + ((mask & 4) ? e : -e), b.y + ((mask & 8) ? e : -e)};
    Point pc{c.x + ((mask & 16) ? e : -e), c.y + ((mask & 32) ? e : -e)};
    if (orient(pa, pb, pc) != s0) return false;
  }
  return true;
}

/// count points on a flat upward parabola arc through center, all strictly
/// within L-infinity distance radius/2 of center, no three collinear.
std::vector<Point> parabola_points(const Point& center, const Scalar& radius, int count,
                                   int jitter) {
  std::vector<Point> out;
  Scalar flat = Scalar(1) + Scalar(jitter, 64);
  for (int j = 0; j < count; ++j) {
    Scalar u = radius * Scalar(2 * (j + 1) - (count + 1), 2 * (count + 1));
    Scalar v = u * u / (radius * flat);
    out.push_back(Point{center.x + u, center.y + v});
  }
  return out;
}

PolygonWitness make_triangle(int a, int b, int c) {
  std::array<int, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  PolygonWitness w;
  w.shape = Shape::Triangle;
  w.vertices = {v[0], v[1], v[2], -1};
  w.convex = true;
  return w;
}

bool triangle_is_empty(const ColoredPointSet& s, int a, int b, int c) {
  for (int p = 0; p < s.size(); ++p) {
    if (p == a || p == b || p == c) continue;
    if (point_in_triangle_strict(s.points[p], s.points[a], s.points[b], s.points[c]))
      return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Lower bound
// ---------------------------------------------------------------------------

Int lower_bound_formula(int k, int m) {
  if (k < 3 || m < 1) throw std::invalid_argument("lower_bound_formula: need k >= 3, m >= 1");
  Int K = k, M = m;
  Int numerator;
  if (m >= k)
    numerator = K * (K - 1) * (K - 2);
  else
    numerator = 3 * K * K * M - 3 * K * M * M + M * M * M - 3 * K * K + 3 * K - M;
  if (numerator < 0) numerator = 0;
  if (numerator % 6 != 0) throw std::logic_error("lower_bound_formula: non-integral value");
  return numerator / 6;
}

LowerBoundBreakdown lower_bound_breakdown(int k, int m) {
  if (k < 3 || m < 1) throw std::invalid_argument("lower_bound_breakdown: need k >= 3, m >= 1");
  LowerBoundBreakdown out;
  for (int i = 1; i <= k; ++i) {
    int r = std::min(i, m);
    Int term = Int(r - 1) * (2 * i - r - 2);
    if (term < 0) term = 0;
    if (term % 2 != 0) throw std::logic_error("lower_bound_breakdown: odd term");
    term /= 2;
    out.per_color.push_back({i, r, term});
    out.total += term;
  }
  return out;
}

std::vector<PolygonWitness> lower_bound_witnesses(const ColoredPointSet& s) {
  validate(s, true);
  const int k = s.k;
  const int m = s.points_per_color();

  std::vector<int> leftmost(k + 1, -1);
  for (int i = 0; i < s.size(); ++i) {
    int c = s.colors[i];
    if (leftmost[c] < 0 || s.points[i].x < s.points[leftmost[c]].x) leftmost[c] = i;
  }
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return s.points[leftmost[a]].x < s.points[leftmost[b]].x; });

  std::set<PolygonWitness> out;
  for (int pos = 1; pos <= k; ++pos) {
    const int c = order[pos - 1];
    const int r = std::min(pos, m);
    std::vector<int> mine;
    for (int i = 0; i < s.size(); ++i)
      if (s.colors[i] == c) mine.push_back(i);
    std::sort(mine.begin(), mine.end(),
              [&](int a, int b) { return s.points[a].x < s.points[b].x; });

    for (int j = 0; j < r - 1; ++j) {
      const int q = mine[j];
      std::vector<int> left;
      for (int i = 0; i < s.size(); ++i)
        if (s.points[i].x < s.points[q].x) left.push_back(i);
      if (left.size() < 2) continue;
      // All directions point into the open left half-plane, so a single cross
      // product is a total counterclockwise order.
      std::sort(left.begin(), left.end(), [&](int a, int b) {
        return sign_of(cross(s.points[a] - s.points[q], s.points[b] - s.points[q])) > 0;
      });
      for (std::size_t t = 0; t + 1 < left.size(); ++t) {
        const int a = left[t], b = left[t + 1];
        if (s.colors[a] == s.colors[b] || s.colors[a] == c || s.colors[b] == c) continue;
        PolygonWitness w = make_triangle(a, b, q);
        if (!triangle_is_empty(s, a, b, q))
          throw std::logic_error("radial-sweep harvest produced a non-empty triangle");
        w.empty = true;
        w.rainbow = true;
        out.insert(w);
      }
    }
  }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Upper bound
// ---------------------------------------------------------------------------

namespace {

/// Members of the depth-t parity subset containing index i (an n-point
/// x-sorted sequence splits by index parity, recursively).
bool same_subtree(int i, int j, int t) { return (i & ((1 << t) - 1)) == (j & ((1 << t) - 1)); }

int subtree_size(int n, int i, int t) {
  int c = 0;
  for (int j = 0; j < n; ++j)
    if (same_subtree(i, j, t)) ++c;
  return c;
}

}  // namespace

std::pair<ColoredPointSet, BlockerSchedule> build_upper_bound_set(int k, int m) {
  if (k < 1 || m < 1) throw std::invalid_argument("build_upper_bound_set: need k, m >= 1");
  const HortonSet h = generate_horton(k);
  const int r = std::max(1, std::min(ceil_log2(k) + 2, (m + 1) / 2));

  // Base cluster radius: small enough that every orientation of distinct
  // cluster centers is stable under arbitrary in-square perturbations.
  Scalar eps1(1, 4);
  for (int guard = 0;; ++guard) {
    if (guard > 256) throw std::logic_error("no stable cluster radius found");
    bool ok = true;
    for (int a = 0; a < k && ok; ++a)
      for (int b = a + 1; b < k && ok; ++b)
        for (int c = b + 1; c < k && ok; ++c)
          ok = triple_orient_stable(h.points[a], h.points[b], h.points[c], eps1);
    if (ok) break;
    eps1 /= 2;
  }

  std::string last_failure = "none";
  for (int attempt = 0; attempt < 40; ++attempt) {
    // Retries both widen the ratio between consecutive radius layers and
    // shrink the base radius: the former tightens in-cluster apex deviations,
    // the latter the angular deviation contributed by far clusters.
    const Int M = Int(4) << attempt;
    std::vector<Scalar> eps(r + 2);  // eps[1..r+1]
    eps[1] = eps1 / (Int(1) << attempt);
    for (int t = 2; t <= r + 1; ++t) eps[t] = eps[t - 1] / Scalar(M);

    ColoredPointSet s;
    s.k = k;
    BlockerSchedule sched;
    sched.epsilons.assign(eps.begin() + 1, eps.end());
    sched.r = r;
    sched.centers = h;
    int g = attempt * 7;  // seeds the distinct per-blocker radius factors
    bool built = true;

    for (int i = 0; i < k && built; ++i) {
      BlockerSchedule::Cluster cl;
      cl.center = i;
      const Point pi = h.points[i];
      const int base = s.size();
      std::vector<Point> cpts;
      std::vector<BlockerSchedule::Obligation> obls;  // blocker index local to cpts

      int depth = 0;
      while (subtree_size(k, i, depth) > 1) ++depth;

      auto place_blocker = [&](const Point& dir, const Scalar& level_radius) {
        Scalar factor(15 + g, 16 + g);
        ++g;
        Scalar rho = level_radius * factor;
        Point q = pi + (rho / linf_norm(dir)) * dir;
        cpts.push_back(q);
        return static_cast<int>(cpts.size()) - 1;
      };

      // Paired blockers flanking each sibling subtree's direction arc.
      for (int t = 0; t + 2 <= depth; ++t) {
        if (static_cast<int>(cl.paired_blockers.size()) > m - 2) break;
        std::vector<int> T, O;
        for (int j = 0; j < k; ++j) {
          if (j == i || !same_subtree(i, j, t)) continue;
          (same_subtree(i, j, t + 1) ? O : T).push_back(j);
        }
        if (T.empty()) continue;
        if (O.empty()) throw std::logic_error("own subtree emptied too early");

        struct Entry {
          int j;
          bool sibling;
          Point dir;
        };
        std::vector<Entry> es;
        for (int j : T) es.push_back({j, true, h.points[j] - pi});
        for (int j : O) es.push_back({j, false, h.points[j] - pi});
        std::sort(es.begin(), es.end(),
                  [](const Entry& a, const Entry& b) { return ccw_direction_less(a.dir, b.dir); });
        const int ne = static_cast<int>(es.size());
        int start = -1, end = -1, transitions = 0;
        for (int a = 0; a < ne; ++a) {
          int p = (a + ne - 1) % ne;
          if (es[a].sibling != es[p].sibling) ++transitions;
          if (es[a].sibling && !es[p].sibling) start = a;
          if (!es[a].sibling && es[p].sibling) end = p;
        }
        if (transitions != 2 || start < 0 || end < 0)
          throw std::logic_error("sibling directions are not angularly contiguous");

        const Point lo1 = es[(start + ne - 1) % ne].dir, hi1 = es[start].dir;
        const Point lo2 = es[end].dir, hi2 = es[(end + 1) % ne].dir;
        Point bdir1 = skew_into_gap(direction_between(lo1, hi1), lo1, hi1, g);
        Point bdir2 = skew_into_gap(direction_between(lo2, hi2), lo2, hi2, g + 1);
        int b1 = place_blocker(bdir1, eps[t + 1]);
        int b2 = place_blocker(bdir2, eps[t + 1]);
        cl.paired_blockers.push_back(b1);
        cl.paired_blockers.push_back(b2);

        for (int x : T) {
          for (int y : O) {
            const Point dx = h.points[x] - pi, dy = h.points[y] - pi;
            int b;
            if (wedge_contains(dy, dx, bdir1))
              b = b1;
            else if (wedge_contains(dy, dx, bdir2))
              b = b2;
            else
              throw std::logic_error("sibling wedge misses both flanking blockers");
            obls.push_back({i, b, eps[t + 2], x, y});
          }
        }
      }

      // Gap blockers between angularly consecutive sibling members.
      if (m - static_cast<int>(cl.paired_blockers.size()) >= k) {
        for (int t = 0; t + 1 <= depth; ++t) {
          std::vector<int> T;
          for (int j = 0; j < k; ++j)
            if (j != i && same_subtree(i, j, t) && !same_subtree(i, j, t + 1)) T.push_back(j);
          if (T.size() < 2) continue;
          std::sort(T.begin(), T.end(), [&](int a, int b) {
            return ccw_direction_less(h.points[a] - pi, h.points[b] - pi);
          });
          const int nt = static_cast<int>(T.size());
          for (int a = 0; a < nt; ++a) {
            int u = T[a], v = T[(a + 1) % nt];
            const Point du = h.points[u] - pi, dv = h.points[v] - pi;
            if (sign_of(cross(du, dv)) <= 0) continue;  // reflex wrap gap
            Point bdir = skew_into_gap(direction_between(du, dv), du, dv, g);
            int b = place_blocker(bdir, eps[r]);
            cl.gap_blockers.push_back(b);
            obls.push_back({i, b, eps[r + 1], u, v});
          }
        }
      }

      // Fillers close to the center, beneath every blocking threshold.
      const int f = m - static_cast<int>(cpts.size());
      if (f < 0) throw std::logic_error("cluster blocker budget overflow");
      for (const Point& p : parabola_points(pi, eps[r + 1], f, attempt)) {
        cpts.push_back(p);
        cl.fillers.push_back(static_cast<int>(cpts.size()) - 1);
      }

      for (const Point& p : cpts) {
        s.points.push_back(p);
        s.colors.push_back(i + 1);
      }
      for (int& idx : cl.paired_blockers) idx += base;
      for (int& idx : cl.gap_blockers) idx += base;
      for (int& idx : cl.fillers) idx += base;
      for (auto& ob : obls) {
        ob.blocker += base;
        sched.obligations.push_back(ob);
      }
      sched.clusters.push_back(std::move(cl));
    }

    if (built) {
      if (!is_general_position(s))
        last_failure = "general position";
      else if (!verify_blocking(s, sched))
        last_failure = "blocking obligations";
      else
        return {s, sched};
    }
  }
  throw std::logic_error("build_upper_bound_set: no radius schedule verified (last failure: " +
                         last_failure + ")");
}

bool verify_blocking(const ColoredPointSet& s, const BlockerSchedule& sched) {
  const int k = static_cast<int>(sched.clusters.size());
  if (s.k != k || sched.centers.size() != k) return false;
  std::vector<std::vector<int>> by_cluster(k);
  for (int i = 0; i < s.size(); ++i) {
    int c = s.colors[i] - 1;
    if (c < 0 || c >= k) return false;
    by_cluster[c].push_back(i);
  }
  for (const auto& ob : sched.obligations) {
    if (ob.cluster < 0 || ob.cluster >= k || ob.j < 0 || ob.j >= k || ob.l < 0 || ob.l >= k)
      return false;
    const Point& b = s.points[ob.blocker];
    const Point& center = sched.centers.points[ob.cluster];
    for (int a : by_cluster[ob.cluster]) {
      if (a == ob.blocker) continue;
      if (!(linf_norm(s.points[a] - center) < ob.inner_radius)) continue;
      for (int x : by_cluster[ob.j]) {
        for (int y : by_cluster[ob.l]) {
          try {
            if (!point_in_triangle_strict(b, s.points[a], s.points[x], s.points[y])) return false;
          } catch (const std::exception&) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

Theorem1Report verify_theorem1_upper(int k, int m, const EnumOptions& opt) {
  auto [s, sched] = build_upper_bound_set(k, m);
  const auto wits = empty_rainbow_triangles(s, opt);

  Theorem1Report rep;
  rep.k = k;
  rep.m = m;
  rep.count = static_cast<long long>(wits.size());
  rep.lower = lower_bound_formula(k, m);
  rep.bound = Int(384) * k * k * std::min<long long>(m, k + 2LL * ceil_log2(k));
  rep.pass = rep.lower <= rep.count && rep.count <= rep.bound;

  rep.layer_histogram.assign(2, 0);
  for (const auto& w : wits) {
    std::array<int, 3> cs{s.colors[w.vertices[0]] - 1, s.colors[w.vertices[1]] - 1,
                          s.colors[w.vertices[2]] - 1};
    std::sort(cs.begin(), cs.end());
    PolygonWitness tw = make_triangle(cs[0], cs[1], cs[2]);
    int layer = triangle_layer(sched.centers, tw);
    if (layer >= static_cast<int>(rep.layer_histogram.size()))
      rep.layer_histogram.resize(layer + 1, 0);
    ++rep.layer_histogram[layer];
  }
  rep.layer_triangle_bounds.assign(rep.layer_histogram.size(), 0);
  for (std::size_t t = 1; t < rep.layer_triangle_bounds.size(); ++t)
    rep.layer_triangle_bounds[t] = (Int(8) * k * k) / (Int(1) << (t - 1));
  return rep;
}

// ---------------------------------------------------------------------------
// Gadget
// ---------------------------------------------------------------------------

namespace {

ColoredPointSet gadget_full() {
  const Point A{0, 12}, B{-11, -8}, C{12, -9};
  // One point at fraction `along` toward the next vertex, offset `off` toward
  // the previous one; the pinwheel keeps every auxiliary point strictly
  // interior while each pair alone blocks the quadrilateral cut over the
  // opposite edge.
  auto aux = [](const Point& v, const Point& w, const Point& u, const Scalar& along,
                const Scalar& off) { return v + along * (w - v) + off * (u - v); };
  const Scalar hi_along(1, 8), hi_off(1, 128), lo_along(1, 12), lo_off(1, 96);

  ColoredPointSet s;
  s.k = 4;
  s.points = {A,
              B,
              C,
              aux(A, B, C, hi_along, hi_off),
              aux(A, B, C, lo_along, lo_off),
              aux(B, C, A, hi_along, hi_off),
              aux(B, C, A, lo_along, lo_off),
              aux(C, A, B, hi_along, hi_off),
              aux(C, A, B, lo_along, lo_off)};
  s.colors = {1, 2, 3, 4, 4, 4, 4, 4, 4};
  return s;
}

}  // namespace

ColoredPointSet lemma4_gadget() { return gadget_full(); }

ColoredPointSet lemma4_gadget_without_pair(int vertex) {
  if (vertex < 0 || vertex > 2)
    throw std::invalid_argument("lemma4_gadget_without_pair: vertex must be 0, 1, or 2");
  ColoredPointSet s = gadget_full();
  const int a = 3 + 2 * vertex;
  s.points.erase(s.points.begin() + a, s.points.begin() + a + 2);
  s.colors.erase(s.colors.begin() + a, s.colors.begin() + a + 2);
  return s;
}

// ---------------------------------------------------------------------------
// No-rainbow-quadrilateral construction
// ---------------------------------------------------------------------------

namespace {

struct NoquadBuild {
  ColoredPointSet set;
  Scalar eps;
};

NoquadBuild build_noquad_impl(int k) {
  if (k < 4) throw std::invalid_argument("build_no_rainbow_quad_set: need k >= 4");
  const int N = k - 1;
  const int m = 2 * k * k - 8 * k + 6;

  for (int attempt = 0; attempt < 16; ++attempt) {
    // 2N rational points exactly on the unit circle (tangent half-angle
    // parameterization), alternating cluster centers and chord anchors.
    const int grid = 20 + 2 * attempt;
    std::vector<Point> v(2 * N);
    bool good = true;
    for (int j = 0; j < 2 * N; ++j) {
      const double theta = M_PI * (j + 0.25 + attempt / 16.0) / N;
      const double t = std::tan(theta / 2);
      const long long a = std::llround(t * static_cast<double>(1LL << grid));
      const Scalar tr(Int(a), Int(1) << grid);
      const Scalar dn = Scalar(1) + tr * tr;
      v[j] = Point{(Scalar(1) - tr * tr) / dn, (2 * tr) / dn};
    }
    for (int j = 0; j < 2 * N && good; ++j)
      good = orient(v[j], v[(j + 1) % (2 * N)], v[(j + 2) % (2 * N)]) > 0;
    if (!good) continue;

    // Color-k points: two per wedge (center, consecutive far pair), sitting
    // just behind the chord in front of the center, snapped to a fine
    // power-of-two grid to keep common denominators small.
    struct ZPoint {
      Point p;
      int seg, q1, q2;  // indices into v
    };
    std::vector<ZPoint> zs;
    int g = 0;
    for (int i = 0; i < N && good; ++i) {
      const Point pi = v[2 * i];
      const Point e1 = v[(2 * i + 2 * N - 1) % (2 * N)], e2 = v[2 * i + 1];
      for (int u = 0; u < N && good; ++u) {
        const int u2 = (u + 1) % N;
        if (u == i || u2 == i) continue;
        const Point q1 = v[2 * u], q2 = v[2 * u2];
        const Point w1 = line_intersect(pi, q1, e1, e2);
        const Point w2 = line_intersect(pi, q2, e1, e2);
        for (const Scalar& lam : {Scalar(3, 8), Scalar(5, 8)}) {
          Point z = w1 + lam * (w2 - w1);
          const Scalar nu(64 + 3 * g + attempt, 1 << 22);
          ++g;
          z = z + nu * (pi - z);
          Scalar d2 = std::min(line_dist_sq(z, pi, q1), line_dist_sq(z, pi, q2));
          int bits = grid;
          while (Scalar(64) > d2 * Scalar(Int(1) << (2 * bits)) && bits < 8192) ++bits;
          Point zp{snap_to_grid(z.x, bits), snap_to_grid(z.y, bits)};
          if (!point_in_triangle_strict(zp, pi, q1, q2)) {
            good = false;
            break;
          }
          zs.push_back({zp, i, 2 * u, 2 * u2});
        }
      }
    }
    if (!good) continue;
    if (static_cast<int>(zs.size()) != m)
      throw std::logic_error("color-k point count does not match the class size");

    // Exact margin: every color-k point keeps at least eps distance to both
    // of its wedge lines; clusters use radius eps/4.
    Scalar min_sq(-1);
    auto lower = [&](const Scalar& c) {
      if (min_sq < 0 || c < min_sq) min_sq = c;
    };
    for (const auto& z : zs) {
      lower(line_dist_sq(z.p, v[2 * z.seg], v[z.q1]));
      lower(line_dist_sq(z.p, v[2 * z.seg], v[z.q2]));
    }
    for (int i = 0; i < N; ++i)
      lower(line_dist_sq(v[2 * i], v[(2 * i + 2 * N - 1) % (2 * N)], v[2 * i + 1]) / 16);
    for (int a = 0; a < 2 * N; ++a)
      for (int b = a + 1; b < 2 * N; ++b) lower(dot(v[a] - v[b], v[a] - v[b]) / 16);
    const Scalar eps = sqrt_lower(min_sq);
    const Scalar radius = eps / 4;

    ColoredPointSet s;
    s.k = k;
    for (int i = 0; i < N; ++i) {
      for (const Point& p : parabola_points(v[2 * i], radius, m, attempt)) {
        s.points.push_back(p);
        s.colors.push_back(i + 1);
      }
    }
    for (const auto& z : zs) {
      s.points.push_back(z.p);
      s.colors.push_back(k);
    }
    if (!is_general_position(s)) continue;
    return {std::move(s), eps};
  }
  throw std::logic_error("build_no_rainbow_quad_set: no general-position realization found");
}

}  // namespace

ColoredPointSet build_no_rainbow_quad_set(int k) { return build_noquad_impl(k).set; }

Scalar no_rainbow_quad_margin(int k) { return build_noquad_impl(k).eps; }

NoQuadVerifyResult verify_no_empty_rainbow_quad(const ColoredPointSet& s,
                                                const EnumOptions& opt) {
  NoQuadVerifyResult res;
  auto qs = empty_rainbow_quadrilaterals(s, opt);
  if (!qs.empty()) {
    res.ok = false;
    res.counterexample = qs.front();
  } else {
    res.ok = true;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Random sets
// ---------------------------------------------------------------------------

ColoredPointSet random_colored_set(int k, int m, std::uint64_t seed) {
  if (k < 1 || m < 1) throw std::invalid_argument("random_colored_set: need k, m >= 1");
  const int n = k * m;
  std::mt19937_64 rng(seed);
  const long long side = std::max<long long>(64, 16LL * n);
  std::uniform_int_distribution<long long> coord(0, side - 1);

  std::vector<Point> pts;
  std::set<long long> used_x;
  long long guard = 0;
  while (static_cast<int>(pts.size()) < n) {
    if (++guard > 1000LL * n + 100000)
      throw std::runtime_error("random_colored_set: rejection sampling stalled");
    const long long x = coord(rng), y = coord(rng);
    if (used_x.count(x)) continue;
    Point c{Scalar(x), Scalar(y)};
    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; ++i)
      for (std::size_t j = i + 1; j < pts.size() && ok; ++j)
        ok = orient(pts[i], pts[j], c) != 0;
    if (!ok) continue;
    used_x.insert(x);
    pts.push_back(std::move(c));
  }

  std::vector<ColorId> colors;
  for (int c = 1; c <= k; ++c) colors.insert(colors.end(), m, c);
  std::shuffle(colors.begin(), colors.end(), rng);

  ColoredPointSet s;
  s.points = std::move(pts);
  s.colors = std::move(colors);
  s.k = k;
  return s;
}

}  // namespace rainbow
