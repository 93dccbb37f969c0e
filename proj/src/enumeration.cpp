#include "rainbow/enumeration.hpp"

#include <algorithm>
#include <boost/multiprecision/integer.hpp>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <thread>

namespace rainbow {

namespace {

struct BudgetState {
  std::atomic<std::int64_t> used{0};
  std::int64_t limit = 0;

  void charge(std::int64_t c) {
    if (used.fetch_add(c, std::memory_order_relaxed) + c > limit)
      throw BudgetExceededError{};
  }
};

int thread_count(const EnumOptions& opt, int work_items) {
  int t = opt.threads > 0 ? opt.threads
                          : static_cast<int>(std::thread::hardware_concurrency());
  if (t < 1) t = 1;
  return std::min(t, std::max(1, work_items));
}

// Strided parallel loop over [0, n); exceptions are rethrown on the caller.
void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errs(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (int i = t; i < n; i += threads) fn(i);
      } catch (...) {
        errs[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

}  // namespace

ScaledView::ScaledView(const std::vector<Point>& pts) {
  using boost::multiprecision::lcm;
  const int n = static_cast<int>(pts.size());
  Int lx = 1, ly = 1;
  for (const Point& p : pts) {
    lx = lcm(lx, den(p.x));
    ly = lcm(ly, den(p.y));
  }
  xs_.resize(n);
  ys_.resize(n);
  for (int i = 0; i < n; ++i) {
    xs_[i] = num(pts[i].x) * (lx / den(pts[i].x));
    ys_[i] = num(pts[i].y) * (ly / den(pts[i].y));
  }
  by_x_.resize(n);
  for (int i = 0; i < n; ++i) by_x_[i] = i;
  std::sort(by_x_.begin(), by_x_.end(), [&](int a, int b) { return xs_[a] < xs_[b]; });
  x_rank_.resize(n);
  for (int r = 0; r < n; ++r) x_rank_[by_x_[r]] = r;
}

int ScaledView::orient(int a, int b, int c) const {
  const Int d = (xs_[b] - xs_[a]) * (ys_[c] - ys_[a]) - (ys_[b] - ys_[a]) * (xs_[c] - xs_[a]);
  return d.sign();
}

bool ScaledView::in_triangle_strict(int p, int a, int b, int c) const {
  const int o = orient(a, b, c);
  return orient(a, b, p) == o && orient(b, c, p) == o && orient(c, a, p) == o;
}

namespace {

// Scans only points whose x-rank lies strictly between the triple's extremes;
// points outside that range cannot be interior (x-coordinates are distinct).
bool triangle_empty(const ScaledView& v, int a, int b, int c, BudgetState& budget) {
  int lo = std::min({v.x_rank()[a], v.x_rank()[b], v.x_rank()[c]});
  int hi = std::max({v.x_rank()[a], v.x_rank()[b], v.x_rank()[c]});
  budget.charge(hi - lo - 2 > 0 ? hi - lo - 2 : 1);
  for (int r = lo + 1; r < hi; ++r) {
    const int p = v.by_x()[r];
    if (p == a || p == b || p == c) continue;
    if (v.in_triangle_strict(p, a, b, c)) return false;
  }
  return true;
}

using ColorPred3 = std::function<bool(ColorId, ColorId, ColorId)>;

std::vector<PolygonWitness> enumerate_empty_triangles(const ColoredPointSet& s,
                                                      const ColorPred3& pred,
                                                      const EnumOptions& opt) {
  validate(s, /*require_equal_classes=*/false);
  const int n = s.size();
  const ScaledView view(s.points);
  BudgetState budget;
  budget.limit = opt.budget;

  std::vector<std::vector<PolygonWitness>> per_i(n);
  parallel_for(n, thread_count(opt, n), [&](int i) {
    for (int j = i + 1; j < n; ++j) {
      for (int l = j + 1; l < n; ++l) {
        if (!pred(s.colors[i], s.colors[j], s.colors[l])) continue;
        if (!triangle_empty(view, i, j, l, budget)) continue;
        PolygonWitness w;
        w.shape = Shape::Triangle;
        w.vertices = {i, j, l, -1};
        w.convex = true;
        w.empty = true;
        w.rainbow = s.colors[i] != s.colors[j] && s.colors[i] != s.colors[l] &&
                    s.colors[j] != s.colors[l];
        per_i[i].push_back(w);
      }
    }
  });

  std::vector<PolygonWitness> out;
  for (auto& v : per_i) out.insert(out.end(), v.begin(), v.end());
  return out;
}

bool rainbow3(ColorId a, ColorId b, ColorId c) { return a != b && a != c && b != c; }

// Counterclockwise cyclic order of four points in convex position, or nullopt.
std::optional<std::array<int, 4>> convex_cyclic_order(const ScaledView& v, int a, int b, int c,
                                                      int d) {
  const int idx[4] = {a, b, c, d};
  for (int i = 0; i < 4; ++i) {
    int o[3], m = 0;
    for (int j = 0; j < 4; ++j)
      if (j != i) o[m++] = j;
    if (v.in_triangle_strict(idx[i], idx[o[0]], idx[o[1]], idx[o[2]])) return std::nullopt;
  }
  std::array<int, 4> order = {a, b, c, d};
  auto before = [&](int u, int w) { return v.orient(order[0], u, w) > 0; };
  if (!before(order[1], order[2])) std::swap(order[1], order[2]);
  if (!before(order[2], order[3])) {
    std::swap(order[2], order[3]);
    if (!before(order[1], order[2])) std::swap(order[1], order[2]);
  }
  if (v.orient(order[0], order[1], order[2]) < 0) std::reverse(order.begin() + 1, order.end());
  return order;
}

bool quad_empty(const ScaledView& v, const std::array<int, 4>& cyc, BudgetState& budget) {
  // Interior = the two triangles along the 0-2 diagonal; a set point on the
  // open diagonal would be a collinear triple.
  int lo = v.size(), hi = -1;
  for (int q : cyc) {
    lo = std::min(lo, v.x_rank()[q]);
    hi = std::max(hi, v.x_rank()[q]);
  }
  budget.charge(std::max<std::int64_t>(hi - lo, 1));
  for (int r = lo + 1; r < hi; ++r) {
    const int p = v.by_x()[r];
    if (p == cyc[0] || p == cyc[1] || p == cyc[2] || p == cyc[3]) continue;
    if (v.in_triangle_strict(p, cyc[0], cyc[1], cyc[2]) ||
        v.in_triangle_strict(p, cyc[0], cyc[2], cyc[3]))
      return false;
  }
  return true;
}

using ColorPred4 = std::function<bool(ColorId, ColorId, ColorId, ColorId)>;

std::vector<PolygonWitness> enumerate_empty_convex_quads_naive(const ColoredPointSet& s,
                                                               const ColorPred4& pred,
                                                               const EnumOptions& opt) {
  validate(s, false);
  const int n = s.size();
  const ScaledView view(s.points);
  BudgetState budget;
  budget.limit = opt.budget;

  std::vector<std::vector<PolygonWitness>> per_i(n);
  parallel_for(n, thread_count(opt, n), [&](int i) {
    for (int j = i + 1; j < n; ++j)
      for (int l = j + 1; l < n; ++l)
        for (int m = l + 1; m < n; ++m) {
          if (!pred(s.colors[i], s.colors[j], s.colors[l], s.colors[m])) continue;
          budget.charge(1);
          auto cyc = convex_cyclic_order(view, i, j, l, m);
          if (!cyc || !quad_empty(view, *cyc, budget)) continue;
          PolygonWitness w;
          w.shape = Shape::Quadrilateral;
          w.vertices = {i, j, l, m};
          w.convex = true;
          w.empty = true;
          std::set<ColorId> cs = {s.colors[i], s.colors[j], s.colors[l], s.colors[m]};
          w.rainbow = cs.size() == 4;
          per_i[i].push_back(w);
        }
  });
  std::vector<PolygonWitness> out;
  for (auto& v : per_i) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace

std::vector<PolygonWitness> empty_triangles_naive(const ColoredPointSet& s,
                                                  const EnumOptions& opt) {
  return enumerate_empty_triangles(
      s, [](ColorId, ColorId, ColorId) { return true; }, opt);
}

std::vector<PolygonWitness> empty_rainbow_triangles(const ColoredPointSet& s,
                                                    const EnumOptions& opt) {
  return enumerate_empty_triangles(s, rainbow3, opt);
}

std::vector<PolygonWitness> empty_rainbow_quadrilaterals(const ColoredPointSet& s,
                                                         const EnumOptions& opt) {
  // Diagonal pairing: an empty convex rainbow quadrilateral splits along
  // either diagonal into two empty rainbow triangles sharing that edge.
  std::vector<PolygonWitness> tris = empty_rainbow_triangles(s, opt);
  const ScaledView view(s.points);

  std::map<std::pair<int, int>, std::vector<int>> thirds;
  for (const PolygonWitness& t : tris) {
    const int a = t.vertices[0], b = t.vertices[1], c = t.vertices[2];
    thirds[{a, b}].push_back(c);
    thirds[{a, c}].push_back(b);
    thirds[{b, c}].push_back(a);
  }

  std::set<std::array<int, 4>> quads;
  for (const auto& [edge, ws] : thirds) {
    const auto [u, v] = edge;
    std::vector<int> left, right;
    for (int w : ws) (view.orient(u, v, w) > 0 ? left : right).push_back(w);
    for (int w1 : left) {
      for (int w2 : right) {
        if (s.colors[w1] == s.colors[w2]) continue;
        // Convex position with diagonal (u,v) also needs u and v on opposite
        // sides of line(w1,w2).
        if (view.orient(w1, w2, u) == view.orient(w1, w2, v)) continue;
        std::array<int, 4> key = {u, v, w1, w2};
        std::sort(key.begin(), key.end());
        quads.insert(key);
      }
    }
  }

  std::vector<PolygonWitness> out;
  for (const auto& key : quads) {
    PolygonWitness w;
    w.shape = Shape::Quadrilateral;
    w.vertices = key;
    w.convex = true;
    w.empty = true;
    w.rainbow = true;
    out.push_back(w);
  }
  return out;
}

std::vector<PolygonWitness> empty_rainbow_quadrilaterals_naive(const ColoredPointSet& s,
                                                               const EnumOptions& opt) {
  return enumerate_empty_convex_quads_naive(
      s,
      [](ColorId a, ColorId b, ColorId c, ColorId d) {
        return a != b && a != c && a != d && b != c && b != d && c != d;
      },
      opt);
}

std::vector<PolygonWitness> empty_rainbow_simple_nonconvex_quads(const ColoredPointSet& s,
                                                                 const EnumOptions& opt) {
  validate(s, false);
  const int n = s.size();
  const ScaledView view(s.points);
  BudgetState budget;
  budget.limit = opt.budget;

  std::vector<std::vector<PolygonWitness>> per_i(n);
  parallel_for(n, thread_count(opt, n), [&](int i) {
    for (int j = i + 1; j < n; ++j)
      for (int l = j + 1; l < n; ++l)
        for (int m = l + 1; m < n; ++m) {
          const int idx[4] = {i, j, l, m};
          std::set<ColorId> cs = {s.colors[i], s.colors[j], s.colors[l], s.colors[m]};
          if (cs.size() != 4) continue;
          budget.charge(1);
          // Find the reflex vertex (inside the triangle of the other three).
          int inner = -1, outer[3] = {-1, -1, -1};
          for (int t = 0; t < 4 && inner < 0; ++t) {
            int o[3], mm = 0;
            for (int u = 0; u < 4; ++u)
              if (u != t) o[mm++] = idx[u];
            if (view.in_triangle_strict(idx[t], o[0], o[1], o[2])) {
              inner = idx[t];
              outer[0] = o[0];
              outer[1] = o[1];
              outer[2] = o[2];
            }
          }
          if (inner < 0) continue;  // convex position
          // Three simple realizations: notch the inner point toward each side
          // of the outer triangle; interior = outer triangle minus the tent.
          bool any_empty = false;
          for (int cut = 0; cut < 3 && !any_empty; ++cut) {
            const int X = outer[cut], Y = outer[(cut + 1) % 3];
            bool empty = true;
            for (int p = 0; p < n && empty; ++p) {
              if (p == i || p == j || p == l || p == m) continue;
              budget.charge(1);
              if (view.in_triangle_strict(p, outer[0], outer[1], outer[2]) &&
                  !view.in_triangle_strict(p, X, inner, Y))
                empty = false;
            }
            any_empty = empty;
          }
          if (!any_empty) continue;
          PolygonWitness w;
          w.shape = Shape::Quadrilateral;
          w.vertices = {i, j, l, m};
          w.convex = false;
          w.empty = true;
          w.rainbow = true;
          per_i[i].push_back(w);
        }
  });
  std::vector<PolygonWitness> out;
  for (auto& v : per_i) out.insert(out.end(), v.begin(), v.end());
  return out;
}

bool has_r_hole(const ColoredPointSet& s, int r, const EnumOptions& opt) {
  if (r < 3 || r > 7) throw std::invalid_argument("has_r_hole: r must be in [3,7]");
  validate(s, false);
  const int n = s.size();
  // Exhaustive-scan guard: C(n,r) * n elementary checks must fit the budget.
  double combos = 1;
  for (int t = 0; t < r; ++t) combos = combos * (n - t) / (t + 1);
  if (combos * n > static_cast<double>(opt.budget))
    throw BudgetExceededError{};

  const ScaledView view(s.points);
  std::vector<int> pick(r);
  std::function<bool(int, int)> rec = [&](int start, int depth) -> bool {
    if (depth == r) {
      // Convex position: the subset's convex hull uses all r points.
      // Points are scanned in x-order, so pick is x-sorted already if we
      // iterate indices in x order; iterate hull via monotone chain.
      std::vector<int> ptsx = pick;
      std::sort(ptsx.begin(), ptsx.end(),
                [&](int a, int b) { return view.x_rank()[a] < view.x_rank()[b]; });
      std::vector<int> hull;  // lower then upper
      auto build = [&](bool upper) {
        std::vector<int> chain;
        for (int t = 0; t < r; ++t) {
          const int p = ptsx[upper ? r - 1 - t : t];
          while (chain.size() >= 2 &&
                 view.orient(chain[chain.size() - 2], chain.back(), p) <= 0)
            chain.pop_back();
          chain.push_back(p);
        }
        return chain;
      };
      std::vector<int> lowc = build(false), upc = build(true);
      hull = lowc;
      hull.insert(hull.end(), upc.begin() + 1, upc.end() - 1);
      if (static_cast<int>(hull.size()) != r) return false;
      // Emptiness: hull is ccw; a point strictly inside is left of all edges.
      for (int p = 0; p < n; ++p) {
        if (std::find(pick.begin(), pick.end(), p) != pick.end()) continue;
        bool inside = true;
        for (int e = 0; e < r && inside; ++e)
          if (view.orient(hull[e], hull[(e + 1) % r], p) <= 0) inside = false;
        if (inside) return false;
      }
      return true;
    }
    for (int i = start; i < n; ++i) {
      pick[depth] = i;
      if (rec(i + 1, depth + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

EnumerationReport enumerate_report(const ColoredPointSet& s, const EnumOptions& opt,
                                   bool with_witnesses, std::optional<ShapeFilter> shape,
                                   ColorFilter color) {
  EnumerationReport rep;
  std::vector<PolygonWitness> ws;

  const bool want_tris = !shape || *shape == ShapeFilter::Triangle;
  const bool want_quads = !shape || *shape == ShapeFilter::Quadrilateral;

  if (want_tris) {
    std::vector<PolygonWitness> tris;
    if (color == ColorFilter::Rainbow) {
      tris = empty_rainbow_triangles(s, opt);
    } else {
      tris = empty_triangles_naive(s, opt);
    }
    for (const PolygonWitness& t : tris) {
      const ColorId a = s.colors[t.vertices[0]], b = s.colors[t.vertices[1]],
                    c = s.colors[t.vertices[2]];
      const bool mono = a == b && b == c;
      if (color == ColorFilter::Monochromatic && !mono) continue;
      if (color != ColorFilter::Rainbow) ++rep.empty_triangles;
      if (t.rainbow) ++rep.empty_rainbow_triangles;
      if (mono) ++rep.empty_monochromatic_triangles;
      if (color == ColorFilter::Any || (color == ColorFilter::Rainbow && t.rainbow) ||
          (color == ColorFilter::Monochromatic && mono))
        ws.push_back(t);
    }
    if (color == ColorFilter::Rainbow) rep.empty_triangles = rep.empty_rainbow_triangles;
  }

  if (want_quads) {
    std::vector<PolygonWitness> quads;
    if (color == ColorFilter::Rainbow) {
      quads = empty_rainbow_quadrilaterals(s, opt);
    } else {
      auto pred = [&](ColorId a, ColorId b, ColorId c, ColorId d) {
        if (color == ColorFilter::Monochromatic) return a == b && b == c && c == d;
        return true;
      };
      quads = enumerate_empty_convex_quads_naive(s, pred, opt);
    }
    for (const PolygonWitness& q : quads) {
      ++rep.empty_quadrilaterals;
      if (q.rainbow) ++rep.empty_rainbow_quadrilaterals;
      ws.push_back(q);
    }
  }

  if (with_witnesses) {
    std::sort(ws.begin(), ws.end());
    rep.witnesses = std::move(ws);
  }
  return rep;
}

}  // namespace rainbow
