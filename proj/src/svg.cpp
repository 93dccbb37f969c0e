#include "rainbow/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "rainbow/geom.hpp"

namespace rainbow {

namespace {

// Fixed palette, cycled for k > 12.
const char* const kPalette[] = {"#e6194b", "#3cb44b", "#4363d8", "#f58231",
                                "#911eb4", "#46f0f0", "#f032e6", "#bcf60c",
                                "#008080", "#9a6324", "#800000", "#808000"};
constexpr int kPaletteSize = 12;

double to_double(const Scalar& s) { return s.convert_to<double>(); }

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::string render_svg(const ColoredPointSet& s, const std::vector<PolygonWitness>& highlights,
                       const SvgOptions& opt) {
  if (s.size() == 0) throw std::invalid_argument("render_svg: empty point set");

  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool first = true;
  for (int i = 0; i < s.size(); ++i) {
    if (opt.zoom_color != 0 && s.colors[i] != opt.zoom_color) continue;
    const double x = to_double(s.points[i].x), y = to_double(s.points[i].y);
    if (first || x < minx) minx = x;
    if (first || x > maxx) maxx = x;
    if (first || y < miny) miny = y;
    if (first || y > maxy) maxy = y;
    first = false;
  }
  if (first) throw std::invalid_argument("render_svg: zoom color has no points");
  const double spanx = std::max(maxx - minx, 1e-12), spany = std::max(maxy - miny, 1e-12);
  const double pad = 0.05 * std::max(spanx, spany);
  const double scale = opt.width / (spanx + 2 * pad);
  const int height = std::max(1, static_cast<int>((spany + 2 * pad) * scale));

  auto px = [&](const Scalar& v) { return (to_double(v) - minx + pad) * scale; };
  // SVG y grows downward; flip so plots read like the plane.
  auto py = [&](const Scalar& v) { return (maxy + pad - to_double(v)) * scale; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << opt.width << " " << height << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (const PolygonWitness& w : highlights) {
    std::vector<int> order(w.vertices.begin(), w.vertices.begin() + w.size());
    if (w.size() == 4) {
      // Draw convex witnesses in cyclic order so the polygon is simple.
      try {
        auto cyc = is_convex_quadrilateral(s.points[order[0]], s.points[order[1]],
                                           s.points[order[2]], s.points[order[3]]);
        if (cyc) {
          std::vector<int> reordered(4);
          for (int i = 0; i < 4; ++i) reordered[i] = order[(*cyc)[i]];
          order = reordered;
        }
      } catch (const std::exception&) {
        // degenerate highlight: keep stored order
      }
    }
    out << "  <polygon points=\"";
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i) out << ' ';
      out << fmt(px(s.points[order[i]].x)) << ',' << fmt(py(s.points[order[i]].y));
    }
    out << "\" fill=\"#ffd700\" fill-opacity=\"0.35\" stroke=\"#b8860b\" stroke-width=\"1\"/>\n";
  }

  for (int i = 0; i < s.size(); ++i) {
    const char* color = kPalette[(s.colors[i] - 1) % kPaletteSize];
    out << "  <circle cx=\"" << fmt(px(s.points[i].x)) << "\" cy=\"" << fmt(py(s.points[i].y))
        << "\" r=\"" << fmt(opt.point_radius) << "\" fill=\"" << color << "\"/>\n";
    if (opt.label_points) {
      out << "  <text x=\"" << fmt(px(s.points[i].x) + 4) << "\" y=\""
          << fmt(py(s.points[i].y) - 4) << "\" font-size=\"10\" fill=\"#333\">" << i
          << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace rainbow
