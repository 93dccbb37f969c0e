#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rainbow/colored_set.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/enumeration.hpp"
#include "rainbow/horton.hpp"
#include "rainbow/io.hpp"
#include "rainbow/svg.hpp"

namespace {

using namespace rainbow;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::int64_t default_budget() {
  if (const char* env = std::getenv("RAINBOW_BUDGET")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("RAINBOW_BUDGET is not an integer");
    }
  }
  return 1'000'000'000;
}

ColoredPointSet horton_as_colored(int n) {
  HortonSet h = generate_horton(n);
  ColoredPointSet s;
  s.k = 1;
  s.points = h.points;
  s.colors.assign(n, 1);
  return s;
}

struct GenArgs {
  std::string kind;
  int n = 16, k = 4, m = 1;
  std::uint64_t seed = 1;
  std::optional<int> ablate;
  std::string out;
};

int run_gen(const GenArgs& a) {
  ColoredPointSet s;
  if (a.kind == "horton") {
    s = horton_as_colored(a.n);
  } else if (a.kind == "upper") {
    s = build_upper_bound_set(a.k, a.m).first;
  } else if (a.kind == "noquad") {
    s = build_no_rainbow_quad_set(a.k);
  } else if (a.kind == "gadget") {
    s = a.ablate ? lemma4_gadget_without_pair(*a.ablate) : lemma4_gadget();
  } else if (a.kind == "random") {
    s = random_colored_set(a.k, a.m, a.seed);
  } else {
    throw std::invalid_argument("unknown gen kind: " + a.kind);
  }
  save_point_set(s, a.out);
  std::cout << "kind: " << a.kind << "\n"
            << "n: " << s.size() << "\n"
            << "k: " << s.k << "\n"
            << "file: " << a.out << "\n";
  return kExitPass;
}

struct CountArgs {
  std::string input;
  std::string shape = "triangle";
  std::string filter = "any";
  std::string witnesses_out;
  bool include_nonconvex = false;
  bool as_json = false;
  EnumOptions opt;
};

int run_count(const CountArgs& a) {
  const ColoredPointSet s = load_point_set(a.input);
  std::optional<ShapeFilter> shape;
  if (a.shape == "triangle")
    shape = ShapeFilter::Triangle;
  else if (a.shape == "quad")
    shape = ShapeFilter::Quadrilateral;
  else
    throw std::invalid_argument("shape must be 'triangle' or 'quad'");
  ColorFilter color;
  if (a.filter == "any")
    color = ColorFilter::Any;
  else if (a.filter == "rainbow")
    color = ColorFilter::Rainbow;
  else if (a.filter == "mono")
    color = ColorFilter::Monochromatic;
  else
    throw std::invalid_argument("filter must be 'any', 'rainbow', or 'mono'");

  const bool want_wits = !a.witnesses_out.empty();
  EnumerationReport rep = enumerate_report(s, a.opt, want_wits, shape, color);
  if (a.include_nonconvex && *shape == ShapeFilter::Quadrilateral &&
      color != ColorFilter::Monochromatic)
    rep.empty_rainbow_simple_nonconvex_quads =
        static_cast<std::int64_t>(empty_rainbow_simple_nonconvex_quads(s, a.opt).size());

  if (a.as_json) {
    nlohmann::ordered_json j;
    j["n"] = s.size();
    j["k"] = s.k;
    j["shape"] = a.shape;
    j["filter"] = a.filter;
    if (*shape == ShapeFilter::Triangle) {
      j["empty_triangles"] = rep.empty_triangles;
      j["empty_rainbow_triangles"] = rep.empty_rainbow_triangles;
      j["empty_monochromatic_triangles"] = rep.empty_monochromatic_triangles;
    } else {
      j["empty_quadrilaterals"] = rep.empty_quadrilaterals;
      j["empty_rainbow_quadrilaterals"] = rep.empty_rainbow_quadrilaterals;
      if (a.include_nonconvex)
        j["empty_rainbow_simple_nonconvex_quads"] = rep.empty_rainbow_simple_nonconvex_quads;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "n: " << s.size() << "\n"
              << "k: " << s.k << "\n";
    if (*shape == ShapeFilter::Triangle) {
      std::cout << "empty_triangles: " << rep.empty_triangles << "\n"
                << "empty_rainbow_triangles: " << rep.empty_rainbow_triangles << "\n"
                << "empty_monochromatic_triangles: " << rep.empty_monochromatic_triangles
                << "\n";
    } else {
      std::cout << "empty_quadrilaterals: " << rep.empty_quadrilaterals << "\n"
                << "empty_rainbow_quadrilaterals: " << rep.empty_rainbow_quadrilaterals << "\n";
      if (a.include_nonconvex)
        std::cout << "empty_rainbow_simple_nonconvex_quads: "
                  << rep.empty_rainbow_simple_nonconvex_quads << "\n";
    }
  }
  if (want_wits && rep.witnesses) save_witnesses(*rep.witnesses, a.witnesses_out);
  return kExitPass;
}

struct VerifyArgs {
  std::string check;
  std::string input;
  int n = 0, k = 0, m = 0;
  EnumOptions opt;
};

int run_verify(const VerifyArgs& a) {
  if (a.check == "lower-bound") {
    if (a.input.empty()) throw std::invalid_argument("verify lower-bound needs --input");
    const ColoredPointSet s = load_point_set(a.input);
    validate(s, /*require_equal_classes=*/true);
    const Int bound = lower_bound_formula(s.k, s.points_per_color());
    const auto tris = empty_rainbow_triangles(s, a.opt);
    const auto wits = lower_bound_witnesses(s);
    bool wits_ok = true;
    for (const auto& w : wits) wits_ok = wits_ok && revalidate_witness(s, w);
    const bool pass =
        wits_ok && Int(tris.size()) >= bound && Int(wits.size()) >= bound;
    std::cout << "bound: " << bound << "\n"
              << "empty_rainbow_triangles: " << tris.size() << "\n"
              << "harvested_witnesses: " << wits.size() << "\n"
              << "witnesses_revalidate: " << (wits_ok ? "yes" : "no") << "\n"
              << "result: " << (pass ? "pass" : "fail") << "\n";
    return pass ? kExitPass : kExitVerifyFail;
  }
  if (a.check == "theorem1-upper") {
    if (a.k <= 0 || a.m <= 0) throw std::invalid_argument("verify theorem1-upper needs --k --m");
    const Theorem1Report rep = verify_theorem1_upper(a.k, a.m, a.opt);
    std::cout << "k: " << rep.k << "\n"
              << "m: " << rep.m << "\n"
              << "lower_bound: " << rep.lower << "\n"
              << "count: " << rep.count << "\n"
              << "upper_bound: " << rep.bound << "\n";
    for (std::size_t t = 1; t < rep.layer_histogram.size(); ++t)
      std::cout << "layer_" << t << ": " << rep.layer_histogram[t]
                << " (horton triangle bound " << rep.layer_triangle_bounds[t] << ")\n";
    std::cout << "result: " << (rep.pass ? "pass" : "fail") << "\n";
    return rep.pass ? kExitPass : kExitVerifyFail;
  }
  if (a.check == "theorem2") {
    ColoredPointSet s;
    if (!a.input.empty()) {
      s = load_point_set(a.input);
    } else if (a.k >= 4) {
      s = build_no_rainbow_quad_set(a.k);
    } else {
      throw std::invalid_argument("verify theorem2 needs --k >= 4 or --input");
    }
    const NoQuadVerifyResult res = verify_no_empty_rainbow_quad(s, a.opt);
    std::cout << "n: " << s.size() << "\n"
              << "k: " << s.k << "\n"
              << "empty_rainbow_quadrilaterals: " << (res.ok ? 0 : 1) << (res.ok ? "" : "+")
              << "\n";
    if (res.counterexample) {
      const auto& w = *res.counterexample;
      std::cout << "counterexample: [" << w.vertices[0] << ", " << w.vertices[1] << ", "
                << w.vertices[2] << ", " << w.vertices[3] << "]\n";
    }
    std::cout << "result: " << (res.ok ? "pass" : "fail") << "\n";
    return res.ok ? kExitPass : kExitVerifyFail;
  }
  if (a.check == "horton") {
    std::vector<Point> pts;
    if (!a.input.empty())
      pts = load_point_set(a.input).points;
    else if (a.n > 0)
      pts = generate_horton(a.n).points;
    else
      throw std::invalid_argument("verify horton needs --input or --n");
    const bool pass = is_horton(pts);
    std::cout << "n: " << pts.size() << "\n"
              << "result: " << (pass ? "pass" : "fail") << "\n";
    return pass ? kExitPass : kExitVerifyFail;
  }
  if (a.check == "visible-edges") {
    if (a.n <= 0) throw std::invalid_argument("verify visible-edges needs --n");
    const HortonSet h = generate_horton(a.n);
    const auto edges = visible_edges(h);
    const bool pass = static_cast<long long>(edges.size()) < 2LL * a.n;
    std::cout << "n: " << a.n << "\n"
              << "visible_edges: " << edges.size() << "\n"
              << "bound: " << 2LL * a.n << " (strict)\n"
              << "result: " << (pass ? "pass" : "fail") << "\n";
    return pass ? kExitPass : kExitVerifyFail;
  }
  throw std::invalid_argument("unknown verify check: " + a.check);
}

struct PlotArgs {
  std::string input, out, highlight;
  int zoom_color = 0;
  bool labels = false;
};

int run_plot(const PlotArgs& a) {
  const ColoredPointSet s = load_point_set(a.input);
  std::vector<PolygonWitness> hl;
  if (!a.highlight.empty()) hl = load_witnesses(a.highlight);
  SvgOptions opt;
  opt.zoom_color = a.zoom_color;
  opt.label_points = a.labels;
  write_file(a.out, render_svg(s, hl, opt));
  std::cout << "file: " << a.out << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored point sets: construction, exact empty-polygon enumeration, "
               "bound verification, and plotting"};
  app.require_subcommand(1);

  GenArgs gen;
  CountArgs count;
  VerifyArgs verify;
  PlotArgs plot;

  auto* cgen = app.add_subcommand("gen", "Generate a point set and write it to a file");
  cgen->add_option("kind", gen.kind, "horton | upper | noquad | gadget | random")->required();
  cgen->add_option("--n", gen.n, "point count (horton)");
  cgen->add_option("--k", gen.k, "number of colors");
  cgen->add_option("--m", gen.m, "points per color");
  cgen->add_option("--seed", gen.seed, "random seed");
  cgen->add_option("--ablate", gen.ablate, "gadget: drop the auxiliary pair at vertex 0|1|2");
  cgen->add_option("-o,--out", gen.out, "output path (.json or .csv)")->required();

  auto* ccount = app.add_subcommand("count", "Count empty polygons in a point-set file");
  ccount->add_option("-i,--input", count.input)->required();
  ccount->add_option("--shape", count.shape, "triangle | quad");
  ccount->add_option("--filter", count.filter, "any | rainbow | mono");
  ccount->add_option("--witnesses", count.witnesses_out, "write the witness list here");
  ccount->add_flag("--include-nonconvex", count.include_nonconvex,
                   "also count simple non-convex rainbow 4-gons (quad shape only)");
  ccount->add_flag("--json", count.as_json, "print a JSON object instead of key: value lines");

  auto* cverify = app.add_subcommand("verify", "Verify a paper claim at the given scale");
  cverify
      ->add_option("check", verify.check,
                   "lower-bound | theorem1-upper | theorem2 | horton | visible-edges")
      ->required();
  cverify->add_option("-i,--input", verify.input);
  cverify->add_option("--n", verify.n);
  cverify->add_option("--k", verify.k);
  cverify->add_option("--m", verify.m);

  auto* cplot = app.add_subcommand("plot", "Render a point-set file as SVG");
  cplot->add_option("-i,--input", plot.input)->required();
  cplot->add_option("-o,--out", plot.out)->required();
  cplot->add_option("--highlight", plot.highlight, "witness file to overlay");
  cplot->add_option("--zoom-color", plot.zoom_color, "zoom to one color class");
  cplot->add_flag("--labels", plot.labels, "label points with their indices");

  std::int64_t budget = -1;
  int threads = 0;
  for (CLI::App* sub : {ccount, cverify}) {
    sub->add_option("--budget", budget, "max elementary predicate calls (env RAINBOW_BUDGET)");
    sub->add_option("--threads", threads, "enumeration threads (0 = hardware)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    EnumOptions opt;
    opt.budget = budget >= 0 ? budget : default_budget();
    opt.threads = threads;
    count.opt = opt;
    verify.opt = opt;
    if (app.got_subcommand(cgen)) return run_gen(gen);
    if (app.got_subcommand(ccount)) return run_count(count);
    if (app.got_subcommand(cverify)) return run_verify(verify);
    if (app.got_subcommand(cplot)) return run_plot(plot);
    return kExitUsage;
  } catch (const rainbow::BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
