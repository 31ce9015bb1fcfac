#include "quasipoly/cli.hpp"

#include "quasipoly/construct.hpp"
#include "quasipoly/darboux.hpp"
#include "quasipoly/error.hpp"
#include "quasipoly/fields.hpp"
#include "quasipoly/io.hpp"
#include "quasipoly/svg.hpp"
#include "quasipoly/xray.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>

namespace quasipoly {

namespace {

constexpr double kMaxPatchRadius = 40.0;

struct Options {
  double tolerance = 1e-9;

  Natural n = 0;
  Natural m = 0;
  std::string preset;
  std::string window;
  double radius = 0.0;
  std::uint64_t budget = kDefaultEnumerationBudget;
  unsigned k_max = 25;

  std::string in;
  std::string out;
  std::string csv;
  std::string svg;
  std::string prefix;
  double patch_radius = 0.0;

  unsigned k = 50;
  std::uint64_t seed = 1;
  std::size_t vertices = 8;
};

std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

std::string fixed(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15f", v);
  return buf;
}

std::optional<std::string> preset_for(int canonical_n) {
  switch (canonical_n) {
    case 5: return "ttt5";
    case 8: return "ab8";
    case 12: return "shield12";
    default: return std::nullopt;
  }
}

std::string polygon_svg(const PolygonDocument& doc, double patch_radius, const std::string& title) {
  SvgScene scene;
  scene.title = title;
  for (const auto& v : doc.polygon.vertices()) {
    CycInt z = v;
    if (doc.spec) z += doc.spec->translate;
    scene.polygon.push_back(embed_complex(z));
  }
  for (const auto& d : doc.directions) scene.direction_angles.push_back(d.angle);
  if (doc.spec) {
    double r = patch_radius;
    if (r <= 0.0) {
      for (const auto& p : scene.polygon) r = std::max(r, std::abs(p));
      r = std::min(1.15 * r, kMaxPatchRadius);
    }
    scene.patch = embed_points(generate(*doc.spec, r));
  }
  return render_svg(scene);
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_text_file(path, text);
}

int cmd_decide(const Options& o, std::ostream& out) {
  const Verdict v = decide_vii_verdict(o.n, o.m);
  out << "n = " << o.n << ", m = " << o.m << ": " << (v.admissible ? "admissible" : "inadmissible")
      << '\n';
  out << "clause: " << v.explanation << '\n';
  return v.admissible ? kExitOk : kExitNegative;
}

int cmd_admissible(const Options& o, std::ostream& out) {
  out << Json(admissible_edge_numbers(o.n)).dump() << '\n';
  return kExitOk;
}

ModelSetSpec spec_from_options(const Options& o) {
  ModelSetSpec spec;
  if (!o.preset.empty()) {
    spec = preset(o.preset);
    if (o.n != 0 && canonicalize(o.n) != static_cast<Natural>(spec.n))
      throw InvalidArgument("--n " + std::to_string(o.n) + " does not match preset '" + o.preset + "'");
    if (!o.window.empty()) spec = ModelSetSpec::make(spec.n, parse_window(o.window), {}, spec.label);
    return spec;
  }
  if (o.n == 0) throw InvalidArgument("either --n or --preset is required");
  if (o.n > static_cast<Natural>(kMaxModulus))
    throw InvalidArgument("--n must be at most " + std::to_string(kMaxModulus));
  const int n = static_cast<int>(canonicalize(o.n));
  if (o.window.empty())
    if (auto name = preset_for(n)) return preset(*name);
  return ModelSetSpec::make(n, parse_window(o.window.empty() ? "ball:1.2" : o.window));
}

int cmd_generate(const Options& o, std::ostream& out) {
  const ModelSetSpec spec = spec_from_options(o);
  const PointSet ps = generate(spec, o.radius, o.budget);
  const std::string json = to_json(ps).dump(1) + "\n";
  if (o.out.empty()) {
    out << json;
  } else {
    write_text_file(o.out, json);
    out << "points: " << ps.points.size() << '\n';
  }
  if (!o.csv.empty()) write_text_file(o.csv, points_csv(embed_points(ps)));
  if (!o.svg.empty()) {
    SvgScene scene;
    scene.patch = embed_points(ps);
    scene.title = spec.label.empty() ? "n = " + std::to_string(spec.n) : spec.label;
    write_text_file(o.svg, render_svg(scene));
  }
  return kExitOk;
}

int cmd_construct(const Options& o, std::ostream& out) {
  const ModelSetSpec spec = spec_from_options(o);
  const auto c = construct_u_polygon_in_model_set(spec, static_cast<unsigned>(o.m), o.k_max);
  const PolygonDocument doc{c.embedded.polygon, c.embedded.directions, c.homothety, spec};
  const std::string json = to_json(doc).dump(1) + "\n";
  if (o.out.empty()) {
    out << json;
  } else {
    write_text_file(o.out, json);
    out << "edges: " << doc.polygon.size() << '\n'
        << "directions: " << doc.directions.size() << '\n'
        << "u_class: " << c.embedded.u_class << '\n'
        << "k: " << c.homothety.k << '\n';
  }
  if (!o.svg.empty()) {
    const std::string title = std::to_string(doc.polygon.size()) + "-gon, class " +
                              std::to_string(c.embedded.u_class) + ", n = " + std::to_string(spec.n);
    write_text_file(o.svg, polygon_svg(doc, o.patch_radius, title));
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const PolygonDocument doc = polygon_from_json(read_json_file(o.in));
  const bool ok = is_u_polygon(doc.polygon, doc.directions);
  out << "is_u_polygon: " << (ok ? "true" : "false") << '\n';
  out << "edges: " << doc.polygon.size() << '\n';
  out << "directions: " << doc.directions.size() << '\n';
  if (ok) out << "u_class: " << u_class(doc.polygon, doc.directions) << '\n';
  bool inside = true;
  if (doc.spec) {
    for (const auto& v : doc.polygon.vertices()) inside = inside && contains(*doc.spec, v);
    out << "in_model_set: " << (inside ? "true" : "false") << '\n';
  }
  return ok && inside ? kExitOk : kExitNegative;
}

int cmd_xray(const Options& o, std::ostream& out) {
  const PolygonDocument doc = polygon_from_json(read_json_file(o.in));
  const VertexSplit split = alternate_vertex_split(doc.polygon);
  bool all = true;
  for (std::size_t i = 0; i < doc.directions.size(); ++i) {
    const auto& u = doc.directions[i];
    const XRayTable even = xray(split.evens, u);
    const XRayTable odd = xray(split.odds, u);
    const bool eq = even.lines == odd.lines;
    all = all && eq;
    out << "u" << i + 1 << ": " << even.lines.size() << " lines, " << (eq ? "equal" : "different") << '\n';
    if (!o.prefix.empty()) {
      const std::string base = o.prefix + "_u" + std::to_string(i + 1);
      write_text_file(base + "_even.csv", xray_csv(even));
      write_text_file(base + "_odd.csv", xray_csv(odd));
    }
  }
  out << "alternate split: " << (all ? "equal" : "different") << " in " << doc.directions.size()
      << " directions\n";
  return all ? kExitOk : kExitNegative;
}

int cmd_darboux(const Options& o, std::ostream& out) {
  FloatPolygon p0;
  std::vector<double> angles;
  if (!o.in.empty()) {
    const PolygonDocument doc = polygon_from_json(read_json_file(o.in));
    p0 = embed_polygon(doc.polygon);
    for (const auto& d : doc.directions) angles.push_back(d.angle);
  } else {
    p0 = random_convex_polygon(o.seed, o.vertices);
  }
  const DarbouxRun run = darboux_iterate(std::move(p0), o.k);
  out << "step residual" << (angles.empty() ? "" : " edges_in_u") << '\n';
  for (unsigned j = 0; j <= o.k; ++j) {
    const auto& p = run.steps[2 * j];
    out << j << ' ' << sci(affine_regularity_residual(p));
    if (!angles.empty()) out << ' ' << (edges_within_directions(p, angles, 1e-7) ? "yes" : "no");
    out << '\n';
  }
  return kExitOk;
}

int cmd_crossratio(const Options& o, std::ostream& out) {
  if (o.m < 5) throw InvalidArgument("crossratio needs --m >= 5");
  const double m = static_cast<double>(o.m);
  std::array<PlanarPoint, 4> edges;
  for (int j = 0; j < 4; ++j)
    edges[j] = std::polar(1.0, std::numbers::pi / 2 + std::numbers::pi * (2 * j + 1) / m);
  const double q = cross_ratio_of_vectors(edges);
  const double c = 2.0 * std::cos(4.0 * std::numbers::pi / m);
  const double check = q / (q - 1.0) - 2.0;
  out << "q = " << fixed(q) << '\n';
  out << "closed form (2 + 2cos(4pi/m)) / (1 + 2cos(4pi/m)) = " << fixed((2.0 + c) / (1.0 + c)) << '\n';
  out << "q/(q-1) - 2 = " << fixed(check) << '\n';
  out << "2cos(4pi/m) = " << fixed(c) << '\n';
  const bool ok = std::abs(check - c) <= o.tolerance;
  out << "identity: " << (ok ? "holds" : "fails") << " (tolerance " << sci(o.tolerance) << ")\n";
  return ok ? kExitOk : kExitNegative;
}

int cmd_render(const Options& o, std::ostream& out) {
  const Json j = read_json_file(o.in);
  std::string svg;
  if (j.contains("vertices")) {
    const PolygonDocument doc = polygon_from_json(j);
    svg = polygon_svg(doc, o.patch_radius, std::to_string(doc.polygon.size()) + "-gon");
  } else if (j.contains("points")) {
    const PointSet ps = pointset_from_json(j);
    SvgScene scene;
    scene.patch = embed_points(ps);
    scene.title = ps.spec.label;
    svg = render_svg(scene);
  } else {
    throw InvalidArgument("'" + o.in + "' is neither a polygon nor a point set");
  }
  emit(o.out, svg, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"U-polygons in cyclotomic model sets", "quasipoly"};
  app.set_version_flag("--version", std::string(kFormatTag));
  app.add_option("--tolerance", o.tolerance, "numeric tolerance for float checks")
      ->check(CLI::PositiveNumber);
  app.require_subcommand(1);

  auto* decide = app.add_subcommand("decide", "decide whether m edges are admissible for n");
  decide->add_option("--n", o.n)->required();
  decide->add_option("--m", o.m)->required();

  auto* admissible = app.add_subcommand("admissible", "list admissible edge numbers");
  admissible->add_option("--n", o.n)->required()->check(CLI::Range(Natural{3}, Natural{kMaxModulus}));

  auto* gen = app.add_subcommand("generate", "generate a model-set patch");
  gen->add_option("--n", o.n);
  gen->add_option("--preset", o.preset)->check(CLI::IsMember({"ttt5", "ab8", "shield12"}));
  gen->add_option("--window", o.window, "ball:R or box:h1,h2,...");
  gen->add_option("--radius", o.radius)->required()->check(CLI::PositiveNumber);
  gen->add_option("--budget", o.budget)->check(CLI::PositiveNumber);
  gen->add_option("--out", o.out);
  gen->add_option("--csv", o.csv);
  gen->add_option("--svg", o.svg);

  auto* con = app.add_subcommand("construct", "construct a U-polygon in a model set");
  con->add_option("--n", o.n);
  con->add_option("--m", o.m)->required();
  con->add_option("--preset", o.preset)->check(CLI::IsMember({"ttt5", "ab8", "shield12"}));
  con->add_option("--window", o.window, "ball:R or box:h1,h2,...");
  con->add_option("--kmax", o.k_max)->check(CLI::Range(0u, 200u));
  con->add_option("--patch-radius", o.patch_radius)->check(CLI::NonNegativeNumber);
  con->add_option("--out", o.out);
  con->add_option("--svg", o.svg);

  auto* ver = app.add_subcommand("verify", "verify a polygon file");
  ver->add_option("--in", o.in)->required();

  auto* xr = app.add_subcommand("xray", "X-ray tables of the alternate vertex split");
  xr->add_option("--in", o.in)->required();
  xr->add_option("--out-prefix", o.prefix, "write <prefix>_u<i>_{even,odd}.csv");

  auto* dar = app.add_subcommand("darboux", "iterate the rescaled midpoint map");
  dar->add_option("--k", o.k, "double steps")->check(CLI::Range(0u, 100000u));
  dar->add_option("--seed", o.seed);
  dar->add_option("--vertices", o.vertices)->check(CLI::Range(std::size_t{3}, std::size_t{10000}));
  dar->add_option("--in", o.in, "polygon file instead of a random polygon");

  auto* cr = app.add_subcommand("crossratio", "cross ratio of consecutive regular m-gon edges");
  cr->add_option("--m", o.m)->required();

  auto* ren = app.add_subcommand("render", "render a polygon or point-set file as SVG");
  ren->add_option("--in", o.in)->required();
  ren->add_option("--out", o.out);
  ren->add_option("--patch-radius", o.patch_radius)->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (decide->parsed()) return cmd_decide(o, out);
    if (admissible->parsed()) return cmd_admissible(o, out);
    if (gen->parsed()) return cmd_generate(o, out);
    if (con->parsed()) return cmd_construct(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
    if (xr->parsed()) return cmd_xray(o, out);
    if (dar->parsed()) return cmd_darboux(o, out);
    if (cr->parsed()) return cmd_crossratio(o, out);
    if (ren->parsed()) return cmd_render(o, out);
  } catch (const Inadmissible& e) {
    err << "inadmissible: " << e.what() << '\n';
    return kExitNegative;
  } catch (const InvalidArgument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitBudget;
  }
  return kExitInvalid;
}

}  // namespace quasipoly
