// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include "quasipoly/cli.hpp"
#include "quasipoly/construct.hpp"
#include "quasipoly/darboux.hpp"
#include "quasipoly/error.hpp"
#include "quasipoly/fields.hpp"
#include "quasipoly/io.hpp"
#include "quasipoly/modelset.hpp"
#include "quasipoly/svg.hpp"
#include "quasipoly/xray.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

using namespace quasipoly;

namespace {

const int kModuli[] = {3, 4, 5, 7, 8, 9, 11, 12};

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string tmp(const std::string& name) {
  const auto dir = std::filesystem::path(QUASIPOLY_TEST_TMP) / "acceptance";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

std::string join(const std::vector<Natural>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "{" + s + "}";
}

Outcome admissibility_tables() {
  const std::vector<std::pair<Natural, std::vector<Natural>>> want{
      {3, {8, 12}},          {4, {8, 12}},          {5, {8, 10, 12, 20}}, {8, {8, 12, 16}},
      {12, {8, 12, 24}},     {7, {8, 12, 14, 28}},  {9, {8, 12, 18, 36}}, {11, {8, 12, 22, 44}}};
  Outcome o;
  for (const auto& [n, table] : want) {
    const auto got = admissible_edge_numbers(n);
    if (got != table) {
      o.pass = false;
      o.detail += "n=" + std::to_string(n) + " got " + join(got) + " ";
    }
  }
  if (o.pass) o.detail = "8 tables match exactly";
  return o;
}

Outcome decision_sweep() {
  const auto mismatches = count_decider_mismatches(3, 150, 8, 600);
  const std::uint64_t cases = 148ull * 297ull;
  return {mismatches == 0,
          std::to_string(cases) + " cases, " + std::to_string(mismatches) + " mismatches"};
}

Outcome ttt5_icosagon() {
  const auto spec = preset("ttt5");
  const auto c = construct_u_polygon_in_model_set(spec, 20);
  const PolygonDocument doc{c.embedded.polygon, c.embedded.directions, c.homothety, spec};
  const auto json = tmp("icosagon.json"), svg = tmp("icosagon.svg");
  write_text_file(json, to_json(doc).dump(1) + "\n");

  std::ostringstream out, err;
  const int code = run({"verify", "--in", json}, out, err);
  const std::string report = out.str();
  const bool verified = code == 0 && report.find("is_u_polygon: true") != std::string::npos &&
                        report.find("edges: 20\n") != std::string::npos &&
                        report.find("u_class: 10\n") != std::string::npos &&
                        report.find("directions: 10\n") != std::string::npos;
  const bool inside = std::all_of(c.embedded.polygon.vertices().begin(), c.embedded.polygon.vertices().end(),
                                  [&](const CycInt& v) { return contains(spec, v); });

  std::ostringstream sout, serr;
  const int scode = run({"render", "--in", json, "--out", svg}, sout, serr);
  const bool rendered = scode == 0 && std::filesystem::file_size(svg) > 0;

  Outcome o{verified && inside && rendered, ""};
  o.detail = "k=" + std::to_string(c.homothety.k) + ", 20 edges, class " + std::to_string(c.embedded.u_class) +
             ", all vertices in window: " + (inside ? "yes" : "no") + ", svg: " + (rendered ? svg : "missing");
  return o;
}

struct MatrixEntry {
  int n;
  unsigned m;
  UPolygon polygon;
};

std::vector<MatrixEntry> construction_matrix(Outcome& o) {
  std::vector<MatrixEntry> built;
  int admissible = 0, rejected = 0;
  for (int n : kModuli) {
    const auto adm = admissible_edge_numbers(static_cast<Natural>(n));
    for (unsigned m = 8; m <= 4u * n + 4; m += 2) {
      const bool expect = std::find(adm.begin(), adm.end(), m) != adm.end();
      try {
        auto u = construct_u_polygon_ring(n, m);
        const bool ok = expect && u.polygon.size() == m && is_u_polygon(u.polygon, u.directions) &&
                        u.u_class >= 4 && u_class(u.polygon, u.directions) == u.u_class;
        if (!ok) {
          o.pass = false;
          o.detail += "bad (" + std::to_string(n) + "," + std::to_string(m) + ") ";
        }
        ++admissible;
        built.push_back({n, m, std::move(u)});
      } catch (const Inadmissible&) {
        if (expect) {
          o.pass = false;
          o.detail += "rejected admissible (" + std::to_string(n) + "," + std::to_string(m) + ") ";
        }
        ++rejected;
      }
    }
  }
  if (o.pass)
    o.detail = std::to_string(admissible) + " constructions verified, " + std::to_string(rejected) +
               " inadmissible pairs rejected";
  return built;
}

Outcome cross_ratios() {
  Outcome o;
  double worst_q = 0.0, worst_id = 0.0, worst_gl = 0.0;
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  for (int m : {8, 10, 12, 16, 20, 24}) {
    std::array<Direction, 4> d;
    std::array<PlanarPoint, 4> v;
    for (int j = 0; j < 4; ++j) {
      d[j] = Direction::of(CycInt::zeta(m, j + 1) - CycInt::zeta(m, j));
      v[j] = embed_complex(d[j].rep);
    }
    const double q = cross_ratio_of_directions(d[0], d[1], d[2], d[3]);
    const double c = 2.0 * std::cos(4.0 * std::numbers::pi / m);
    worst_q = std::max(worst_q, std::abs(q - (2.0 + c) / (1.0 + c)));
    worst_id = std::max(worst_id, std::abs(q / (q - 1.0) - 2.0 - c));
    for (int rep = 0; rep < 100;) {
      const std::array<double, 4> a{entry(rng), entry(rng), entry(rng), entry(rng)};
      const double det = a[0] * a[3] - a[1] * a[2];
      const double fro = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]);
      if (std::abs(det) < 1e-3 || fro * fro / std::abs(det) > 1e3) continue;
      const auto map = AffineMapF::make(a);
      std::array<PlanarPoint, 4> w;
      for (int j = 0; j < 4; ++j) w[j] = map.apply_linear(v[j]);
      worst_gl = std::max(worst_gl, std::abs(cross_ratio_of_vectors(w) - q) / std::abs(q));
      ++rep;
    }
  }
  o.pass = worst_q <= 1e-9 && worst_id <= 1e-12 && worst_gl <= 1e-7;
  std::ostringstream s;
  s << "max |q - closed form| = " << worst_q << ", max identity error = " << worst_id
    << ", max GL(2) relative drift = " << worst_gl;
  o.detail = s.str();
  return o;
}

Outcome xray_witness(const std::vector<MatrixEntry>& built) {
  Outcome o;
  std::size_t directions = 0;
  for (const auto& e : built) {
    const auto check = check_alternate_split(e.polygon.polygon, e.polygon.directions);
    directions += check.equal_per_direction.size();
    if (!check.u_polygon || !check.all_equal) {
      o.pass = false;
      o.detail += "(" + std::to_string(e.n) + "," + std::to_string(e.m) + ") ";
    }
  }
  if (o.pass)
    o.detail = std::to_string(built.size()) + " polygons, " + std::to_string(directions) +
               " directions, all X-ray tables equal";
  else
    o.detail = "unequal split for " + o.detail;
  if (built.empty()) o = {false, "no polygons from criterion 4"};
  return o;
}

Outcome darboux() {
  double worst = 0.0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto run = darboux_iterate(random_convex_polygon(seed, 8), 50);
    worst = std::max(worst, affine_regularity_residual(run.result));
  }
  const auto c = construct_u_polygon_in_model_set(preset("ttt5"), 20);
  std::vector<double> angles;
  for (const auto& d : c.embedded.directions) angles.push_back(d.angle);
  const auto run = darboux_iterate(embed_polygon(c.embedded.polygon), 50);
  std::size_t kept = 0;
  for (std::size_t j = 0; j < run.steps.size(); j += 2)
    kept += edges_within_directions(run.steps[j], angles, 1e-7) &&
            is_u_polygon_float(run.steps[j], angles, 1e-7);
  const std::size_t iterates = run.steps.size() / 2 + 1;
  std::ostringstream s;
  s << "max residual after 50 double steps = " << worst << "; icosagon U-membership kept on " << kept << "/"
    << iterates << " iterates";
  return {worst < 1e-6 && kept == iterates, s.str()};
}

Outcome model_set_sanity() {
  // Frozen after the first verified run.
  const std::vector<std::pair<const char*, std::size_t>> frozen{
      {"ttt5", 4558}, {"ab8", 3478}, {"shield12", 2957}};
  Outcome o;
  std::ostringstream s;
  for (const auto& [name, count] : frozen) {
    const auto spec = preset(name);
    const auto a = generate(spec, 30.0);
    const auto b = generate(spec, 30.0);
    const auto stable = a.points == b.points && to_json(a).dump() == to_json(b).dump() &&
                        a.points.size() == count;
    const auto d = delone_diagnostics(a, 30.0);
    const bool ok = stable && d.min_pair_distance > 0.2 && d.max_hole_radius < 5.0;
    o.pass = o.pass && ok;
    s << name << ": " << a.points.size() << " pts, min " << d.min_pair_distance << ", hole "
      << d.max_hole_radius << (stable ? "" : " UNSTABLE") << "; ";
  }
  o.detail = s.str();
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* name, const std::function<Outcome()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << o.detail << " ("
              << secs << " s)" << std::endl;
  };

  std::vector<MatrixEntry> built;
  report(1, "admissibility tables", admissibility_tables);
  report(2, "decision equivalence sweep", decision_sweep);
  report(3, "icosagon in the ttt5-like model set", ttt5_icosagon);
  report(4, "full construction matrix", [&] {
    Outcome o;
    built = construction_matrix(o);
    return o;
  });
  report(5, "cross-ratio closed form and GL(2) invariance", cross_ratios);
  report(6, "X-ray non-uniqueness witness", [&] { return xray_witness(built); });
  report(7, "Darboux convergence", darboux);
  report(8, "model-set sanity", model_set_sanity);
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
