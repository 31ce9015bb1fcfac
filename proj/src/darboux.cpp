#include "quasipoly/darboux.hpp"

#include "quasipoly/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace quasipoly {

namespace {

double signed_area(const FloatPolygon& p) {
  double a = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& u = p[i];
    const auto& v = p[(i + 1) % p.size()];
    a += u.real() * v.imag() - u.imag() * v.real();
  }
  return 0.5 * a;
}

double diameter_bound(const FloatPolygon& p) {
  double r = 0.0;
  for (const auto& v : p) r = std::max(r, std::abs(v));
  return r;
}

}  // namespace

FloatPolygon embed_polygon(const Polygon& p) {
  FloatPolygon out;
  out.reserve(p.size());
  for (const auto& v : p.vertices()) out.push_back(embed_complex(v));
  return out;
}

FloatPolygon midpoint_polygon(const FloatPolygon& p) {
  FloatPolygon out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = 0.5 * (p[i] + p[(i + 1) % p.size()]);
  return out;
}

Polygon doubled_midpoint_polygon(const Polygon& p) {
  std::vector<CycInt> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(p[i] + p[(i + 1) % p.size()]);
  return Polygon(std::move(out));
}

DarbouxRun darboux_iterate(FloatPolygon p0, unsigned k) {
  const std::size_t n = p0.size();
  if (n < 3) throw InvalidArgument("darboux_iterate: need at least 3 vertices");
  const double scale = diameter_bound(p0);
  if (!(scale > 0.0) || std::abs(signed_area(p0)) <= 1e-12 * scale * scale)
    throw InvalidArgument("darboux_iterate: degenerate (collinear) polygon");

  DarbouxRun run;
  PlanarPoint centroid{0.0, 0.0};
  for (const auto& v : p0) centroid += v;
  centroid /= static_cast<double>(n);
  if (std::abs(centroid) > 1e-9) {
    for (auto& v : p0) v -= centroid;
    run.recentred_by = centroid;
  }

  const double sec = 1.0 / std::cos(std::numbers::pi / static_cast<double>(n));
  run.steps.reserve(2 * static_cast<std::size_t>(k) + 1);
  run.steps.push_back(std::move(p0));
  for (unsigned j = 0; j < 2 * k; ++j) {
    auto next = midpoint_polygon(run.steps.back());
    for (auto& v : next) v *= sec;
    run.steps.push_back(std::move(next));
  }
  run.result = run.steps.back();
  return run;
}

FloatPolygon random_convex_polygon(std::uint64_t seed, std::size_t k) {
  if (k < 3) throw InvalidArgument("random_convex_polygon: need at least 3 vertices");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<double> t(k);
  for (;;) {
    for (auto& a : t) a = angle(rng);
    std::sort(t.begin(), t.end());
    double gap = t.front() + 2.0 * std::numbers::pi - t.back();
    for (std::size_t i = 1; i < k; ++i) gap = std::max(gap, t[i] - t[i - 1]);
    double min_gap = t.front() + 2.0 * std::numbers::pi - t.back();
    for (std::size_t i = 1; i < k; ++i) min_gap = std::min(min_gap, t[i] - t[i - 1]);
    if (gap < 0.9 * std::numbers::pi && min_gap > 1e-3) break;
  }
  FloatPolygon p;
  PlanarPoint c{0.0, 0.0};
  for (double a : t) p.push_back(std::polar(1.0, a)), c += p.back();
  c /= static_cast<double>(k);
  for (auto& v : p) v -= c;
  return p;
}

double affine_regularity_residual(const FloatPolygon& p) {
  const std::size_t n = p.size();
  if (n < 3) throw InvalidArgument("affine_regularity_residual: need at least 3 vertices");
  PlanarPoint c{0.0, 0.0};
  for (const auto& v : p) c += v;
  c /= static_cast<double>(n);

  // The regular frame w_j satisfies sum w_j w_j^T = (n/2) I, so the normal
  // equations solve to A = (2/n) sum (p_j - c) w_j^T.
  double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    const PlanarPoint d = p[j] - c;
    a11 += d.real() * std::cos(t);
    a12 += d.real() * std::sin(t);
    a21 += d.imag() * std::cos(t);
    a22 += d.imag() * std::sin(t);
  }
  const double f = 2.0 / static_cast<double>(n);
  a11 *= f, a12 *= f, a21 *= f, a22 *= f;
  const double scale = diameter_bound(p) + std::abs(c);
  if (std::abs(a11 * a22 - a12 * a21) <= 1e-12 * std::max(scale * scale, 1e-300))
    throw InvalidArgument("affine_regularity_residual: singular fit");

  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    const PlanarPoint fit = c + PlanarPoint(a11 * std::cos(t) + a12 * std::sin(t),
                                            a21 * std::cos(t) + a22 * std::sin(t));
    worst = std::max(worst, std::abs(p[j] - fit));
  }
  return worst;
}

double line_angle_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), std::numbers::pi);
  return std::min(d, std::numbers::pi - d);
}

bool edges_within_directions(const FloatPolygon& p, std::span<const double> angles, double tol) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    const PlanarPoint e = p[(i + 1) % p.size()] - p[i];
    const double a = std::arg(e);
    const bool hit = std::any_of(angles.begin(), angles.end(),
                                 [&](double u) { return line_angle_distance(a, u) <= tol; });
    if (!hit) return false;
  }
  return true;
}

bool is_u_polygon_float(const FloatPolygon& p, std::span<const double> angles, double tol) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (double u : angles) {
      bool partner = false;
      for (std::size_t j = 0; j < p.size() && !partner; ++j)
        partner = j != i && line_angle_distance(std::arg(p[j] - p[i]), u) <= tol;
      if (!partner) return false;
    }
  }
  return true;
}

}  // namespace quasipoly
