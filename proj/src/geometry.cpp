#include "quasipoly/geometry.hpp"

#include "quasipoly/error.hpp"
#include "quasipoly/xray.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace quasipoly {

bool parallel(const CycInt& u, const CycInt& w) {
  if (u.is_zero() || w.is_zero()) throw InvalidArgument("parallel: zero vector has no direction");
  return u * conj(w) == conj(u) * w;
}

// u x v = Im(conj(u) v).
int cross_sign(const CycInt& u, const CycInt& v) { return sign_imag_part(conj(u) * v); }

int orientation(const CycInt& a, const CycInt& b, const CycInt& c) {
  return cross_sign(b - a, c - a);
}

Direction Direction::of(const CycInt& v) {
  if (v.is_zero()) throw InvalidArgument("direction of the zero vector");
  const int im = sign_imag_part(v);
  Direction d;
  d.rep = (im < 0 || (im == 0 && sign_real_part(v) < 0)) ? -v : v;
  if (im == 0) {
    d.angle = 0.0;
  } else {
    const PlanarPoint p = embed_complex(d.rep);
    double a = std::atan2(p.imag(), p.real());
    if (a < 0.0) a += std::numbers::pi;
    if (a >= std::numbers::pi) a -= std::numbers::pi;
    d.angle = a;
  }
  return d;
}

bool parallel(const Direction& a, const Direction& b) { return parallel(a.rep, b.rep); }

DirectionSet::DirectionSet(std::vector<Direction> dirs) : dirs_(std::move(dirs)) {
  for (std::size_t i = 0; i < dirs_.size(); ++i)
    for (std::size_t j = i + 1; j < dirs_.size(); ++j)
      if (parallel(dirs_[i], dirs_[j]))
        throw InvalidArgument("direction set contains parallel directions");
  // Canonical representatives lie in the upper half-plane, where a precedes b
  // exactly when a x b > 0.
  std::sort(dirs_.begin(), dirs_.end(), [](const Direction& a, const Direction& b) {
    return cross_sign(a.rep, b.rep) > 0;
  });
}

DirectionSet DirectionSet::distinct(const std::vector<CycInt>& vectors) {
  std::vector<Direction> dirs;
  for (const auto& v : vectors) {
    if (v.is_zero()) continue;
    const bool seen = std::any_of(dirs.begin(), dirs.end(),
                                  [&](const Direction& d) { return parallel(d.rep, v); });
    if (!seen) dirs.push_back(Direction::of(v));
  }
  return DirectionSet(std::move(dirs));
}

bool DirectionSet::contains_parallel(const CycInt& v) const {
  return std::any_of(dirs_.begin(), dirs_.end(),
                     [&](const Direction& d) { return parallel(d.rep, v); });
}

Polygon::Polygon(std::vector<CycInt> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw InvalidArgument("polygon needs at least 3 vertices");
  for (const auto& v : vertices_)
    if (v.modulus() != vertices_.front().modulus())
      throw ModulusMismatch(v.modulus(), vertices_.front().modulus());
  for (std::size_t i = 0; i < n; ++i) {
    if (orientation(vertices_[(i + n - 1) % n], vertices_[i], vertices_[(i + 1) % n]) <= 0)
      throw InvalidArgument("polygon is not strictly convex and counterclockwise at vertex " +
                            std::to_string(i));
  }
  // Every turn is a left turn; a convex polygon turns exactly once in total.
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const PlanarPoint e0 = embed_complex(edge((i + n - 1) % n));
    const PlanarPoint e1 = embed_complex(edge(i));
    turning += std::arg(e1 / e0);
  }
  if (turning > 3.0 * std::numbers::pi)
    throw InvalidArgument("polygon winds more than once");
}

CycInt Polygon::edge(std::size_t i) const {
  return vertices_[(i + 1) % vertices_.size()] - vertices_[i];
}

Polygon convex_hull(std::vector<CycInt> points) {
  auto less_xy = [](const CycInt& a, const CycInt& b) {
    const CycInt d = a - b;
    const int sx = sign_real_part(d);
    if (sx != 0) return sx < 0;
    return sign_imag_part(d) < 0;
  };
  std::sort(points.begin(), points.end(), less_xy);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) throw InvalidArgument("convex hull of fewer than 3 distinct points");

  std::vector<CycInt> hull;
  auto sweep = [&](auto first, auto last) {
    const std::size_t floor = hull.size();
    for (auto it = first; it != last; ++it) {
      while (hull.size() >= floor + 2 &&
             orientation(hull[hull.size() - 2], hull.back(), *it) <= 0)
        hull.pop_back();
      hull.push_back(*it);
    }
    hull.pop_back();
  };
  sweep(points.begin(), points.end());
  sweep(points.rbegin(), points.rend());
  return Polygon(std::move(hull));
}

std::vector<Direction> edge_directions(const Polygon& p) {
  std::vector<Direction> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(Direction::of(p.edge(i)));
  return out;
}

bool is_u_polygon(const Polygon& p, const DirectionSet& u) {
  for (const auto& dir : u) {
    const auto table = xray(p.vertices(), dir);
    for (const auto& [key, count] : table.lines)
      if (count < 2) return false;
  }
  // Each direction of U pairs the vertices up, and the two supporting lines in
  // that direction carry edges, so 2 card(U) <= edges.
  if (p.size() % 2 != 0 || p.size() < 2 * u.size())
    throw std::logic_error("U-polygon with " + std::to_string(p.size()) + " vertices for " +
                           std::to_string(u.size()) + " directions");
  return true;
}

unsigned u_class(const Polygon& p, const DirectionSet& u) {
  if (!is_u_polygon(p, u)) throw InvalidArgument("u_class: polygon is not a U-polygon");
  const std::size_t n = p.size();
  std::vector<bool> in_u(n);
  for (std::size_t i = 0; i < n; ++i) in_u[i] = u.contains_parallel(p.edge(i));
  std::size_t best = 0;
  if (std::all_of(in_u.begin(), in_u.end(), [](bool b) { return b; })) {
    best = n;
  } else {
    // Start right after an edge outside U so no run wraps past the start.
    std::size_t start = 0;
    while (in_u[start]) ++start;
    std::size_t run = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (in_u[(start + k) % n]) {
        best = std::max(best, ++run);
      } else {
        run = 0;
      }
    }
  }
  return static_cast<unsigned>(std::min(best, u.size()));
}

double cross_ratio(double t1, double t2, double t3, double t4) {
  const std::array<double, 4> t{t1, t2, t3, t4};
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::isnan(t[i])) throw InvalidArgument("cross_ratio: NaN argument");
    for (std::size_t j = i + 1; j < 4; ++j) {
      const bool both_inf = std::isinf(t[i]) && std::isinf(t[j]);
      if (both_inf || t[i] == t[j]) throw InvalidArgument("cross_ratio: repeated argument");
    }
  }
  // The two factors containing the point at infinity cancel.
  if (std::isinf(t1)) return (t4 - t2) / (t3 - t2);
  if (std::isinf(t2)) return (t3 - t1) / (t4 - t1);
  if (std::isinf(t3)) return (t4 - t2) / (t4 - t1);
  if (std::isinf(t4)) return (t3 - t1) / (t3 - t2);
  return (t3 - t1) * (t4 - t2) / ((t3 - t2) * (t4 - t1));
}

double slope(PlanarPoint v) {
  if (v.real() == 0.0) {
    if (v.imag() == 0.0) throw InvalidArgument("slope of the zero vector");
    return std::numeric_limits<double>::infinity();
  }
  return v.imag() / v.real();
}

double slope(const Direction& d) {
  if (sign_real_part(d.rep) == 0) return std::numeric_limits<double>::infinity();
  return slope(embed_complex(d.rep));
}

namespace {

void require_pairwise_non_parallel(const std::array<const Direction*, 4>& u) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (parallel(*u[i], *u[j]))
        throw InvalidArgument("cross ratio needs pairwise non-parallel directions");
}

}  // namespace

double cross_ratio_of_directions(const Direction& u1, const Direction& u2, const Direction& u3,
                                 const Direction& u4) {
  require_pairwise_non_parallel({&u1, &u2, &u3, &u4});
  return cross_ratio(slope(u1), slope(u2), slope(u3), slope(u4));
}

double cross_ratio_of_vectors(const std::array<PlanarPoint, 4>& v) {
  return cross_ratio(slope(v[0]), slope(v[1]), slope(v[2]), slope(v[3]));
}

// With s_j - s_i = (z_i x z_j) / (x_i x_j) the coordinate factors cancel and
// the cross ratio is (c13 c24) / (c23 c14), c_ij = z_i x z_j. Each c_ij is
// represented by conj(z_i) z_j - z_i conj(z_j) = 2i c_ij; the 2i factors cancel.
ExactCrossRatio cross_ratio_exact(const Direction& u1, const Direction& u2, const Direction& u3,
                                  const Direction& u4) {
  require_pairwise_non_parallel({&u1, &u2, &u3, &u4});
  auto w = [](const Direction& a, const Direction& b) {
    return conj(a.rep) * b.rep - a.rep * conj(b.rep);
  };
  return {w(u1, u3) * w(u2, u4), w(u2, u3) * w(u1, u4)};
}

double consecutive_edge_cross_ratio_regular(unsigned m) {
  if (m < 8 || m % 2 != 0) throw InvalidArgument("m must be even and >= 8");
  const double two_cos = 2.0 * std::cos(4.0 * std::numbers::pi / m);
  const double denominator = 1.0 + two_cos;
  if (std::abs(denominator) < 1e-12) throw InvalidArgument("degenerate cross ratio denominator");
  const double q = (2.0 + two_cos) / denominator;
  if (std::abs(q / (q - 1.0) - 2.0 - two_cos) > 1e-12)
    throw std::logic_error("cross ratio identity q/(q-1) - 2 = 2cos(4pi/m) violated");
  return q;
}

}  // namespace quasipoly
