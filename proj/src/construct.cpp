#include "quasipoly/construct.hpp"

#include "quasipoly/error.hpp"
#include "quasipoly/fields.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace quasipoly {

Homothety Homothety::identity(int n) { return {CycInt::integer(n, 1), 0, CycInt(n)}; }

void Homothety::validate() const {
  if (scale.modulus() != shift.modulus()) throw ModulusMismatch(scale.modulus(), shift.modulus());
  if (!is_real(scale)) throw InvalidArgument("homothety scale must be real");
  if (sign_real_part(scale) <= 0) throw InvalidArgument("homothety scale must be positive");
}

AffineMapF AffineMapF::make(std::array<double, 4> matrix, PlanarPoint shift) {
  AffineMapF f{matrix, shift};
  if (!(std::abs(f.determinant()) > 1e-9)) throw InvalidArgument("affine map is singular");
  return f;
}

PlanarPoint AffineMapF::apply_linear(PlanarPoint p) const {
  return {matrix[0] * p.real() + matrix[1] * p.imag(), matrix[2] * p.real() + matrix[3] * p.imag()};
}

Polygon regular_polygon_exact(int n, unsigned k) {
  if (n < 1 || k < 3) throw InvalidArgument("regular polygon needs n >= 1 and k >= 3");
  const long long kk = k;
  CycInt rho;
  if (n % kk == 0) {
    rho = CycInt::zeta(n, n / kk);
  } else if (n % 2 == 1 && (2LL * n) % kk == 0) {
    // -zeta_n^((n+1)/2) = exp(i pi/n) is a primitive 2n-th root of unity.
    const CycInt root_2n = -CycInt::zeta(n, (n + 1) / 2);
    rho = root_2n.pow(static_cast<unsigned>(2LL * n / kk));
  } else {
    throw InvalidArgument("Z[zeta_" + std::to_string(n) + "] has no primitive " +
                          std::to_string(k) + "-th root of unity");
  }
  std::vector<CycInt> vertices;
  vertices.reserve(k);
  CycInt v = CycInt::integer(n, 1);
  for (unsigned j = 0; j < k; ++j) {
    vertices.push_back(v);
    v *= rho;
  }
  if (!(v == CycInt::integer(n, 1))) throw std::logic_error("root of unity has wrong order");
  return Polygon(std::move(vertices));
}

Polygon affine_parallelogram(int n) {
  if (n < 3) throw InvalidArgument("affine_parallelogram: n must be >= 3");
  const CycInt one = CycInt::integer(n, 1);
  const CycInt z = CycInt::zeta(n);
  return Polygon({CycInt(n), one, one + z, z});
}

Polygon affine_hexagon(int n) {
  if (n < 3) throw InvalidArgument("affine_hexagon: n must be >= 3");
  const CycInt one = CycInt::integer(n, 1);
  const CycInt z = CycInt::zeta(n);
  return Polygon({one, z, z - one, -one, -z, one - z});
}

// For admissible m outside {8, 12} the target k = lcm(m/2, 2) divides
// lcm(2, n), so a regular k-gon already sits in Z[zeta_n]:
//   m | 2n, m/2 odd:  k = m and n even forces m | n; n odd gives lcm(2, n) = 2n.
//   m | 2n, m/2 even: k = m/2 divides n.
//   m = 4d, d | n odd: k = 2d divides lcm(2, n).
// m = 8 and m = 12 need k = 4 and k = 6, served by the parallelogram and the
// hexagon spanned by 1 and zeta_n, which exist for every n.
Polygon affinely_regular_polygon_in_ring(int n, unsigned k) {
  if (k < 4 || k % 2 != 0) throw InvalidArgument("affinely regular polygon needs even k >= 4");
  if (k == 4) return affine_parallelogram(n);
  if (k == 6) return affine_hexagon(n);
  return regular_polygon_exact(n, k);
}

Polygon centre_exactly(const Polygon& p) {
  const std::size_t s = p.size();
  if (s % 2 != 0) throw InvalidArgument("polygon with odd vertex count is not centrally symmetric");
  const CycInt twice_centre = p[0] + p[s / 2];
  for (std::size_t i = 1; i < s / 2; ++i)
    if (!(p[i] + p[i + s / 2] == twice_centre))
      throw InvalidArgument("polygon is not centrally symmetric");
  if (twice_centre.is_zero()) return p;
  std::vector<CycInt> out;
  out.reserve(s);
  const CycInt two = CycInt::integer(p.modulus(), 2);
  for (const auto& v : p.vertices()) out.push_back(two * v - twice_centre);
  return Polygon(std::move(out));
}

UPolygon attach_translates(const Polygon& p) {
  const std::size_t s = p.size();
  if (s % 2 != 0) throw InvalidArgument("attach_translates: odd vertex count");
  for (std::size_t i = 0; i < s / 2; ++i)
    if (!(p[i] + p[i + s / 2]).is_zero())
      throw InvalidArgument("attach_translates: polygon is not centrally symmetric about 0");

  std::vector<CycInt> cloud = p.vertices();
  for (std::size_t j = 0; j < s; ++j) {
    const CycInt t = p[j] + p[(j + 1) % s];
    for (const auto& v : p.vertices()) cloud.push_back(v + t);
  }
  Polygon hull = convex_hull(std::move(cloud));

  std::vector<CycInt> chords;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j) chords.push_back(p[j] - p[i]);
  DirectionSet dirs = DirectionSet::distinct(chords);

  if (hull.size() != 2 * s)
    throw std::logic_error("attachment hull has " + std::to_string(hull.size()) +
                           " vertices, expected " + std::to_string(2 * s));
  if (dirs.size() != s)
    throw std::logic_error("polygon has " + std::to_string(dirs.size()) +
                           " chord directions, expected " + std::to_string(s));
  if (!is_u_polygon(hull, dirs)) throw std::logic_error("attachment hull is not a U-polygon");
  const unsigned cls = u_class(hull, dirs);
  if (cls != dirs.size()) throw std::logic_error("attachment hull class differs from card(U)");
  return {std::move(hull), std::move(dirs), cls};
}

UPolygon construct_u_polygon_ring(int n, unsigned m) {
  const auto verdict = decide_vii_verdict(static_cast<Natural>(n), m);
  if (!verdict.admissible)
    throw Inadmissible("no U-polygon of class >= 4 with " + std::to_string(m) +
                       " edges for n = " + std::to_string(n) + ": " + verdict.explanation);

  const unsigned half = m / 2;
  if (half % 2 == 1) {
    // lcm(m/2, 2) = m: the regular m-gon with m/2 consecutive edge directions.
    Polygon poly = affinely_regular_polygon_in_ring(n, m);
    std::vector<CycInt> edges;
    for (unsigned i = 0; i < half; ++i) edges.push_back(poly.edge(i));
    DirectionSet dirs = DirectionSet::distinct(edges);
    if (dirs.size() != half) throw std::logic_error("consecutive edges are not pairwise non-parallel");
    if (!is_u_polygon(poly, dirs)) throw std::logic_error("regular polygon is not a U-polygon");
    const unsigned cls = u_class(poly, dirs);
    if (cls != half) throw std::logic_error("regular polygon class differs from m/2");
    return {std::move(poly), std::move(dirs), cls};
  }
  UPolygon out = attach_translates(centre_exactly(affinely_regular_polygon_in_ring(n, half)));
  if (out.polygon.size() != m) throw std::logic_error("attachment produced the wrong edge count");
  return out;
}

CycInt pisot_scaler(int n, int max_coefficient) {
  if (n < 3) throw InvalidArgument("pisot_scaler: n must be >= 3");
  n = static_cast<int>(canonicalize(static_cast<Natural>(n)));
  if (n == 3 || n == 4) throw InvalidArgument("pisot_scaler: lattice cases n = 3, 4 need no scaler");

  const auto reps = default_automorphism_reps(n);
  const std::size_t d = phi(static_cast<std::uint64_t>(n)) / 2;
  const CycInt c = CycInt::zeta(n, 1) + CycInt::zeta(n, -1);

  // Real value of c^i under the identity (row 0) and each representative.
  std::vector<std::vector<double>> value(reps.size() + 1, std::vector<double>(d));
  for (std::size_t row = 0; row <= reps.size(); ++row) {
    const int a = row == 0 ? 1 : reps[row - 1];
    const double ca = 2.0 * std::cos(2.0 * std::numbers::pi * a / n);
    double p = 1.0;
    for (std::size_t i = 0; i < d; ++i, p *= ca) value[row][i] = p;
  }
  constexpr double margin = 1e-3;
  auto hit = [&](const std::vector<int>& a) {
    for (std::size_t row = 0; row < value.size(); ++row) {
      double v = 0.0;
      for (std::size_t i = 0; i < d; ++i) v += a[i] * value[row][i];
      if (row == 0 ? !(v > 1.0 + margin) : !(std::abs(v) < 1.0 - margin)) return false;
    }
    return true;
  };

  // Digits ordered 0, 1, -1, 2, -2, ...; shells of growing max |a_i|; within a
  // shell lexicographic with a_0 most significant.
  for (int bound = 1; bound <= max_coefficient; ++bound) {
    std::vector<int> digits{0};
    for (int v = 1; v <= bound; ++v) {
      digits.push_back(v);
      digits.push_back(-v);
    }
    std::vector<std::size_t> idx(d, 0);
    while (true) {
      std::vector<int> a(d);
      int top = 0;
      for (std::size_t i = 0; i < d; ++i) {
        a[i] = digits[idx[i]];
        top = std::max(top, std::abs(a[i]));
      }
      if (top == bound && hit(a)) {
        CycInt lambda(n);
        CycInt power = CycInt::integer(n, 1);
        for (std::size_t i = 0; i < d; ++i, power *= c) lambda += CycInt::integer(n, a[i]) * power;
        if (!is_real(lambda)) throw std::logic_error("pisot_scaler: non-real candidate");
        return lambda;
      }
      std::size_t k = d;
      while (k-- > 0) {
        if (++idx[k] < digits.size()) break;
        idx[k] = 0;
      }
      if (k == static_cast<std::size_t>(-1)) break;
    }
  }
  throw BudgetExceeded("pisot_scaler: no scaler for n = " + std::to_string(n) +
                       " with coefficients up to " + std::to_string(max_coefficient));
}

namespace {

std::vector<double> shifted(const std::vector<double>& x, const std::vector<double>& by) {
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - by[i];
  return out;
}

}  // namespace

Embedding embed_in_model_set(std::span<const CycInt> points, const ModelSetSpec& spec,
                             unsigned k_max, double patch_radius) {
  spec.validate();
  if (points.empty()) throw InvalidArgument("embed_in_model_set: empty point set");
  for (const auto& z : points)
    if (z.modulus() != spec.n) throw ModulusMismatch(z.modulus(), spec.n);
  if (spec.internal_dimension() == 0)
    return {Homothety::identity(spec.n), std::vector<CycInt>(points.begin(), points.end())};

  const CycInt lambda = pisot_scaler(spec.n);

  // Candidate translates ordered by internal distance to the window centre.
  struct Candidate {
    CycInt t;
    std::vector<double> star;
    double distance;
  };
  // When the patch is too large to enumerate (high internal dimension) the
  // candidates fall back to 0 and the +-zeta^j that lie in the model set.
  std::vector<CycInt> pool;
  try {
    pool = generate(spec, patch_radius).points;
  } catch (const BudgetExceeded&) {
    pool.push_back(CycInt(spec.n));
    for (int j = 0; j < spec.n; ++j) {
      for (const auto& t : {CycInt::zeta(spec.n, j), -CycInt::zeta(spec.n, j)})
        if (contains(spec, t)) pool.push_back(t);
    }
    if (!contains(spec, pool.front())) pool.erase(pool.begin());
  }
  std::vector<Candidate> candidates;
  for (auto& t : pool) {
    auto star = star_map(spec, t);
    const auto off = shifted(star, spec.shift);
    double dist = 0.0;
    for (double v : off) dist += v * v;
    candidates.push_back({std::move(t), std::move(star), std::sqrt(dist)});
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.distance < b.distance; });

  constexpr double margin = 1e-6;
  const std::size_t dim = spec.internal_dimension();
  CycInt scale = CycInt::integer(spec.n, 1);
  for (unsigned k = 0; k <= k_max; ++k, scale *= lambda) {
    std::vector<std::vector<double>> cluster;
    for (const auto& z : points) cluster.push_back(star_map(spec, scale * z));
    for (const auto& cand : candidates) {
      bool fits = true;
      std::vector<double> x(dim);
      for (const auto& s : cluster) {
        for (std::size_t i = 0; i < dim; ++i) x[i] = cand.star[i] + s[i] - spec.shift[i];
        if (!spec.window.contains(x, margin)) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      Embedding e{{scale, k, cand.t}, {}};
      for (const auto& z : points) {
        e.points.push_back(e.homothety.apply(z));
        if (!contains(spec, e.points.back()))
          throw std::logic_error("embedded point escaped the window");
      }
      return e;
    }
  }
  throw Infeasible("no homothety with k <= " + std::to_string(k_max) +
                   " and translate in the patch of radius " + std::to_string(patch_radius) +
                   " fits the window");
}

ModelSetConstruction construct_u_polygon_in_model_set(const ModelSetSpec& spec, unsigned m,
                                                      unsigned k_max) {
  UPolygon ring = construct_u_polygon_ring(spec.n, m);
  Embedding e = embed_in_model_set(ring.polygon.vertices(), spec, k_max);

  std::vector<Direction> dirs;
  for (const auto& d : ring.directions) dirs.push_back(Direction::of(e.homothety.scale * d.rep));
  UPolygon embedded{Polygon(std::move(e.points)), DirectionSet(std::move(dirs)), 0};

  if (embedded.polygon.size() != m) throw std::logic_error("embedded polygon lost vertices");
  if (!is_u_polygon(embedded.polygon, embedded.directions))
    throw std::logic_error("embedded polygon is not a U-polygon");
  embedded.u_class = u_class(embedded.polygon, embedded.directions);
  if (embedded.u_class != ring.u_class || embedded.u_class < 4)
    throw std::logic_error("embedding changed the class");
  return {std::move(ring), std::move(embedded), std::move(e.homothety)};
}

}  // namespace quasipoly
