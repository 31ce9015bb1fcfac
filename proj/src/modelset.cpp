#include "quasipoly/modelset.hpp"

#include "modelset_detail.hpp"
#include "quasipoly/error.hpp"
#include "quasipoly/fields.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace quasipoly {

Window Window::ball(double radius) {
  Window w;
  w.kind = Kind::Ball;
  w.radius = radius;
  return w;
}

Window Window::box(std::vector<double> half_widths) {
  Window w;
  w.kind = Kind::Box;
  w.half_widths = std::move(half_widths);
  return w;
}

bool Window::contains(std::span<const double> x, double margin) const {
  if (kind == Kind::Ball) {
    double norm2 = 0.0;
    for (double v : x) norm2 += v * v;
    const double r = radius - margin;
    return r > 0.0 && norm2 < r * r;
  }
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(std::abs(x[i]) < half_widths[i] - margin)) return false;
  return true;
}

double Window::extent(std::size_t i) const {
  return kind == Kind::Ball ? radius : half_widths.at(i);
}

void Window::validate(std::size_t dimension) const {
  if (kind == Kind::Ball) {
    if (!(radius > 0.0) || !std::isfinite(radius))
      throw InvalidArgument("window radius must be positive and finite");
    return;
  }
  if (half_widths.size() != dimension)
    throw InvalidArgument("box window needs " + std::to_string(dimension) + " half-widths, got " +
                          std::to_string(half_widths.size()));
  for (double h : half_widths)
    if (!(h > 0.0) || !std::isfinite(h))
      throw InvalidArgument("box half-widths must be positive and finite");
}

std::vector<int> default_automorphism_reps(int n) {
  if (n < 3) throw InvalidArgument("model sets need n >= 3");
  std::vector<int> reps;
  for (int a = 2; 2 * a < n; ++a)
    if (std::gcd(a, n) == 1) reps.push_back(a);
  return reps;
}

std::vector<double> default_shift(std::size_t dimension) {
  // 0.010, then thousandths of successive primes from 13.
  std::vector<double> shift;
  int p = 10;
  while (shift.size() < dimension) {
    shift.push_back(p / 1000.0);
    do {
      ++p;
    } while (!is_prime(static_cast<Natural>(p)) || p < 13);
  }
  return shift;
}

ModelSetSpec ModelSetSpec::make(int n, Window window, std::vector<double> shift,
                                std::string label) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  ModelSetSpec spec;
  spec.n = static_cast<int>(canonicalize(static_cast<Natural>(n)));
  spec.reps = default_automorphism_reps(spec.n);
  spec.window = std::move(window);
  spec.shift = shift.empty() ? default_shift(spec.internal_dimension()) : std::move(shift);
  spec.translate = CycInt(spec.n);
  spec.label = std::move(label);
  spec.validate();
  return spec;
}

void ModelSetSpec::validate() const {
  if (n < 3 || n > kMaxModulus)
    throw InvalidArgument("model set modulus must lie in [3, " + std::to_string(kMaxModulus) + "]");
  if (n % 4 == 2) throw InvalidArgument("model set modulus must be canonical (n != 2 mod 4)");
  const auto expected = static_cast<std::size_t>(phi(static_cast<std::uint64_t>(n)) / 2 - 1);
  if (reps.size() != expected)
    throw InvalidArgument("expected " + std::to_string(expected) + " automorphism reps for n = " +
                          std::to_string(n));
  std::vector<int> seen;
  for (int a : reps) {
    if (a <= 1 || 2 * a >= n || std::gcd(a, n) != 1)
      throw InvalidArgument("automorphism rep " + std::to_string(a) +
                            " must be a unit with 1 < a < n/2");
    if (std::find(seen.begin(), seen.end(), a) != seen.end())
      throw InvalidArgument("duplicate automorphism rep " + std::to_string(a));
    seen.push_back(a);
  }
  window.validate(internal_dimension());
  if (shift.size() != internal_dimension())
    throw InvalidArgument("shift must have " + std::to_string(internal_dimension()) + " entries");
  if (translate.modulus() != n) throw ModulusMismatch(translate.modulus(), n);
}

double preset_radius(std::string_view name) {
  if (name == "ttt5") return 1.2;
  if (name == "ab8") return 1.25;
  if (name == "shield12") return 1.0;
  throw InvalidArgument("unknown preset '" + std::string(name) + "' (ttt5, ab8, shield12)");
}

ModelSetSpec preset(std::string_view name) {
  const double r = preset_radius(name);
  const int n = name == "ttt5" ? 5 : name == "ab8" ? 8 : 12;
  return ModelSetSpec::make(n, Window::ball(r), {}, std::string(name) + "-like");
}

std::vector<double> star_map(const ModelSetSpec& spec, const CycInt& z) {
  if (z.modulus() != spec.n) throw ModulusMismatch(z.modulus(), spec.n);
  std::vector<double> out;
  out.reserve(spec.internal_dimension());
  for (int a : spec.reps) {
    const PlanarPoint p = embed_complex(galois_apply(a, z));
    out.push_back(p.real());
    out.push_back(p.imag());
  }
  return out;
}

bool contains(const ModelSetSpec& spec, const CycInt& z) {
  auto x = star_map(spec, z);
  if (x.empty()) return true;
  for (std::size_t i = 0; i < x.size(); ++i) x[i] -= spec.shift[i];
  return spec.window.contains(x);
}

std::uint64_t CoordinateBox::count() const {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    const auto width = static_cast<std::uint64_t>(hi[i] - lo[i] + 1);
    if (total > std::numeric_limits<std::uint64_t>::max() / width)
      return std::numeric_limits<std::uint64_t>::max();
    total *= width;
  }
  return total;
}

CoordinateBox enumeration_box(const ModelSetSpec& spec, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw InvalidArgument("patch radius must be positive and finite");
  const auto table = detail::embedding_table(spec);
  const std::size_t d = table.dim;
  Eigen::MatrixXd m(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m(r, c) = table.at(r, c);
  const Eigen::MatrixXd inv = m.fullPivLu().inverse();

  // Product region: physical square [-R, R]^2 times the window's bounding box
  // around the shift.
  std::vector<double> centre(d, 0.0);
  std::vector<double> half(d, radius);
  for (std::size_t k = 2; k < d; ++k) {
    centre[k] = spec.shift[k - 2];
    half[k] = spec.window.extent(k - 2);
  }
  CoordinateBox box;
  box.lo.resize(d);
  box.hi.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    double c = 0.0;
    double e = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      c += inv(i, k) * centre[k];
      e += std::abs(inv(i, k)) * half[k];
    }
    const double slack = 1e-7 * (1.0 + std::abs(c) + e);
    const double lo = std::floor(c - e - slack);
    const double hi = std::ceil(c + e + slack);
    if (lo < -9e15 || hi > 9e15) throw BudgetExceeded("coordinate box exceeds 64-bit range");
    box.lo[i] = static_cast<long long>(lo);
    box.hi[i] = static_cast<long long>(hi);
  }
  return box;
}

namespace detail {

EmbeddingTable embedding_table(const ModelSetSpec& spec) {
  EmbeddingTable t;
  t.dim = static_cast<std::size_t>(phi(static_cast<std::uint64_t>(spec.n)));
  t.entries.assign(t.dim * t.dim, 0.0);
  for (std::size_t j = 0; j < t.dim; ++j) {
    const PlanarPoint p = embed_complex(CycInt::zeta(spec.n, static_cast<long long>(j)));
    t.entries[0 * t.dim + j] = p.real();
    t.entries[1 * t.dim + j] = p.imag();
    for (std::size_t r = 0; r < spec.reps.size(); ++r) {
      const double angle = 2.0 * std::numbers::pi *
                           static_cast<double>((static_cast<long long>(spec.reps[r]) *
                                                static_cast<long long>(j)) %
                                               spec.n) /
                           spec.n;
      t.entries[(2 + 2 * r) * t.dim + j] = std::cos(angle);
      t.entries[(3 + 2 * r) * t.dim + j] = std::sin(angle);
    }
  }
  return t;
}

bool passes_prefilter(const ModelSetSpec& spec, double radius, std::span<const double> y) {
  constexpr double tol = 1e-7;
  if (y[0] * y[0] + y[1] * y[1] > radius * radius + tol * (1.0 + radius)) return false;
  const std::size_t k = y.size() - 2;
  if (spec.window.kind == Window::Kind::Ball) {
    double norm2 = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const double v = y[i + 2] - spec.shift[i];
      norm2 += v * v;
    }
    const double r = spec.window.radius + tol;
    return norm2 < r * r;
  }
  for (std::size_t i = 0; i < k; ++i)
    if (!(std::abs(y[i + 2] - spec.shift[i]) < spec.window.half_widths[i] + tol)) return false;
  return true;
}

PointSet finalize_candidates(const ModelSetSpec& spec, double radius,
                             std::vector<Coordinates> candidates) {
  std::sort(candidates.begin(), candidates.end());
  PointSet ps{spec, {}};
  ps.points.reserve(candidates.size());
  for (const auto& c : candidates) {
    CycInt z(spec.n, std::vector<BigInt>(c.begin(), c.end()));
    if (std::abs(embed_complex(z)) <= radius && contains(spec, z)) ps.points.push_back(std::move(z));
  }
  return ps;
}

void check_budget(const CoordinateBox& box, std::uint64_t budget) {
  const auto count = box.count();
  if (count > budget)
    throw BudgetExceeded("enumeration box holds " + std::to_string(count) +
                         " candidates, budget is " + std::to_string(budget));
}

}  // namespace detail

std::vector<PlanarPoint> embed_points(const PointSet& ps) {
  const PlanarPoint t = embed_complex(ps.spec.translate);
  std::vector<PlanarPoint> out;
  out.reserve(ps.points.size());
  for (const auto& z : ps.points) out.push_back(embed_complex(z) + t);
  return out;
}

}  // namespace quasipoly
