#include "quasipoly/cyclo.hpp"

#include "quasipoly/error.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>

namespace quasipoly {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

int mobius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

using Poly = std::vector<BigInt>;

// p *= (x^d - 1)
void mul_xd_minus_one(Poly& p, std::size_t d) {
  Poly out(p.size() + d);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + d] += p[i];
    out[i] -= p[i];
  }
  p = std::move(out);
}

// p /= (x^d - 1); the division must be exact.
void div_xd_minus_one(Poly& p, std::size_t d) {
  if (p.size() <= d) throw std::logic_error("cyclotomic: inexact division");
  // p = q (x^d - 1) gives p[i] = q[i - d] - q[i], so q[k] = p[k + d] + q[k + d]
  // solved from the top down.
  const std::size_t qdeg = p.size() - 1 - d;
  Poly q(qdeg + 1);
  for (std::size_t k = qdeg + 1; k-- > 0;) {
    BigInt v = p[k + d];
    if (k + d <= qdeg) v += q[k + d];
    q[k] = v;
  }
  // The low coefficients must then match p[i] = -q[i] (q[i] = 0 past its degree).
  for (std::size_t i = 0; i < d; ++i) {
    const BigInt qi = i <= qdeg ? q[i] : BigInt(0);
    if (p[i] != -qi) throw std::logic_error("cyclotomic: inexact division");
  }
  p = std::move(q);
}

}  // namespace

std::uint64_t phi(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("phi: n must be >= 1");
  std::uint64_t result = n;
  for (auto p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

// Phi_n(x) = prod_{d | n} (x^d - 1)^mu(n/d): the Moebius inversion of
// x^n - 1 = prod_{d | n} Phi_d(x). All multiplications happen first so every
// division afterwards is exact.
std::vector<BigInt> cyclotomic_polynomial(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("cyclotomic_polynomial: n must be >= 1");
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divisors.push_back(d);
      if (d * d != n) divisors.push_back(n / d);
    }
  }
  std::sort(divisors.begin(), divisors.end());

  Poly p{1};
  for (auto d : divisors)
    if (mobius(n / d) == 1) mul_xd_minus_one(p, d);
  for (auto d : divisors)
    if (mobius(n / d) == -1) div_xd_minus_one(p, d);
  return p;
}

namespace detail {

struct CyclotomicRing {
  int n = 1;
  int phi = 1;
  std::vector<long long> poly;  // monic, ascending, length phi + 1
  std::vector<double> cos_table;
  std::vector<double> sin_table;

  explicit CyclotomicRing(int modulus) : n(modulus) {
    phi = static_cast<int>(quasipoly::phi(static_cast<std::uint64_t>(n)));
    for (const auto& c : cyclotomic_polynomial(static_cast<std::uint64_t>(n))) {
      if (c > std::numeric_limits<long long>::max() / 4 ||
          c < std::numeric_limits<long long>::min() / 4)
        throw std::logic_error("cyclotomic polynomial coefficient too large");
      poly.push_back(static_cast<long long>(c));
    }
    cos_table.resize(n);
    sin_table.resize(n);
    for (int j = 0; j < n; ++j) {
      const double angle = 2.0 * std::numbers::pi * j / n;
      cos_table[j] = std::cos(angle);
      sin_table[j] = std::sin(angle);
    }
    // Exact values on the axes keep lattice cases free of float noise.
    for (int j = 0; j < n; ++j) {
      if ((4 * j) % n == 0) {
        const int quarter = (4 * j) / n;
        cos_table[j] = quarter == 0 ? 1.0 : quarter == 2 ? -1.0 : 0.0;
        sin_table[j] = quarter == 1 ? 1.0 : quarter == 3 ? -1.0 : 0.0;
      }
    }
  }

  // Reduces r (any length) modulo the cyclotomic polynomial, leaving phi
  // coefficients.
  void reduce(std::vector<BigInt>& r) const {
    for (std::size_t d = r.size(); d-- > static_cast<std::size_t>(phi);) {
      if (r[d].is_zero()) continue;
      const BigInt c = r[d];
      const std::size_t base = d - phi;
      for (int i = 0; i < phi; ++i) {
        if (poly[i] != 0) r[base + i] -= c * poly[i];
      }
      r[d] = 0;
    }
    r.resize(phi);
  }
};

const CyclotomicRing& ring(int n) {
  if (n < 1 || n > kMaxModulus)
    throw InvalidArgument("modulus must lie in [1, " + std::to_string(kMaxModulus) +
                          "], got " + std::to_string(n));
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const CyclotomicRing>> rings;
  std::lock_guard lock(mutex);
  auto& slot = rings[n];
  if (!slot) slot = std::make_unique<const CyclotomicRing>(n);
  return *slot;
}

}  // namespace detail

CycInt::CycInt() : CycInt(1) {}

CycInt::CycInt(int n) : ring_(&detail::ring(n)), coeffs_(ring_->phi) {}

CycInt::CycInt(int n, std::vector<BigInt> coeffs)
    : ring_(&detail::ring(n)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != ring_->phi)
    throw InvalidArgument("CycInt: expected " + std::to_string(ring_->phi) +
                          " coefficients for n = " + std::to_string(n) + ", got " +
                          std::to_string(coeffs_.size()));
}

CycInt CycInt::integer(int n, const BigInt& value) {
  CycInt z(n);
  z.coeffs_[0] = value;
  return z;
}

CycInt CycInt::zeta(int n, long long k) {
  std::vector<long long> e(static_cast<std::size_t>(n), 0);
  const long long r = ((k % n) + n) % n;
  e[static_cast<std::size_t>(r)] = 1;
  return from_exponents(n, std::span<const long long>(e));
}

CycInt CycInt::from_exponents(int n, std::span<const BigInt> by_exponent) {
  const auto& R = detail::ring(n);
  std::vector<BigInt> folded(static_cast<std::size_t>(std::max(n, R.phi)));
  for (std::size_t j = 0; j < by_exponent.size(); ++j)
    folded[j % static_cast<std::size_t>(n)] += by_exponent[j];
  R.reduce(folded);
  return CycInt(n, std::move(folded));
}

CycInt CycInt::from_exponents(int n, std::span<const long long> by_exponent) {
  std::vector<BigInt> big(by_exponent.begin(), by_exponent.end());
  return from_exponents(n, std::span<const BigInt>(big));
}

int CycInt::modulus() const { return ring_->n; }

bool CycInt::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const BigInt& c) { return c.is_zero(); });
}

void CycInt::require_same_ring(const CycInt& other) const {
  if (ring_ != other.ring_) throw ModulusMismatch(ring_->n, other.ring_->n);
}

CycInt CycInt::pow(unsigned exponent) const {
  CycInt result = integer(modulus(), 1);
  CycInt base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

CycInt& CycInt::operator+=(const CycInt& rhs) {
  require_same_ring(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& rhs) {
  require_same_ring(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& rhs) {
  *this = *this * rhs;
  return *this;
}

CycInt operator*(const CycInt& lhs, const CycInt& rhs) {
  lhs.require_same_ring(rhs);
  const std::size_t d = lhs.coeffs_.size();
  std::vector<BigInt> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (!rhs.coeffs_[j].is_zero()) prod[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  lhs.ring_->reduce(prod);
  return CycInt(lhs.modulus(), std::move(prod));
}

CycInt operator-(const CycInt& z) {
  CycInt out = z;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const CycInt& a, const CycInt& b) {
  return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

bool LexLess::operator()(const CycInt& a, const CycInt& b) const {
  if (a.modulus() != b.modulus()) return a.modulus() < b.modulus();
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

CycInt galois_apply(long long a, const CycInt& z) {
  const auto& R = *z.ring_;
  const long long n = R.n;
  const long long r = ((a % n) + n) % n;
  if (std::gcd(r, n) != 1)
    throw InvalidArgument("galois_apply: " + std::to_string(a) + " is not coprime to " +
                          std::to_string(n));
  if (r == 1 % n) return z;
  std::vector<BigInt> spread(static_cast<std::size_t>(std::max<long long>(n, R.phi)));
  for (std::size_t j = 0; j < z.coeffs_.size(); ++j)
    spread[static_cast<std::size_t>((r * static_cast<long long>(j)) % n)] += z.coeffs_[j];
  R.reduce(spread);
  return CycInt(R.n, std::move(spread));
}

CycInt conj(const CycInt& z) { return galois_apply(z.modulus() - 1, z); }

bool is_real(const CycInt& z) { return z == conj(z); }

PlanarPoint embed_complex(const CycInt& z) {
  const auto& R = detail::ring(z.modulus());
  double x = 0.0;
  double y = 0.0;
  const auto c = z.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j].is_zero()) continue;
    const double v = c[j].convert_to<double>();
    x += v * R.cos_table[j];
    y += v * R.sin_table[j];
  }
  return {x, y};
}

namespace {

enum class Part { Real, Imag };

// Evaluates one part of z at precision Real and returns (value, error bound).
template <class Real>
std::pair<Real, Real> evaluate_part(const CycInt& z, Part part, Real unit_error) {
  const int n = z.modulus();
  const auto c = z.coeffs();
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  Real value = 0;
  Real magnitude = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j].is_zero()) continue;
    const Real coeff(c[j]);
    const Real angle = two_pi * static_cast<long>(j) / n;
    value += coeff * (part == Part::Real ? cos(angle) : sin(angle));
    magnitude += abs(coeff);
  }
  const Real slack = static_cast<long>(c.size() + 16);
  return {value, magnitude * slack * unit_error};
}

template <unsigned Digits>
int refine_sign(const CycInt& z, Part part) {
  using Real = boost::multiprecision::number<
      boost::multiprecision::cpp_bin_float<Digits>, boost::multiprecision::et_off>;
  const Real unit = pow(Real(10), -static_cast<int>(Digits) + 3);
  const auto [value, bound] = evaluate_part<Real>(z, part, unit);
  if (value > bound) return 1;
  if (value < -bound) return -1;
  return 0;
}

int exact_sign(const CycInt& z, Part part) {
  const bool is_zero = part == Part::Real ? (z + conj(z)).is_zero() : is_real(z);
  if (is_zero) return 0;

  // Double-precision pass first; most predicates resolve here.
  {
    const auto& R = detail::ring(z.modulus());
    const auto c = z.coeffs();
    double value = 0.0;
    double magnitude = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j].is_zero()) continue;
      const double v = c[j].convert_to<double>();
      value += v * (part == Part::Real ? R.cos_table[j] : R.sin_table[j]);
      magnitude += std::abs(v);
    }
    const double bound =
        magnitude * static_cast<double>(c.size() + 16) * std::numeric_limits<double>::epsilon();
    if (std::isfinite(value) && std::isfinite(bound)) {
      if (value > bound) return 1;
      if (value < -bound) return -1;
    }
  }
  if (int s = refine_sign<50>(z, part)) return s;
  if (int s = refine_sign<120>(z, part)) return s;
  if (int s = refine_sign<300>(z, part)) return s;
  if (int s = refine_sign<1000>(z, part)) return s;
  throw std::logic_error("exact_sign: nonzero element unresolved at 1000 digits");
}

}  // namespace

int sign_real_part(const CycInt& z) { return exact_sign(z, Part::Real); }
int sign_imag_part(const CycInt& z) { return exact_sign(z, Part::Imag); }

std::ostream& operator<<(std::ostream& os, const CycInt& z) {
  os << "CycInt(n=" << z.modulus() << ", [";
  const auto c = z.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "") << c[i];
  return os << "])";
}

}  // namespace quasipoly
