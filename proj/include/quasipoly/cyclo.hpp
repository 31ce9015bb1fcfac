#pragma once

// Exact arithmetic in the cyclotomic ring Z[zeta_n].
//
// Elements are stored in the power basis 1, zeta, ..., zeta^(phi(n)-1) and
// kept fully reduced modulo the n-th cyclotomic polynomial, so two elements
// are equal exactly when their coefficient vectors are. The same type doubles
// as an exact point of the plane via C = R^2.

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace quasipoly {

using BigInt = boost::multiprecision::cpp_int;
using PlanarPoint = std::complex<double>;

// Largest modulus accepted from user input.
inline constexpr int kMaxModulus = 10000;

// Euler's totient. Throws InvalidArgument for n == 0.
std::uint64_t phi(std::uint64_t n);

// Coefficients of the n-th cyclotomic polynomial, ascending degree.
std::vector<BigInt> cyclotomic_polynomial(std::uint64_t n);

namespace detail {
struct CyclotomicRing;
const CyclotomicRing& ring(int n);
}  // namespace detail

class CycInt {
 public:
  // Zero of Z[zeta_1] = Z.
  CycInt();
  // Zero of Z[zeta_n].
  explicit CycInt(int n);
  // Takes reduced power-basis coordinates; length must be phi(n).
  CycInt(int n, std::vector<BigInt> coeffs);

  static CycInt integer(int n, const BigInt& value);
  // zeta_n^k for any integer k.
  static CycInt zeta(int n, long long k = 1);
  // sum_j c_j zeta^j where j runs over the whole input (any length), reduced.
  static CycInt from_exponents(int n, std::span<const BigInt> by_exponent);
  static CycInt from_exponents(int n, std::span<const long long> by_exponent);

  int modulus() const;
  int degree() const { return static_cast<int>(coeffs_.size()); }
  std::span<const BigInt> coeffs() const { return coeffs_; }
  bool is_zero() const;

  CycInt pow(unsigned exponent) const;

  CycInt& operator+=(const CycInt& rhs);
  CycInt& operator-=(const CycInt& rhs);
  CycInt& operator*=(const CycInt& rhs);

  friend CycInt operator+(CycInt lhs, const CycInt& rhs) { return lhs += rhs; }
  friend CycInt operator-(CycInt lhs, const CycInt& rhs) { return lhs -= rhs; }
  friend CycInt operator*(const CycInt& lhs, const CycInt& rhs);
  friend CycInt operator-(const CycInt& z);
  friend bool operator==(const CycInt& a, const CycInt& b);

 private:
  friend CycInt galois_apply(long long a, const CycInt& z);

  void require_same_ring(const CycInt& other) const;

  const detail::CyclotomicRing* ring_;
  std::vector<BigInt> coeffs_;
};

// Strict weak order on (modulus, coefficients), lexicographic in the
// coefficients. Used for deterministic output ordering and map keys.
struct LexLess {
  bool operator()(const CycInt& a, const CycInt& b) const;
};

// Image under the automorphism zeta -> zeta^a. Requires gcd(a, n) == 1.
CycInt galois_apply(long long a, const CycInt& z);
CycInt conj(const CycInt& z);
bool is_real(const CycInt& z);

// Numeric value in the plane, 64-bit floats.
PlanarPoint embed_complex(const CycInt& z);

// Exact signs of the real and imaginary parts (-1, 0 or +1). Zero is decided
// symbolically; nonzero signs by interval evaluation at increasing precision.
int sign_real_part(const CycInt& z);
int sign_imag_part(const CycInt& z);

std::ostream& operator<<(std::ostream& os, const CycInt& z);

}  // namespace quasipoly
