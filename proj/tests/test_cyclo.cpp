#include "quasipoly/cyclo.hpp"
#include "quasipoly/error.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <sstream>

using namespace quasipoly;
using quasipoly::testing::ci;
using quasipoly::testing::random_cycint;
using quasipoly::testing::zeta;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Totient, SmallValues) {
  EXPECT_EQ(phi(1), 1u);
  EXPECT_EQ(phi(5), 4u);
  EXPECT_EQ(phi(12), 4u);
  EXPECT_EQ(phi(9), 6u);
  EXPECT_EQ(phi(97), 96u);
  EXPECT_THROW(phi(0), InvalidArgument);
}

TEST(CyclotomicPolynomial, KnownCoefficients) {
  EXPECT_EQ(cyclotomic_polynomial(1), big({-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), big({1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(5), big({1, 1, 1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), big({1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), big({1, -1, 1}));
}

TEST(CyclotomicPolynomial, FirstNonUnitCoefficientAt105) {
  const auto p = cyclotomic_polynomial(105);
  ASSERT_EQ(p.size(), 49u);
  EXPECT_EQ(p[7], -2);
}

TEST(CyclotomicPolynomial, DegreeIsTotient) {
  for (std::uint64_t n = 1; n <= 200; ++n)
    EXPECT_EQ(cyclotomic_polynomial(n).size(), phi(n) + 1) << "n = " << n;
}

TEST(CyclotomicPolynomial, VanishesAtPrimitiveRoot) {
  for (std::uint64_t n : {7u, 15u, 24u, 30u, 60u}) {
    std::complex<double> acc = 0, x = 1;
    const auto w = std::polar(1.0, 2 * M_PI / static_cast<double>(n));
    for (const auto& c : cyclotomic_polynomial(n)) acc += c.convert_to<double>() * x, x *= w;
    EXPECT_LT(std::abs(acc), 1e-9) << "n = " << n;
  }
}

TEST(CycInt, RingIdentities) {
  EXPECT_EQ(zeta(4) * zeta(4), ci(4, -1));
  EXPECT_EQ(zeta(5) * zeta(5, 4), ci(5, 1));
  EXPECT_EQ((ci(8, 1) + zeta(8)) * (ci(8, 1) - zeta(8)), ci(8, 1) - zeta(8, 2));
  EXPECT_EQ(zeta(5, 5), ci(5, 1));
  EXPECT_EQ(zeta(7, -1), zeta(7, 6));
  EXPECT_EQ(zeta(9).pow(9), ci(9, 1));
  EXPECT_TRUE((zeta(6) - zeta(6)).is_zero());
}

TEST(CycInt, RejectsMixedModuliAndBadInput) {
  EXPECT_THROW(zeta(5) + zeta(7), ModulusMismatch);
  EXPECT_THROW(zeta(5) * zeta(8), ModulusMismatch);
  EXPECT_THROW(CycInt(5, big({1, 2})), InvalidArgument);
  EXPECT_THROW(CycInt(0), InvalidArgument);
  EXPECT_THROW(CycInt(kMaxModulus + 1), InvalidArgument);
}

TEST(CycInt, FromExponentsReduces) {
  const std::vector<long long> e{0, 0, 0, 0, 1};  // zeta_5^4 = -1 - z - z^2 - z^3
  EXPECT_EQ(CycInt::from_exponents(5, std::span<const long long>(e)), zeta(5, 4));
  EXPECT_EQ(zeta(5, 4).coeffs()[0], -1);
}

TEST(Galois, Examples) {
  std::mt19937_64 rng(11);
  const auto z = random_cycint(rng, 9);
  EXPECT_EQ(galois_apply(1, z), z);
  EXPECT_EQ(galois_apply(4, zeta(5)), zeta(5, 4));
  EXPECT_EQ(galois_apply(3, ci(8, 1) + zeta(8)), ci(8, 1) + zeta(8, 3));
  EXPECT_THROW(galois_apply(2, zeta(8)), InvalidArgument);
  EXPECT_EQ(galois_apply(-1, zeta(7)), conj(zeta(7)));
}

TEST(Galois, ConjugationExamples) {
  EXPECT_EQ(conj(zeta(5)), zeta(5, 4));
  EXPECT_EQ(conj(ci(7, 3)), ci(7, 3));
  const auto z = zeta(8) + zeta(8, 3);
  EXPECT_EQ(conj(z), zeta(8, 7) + zeta(8, 5));
  EXPECT_EQ(conj(z), -z);
}

TEST(Galois, IsReal) {
  EXPECT_TRUE(is_real(zeta(5) + zeta(5, 4)));
  EXPECT_FALSE(is_real(zeta(5)));
  EXPECT_TRUE(is_real(CycInt(5)));
}

TEST(Galois, HomomorphismProperty) {
  std::mt19937_64 rng(2024);
  for (int n = 3; n <= 60; ++n) {
    const auto z = random_cycint(rng, n), w = random_cycint(rng, n);
    for (long long a = 1; a < n; ++a) {
      if (std::gcd(a, static_cast<long long>(n)) != 1) continue;
      EXPECT_EQ(galois_apply(a, z * w), galois_apply(a, z) * galois_apply(a, w)) << n << ' ' << a;
      EXPECT_EQ(galois_apply(a, z + w), galois_apply(a, z) + galois_apply(a, w));
    }
  }
}

TEST(Galois, CompositionProperty) {
  std::mt19937_64 rng(7);
  for (int n = 3; n <= 60; n += 3) {
    const auto z = random_cycint(rng, n);
    for (long long a = 1; a < n; ++a) {
      if (std::gcd(a, static_cast<long long>(n)) != 1) continue;
      for (long long b = 1; b < n; b += 2) {
        if (std::gcd(b, static_cast<long long>(n)) != 1) continue;
        EXPECT_EQ(galois_apply(a, galois_apply(b, z)), galois_apply((a * b) % n, z));
      }
    }
  }
}

TEST(Embedding, Examples) {
  EXPECT_NEAR(std::abs(embed_complex(zeta(4)) - PlanarPoint(0, 1)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(embed_complex(ci(4, 1) + zeta(4)) - PlanarPoint(1, 1)), 0.0, 1e-12);
  const auto z5 = embed_complex(zeta(5));
  EXPECT_NEAR(z5.real(), 0.309017, 1e-6);
  EXPECT_NEAR(z5.imag(), 0.951057, 1e-6);
}

TEST(Embedding, RingHomomorphismWithinTolerance) {
  std::mt19937_64 rng(99);
  for (int n = 3; n <= 24; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto z = random_cycint(rng, n), w = random_cycint(rng, n);
      const auto ez = embed_complex(z), ew = embed_complex(w);
      const double scale = 1.0 + std::abs(ez) * std::abs(ew);
      EXPECT_LT(std::abs(embed_complex(z * w) - ez * ew), 1e-9 * scale) << n;
      EXPECT_LT(std::abs(embed_complex(z + w) - (ez + ew)), 1e-9 * scale) << n;
    }
  }
}

TEST(Embedding, OddModulusHasPrimitiveDoubleRoot) {
  for (int n : {3, 5, 7, 9, 11, 15}) {
    const auto rho = -zeta(n, (n + 1) / 2);
    EXPECT_EQ(rho * rho, zeta(n)) << n;
    EXPECT_EQ(rho.pow(static_cast<unsigned>(n)), ci(n, -1)) << n;
    EXPECT_EQ(rho.pow(static_cast<unsigned>(2 * n)), ci(n, 1)) << n;
    EXPECT_NEAR(std::arg(embed_complex(rho)), M_PI / n, 1e-12) << n;
  }
}

TEST(ExactSigns, AxisAndNearAxisValues) {
  EXPECT_EQ(sign_imag_part(zeta(5) + zeta(5, 4)), 0);
  EXPECT_EQ(sign_imag_part(zeta(5)), 1);
  EXPECT_EQ(sign_imag_part(zeta(5, 3)), -1);
  EXPECT_EQ(sign_real_part(zeta(4)), 0);
  EXPECT_EQ(sign_real_part(zeta(12, 3) + zeta(12, 9)), 0);
  EXPECT_EQ(sign_real_part(zeta(5)), 1);
  EXPECT_EQ(sign_real_part(zeta(5, 2)), -1);
  // The unit (tau)^-40 is tiny but positive; double rounding alone would say 0.
  const auto tau = ci(5, 1) + zeta(5) + zeta(5, 4);
  const auto tiny = (tau - ci(5, 1)).pow(60);  // tau^-60
  EXPECT_EQ(sign_real_part(tiny), 1);
  EXPECT_EQ(sign_real_part(-tiny), -1);
  EXPECT_EQ(sign_real_part(tiny * tau.pow(60) - ci(5, 1)), 0);
}

TEST(CycInt, StreamOutput) {
  std::ostringstream os;
  os << zeta(5, 4);
  EXPECT_FALSE(os.str().empty());
}
