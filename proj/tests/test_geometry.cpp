#include "quasipoly/error.hpp"
#include "quasipoly/geometry.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace quasipoly;
using quasipoly::testing::ci;
using quasipoly::testing::nonzero_cycint;
using quasipoly::testing::random_cycint;
using quasipoly::testing::zeta;

namespace {

// a + b i in Z[i]
CycInt g(long long a, long long b) { return ci(4, a) + ci(4, b) * zeta(4); }

Polygon unit_square() { return Polygon({g(0, 0), g(1, 0), g(1, 1), g(0, 1)}); }

Polygon regular(int n) {
  std::vector<CycInt> v;
  for (int j = 0; j < n; ++j) v.push_back(zeta(n, j));
  return Polygon(std::move(v));
}

Polygon attachment_octagon() {
  return Polygon({g(1, -3), g(3, -1), g(3, 1), g(1, 3), g(-1, 3), g(-3, 1), g(-3, -1), g(-1, -3)});
}

DirectionSet dirs(std::initializer_list<CycInt> vs) {
  std::vector<Direction> d;
  for (const auto& v : vs) d.push_back(Direction::of(v));
  return DirectionSet(std::move(d));
}

double line_gap(double a, double b) {
  const double d = std::fmod(std::abs(a - b), M_PI);
  return std::min(d, M_PI - d);
}

}  // namespace

TEST(Parallel, ExactTest) {
  EXPECT_TRUE(parallel(g(1, 2), g(-2, -4)));
  EXPECT_FALSE(parallel(g(1, 2), g(2, 1)));
  EXPECT_TRUE(parallel(zeta(5), -zeta(5) * (zeta(5) + zeta(5, 4))));
  EXPECT_THROW(parallel(zeta(5), CycInt(5)), InvalidArgument);
  EXPECT_EQ(cross_sign(g(1, 0), g(0, 1)), 1);
  EXPECT_EQ(cross_sign(g(0, 1), g(1, 0)), -1);
  EXPECT_EQ(orientation(g(0, 0), g(1, 0), g(0, 1)), 1);
  EXPECT_EQ(orientation(g(0, 0), g(1, 1), g(2, 2)), 0);
}

TEST(Parallel, AgreesWithFloatAngles) {
  std::mt19937_64 rng(314);
  std::uniform_int_distribution<int> pick_n(3, 24), small(-3, 3);
  int agree_parallel = 0;
  for (int rep = 0; rep < 10000; ++rep) {
    const int n = pick_n(rng);
    const auto u = nonzero_cycint(rng, n, 5);
    CycInt w = nonzero_cycint(rng, n, 5);
    if (rep % 2 == 0) {
      // u times a real factor k + l (zeta^j + zeta^-j).
      const int j = small(rng);
      CycInt r = ci(n, small(rng)) + ci(n, small(rng)) * (zeta(n, j) + zeta(n, -j));
      if (r.is_zero()) r = ci(n, 2);
      w = u * r;
    }
    const bool exact = parallel(u, w);
    const bool fp = line_gap(std::arg(embed_complex(u)), std::arg(embed_complex(w))) < 1e-9;
    EXPECT_EQ(exact, fp) << "n = " << n << " u = " << u << " w = " << w;
    agree_parallel += exact;
  }
  EXPECT_GT(agree_parallel, 4000);
}

TEST(Direction, CanonicalRepresentative) {
  const auto a = Direction::of(g(-1, 0));
  EXPECT_NEAR(a.angle, 0.0, 1e-15);
  EXPECT_EQ(a.rep, g(1, 0));
  EXPECT_NEAR(Direction::of(g(1, -1)).angle, 3 * M_PI / 4, 1e-12);
  EXPECT_NEAR(Direction::of(g(0, -2)).angle, M_PI / 2, 1e-12);
  EXPECT_THROW(Direction::of(CycInt(4)), InvalidArgument);
}

TEST(DirectionSet, RejectsParallelMembersAndSorts) {
  EXPECT_THROW(dirs({g(1, 0), g(-3, 0)}), InvalidArgument);
  const auto d = dirs({g(0, 1), g(1, 1), g(1, 0)});
  ASSERT_EQ(d.size(), 3u);
  EXPECT_LT(d[0].angle, d[1].angle);
  EXPECT_LT(d[1].angle, d[2].angle);
  EXPECT_TRUE(d.contains_parallel(g(5, 5)));
  EXPECT_FALSE(d.contains_parallel(g(1, 2)));
  EXPECT_EQ(DirectionSet::distinct({g(1, 0), g(2, 0), g(0, 1), g(0, -7)}).size(), 2u);
}

TEST(Polygon, Validation) {
  EXPECT_NO_THROW(unit_square());
  EXPECT_THROW(Polygon({g(0, 0), g(0, 1), g(1, 1), g(1, 0)}), InvalidArgument);  // clockwise
  EXPECT_THROW(Polygon({g(0, 0), g(1, 0), g(2, 0), g(1, 1)}), InvalidArgument);  // collinear
  EXPECT_THROW(Polygon({g(0, 0), g(2, 0), g(1, 1), g(2, 2), g(0, 2)}), InvalidArgument);
  EXPECT_THROW(Polygon({g(0, 0), g(1, 0)}), InvalidArgument);
  // A pentagram turns left at every vertex but winds twice.
  EXPECT_THROW(Polygon({zeta(5, 0), zeta(5, 2), zeta(5, 4), zeta(5, 1), zeta(5, 3)}), InvalidArgument);
}

TEST(ConvexHull, DropsInteriorAndCollinearPoints) {
  const auto h = convex_hull({g(0, 0), g(2, 0), g(1, 0), g(2, 2), g(1, 1), g(0, 2), g(0, 1), g(2, 2)});
  ASSERT_EQ(h.size(), 4u);
  EXPECT_EQ(h[0], g(0, 0));
  EXPECT_EQ(h[1], g(2, 0));
}

TEST(EdgeDirections, Examples) {
  const auto sq = edge_directions(unit_square());
  ASSERT_EQ(sq.size(), 4u);
  EXPECT_NEAR(sq[0].angle, 0.0, 1e-15);
  EXPECT_NEAR(sq[1].angle, M_PI / 2, 1e-15);
  EXPECT_TRUE(parallel(sq[0], sq[2]));
  EXPECT_TRUE(parallel(sq[1], sq[3]));

  std::vector<CycInt> hex_edges;
  for (const auto& d : edge_directions(regular(6))) hex_edges.push_back(d.rep);
  EXPECT_EQ(hex_edges.size(), 6u);
  EXPECT_EQ(DirectionSet::distinct(hex_edges).size(), 3u);

  std::vector<CycInt> oct_edges;
  for (const auto& d : edge_directions(attachment_octagon())) oct_edges.push_back(d.rep);
  EXPECT_EQ(oct_edges.size(), 8u);
  EXPECT_EQ(DirectionSet::distinct(oct_edges).size(), 4u);
}

TEST(UPolygon, Examples) {
  EXPECT_TRUE(is_u_polygon(unit_square(), dirs({g(1, 0)})));
  EXPECT_FALSE(is_u_polygon(unit_square(), dirs({g(1, 2)})));
  const auto hex = regular(6);
  EXPECT_TRUE(is_u_polygon(hex, dirs({hex.edge(0), hex.edge(1), hex.edge(2)})));
  EXPECT_FALSE(is_u_polygon(regular(5), dirs({regular(5).edge(0)})));
}

TEST(UPolygon, ClassExamples) {
  const auto oct = regular(8);
  const auto u = dirs({oct.edge(0), oct.edge(1), oct.edge(2), oct.edge(3)});
  EXPECT_TRUE(is_u_polygon(oct, u));
  EXPECT_EQ(u_class(oct, u), 4u);

  const auto att = attachment_octagon();
  const auto u2 = dirs({g(1, 0), g(1, 1), g(0, 1), g(-1, 1)});
  EXPECT_TRUE(is_u_polygon(att, u2));
  EXPECT_EQ(u_class(att, u2), 4u);

  // Only the horizontal and vertical edges of the square are in U, so the
  // longest run is one edge.
  EXPECT_EQ(u_class(unit_square(), dirs({g(1, 0)})), 1u);
  EXPECT_THROW(u_class(unit_square(), dirs({g(1, 2)})), InvalidArgument);
}

TEST(UPolygon, TrueVerdictImpliesEvenAndLargeEnough) {
  for (int m : {4, 6, 8, 10, 12}) {
    const auto p = regular(m);
    std::vector<Direction> d;
    for (std::size_t i = 0; i < p.size() / 2; ++i) d.push_back(Direction::of(p.edge(i)));
    const DirectionSet u(std::move(d));
    if (is_u_polygon(p, u)) {
      EXPECT_EQ(p.size() % 2, 0u);
      EXPECT_GE(p.size(), 2 * u.size());
      EXPECT_LE(u_class(p, u), u.size());
    }
  }
}

TEST(CrossRatio, Scalars) {
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_DOUBLE_EQ(cross_ratio(0, 1, 2, 3), 4.0 / 3.0);
  EXPECT_DOUBLE_EQ(cross_ratio(0, 1, 2, inf), 2.0);
  EXPECT_DOUBLE_EQ(cross_ratio(0, 1, inf, -1), 2.0);
  EXPECT_THROW(cross_ratio(0, 1, 1, 2), InvalidArgument);
  EXPECT_THROW(cross_ratio(inf, 1, -inf, 2), InvalidArgument);
  // Infinity conventions agree with the generic formula in the limit.
  const double big = 1e12;
  EXPECT_NEAR(cross_ratio(inf, 1, 3, -2), cross_ratio(big, 1, 3, -2), 1e-9);
  EXPECT_NEAR(cross_ratio(0.5, inf, 3, -2), cross_ratio(0.5, big, 3, -2), 1e-9);
  EXPECT_NEAR(cross_ratio(0.5, 1, 3, inf), cross_ratio(0.5, 1, 3, big), 1e-9);
}

TEST(CrossRatio, Directions) {
  const auto q = cross_ratio_of_directions(Direction::of(g(1, 0)), Direction::of(g(1, 1)),
                                           Direction::of(g(0, 1)), Direction::of(g(1, -1)));
  EXPECT_DOUBLE_EQ(q, 2.0);
  EXPECT_THROW(cross_ratio_of_directions(Direction::of(g(1, 0)), Direction::of(g(2, 0)),
                                         Direction::of(g(0, 1)), Direction::of(g(1, -1))),
               InvalidArgument);
}

TEST(CrossRatio, SuccessivePowersOfARootOfUnity) {
  auto q = [](int n) {
    return cross_ratio_of_directions(Direction::of(zeta(n, 0)), Direction::of(zeta(n, 1)),
                                     Direction::of(zeta(n, 2)), Direction::of(zeta(n, 3)));
  };
  // Directions 1, zeta_20, zeta_20^2, zeta_20^3 are successive edge directions
  // of the regular icosagon; the golden ratio belongs to the decagon.
  EXPECT_NEAR(q(20), 1.3819660112501051, 1e-12);
  EXPECT_NEAR(q(10), (1 + std::sqrt(5.0)) / 2, 1e-12);
}

TEST(CrossRatio, RegularClosedForm) {
  EXPECT_DOUBLE_EQ(consecutive_edge_cross_ratio_regular(8), 2.0);
  EXPECT_NEAR(consecutive_edge_cross_ratio_regular(12), 1.5, 1e-15);
  EXPECT_NEAR(consecutive_edge_cross_ratio_regular(20), 1.381966011250105, 1e-12);
  EXPECT_THROW(consecutive_edge_cross_ratio_regular(9), InvalidArgument);
  EXPECT_THROW(consecutive_edge_cross_ratio_regular(6), InvalidArgument);
  const auto p = regular(10);
  const double q = cross_ratio_of_directions(Direction::of(p.edge(0)), Direction::of(p.edge(1)),
                                             Direction::of(p.edge(2)), Direction::of(p.edge(3)));
  EXPECT_NEAR(q, consecutive_edge_cross_ratio_regular(10), 1e-9);
}

TEST(CrossRatio, InvariantUnderLinearMaps) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-2.0, 2.0), ang(0.0, M_PI);
  int checked = 0;
  while (checked < 200) {
    std::array<PlanarPoint, 4> v;
    for (auto& x : v) x = std::polar(1.0, ang(rng));
    const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    const double det = a * d - b * c;
    const double fro = a * a + b * b + c * c + d * d;
    if (std::abs(det) < 1e-3 || fro / std::abs(det) > 1e3) continue;
    double q0;
    try {
      q0 = cross_ratio_of_vectors(v);
    } catch (const InvalidArgument&) {
      continue;
    }
    std::array<PlanarPoint, 4> w;
    for (int i = 0; i < 4; ++i) w[i] = {a * v[i].real() + b * v[i].imag(), c * v[i].real() + d * v[i].imag()};
    const double q1 = cross_ratio_of_vectors(w);
    if (std::abs(q0) > 1e4) continue;  // near-coincident slopes amplify rounding
    EXPECT_NEAR(q1, q0, 1e-7 * std::max(1.0, std::abs(q0)));
    ++checked;
  }
}

TEST(CrossRatio, ExactValueLiesInRealQuadraticSubfieldForN5) {
  // q = N / D with N, D in Z[zeta_5]. Multiplying by the other conjugates of D
  // gives an integer denominator and a numerator in Z[tau] = Z + Z(zeta + zeta^4),
  // whose power-basis coefficients are (p - r, 0, -r, -r).
  std::mt19937_64 rng(55);
  int checked = 0;
  while (checked < 50) {
    std::array<Direction, 4> d;
    try {
      for (auto& x : d) x = Direction::of(nonzero_cycint(rng, 5, 3));
      const auto e = cross_ratio_exact(d[0], d[1], d[2], d[3]);
      const auto others = galois_apply(2, e.denominator) * galois_apply(3, e.denominator) *
                          galois_apply(4, e.denominator);
      const auto norm = e.denominator * others;
      const auto x = e.numerator * others;
      const auto nc = norm.coeffs();
      ASSERT_TRUE(nc[1] == 0 && nc[2] == 0 && nc[3] == 0);
      const auto xc = x.coeffs();
      ASSERT_EQ(xc[1], 0);
      ASSERT_EQ(xc[2], xc[3]);
      const double r = -xc[3].convert_to<double>();
      const double p = xc[0].convert_to<double>() + r;
      const double den = nc[0].convert_to<double>();
      const double a = (p - r / 2) / den, b = r / (2 * den);
      const double q = cross_ratio_of_directions(d[0], d[1], d[2], d[3]);
      EXPECT_NEAR(a + b * std::sqrt(5.0), q, 1e-9 * std::max(1.0, std::abs(q)));
      ++checked;
    } catch (const InvalidArgument&) {
      // parallel pair drawn, try again
    }
  }
}
