#pragma once

// Witnesses for admissible edge numbers: affinely regular polygons in
// Z[zeta_n], U-polygons of class >= 4 built from them, and their embedding
// into a concrete model set by a homothety z -> lambda^k z + t.

#include "quasipoly/cyclo.hpp"
#include "quasipoly/geometry.hpp"
#include "quasipoly/modelset.hpp"

#include <array>
#include <span>
#include <vector>

namespace quasipoly {

struct Homothety {
  CycInt scale;  // real, positive
  unsigned k = 0;
  CycInt shift;

  static Homothety identity(int n);
  CycInt apply(const CycInt& z) const { return scale * z + shift; }
  // Throws InvalidArgument unless scale is real and positive and the moduli agree.
  void validate() const;
};

// z -> A z + t on R^2 with |det A| > 1e-9.
struct AffineMapF {
  std::array<double, 4> matrix{1.0, 0.0, 0.0, 1.0};  // row-major
  PlanarPoint shift{0.0, 0.0};

  static AffineMapF make(std::array<double, 4> matrix, PlanarPoint shift = {0.0, 0.0});
  double determinant() const { return matrix[0] * matrix[3] - matrix[1] * matrix[2]; }
  PlanarPoint apply_linear(PlanarPoint p) const;
  PlanarPoint apply(PlanarPoint p) const { return apply_linear(p) + shift; }
};

// Vertices rho^j, j < k, for the primitive k-th root rho = exp(2 pi i/k).
// Requires k | lcm(2, n); throws InvalidArgument otherwise.
Polygon regular_polygon_exact(int n, unsigned k);

// {0, 1, 1 + zeta, zeta}.
Polygon affine_parallelogram(int n);
// {1, zeta, zeta - 1, -1, -zeta, 1 - zeta}.
Polygon affine_hexagon(int n);

// An affinely regular k-gon in Z[zeta_n], k even >= 4.
Polygon affinely_regular_polygon_in_ring(int n, unsigned k);

// For a centrally symmetric polygon, returns 2P - (v_0 + v_{s/2}) so the
// centre sits at the origin exactly (P itself if already centred). Throws
// InvalidArgument if P is not centrally symmetric.
Polygon centre_exactly(const Polygon& p);

struct UPolygon {
  Polygon polygon;
  DirectionSet directions;
  unsigned u_class = 0;
};

// Attaches the translates P + (v_j + v_{j+1}) across every edge of an
// origin-centred, centrally symmetric P and returns the convex hull with the
// directions of all edges and diagonals of P.
UPolygon attach_translates(const Polygon& p);

// A verified U-polygon of class >= 4 with m edges in Z[zeta_n]. Throws
// Inadmissible (naming the failed condition) when no such polygon exists.
UPolygon construct_u_polygon_ring(int n, unsigned m);

// A real lambda in Z[zeta_n + conj(zeta_n)] with lambda > 1 and every other
// conjugate of modulus < 1, both with margin 1e-3. Searches integer
// combinations of powers of zeta + conj(zeta) with coefficients up to
// max_coefficient in absolute value; throws BudgetExceeded if none is found.
CycInt pisot_scaler(int n, int max_coefficient = 4);

struct Embedding {
  Homothety homothety;
  std::vector<CycInt> points;
};

// Finds k <= k_max and a translate t taken from a generated patch of the
// given radius such that every lambda^k z + t lies in the model set with
// window margin 1e-6. Lattice cases return the identity.
Embedding embed_in_model_set(std::span<const CycInt> points, const ModelSetSpec& spec,
                             unsigned k_max, double patch_radius = 6.0);

struct ModelSetConstruction {
  UPolygon ring;      // before embedding
  UPolygon embedded;  // vertices in the model set
  Homothety homothety;
};

ModelSetConstruction construct_u_polygon_in_model_set(const ModelSetSpec& spec, unsigned m,
                                                      unsigned k_max = 25);

}  // namespace quasipoly
