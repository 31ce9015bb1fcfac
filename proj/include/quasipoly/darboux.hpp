#pragma once

// Float polygons: midpoint polygons, the rescaled midpoint (Darboux) iteration
// and an affine-regularity metric. Exactness is lost to the sec(pi/n)
// scaling, so everything here is 64-bit float.

#include "quasipoly/cyclo.hpp"
#include "quasipoly/geometry.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace quasipoly {

using FloatPolygon = std::vector<PlanarPoint>;

FloatPolygon embed_polygon(const Polygon& p);

// Vertex i of the result is the midpoint of edge (i, i+1).
FloatPolygon midpoint_polygon(const FloatPolygon& p);

// Exact counterpart scaled by 2: vertices v[i] + v[i+1]. Midpoints themselves
// generally leave Z[zeta_n].
Polygon doubled_midpoint_polygon(const Polygon& p);

struct DarbouxRun {
  FloatPolygon result;              // P_{2k}
  std::vector<FloatPolygon> steps;  // P_0, P_1, ..., P_{2k}
  PlanarPoint recentred_by{0.0, 0.0};
};

// Iterates P_j = sec(pi/n) M(P_{j-1}) for 2k steps. An input whose vertex
// centroid is off the origin by more than 1e-9 is recentred first.
// Throws InvalidArgument for fewer than 3 vertices or a degenerate polygon.
DarbouxRun darboux_iterate(FloatPolygon p0, unsigned k);

// Least-squares fit p_j ~ c + A (cos 2pi j/n, sin 2pi j/n); returns the
// largest vertex deviation from the fit. Throws InvalidArgument when the fitted
// map is singular (collinear vertices).
// k points at sorted uniform angles on the unit circle, every gap < pi,
// shifted so the vertex centroid is the origin. Deterministic in the seed.
FloatPolygon random_convex_polygon(std::uint64_t seed, std::size_t k);

double affine_regularity_residual(const FloatPolygon& p);

// Angular distance between two line directions, modulo pi.
double line_angle_distance(double a, double b);

// Every edge direction lies within tol (radians) of one of the given angles.
bool edges_within_directions(const FloatPolygon& p, std::span<const double> angles, double tol);

// Float U-polygon test: through every vertex, each direction meets another
// vertex within angular tolerance tol.
bool is_u_polygon_float(const FloatPolygon& p, std::span<const double> angles, double tol);

}  // namespace quasipoly
