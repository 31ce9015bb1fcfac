#pragma once

// Exact planar geometry over Z[zeta_n]: directions, strictly convex polygons,
// U-polygon verification and class, and cross ratios of slopes.

#include "quasipoly/cyclo.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace quasipoly {

// True when u and w are real multiples of each other: u * conj(w) is real.
// Throws InvalidArgument if either is zero.
bool parallel(const CycInt& u, const CycInt& w);

// Exact sign of the planar cross product u x v.
int cross_sign(const CycInt& u, const CycInt& v);
// Exact sign of (b - a) x (c - a); positive for a left turn.
int orientation(const CycInt& a, const CycInt& b, const CycInt& c);

// A line direction. The stored representative has angle in [0, pi).
struct Direction {
  CycInt rep;
  double angle = 0.0;

  // Throws InvalidArgument for the zero vector.
  static Direction of(const CycInt& v);
};

bool parallel(const Direction& a, const Direction& b);

// Pairwise non-parallel directions, sorted by angle (exact comparison).
class DirectionSet {
 public:
  DirectionSet() = default;
  explicit DirectionSet(std::vector<Direction> dirs);
  // Collapses parallel vectors to one direction each.
  static DirectionSet distinct(const std::vector<CycInt>& vectors);

  std::size_t size() const { return dirs_.size(); }
  bool empty() const { return dirs_.empty(); }
  const Direction& operator[](std::size_t i) const { return dirs_[i]; }
  auto begin() const { return dirs_.begin(); }
  auto end() const { return dirs_.end(); }

  bool contains_parallel(const CycInt& v) const;

 private:
  std::vector<Direction> dirs_;
};

// Strictly convex polygon with exact vertices in counterclockwise order.
class Polygon {
 public:
  // Throws InvalidArgument unless there are >= 3 vertices of one modulus
  // forming a strictly convex counterclockwise cycle.
  explicit Polygon(std::vector<CycInt> vertices);

  const std::vector<CycInt>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  int modulus() const { return vertices_.front().modulus(); }
  const CycInt& operator[](std::size_t i) const { return vertices_[i]; }
  CycInt edge(std::size_t i) const;  // v[i+1] - v[i], cyclic

 private:
  std::vector<CycInt> vertices_;
};

// Exact convex hull; collinear boundary points are dropped.
Polygon convex_hull(std::vector<CycInt> points);

// Direction of each edge in cyclic order (with repetition).
std::vector<Direction> edge_directions(const Polygon& p);

// Every line in a direction of U through a vertex meets another vertex.
bool is_u_polygon(const Polygon& p, const DirectionSet& u);

// Longest cyclic run of edges parallel to members of U, capped at card(U).
// Throws InvalidArgument unless p is a U-polygon.
unsigned u_class(const Polygon& p, const DirectionSet& u);

// --- cross ratios --------------------------------------------------------

// <t1,t2,t3,t4> = (t3 - t1)(t4 - t2) / ((t3 - t2)(t4 - t1)). Either infinity
// stands for the point at infinity. Throws InvalidArgument on repeated values.
double cross_ratio(double t1, double t2, double t3, double t4);

// y/x, or +infinity for vertical vectors.
double slope(PlanarPoint v);
double slope(const Direction& d);

double cross_ratio_of_directions(const Direction& u1, const Direction& u2, const Direction& u3,
                                 const Direction& u4);
double cross_ratio_of_vectors(const std::array<PlanarPoint, 4>& v);

// The cross ratio as an exact quotient numerator / denominator of real
// elements of Z[zeta_n].
struct ExactCrossRatio {
  CycInt numerator;
  CycInt denominator;
};
ExactCrossRatio cross_ratio_exact(const Direction& u1, const Direction& u2, const Direction& u3,
                                  const Direction& u4);

// Cross ratio of the slopes of four consecutive edges of a regular m-gon:
// (2 + 2cos(4pi/m)) / (1 + 2cos(4pi/m)).
double consecutive_edge_cross_ratio_regular(unsigned m);

}  // namespace quasipoly
