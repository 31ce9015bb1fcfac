#pragma once

// Discrete parallel X-rays: the number of points on each line parallel to a
// direction. Lines are identified by the exact key
//   k(z) = z conj(u) - conj(z) u,
// which is constant along lines parallel to u and separates distinct ones.

#include "quasipoly/cyclo.hpp"
#include "quasipoly/geometry.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace quasipoly {

struct XRayTable {
  Direction direction;
  std::map<CycInt, std::size_t, LexLess> lines;

  std::size_t total() const;
};

CycInt line_key(const CycInt& z, const Direction& u);

// Keys are computed in parallel; the table is ordered by key.
XRayTable xray(std::span<const CycInt> points, const Direction& u);

struct VertexSplit {
  std::vector<CycInt> evens;
  std::vector<CycInt> odds;
};

// Vertices at even and odd cyclic positions. Throws InvalidArgument for an
// odd vertex count.
VertexSplit alternate_vertex_split(const Polygon& p);

// Key-wise equal X-rays in every direction of u.
bool xray_equal(std::span<const CycInt> a, std::span<const CycInt> b, const DirectionSet& u);

struct SplitCheck {
  bool u_polygon = false;
  std::vector<bool> equal_per_direction;
  bool all_equal = false;
  // A U-polygon whose alternate vertex classes have different X-rays.
  bool expectation_falsified = false;
};

SplitCheck check_alternate_split(const Polygon& p, const DirectionSet& u);

}  // namespace quasipoly
