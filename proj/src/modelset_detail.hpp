#pragma once

#include "quasipoly/modelset.hpp"

#include <span>
#include <vector>

namespace quasipoly::detail {

using Coordinates = std::vector<long long>;

// Row-major phi x phi table: rows 0, 1 are the physical (x, y) values of
// zeta^j, rows 2k, 2k+1 the internal values under the k-th representative.
struct EmbeddingTable {
  std::size_t dim = 0;
  std::vector<double> entries;

  double at(std::size_t row, std::size_t col) const { return entries[row * dim + col]; }
};

EmbeddingTable embedding_table(const ModelSetSpec& spec);

// Loose float test applied during enumeration; survivors are confirmed with
// contains() afterwards.
bool passes_prefilter(const ModelSetSpec& spec, double radius, std::span<const double> y);

// Sorts candidate coordinates, then keeps exactly those with |z| <= radius and
// contains(spec, z).
PointSet finalize_candidates(const ModelSetSpec& spec, double radius,
                             std::vector<Coordinates> candidates);

void check_budget(const CoordinateBox& box, std::uint64_t budget);

}  // namespace quasipoly::detail
