#include "quasipoly/xray.hpp"

#include "quasipoly/error.hpp"

namespace quasipoly {

std::size_t XRayTable::total() const {
  std::size_t sum = 0;
  for (const auto& [key, count] : lines) sum += count;
  return sum;
}

CycInt line_key(const CycInt& z, const Direction& u) {
  return z * conj(u.rep) - conj(z) * u.rep;
}

XRayTable xray(std::span<const CycInt> points, const Direction& u) {
  if (u.rep.is_zero()) throw InvalidArgument("xray: zero direction");
  for (const auto& z : points)
    if (z.modulus() != u.rep.modulus()) throw ModulusMismatch(z.modulus(), u.rep.modulus());

  std::vector<CycInt> keys(points.size(), CycInt(u.rep.modulus()));
  const long long count = static_cast<long long>(points.size());
#pragma omp parallel for schedule(static) if (count > 256)
  for (long long i = 0; i < count; ++i)
    keys[static_cast<std::size_t>(i)] = line_key(points[static_cast<std::size_t>(i)], u);

  XRayTable table{u, {}};
  for (auto& k : keys) ++table.lines[std::move(k)];
  return table;
}

VertexSplit alternate_vertex_split(const Polygon& p) {
  if (p.size() % 2 != 0)
    throw InvalidArgument("alternate_vertex_split: odd vertex count " + std::to_string(p.size()));
  VertexSplit split;
  for (std::size_t i = 0; i < p.size(); ++i) (i % 2 == 0 ? split.evens : split.odds).push_back(p[i]);
  return split;
}

bool xray_equal(std::span<const CycInt> a, std::span<const CycInt> b, const DirectionSet& u) {
  for (const auto& dir : u)
    if (xray(a, dir).lines != xray(b, dir).lines) return false;
  return true;
}

SplitCheck check_alternate_split(const Polygon& p, const DirectionSet& u) {
  SplitCheck check;
  check.u_polygon = is_u_polygon(p, u);
  const auto split = alternate_vertex_split(p);
  check.all_equal = true;
  for (const auto& dir : u) {
    const bool eq = xray(split.evens, dir).lines == xray(split.odds, dir).lines;
    check.equal_per_direction.push_back(eq);
    check.all_equal = check.all_equal && eq;
  }
  check.expectation_falsified = check.u_polygon && !check.all_equal;
  return check;
}

}  // namespace quasipoly
