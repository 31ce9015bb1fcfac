#pragma once

// Cut-and-project patches of cyclotomic model sets
//   { z in Z[zeta_n] : z* - shift in W }
// where * collects one Galois embedding per complex-conjugate pair other than
// the identity pair. The internal space has dimension phi(n) - 2, which is
// zero for the lattice cases n = 3, 4.

#include "quasipoly/cyclo.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quasipoly {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

// Open ball or open axis-aligned box centred at the origin of internal space.
struct Window {
  enum class Kind { Ball, Box };

  Kind kind = Kind::Ball;
  double radius = 1.0;
  std::vector<double> half_widths;

  static Window ball(double radius);
  static Window box(std::vector<double> half_widths);

  // Strict interior test, shrunk by margin (negative margin enlarges).
  bool contains(std::span<const double> x, double margin = 0.0) const;
  // Half-width of the bounding box along coordinate i.
  double extent(std::size_t i) const;
  void validate(std::size_t dimension) const;
};

struct ModelSetSpec {
  int n = 5;
  std::vector<int> reps;
  Window window;
  std::vector<double> shift;
  CycInt translate;
  std::string label;

  std::size_t internal_dimension() const { return 2 * reps.size(); }
  // Canonicalises n, fills default reps and shift, and validates.
  static ModelSetSpec make(int n, Window window, std::vector<double> shift = {},
                           std::string label = {});
  void validate() const;
};

// Named "-like" presets: ttt5 (n = 5), ab8 (n = 8), shield12 (n = 12), each
// with a centred ball window. Throws InvalidArgument for unknown names.
ModelSetSpec preset(std::string_view name);
double preset_radius(std::string_view name);

// Smallest member of each pair {a, n - a} of units mod n, excluding {1, n-1}.
std::vector<int> default_automorphism_reps(int n);
std::vector<double> default_shift(std::size_t dimension);

std::vector<double> star_map(const ModelSetSpec& spec, const CycInt& z);
bool contains(const ModelSetSpec& spec, const CycInt& z);

struct PointSet {
  ModelSetSpec spec;
  std::vector<CycInt> points;  // representatives, translate not applied
};

// Integer coordinate bounds covering every candidate of a patch of radius R.
struct CoordinateBox {
  std::vector<long long> lo;
  std::vector<long long> hi;
  std::uint64_t count() const;  // saturates at UINT64_MAX
};
CoordinateBox enumeration_box(const ModelSetSpec& spec, double radius);

// All z with |z| <= radius passing contains(spec, z), sorted lexicographically
// by coefficients. Throws BudgetExceeded if the coordinate box holds more than
// budget candidates. generate() splits the box across OpenMP threads;
// generate_serial() is the single-threaded reference.
PointSet generate(const ModelSetSpec& spec, double radius,
                  std::uint64_t budget = kDefaultEnumerationBudget);
PointSet generate_serial(const ModelSetSpec& spec, double radius,
                         std::uint64_t budget = kDefaultEnumerationBudget);

struct DeloneDiagnostics {
  double min_pair_distance = 0.0;
  double max_hole_radius = 0.0;
  std::size_t interior_points = 0;
};

// Restricted to points within 0.8 * radius. The hole estimate samples a grid of
// the given step over that disk and takes the largest nearest-point distance.
DeloneDiagnostics delone_diagnostics(const PointSet& ps, double radius, double step = 0.1);
DeloneDiagnostics delone_diagnostics_serial(const PointSet& ps, double radius,
                                            double step = 0.1);

// Physical positions (translate applied).
std::vector<PlanarPoint> embed_points(const PointSet& ps);

}  // namespace quasipoly
