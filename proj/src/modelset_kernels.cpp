// Enumeration and sampling kernels for model-set patches. Each kernel has an
// OpenMP version and a plain serial reference that tests compare against.

#include "modelset_detail.hpp"
#include "quasipoly/error.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace quasipoly {

namespace {

void evaluate(const detail::EmbeddingTable& t, const detail::Coordinates& x, std::vector<double>& y) {
  for (std::size_t r = 0; r < t.dim; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < t.dim; ++c) s += t.at(r, c) * static_cast<double>(x[c]);
    y[r] = s;
  }
}

}  // namespace

PointSet generate_serial(const ModelSetSpec& spec, double radius, std::uint64_t budget) {
  spec.validate();
  const auto box = enumeration_box(spec, radius);
  detail::check_budget(box, budget);
  const auto table = detail::embedding_table(spec);
  const std::size_t d = table.dim;

  std::vector<detail::Coordinates> hits;
  detail::Coordinates x = box.lo;
  std::vector<double> y(d);
  while (true) {
    evaluate(table, x, y);
    if (detail::passes_prefilter(spec, radius, y)) hits.push_back(x);
    std::size_t k = d;
    while (k-- > 0) {
      if (x[k] < box.hi[k]) {
        ++x[k];
        break;
      }
      x[k] = box.lo[k];
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return detail::finalize_candidates(spec, radius, std::move(hits));
}

// Splits the box along the first coordinate. Within a slab the last coordinate
// is stepped incrementally; y is recomputed from scratch whenever any other
// coordinate changes, which bounds float drift to one row of the box.
PointSet generate(const ModelSetSpec& spec, double radius, std::uint64_t budget) {
  spec.validate();
  const auto box = enumeration_box(spec, radius);
  detail::check_budget(box, budget);
  const auto table = detail::embedding_table(spec);
  const std::size_t d = table.dim;
  const long long slabs = box.hi[0] - box.lo[0] + 1;

  std::vector<detail::Coordinates> hits;
#pragma omp parallel
  {
    std::vector<detail::Coordinates> local;
    std::vector<double> y(d);
    std::vector<double> last_col(d);
    for (std::size_t r = 0; r < d; ++r) last_col[r] = table.at(r, d - 1);

#pragma omp for schedule(dynamic, 1) nowait
    for (long long s = 0; s < slabs; ++s) {
      detail::Coordinates x = box.lo;
      x[0] = box.lo[0] + s;
      while (true) {
        evaluate(table, x, y);
        for (long long v = box.lo[d - 1];; ++v) {
          if (detail::passes_prefilter(spec, radius, y)) {
            x[d - 1] = v;
            local.push_back(x);
          }
          if (v == box.hi[d - 1]) break;
          for (std::size_t r = 0; r < d; ++r) y[r] += last_col[r];
        }
        x[d - 1] = box.lo[d - 1];
        // Advance coordinates d-2 .. 1 of this slab.
        std::size_t k = d - 1;
        bool done = true;
        while (k-- > 1) {
          if (x[k] < box.hi[k]) {
            ++x[k];
            done = false;
            break;
          }
          x[k] = box.lo[k];
        }
        if (done) break;
      }
    }
#pragma omp critical(quasipoly_generate_merge)
    hits.insert(hits.end(), std::make_move_iterator(local.begin()),
                std::make_move_iterator(local.end()));
  }
  return detail::finalize_candidates(spec, radius, std::move(hits));
}

namespace {

struct Interior {
  std::vector<PlanarPoint> all;
  std::vector<PlanarPoint> inner;
  double inner_radius = 0.0;
};

Interior split_interior(const PointSet& ps, double radius) {
  if (ps.points.empty()) throw InvalidArgument("delone_diagnostics: empty point set");
  if (!(radius > 0.0)) throw InvalidArgument("delone_diagnostics: radius must be positive");
  Interior in;
  in.all = embed_points(ps);
  in.inner_radius = 0.8 * radius;
  for (const auto& p : in.all)
    if (std::abs(p) <= in.inner_radius) in.inner.push_back(p);
  if (in.inner.size() < 2)
    throw InvalidArgument("delone_diagnostics: fewer than 2 points within 0.8 * radius");
  return in;
}

// Uniform bucket grid over all points for nearest-point queries.
class BucketGrid {
 public:
  BucketGrid(const std::vector<PlanarPoint>& points, double cell) : cell_(cell) {
    double extent = 0.0;
    for (const auto& p : points) extent = std::max({extent, std::abs(p.real()), std::abs(p.imag())});
    half_ = static_cast<long long>(std::ceil(extent / cell_)) + 1;
    side_ = 2 * half_ + 1;
    cells_.resize(static_cast<std::size_t>(side_ * side_));
    for (const auto& p : points) cells_[index(cell_of(p.real()), cell_of(p.imag()))].push_back(p);
  }

  double nearest_distance(PlanarPoint q) const {
    const long long cx = cell_of(q.real());
    const long long cy = cell_of(q.imag());
    double best = std::numeric_limits<double>::infinity();
    for (long long ring = 0; ring <= side_; ++ring) {
      for (long long ix = cx - ring; ix <= cx + ring; ++ix) {
        for (long long iy = cy - ring; iy <= cy + ring; ++iy) {
          if (std::max(std::abs(ix - cx), std::abs(iy - cy)) != ring) continue;
          if (ix < -half_ || ix > half_ || iy < -half_ || iy > half_) continue;
          for (const auto& p : cells_[index(ix, iy)]) best = std::min(best, std::abs(p - q));
        }
      }
      if (best <= static_cast<double>(ring) * cell_) break;
    }
    return best;
  }

 private:
  long long cell_of(double v) const { return static_cast<long long>(std::floor(v / cell_)); }
  std::size_t index(long long ix, long long iy) const {
    return static_cast<std::size_t>((ix + half_) * side_ + (iy + half_));
  }

  double cell_;
  long long half_ = 0;
  long long side_ = 0;
  std::vector<std::vector<PlanarPoint>> cells_;
};

long long sample_count(double inner_radius, double step) {
  if (!(step > 0.0)) throw InvalidArgument("delone_diagnostics: sample step must be positive");
  return static_cast<long long>(std::floor(inner_radius / step));
}

}  // namespace

DeloneDiagnostics delone_diagnostics_serial(const PointSet& ps, double radius, double step) {
  const auto in = split_interior(ps, radius);
  DeloneDiagnostics out;
  out.interior_points = in.inner.size();
  out.min_pair_distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < in.inner.size(); ++i)
    for (std::size_t j = i + 1; j < in.inner.size(); ++j)
      out.min_pair_distance = std::min(out.min_pair_distance, std::abs(in.inner[i] - in.inner[j]));

  const long long k = sample_count(in.inner_radius, step);
  for (long long ix = -k; ix <= k; ++ix) {
    for (long long iy = -k; iy <= k; ++iy) {
      const PlanarPoint q(static_cast<double>(ix) * step, static_cast<double>(iy) * step);
      if (std::abs(q) > in.inner_radius) continue;
      double best = std::numeric_limits<double>::infinity();
      for (const auto& p : in.all) best = std::min(best, std::abs(p - q));
      out.max_hole_radius = std::max(out.max_hole_radius, best);
    }
  }
  return out;
}

DeloneDiagnostics delone_diagnostics(const PointSet& ps, double radius, double step) {
  const auto in = split_interior(ps, radius);
  DeloneDiagnostics out;
  out.interior_points = in.inner.size();

  double min_dist = std::numeric_limits<double>::infinity();
  const long long count = static_cast<long long>(in.inner.size());
#pragma omp parallel for reduction(min : min_dist) schedule(dynamic, 16)
  for (long long i = 0; i < count; ++i)
    for (long long j = i + 1; j < count; ++j)
      min_dist = std::min(min_dist, std::abs(in.inner[static_cast<std::size_t>(i)] -
                                             in.inner[static_cast<std::size_t>(j)]));
  out.min_pair_distance = min_dist;

  const BucketGrid grid(in.all, 1.0);
  const long long k = sample_count(in.inner_radius, step);
  double hole = 0.0;
#pragma omp parallel for reduction(max : hole) schedule(dynamic, 4)
  for (long long ix = -k; ix <= k; ++ix) {
    for (long long iy = -k; iy <= k; ++iy) {
      const PlanarPoint q(static_cast<double>(ix) * step, static_cast<double>(iy) * step);
      if (std::abs(q) > in.inner_radius) continue;
      hole = std::max(hole, grid.nearest_distance(q));
    }
  }
  out.max_hole_radius = hole;
  return out;
}

}  // namespace quasipoly
