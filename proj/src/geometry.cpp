#include "ncg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace ncg {

PointSet::PointSet(Matrix coords) : coords_(std::move(coords)) {
  const int n = size();
  if (n < 2) throw InputError("point set needs at least two points");
  if (dim() < 1) throw InputError("point dimension must be at least 1");
  if (!coords_.allFinite()) throw InputError("point coordinates must be finite");

  dist_.resize(n, n);
  w_max_ = 0.0;
  w_min_ = kInf;
  for (int j = 0; j < n; ++j) {
    dist_(j, j) = 0.0;
    for (int i = j + 1; i < n; ++i) {
      const double d = (coords_.col(i) - coords_.col(j)).norm();
      if (d == 0.0) {
        throw InputError("co-located points " + std::to_string(j) + " and " + std::to_string(i));
      }
      dist_(i, j) = d;
      dist_(j, i) = d;
      w_max_ = std::max(w_max_, d);
      w_min_ = std::min(w_min_, d);
    }
  }
}

PointSet point_set_stats(const std::vector<Point>& points) {
  if (points.size() < 2) throw InputError("point set needs at least two points");
  const auto d = points.front().size();
  Matrix coords(d, static_cast<Eigen::Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != d) throw InputError("point set: mixed dimensions");
    coords.col(static_cast<Eigen::Index>(i)) = points[i];
  }
  return PointSet(std::move(coords));
}

double unit_uniform(std::uint64_t raw) { return static_cast<double>(raw >> 11) * 0x1.0p-53; }

PointSet random_unit_square(int n, std::uint64_t seed) {
  if (n < 2) throw InputError("random_unit_square: n must be at least 2");
  std::mt19937_64 engine(seed);
  Matrix coords(2, n);
  for (int i = 0; i < n; ++i) {
    coords(0, i) = unit_uniform(engine());
    coords(1, i) = unit_uniform(engine());
  }
  return PointSet(std::move(coords));
}

PointSet integer_grid(std::span<const int> extents) {
  if (extents.empty()) throw InputError("integer_grid: need at least one extent");
  long long count = 1;
  for (int b : extents) {
    if (b < 1) throw InputError("integer_grid: extents must be >= 1");
    count *= (b + 1);
  }
  const int d = static_cast<int>(extents.size());
  Matrix coords(d, count);
  std::vector<int> idx(d, 0);
  for (long long p = 0; p < count; ++p) {
    for (int k = 0; k < d; ++k) coords(k, p) = idx[k];
    for (int k = 0; k < d; ++k) {
      if (++idx[k] <= extents[k]) break;
      idx[k] = 0;
    }
  }
  return PointSet(std::move(coords));
}

std::vector<int> grid_extents(const PointSet& points) {
  const Matrix& c = points.coords();
  const int d = points.dim();
  std::vector<int> extents(d);
  for (int k = 0; k < d; ++k) {
    const double lo = c.row(k).minCoeff();
    const double hi = c.row(k).maxCoeff();
    if (lo != 0.0 || hi != std::round(hi) || hi < 1.0) return {};
    extents[k] = static_cast<int>(hi);
  }
  for (int p = 0; p < points.size(); ++p) {
    for (int k = 0; k < d; ++k) {
      if (c(k, p) != std::round(c(k, p))) return {};
    }
  }
  long long expected = 1;
  for (int b : extents) expected *= (b + 1);
  // Co-location is rejected by PointSet, so integrality + count means full lattice.
  if (expected != points.size()) return {};
  return extents;
}

}  // namespace ncg
