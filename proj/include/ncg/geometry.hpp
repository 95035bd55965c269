#pragma once

#include "ncg/common.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace ncg {

template <typename Scalar>
using PointT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using Point = PointT<double>;

/// Euclidean distance between two points of equal dimension.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar distance(const Eigen::MatrixBase<DerivedA>& u,
                                   const Eigen::MatrixBase<DerivedB>& v) {
  if (u.size() != v.size()) {
    throw InputError("distance: dimension mismatch (" + std::to_string(u.size()) + " vs " +
                     std::to_string(v.size()) + ")");
  }
  return (u - v).norm();
}

/// Immutable agent positions with their cached pairwise distance matrix.
///
/// Coordinates are stored column-wise (one column per point). All other
/// modules read distances through `distances()`.
class PointSet {
 public:
  /// Builds the distance cache and the w_max / w_min / aspect-ratio
  /// statistics. Throws InputError for fewer than two points, non-finite
  /// coordinates, or any pair of co-located points.
  explicit PointSet(Matrix coords);

  int size() const { return static_cast<int>(coords_.cols()); }
  int dim() const { return static_cast<int>(coords_.rows()); }
  const Matrix& coords() const { return coords_; }
  auto point(int i) const { return coords_.col(i); }
  const Matrix& distances() const { return dist_; }
  double distance(int i, int j) const { return dist_(i, j); }

  double w_max() const { return w_max_; }
  double w_min() const { return w_min_; }
  double aspect_ratio() const { return w_max_ / w_min_; }

 private:
  Matrix coords_;
  Matrix dist_;
  double w_max_ = 0.0;
  double w_min_ = 0.0;
};

PointSet point_set_stats(const std::vector<Point>& points);

/// Uniform sample of the unit square.
///
/// Uses std::mt19937_64 seeded with `seed`; each coordinate is the top 53
/// bits of one engine output scaled by 2^-53, so the stream is identical on
/// every standard library.
PointSet random_unit_square(int n, std::uint64_t seed);

/// All integer points of [0,b_1] x ... x [0,b_d], first axis varying fastest.
PointSet integer_grid(std::span<const int> extents);

/// Recovers the extents of a full integer lattice, or an empty vector if the
/// point set is not one.
std::vector<int> grid_extents(const PointSet& points);

/// Uniform double in [0,1) from one mt19937_64 draw (portable).
double unit_uniform(std::uint64_t raw);

}  // namespace ncg
