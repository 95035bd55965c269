#pragma once

#include <Eigen/Dense>

#include <limits>
#include <stdexcept>
#include <string>

namespace ncg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Thrown for malformed or out-of-contract input (dimension mismatch,
// co-located points, parameters out of range, ...).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when an exhaustive oracle is asked to run beyond its size limit.
class LimitError : public std::runtime_error {
 public:
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

// Repository-wide float comparison settings.
struct Tolerance {
  double relative = 1e-9;
  // A move is improving only if it lowers the mover's cost by more than this.
  double improvement = 1e-12;
};

inline const Tolerance& default_tolerance() {
  static const Tolerance tol{};
  return tol;
}

inline bool approx_equal(double a, double b, double rel = default_tolerance().relative) {
  if (a == b) return true;
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= rel * scale;
}

}  // namespace ncg
