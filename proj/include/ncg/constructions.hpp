#pragma once

#include "ncg/common.hpp"
#include "ncg/equilibrium.hpp"
#include "ncg/game_core.hpp"
#include "ncg/geometry.hpp"

#include <array>
#include <optional>
#include <utility>

namespace ncg {

// ---------------------------------------------------------------------------
// Exponential chain on the line

struct R1Chain {
  PointSet points;       // p_0 = 0, p_i = (1+2/alpha)^(i-1)
  StrategyProfile star;  // p_0 buys every edge
  StrategyProfile path;  // p_i buys p_{i+1}
};

R1Chain r1_chain(double alpha, int n);

/// alpha((1+2/alpha)^n - 1)(n + alpha/2)
double r1_star_cost(double alpha, int n);
/// alpha((n-alpha)(1+2/alpha)^n + alpha + n + (1+2/alpha)^(n-1))
double r1_path_cost(double alpha, int n);

/// Both sides of
///   2n + sum_{i=1}^{n-1} (4/alpha)(1+2/alpha)^(i-1)(i+1)(n-i)
///     = (alpha n - alpha^2)(1+2/alpha)^n + alpha^2 + alpha n.
std::pair<double, double> weird_sum_check(double alpha, int n);

struct R1PoaResult {
  int n = 0;
  double ratio = 0.0;              // simulated SC(star) / SC(path)
  double closed_form_ratio = 0.0;
  std::optional<bool> star_is_ne;  // set when the exact check ran
};

/// Chain with n = max(4, round(alpha^(2/3))).
R1PoaResult r1_poa_ratio(double alpha, const OracleOptions& opts = {});

// ---------------------------------------------------------------------------
// Cross-polytope star in high dimension

/// Last coordinate of u: (a^2+2a)/(2a+2) for a >= sqrt(1+sqrt 2)-1,
/// sqrt((a^2+2a-1)/2) below. Throws InputError for a <= sqrt 2 - 1.
double dinfty_x(double alpha);

struct DInftyStar {
  PointSet points;  // 0 = m (origin), 1 = u, then +e_1, -e_1, ..., -e_{d-1}
  double x = 0.0;
  StrategyProfile star_u;
  StrategyProfile star_m;
  double ratio = 0.0;              // SC(star_u) / SC(star_m), simulated
  double closed_form_ratio = 0.0;
  std::optional<bool> star_u_is_ne;
};

/// `verify` runs the exact NE check on star_u when 2d fits the oracle.
DInftyStar dinfty_star(int d, double alpha, bool verify = true, const OracleOptions& opts = {});

// ---------------------------------------------------------------------------
// Three clusters on a unit triangle

/// k points near each corner of a unit equilateral triangle. Cluster c holds
/// indices [c*k, (c+1)*k); its lowest index sits on the corner and the rest
/// lie on a radius-epsilon arc facing away from the triangle. The layout is
/// invariant under the 120 degree rotation that permutes the clusters.
struct ClusterInstance {
  PointSet points;
  int cluster_size = 0;
  std::array<int, 3> reps{};
  StrategyProfile three_edge;  // stars + A->B, B->C, C->A
  StrategyProfile two_edge;    // stars + A->B, B->C
};

ClusterInstance cluster_triangle(int cluster_size, double epsilon);

struct TriangleClustersResult {
  ClusterInstance instance;
  double alpha = 0.0;
  int deviating_agent = -1;
  Deviation deviation;
  double improvement_factor = 0.0;  // cost / deviation cost of the agent
  double limit_factor = 0.0;        // (alpha + 2k) / (3k) with k = n/3
  bool optimum_condition = false;   // alpha < 2 k^2
};

/// n = 3 floor(sqrt(alpha) + 1).
TriangleClustersResult triangle_clusters(double alpha, double epsilon = 1e-6,
                                         const OracleOptions& opts = {});

struct PosInstanceResult {
  ClusterInstance instance;
  double alpha = 0.0;
  double sc_three = 0.0;
  double sc_two = 0.0;
  bool exact = false;                 // audits used the exhaustive oracle
  BetaGammaCertificate three_audit;
  BetaGammaCertificate two_audit;
  bool three_is_ne = false;
  bool two_is_ne = false;
  bool optimum_condition = false;     // 4k^2 > alpha + 2k^2
  bool selling_condition = false;     // 2k < alpha + k
};

/// n = 3(ceil(alpha) - 1). Throws InputError for alpha <= 2.
PosInstanceResult pos_instance(double alpha, double epsilon = 1e-6, const OracleOptions& opts = {});

}  // namespace ncg
