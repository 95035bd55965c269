#pragma once

#include "ncg/common.hpp"
#include "ncg/game_core.hpp"
#include "ncg/geometry.hpp"
#include "ncg/spanner.hpp"

#include <array>
#include <string>
#include <vector>

namespace ncg {

struct Algorithm1Params {
  double b = 4.0;   // ball radius divisor, >= 1
  double c = 1.0;   // cluster threshold, 0 <= c <= n-1
  SpannerParams spanner;
};

/// B_v = {u : |u,v| <= w_max/b} and C_v = {u : |u,v| <= 2 w_max/b}.
struct NeighborhoodSets {
  std::vector<std::vector<int>> ball;
  std::vector<std::vector<int>> cover;
};

NeighborhoodSets neighborhood_sets(const Matrix& dist, double b);

/// The four stability/efficiency terms of Algorithm 1 and their maximum.
struct BetaBound {
  std::array<double, 4> terms{};
  bool first_term_dropped = false;  // c == 0
  double beta = 0.0;                // max of the (kept) terms; gamma == beta
};

/// beta = max{ kb/c a + t, 4k/b a + 2t + 1, 2a/(n-c) + 2, 4c(b+2t)/(n-c) + 6t }.
/// With c == 0 the first term is dropped. Throws InputError if c >= n.
BetaBound beta_formula(double k, double t, double b, double c, int n, double alpha);

/// (b, c) from the alpha-vs-n regime x = log_n(alpha): b = alpha^(1/(2x)) for
/// x >= 1, b = alpha^((x+1)/(4x)) for 0 < x < 1, and c = b^2/2. Falls back to
/// b = 4, c = max(1, n/32) when alpha <= 1 or n < 3.
Algorithm1Params choose_params(double alpha, int n);

struct Algorithm1Result {
  StrategyProfile profile;
  Algorithm1Params params;
  bool cluster_branch = false;
  int center = -1;               // v of the cluster branch
  std::vector<int> cover;        // C_v (cluster branch) or all nodes
  SpannerResult spanner;
  BetaBound bound;               // formula with measured k_own and t_meas
  double branch_beta = 0.0;      // bound of the case actually taken

  int k_own() const { return spanner.ownership.max_owned; }
  double t_meas() const { return spanner.stretch; }
};

/// Algorithm 1 over an arbitrary metric given as a distance matrix.
Algorithm1Result algorithm1(const Matrix& dist, const Algorithm1Params& params, double alpha);
inline Algorithm1Result algorithm1(const PointSet& points, const Algorithm1Params& params,
                                   double alpha) {
  return algorithm1(points.distances(), params, alpha);
}

StrategyProfile mst_profile(const Matrix& dist);
inline StrategyProfile mst_profile(const PointSet& points) { return mst_profile(points.distances()); }

/// Complete network; the lower index owns each edge.
StrategyProfile clique_profile(int n);

/// Center-sponsored star.
StrategyProfile star_profile(int n, int center);

/// Nearest-neighbour grid; nodes with even coordinate sum buy all their edges.
/// Throws InputError if `points` is not a full integer lattice.
StrategyProfile grid_profile(const PointSet& points);

struct BestOfResult {
  StrategyProfile profile;
  std::string winner;  // "alg1" or "mst"
  double alg1_cost = 0.0;
  double mst_cost = 0.0;
  Algorithm1Result alg1;
};

/// Runs Algorithm 1 with choose_params and the MST; keeps the one of smaller
/// social cost (ties go to Algorithm 1).
BestOfResult best_of(const PointSet& points, double alpha);

}  // namespace ncg
