#include "ncg/designer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace ncg {

NeighborhoodSets neighborhood_sets(const Matrix& dist, double b) {
  const int n = static_cast<int>(dist.rows());
  const double w_max = dist.maxCoeff();
  NeighborhoodSets sets;
  sets.ball.resize(n);
  sets.cover.resize(n);
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u) {
      if (dist(u, v) <= w_max / b) sets.ball[v].push_back(u);
      if (dist(u, v) <= 2.0 * w_max / b) sets.cover[v].push_back(u);
    }
  }
  return sets;
}

BetaBound beta_formula(double k, double t, double b, double c, int n, double alpha) {
  if (c >= n) throw InputError("beta_formula: c must be < n");
  if (c < 0) throw InputError("beta_formula: c must be >= 0");
  BetaBound r;
  r.first_term_dropped = (c == 0.0);
  r.terms[0] = r.first_term_dropped ? 0.0 : k * b / c * alpha + t;
  r.terms[1] = 4.0 * k / b * alpha + 2.0 * t + 1.0;
  r.terms[2] = 2.0 * alpha / (n - c) + 2.0;
  r.terms[3] = 4.0 * c * (b + 2.0 * t) / (n - c) + 6.0 * t;
  const auto first = r.terms.begin() + (r.first_term_dropped ? 1 : 0);
  r.beta = *std::max_element(first, r.terms.end());
  return r;
}

Algorithm1Params choose_params(double alpha, int n) {
  Algorithm1Params p;
  if (alpha <= 1.0 || n < 3) {
    p.b = 4.0;
    p.c = std::min<double>(std::max(1.0, n / 32.0), n - 1);
    return p;
  }
  const double x = std::log(alpha) / std::log(static_cast<double>(n));
  p.b = (x >= 1.0) ? std::pow(alpha, 1.0 / (2.0 * x)) : std::pow(alpha, (x + 1.0) / (4.0 * x));
  p.b = std::max(p.b, 1.0);
  p.c = std::min(p.b * p.b / 2.0, static_cast<double>(n - 1));
  if (p.b > std::sqrt(2.0 * (n - 1)) * (1.0 + 1e-9)) {
    throw InputError("choose_params: b exceeds sqrt(2(n-1))");
  }
  return p;
}

Algorithm1Result algorithm1(const Matrix& dist, const Algorithm1Params& params, double alpha) {
  const int n = static_cast<int>(dist.rows());
  if (n < 2) throw InputError("algorithm1: need at least two nodes");
  if (params.b < 1.0) throw InputError("algorithm1: b must be >= 1");
  if (params.c < 0.0 || params.c > n - 1) throw InputError("algorithm1: c must lie in [0, n-1]");

  Algorithm1Result r;
  r.params = params;
  const double w_max = dist.maxCoeff();
  if (!(w_max > 0.0)) throw InputError("algorithm1: degenerate (all-coincident) input");
  const double r_ball = w_max / params.b;
  const double r_cover = 2.0 * w_max / params.b;

  // Cluster node: |P \ B_v| < c, maximising |B_v|, ties by index.
  int best_ball = -1;
  for (int v = 0; v < n; ++v) {
    const int ball = static_cast<int>((dist.col(v).array() <= r_ball).count());
    if (n - ball < params.c && ball > best_ball) {
      best_ball = ball;
      r.center = v;
    }
  }
  r.cluster_branch = r.center >= 0;

  if (r.cluster_branch) {
    for (int u = 0; u < n; ++u) {
      if (dist(u, r.center) <= r_cover) r.cover.push_back(u);
    }
  } else {
    r.cover.resize(n);
    std::iota(r.cover.begin(), r.cover.end(), 0);
  }

  r.spanner = greedy_spanner(dist, r.cover, params.spanner);
  r.profile = ownership_profile(n, r.spanner.edges, r.spanner.ownership);

  if (r.cluster_branch) {
    std::vector<char> in_cover(n, 0);
    for (int u : r.cover) in_cover[u] = 1;
    for (int u = 0; u < n; ++u) {
      if (in_cover[u]) continue;
      int closest = -1;
      for (int w : r.cover) {  // ascending, so the first minimum has the lowest index
        if (closest < 0 || dist(u, w) < dist(u, closest)) closest = w;
      }
      r.profile.buy(u, closest);
    }
  }

  r.bound = beta_formula(r.k_own(), r.t_meas(), params.b, params.c, n, alpha);
  if (r.cluster_branch) {
    r.branch_beta = std::max({r.bound.terms[1], r.bound.terms[2], r.bound.terms[3]});
  } else {
    r.branch_beta = r.bound.first_term_dropped ? kInf : r.bound.terms[0];
  }
  return r;
}

StrategyProfile mst_profile(const Matrix& dist) {
  const int n = static_cast<int>(dist.rows());
  if (n < 2) throw InputError("mst_profile: need at least two nodes");
  const auto tree = minimum_spanning_tree(dist);
  return tree_profile(n, tree, 0);
}

StrategyProfile clique_profile(int n) {
  if (n < 2) throw InputError("clique_profile: need at least two nodes");
  StrategyProfile p(n);
  for (int u = 0; u < n; ++u) {
    std::vector<int> s;
    for (int v = u + 1; v < n; ++v) s.push_back(v);
    p.set_strategy(u, std::move(s));
  }
  return p;
}

StrategyProfile star_profile(int n, int center) {
  if (n < 2) throw InputError("star_profile: need at least two nodes");
  if (center < 0 || center >= n) throw InputError("star_profile: center out of range");
  StrategyProfile p(n);
  std::vector<int> s;
  for (int v = 0; v < n; ++v) {
    if (v != center) s.push_back(v);
  }
  p.set_strategy(center, std::move(s));
  return p;
}

StrategyProfile grid_profile(const PointSet& points) {
  if (grid_extents(points).empty()) throw InputError("grid_profile: input is not an integer grid");
  const int n = points.size();
  const int d = points.dim();
  std::map<std::vector<long>, int> index;
  std::vector<std::vector<long>> coord(n, std::vector<long>(d));
  for (int p = 0; p < n; ++p) {
    for (int k = 0; k < d; ++k) coord[p][k] = std::lround(points.coords()(k, p));
    index.emplace(coord[p], p);
  }
  StrategyProfile profile(n);
  for (int p = 0; p < n; ++p) {
    long parity = 0;
    for (long x : coord[p]) parity += x;
    if (parity % 2 != 0) continue;
    for (int k = 0; k < d; ++k) {
      for (long step : {-1L, 1L}) {
        auto q = coord[p];
        q[k] += step;
        if (auto it = index.find(q); it != index.end()) profile.buy(p, it->second);
      }
    }
  }
  return profile;
}

BestOfResult best_of(const PointSet& points, double alpha) {
  BestOfResult r;
  r.alg1 = algorithm1(points, choose_params(alpha, points.size()), alpha);
  const auto mst = mst_profile(points);
  r.alg1_cost = social_cost(r.alg1.profile, points.distances(), alpha);
  r.mst_cost = social_cost(mst, points.distances(), alpha);
  if (r.mst_cost < r.alg1_cost) {
    r.profile = mst;
    r.winner = "mst";
  } else {
    r.profile = r.alg1.profile;
    r.winner = "alg1";
  }
  return r;
}

}  // namespace ncg
