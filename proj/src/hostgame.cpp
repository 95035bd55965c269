#include "ncg/hostgame.hpp"

#include "ncg/geometry.hpp"
#include "ncg/spanner.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <queue>
#include <random>

namespace ncg {

namespace {

// Relative slack of the strict "shorter detour" test.
constexpr double kDetourSlack = 1e-9;

Matrix floyd(Matrix d) {
  const auto n = d.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double dkj = d(k, j);
      if (dkj == kInf) continue;
      for (Eigen::Index i = 0; i < n; ++i) d(i, j) = std::min(d(i, j), d(i, k) + dkj);
    }
  }
  return d;
}

// Dijkstra over the finite entries of `weights`, returning predecessors.
std::vector<int> shortest_path_tree(const Matrix& weights, int source) {
  const int n = static_cast<int>(weights.rows());
  std::vector<double> dist(n, kInf);
  std::vector<int> pred(n, -1);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [d, x] = heap.top();
    heap.pop();
    if (d > dist[x]) continue;
    for (int y = 0; y < n; ++y) {
      const double w = weights(x, y);
      if (y == x || w == kInf) continue;
      if (d + w < dist[y]) {
        dist[y] = d + w;
        pred[y] = x;
        heap.emplace(dist[y], y);
      }
    }
  }
  return pred;
}

}  // namespace

HostNetwork::HostNetwork(Matrix weights) : weights_(std::move(weights)) {
  const auto n = weights_.rows();
  if (n < 2 || weights_.cols() != n) throw InputError("host weights must be square with n >= 2");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (weights_(i, i) != 0.0) throw InputError("host weights need a zero diagonal");
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      const double w = weights_(i, j);
      if (!std::isfinite(w) || w <= 0.0) throw InputError("host weights must be finite and positive");
      if (w != weights_(j, i)) throw InputError("host weights must be symmetric");
    }
  }
}

HostNetwork random_host(int n, std::uint64_t seed, double lo, double hi) {
  if (n < 2) throw InputError("random_host needs n >= 2");
  if (!(lo > 0.0) || !(hi > lo)) throw InputError("random_host needs 0 < lo < hi");
  std::mt19937_64 rng(seed);
  Matrix w = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) w(i, j) = w(j, i) = lo + (hi - lo) * unit_uniform(rng());
  }
  return HostNetwork(std::move(w));
}

MetricReduction metric_closure_reduce(const Matrix& weights) {
  const int n = static_cast<int>(weights.rows());
  if (weights.cols() != n) throw InputError("weights must be square");
  std::vector<WeightedEdge> all;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (weights(u, v) < kInf) all.push_back({u, v, weights(u, v)});
    }
  }
  std::sort(all.begin(), all.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    if (a.w != b.w) return a.w > b.w;
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  // Removing an edge that has a strictly shorter detour never changes any
  // distance, so every test can be made against the metric of the input.
  Matrix d = weights;
  d.diagonal().setZero();
  d = floyd(std::move(d));

  MetricReduction out;
  out.weights = Matrix::Constant(n, n, kInf);
  out.weights.diagonal().setZero();
  for (const auto& e : all) {
    if (d(e.u, e.v) < e.w * (1.0 - kDetourSlack)) continue;
    out.edges.push_back(e);
    out.weights(e.u, e.v) = out.weights(e.v, e.u) = e.w;
  }
  out.distances = floyd(out.weights);
  return out;
}

StrategyProfile shortest_path_subgraph_profile(const HostNetwork& h) {
  const MetricReduction red = metric_closure_reduce(h);
  StrategyProfile p(h.size());
  for (const auto& e : red.edges) p.buy(e.u, e.v);
  return p;
}

StrategyProfile host_mst_profile(const HostNetwork& h) {
  return tree_profile(h.size(), minimum_spanning_tree(h.weights()));
}

HostAlgorithm1Result generalized_algorithm1(const HostNetwork& h, const Algorithm1Params& params,
                                            double alpha) {
  const int n = h.size();
  const MetricReduction red = metric_closure_reduce(h);
  HostAlgorithm1Result out{StrategyProfile(n), algorithm1(red.distances, params, alpha)};

  std::vector<std::vector<int>> preds(n);
  std::vector<std::vector<char>> owned(n, std::vector<char>(n, 0));
  for (int buyer = 0; buyer < n; ++buyer) {
    for (int target : out.base.profile.strategy(buyer)) {
      if (preds[buyer].empty()) preds[buyer] = shortest_path_tree(red.weights, buyer);
      // Walk back from the target; each hop is bought by its end nearer the buyer.
      for (int y = target; y != buyer;) {
        const int x = preds[buyer][y];
        if (!owned[x][y]) {
          out.profile.buy(x, y);
          owned[x][y] = owned[y][x] = 1;
        }
        y = x;
      }
    }
  }
  out.max_owned = out.profile.max_owned();
  return out;
}

HittingSetInstance hitting_set_instance(int universe, const std::vector<std::vector<int>>& sets,
                                        double alpha) {
  if (!(alpha > 0.0)) throw InputError("alpha must be positive");
  if (universe < 1) throw InputError("universe must be nonempty");
  for (const auto& s : sets) {
    if (s.empty()) throw InputError("every set must be nonempty");
    for (int e : s) {
      if (e < 0 || e >= universe) throw InputError("set element outside the universe");
    }
  }
  const int m = static_cast<int>(sets.size());
  const int q = 1 + static_cast<int>(std::ceil(std::sqrt(alpha) / 2.0));
  const double x = 2.0 + 4.0 * q * q / alpha;
  const int c = 1 + static_cast<int>(std::ceil(alpha * x / (4.0 * q * q)));
  const int core = 2 + universe + m * c;
  const int n = q * core;

  std::vector<int> elements(universe);
  for (int i = 0; i < universe; ++i) elements[i] = 2 + i;
  std::vector<std::vector<int>> copies(m);
  for (int p = 0; p < m; ++p) {
    for (int j = 0; j < c; ++j) copies[p].push_back(2 + universe + p * c + j);
  }

  Matrix base = Matrix::Constant(n, n, kInf);
  base.diagonal().setZero();
  std::vector<NodePair> e1;
  auto link = [&](int a, int b, double w) {
    base(a, b) = base(b, a) = w;
    e1.emplace_back(std::min(a, b), std::max(a, b));
  };
  for (int e : elements) link(0, e, x);
  for (int p = 0; p < m; ++p) {
    std::vector<int> members = sets[p];
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int node : copies[p]) {
      for (int e : members) link(elements[e], node, 1.0);
      link(node, 1, 1.0);
    }
  }
  for (int v = 0; v < core; ++v) {
    for (int i = 0; i < q - 1; ++i) link(v, core + v * (q - 1) + i, 1.0);
  }
  std::sort(e1.begin(), e1.end());

  Matrix closure = floyd(base);
  if (!closure.allFinite()) throw InputError("reduction network is disconnected");
  Matrix host = closure;
  for (const auto& [a, b] : e1) host(a, b) = host(b, a) = base(a, b);

  return HittingSetInstance{universe, sets, alpha, q, x, c, 0, 1, std::move(elements),
                            std::move(copies), std::move(e1), std::move(base),
                            HostNetwork(std::move(host))};
}

StrategyProfile hitting_set_profile(const HittingSetInstance& inst, std::span<const int> hitting_set) {
  StrategyProfile p(inst.node_count());
  // s buys element edges only for the hitting set; its leaf edges are always bought.
  for (const auto& [a, b] : inst.e1) {
    const bool element_edge =
        a == inst.s && std::find(inst.element_nodes.begin(), inst.element_nodes.end(), b) != inst.element_nodes.end();
    if (!element_edge) p.buy(a, b);
  }
  for (int e : hitting_set) {
    if (e < 0 || e >= inst.universe) throw InputError("hitting set element outside the universe");
    p.buy(inst.s, inst.element_nodes[e]);
  }
  return p;
}

namespace {

bool hits_all(std::uint32_t mask, const std::vector<std::vector<int>>& sets) {
  for (const auto& s : sets) {
    bool hit = false;
    for (int e : s) hit = hit || (mask >> e & 1);
    if (!hit) return false;
  }
  return true;
}

}  // namespace

int minimum_hitting_set_size(int universe, const std::vector<std::vector<int>>& sets) {
  if (universe < 0 || universe > 20) throw LimitError("brute-force hitting set limited to 20 elements");
  int best = -1;
  for (std::uint32_t mask = 0; mask < (1u << universe); ++mask) {
    const int k = std::popcount(mask);
    if (best >= 0 && k >= best) continue;
    if (hits_all(mask, sets)) best = k;
  }
  return best;
}

HittingSetAudit audit_hitting_set(const HittingSetInstance& inst) {
  if (inst.universe > 20) throw LimitError("hitting-set family limited to 20 elements");
  HittingSetAudit out;
  out.minimum_size = minimum_hitting_set_size(inst.universe, inst.sets);
  double best_cost = kInf;
  double lo = kInf;
  double hi = -kInf;
  for (std::uint32_t mask = 0; mask < (1u << inst.universe); ++mask) {
    if (!hits_all(mask, inst.sets)) continue;
    HittingSetFamilyRow row;
    for (int e = 0; e < inst.universe; ++e) {
      if (mask >> e & 1) row.hitting_set.push_back(e);
    }
    const StrategyProfile p = hitting_set_profile(inst, row.hitting_set);
    row.social_cost = social_cost(p, inst.host.weights(), inst.alpha);
    const int k = static_cast<int>(row.hitting_set.size());
    row.offset = row.social_cost - 2.0 * inst.alpha * k;
    if (row.social_cost < best_cost) {
      best_cost = row.social_cost;
      out.best_size = k;
    }
    lo = std::min(lo, row.offset);
    hi = std::max(hi, row.offset);
    out.rows.push_back(std::move(row));
  }
  if (!out.rows.empty()) {
    double mean = 0.0;
    for (const auto& r : out.rows) mean += r.offset;
    mean /= static_cast<double>(out.rows.size());
    const double q2 = static_cast<double>(inst.q) * inst.q;
    out.intercept = mean - 2.0 * inst.universe * q2 * (inst.x + 2.0);
    out.offset_spread = hi - lo;
  }
  return out;
}

HostPoaReport host_poa_audit(const HostNetwork& h, double alpha,
                             std::span<const StrategyProfile> equilibria, const OracleOptions& opts) {
  const int n = h.size();
  const Matrix metric = shortest_path_metric(h.weights());
  HostPoaReport out;
  out.lower_bound = optimum_lower_bound(metric, alpha);
  if (n <= opts.optimum_limit) out.optimum = brute_force_optimum(h.weights(), alpha, opts.optimum_limit).social_cost;

  const double tol = 1.0 + opts.tol.relative;
  for (const auto& profile : equilibria) {
    if (profile.size() != n) throw InputError("profile does not match the host");
    if (!is_exact_nash(profile, h.weights(), alpha, opts)) {
      throw InputError("profile is not an exactly certified equilibrium");
    }
    HostPoaEntry e;
    const Matrix d = all_pairs_distances(build_network(profile, h.weights()));
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) e.stretch = std::max(e.stretch, d(u, v) / metric(u, v));
    }
    e.social_cost = social_cost(profile, h.weights(), alpha);
    e.ratio = e.social_cost / out.lower_bound;
    if (out.optimum) e.optimum_ratio = e.social_cost / *out.optimum;
    e.spanner_ok = e.stretch <= (alpha + 1.0) * tol;
    e.ratio_ok = e.ratio <= 2.0 * (alpha + 1.0) * tol;
    out.max_ratio = std::max(out.max_ratio, e.ratio);
    out.max_stretch = std::max(out.max_stretch, e.stretch);
    out.all_ok = out.all_ok && e.spanner_ok && e.ratio_ok;
    out.entries.push_back(e);
  }
  return out;
}

}  // namespace ncg
