#include "ncg/equilibrium.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>
#include <utility>

namespace ncg {

namespace {

using HeapItem = std::pair<double, int>;
using MinHeap = std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>>;

// Dijkstra from `source` where the source's own adjacency is replaced by
// `first_hops` and node `skip` is never entered (pass -1 to allow all).
void dijkstra_with_first_hops(const Network& g, int source, std::span<const Neighbor> first_hops,
                              int skip, std::span<double> out) {
  std::fill(out.begin(), out.end(), kInf);
  MinHeap heap;
  out[source] = 0.0;
  for (const auto& [v, w] : first_hops) {
    if (v == skip) continue;
    if (w < out[v]) {
      out[v] = w;
      heap.emplace(w, v);
    }
  }
  while (!heap.empty()) {
    const auto [d, x] = heap.top();
    heap.pop();
    if (d > out[x]) continue;
    for (const auto& [v, w] : g.neighbors(x)) {
      if (v == skip || v == source) continue;
      const double nd = d + w;
      if (nd < out[v]) {
        out[v] = nd;
        heap.emplace(nd, v);
      }
    }
  }
}

double sum_finite_aware(std::span<const double> d) {
  double s = 0.0;
  for (double x : d) s += x;
  return s;
}

double strategy_weight(const Matrix& w, int u, std::span<const int> s) {
  double total = 0.0;
  for (int v : s) total += w(u, v);
  return total;
}

bool better(double cost, const std::vector<int>& s, double best_cost, const std::vector<int>& best_s,
            double eps) {
  if (cost < best_cost - eps) return true;
  if (cost <= best_cost + eps) return s < best_s;
  return false;
}

void check_agent(const NetworkContext& ctx, int agent) {
  if (agent < 0 || agent >= ctx.size()) throw InputError("agent index out of range");
}

}  // namespace

NetworkContext::NetworkContext(StrategyProfile profile, const Matrix& weights)
    : profile_(std::move(profile)), weights_(&weights) {
  if (weights.rows() != profile_.size() || weights.cols() != profile_.size()) {
    throw InputError("weight matrix does not match the profile size");
  }
  network_ = build_network(profile_, weights);
}

const Matrix& NetworkContext::distances() const {
  if (!apsp_) apsp_ = all_pairs_distances(network_);
  return *apsp_;
}

std::vector<int> NetworkContext::incoming(int u) const {
  std::vector<int> in;
  for (const auto& nb : network_.neighbors(u)) {
    if (profile_.owns(nb.to, u)) in.push_back(nb.to);
  }
  std::sort(in.begin(), in.end());
  return in;
}

void NetworkContext::distances_after(int u, std::span<const int> strategy,
                                     std::span<double> out) const {
  std::vector<Neighbor> hops;
  for (int z : incoming(u)) hops.push_back({z, (*weights_)(u, z)});
  for (int v : strategy) {
    if (v == u || v < 0 || v >= size()) throw InputError("invalid strategy target");
    hops.push_back({v, (*weights_)(u, v)});
  }
  dijkstra_with_first_hops(network_, u, hops, -1, out);
}

double NetworkContext::evaluate(int u, std::span<const int> strategy, double alpha) const {
  std::vector<double> d(size());
  distances_after(u, strategy, d);
  return alpha * strategy_weight(*weights_, u, strategy) + sum_finite_aware(d);
}

double NetworkContext::agent_cost(int u, double alpha) const {
  return evaluate(u, profile_.strategy(u), alpha);
}

Deviation exact_best_response(const NetworkContext& ctx, int agent, double alpha,
                              const OracleOptions& opts) {
  check_agent(ctx, agent);
  const int n = ctx.size();
  if (n > opts.exhaustive_limit) {
    throw LimitError("exhaustive best response limited to n <= " +
                     std::to_string(opts.exhaustive_limit));
  }
  const Matrix& w = ctx.weights();
  const Network& g = ctx.network();

  // Distances among the other agents in G - agent.
  std::vector<int> others;
  for (int v = 0; v < n; ++v) {
    if (v != agent) others.push_back(v);
  }
  const int m = static_cast<int>(others.size());
  Matrix dminus(n, n);
  for (int z : others) {
    dijkstra_with_first_hops(g, z, g.neighbors(z), agent, std::span<double>(dminus.col(z).data(), n));
  }
  const Matrix dm = dminus(others, others);
  Vector hop(m);
  for (int i = 0; i < m; ++i) hop[i] = w(agent, others[i]);

  // levels[i] = min over chosen first hops z of w(agent,z) + D(z,x), x over others.
  std::vector<Vector> levels(m + 1, Vector::Constant(m, kInf));
  for (int z : ctx.incoming(agent)) {
    const int iz = z < agent ? z : z - 1;
    levels[0] = levels[0].cwiseMin((dm.col(iz).array() + hop[iz]).matrix());
  }

  Deviation best;
  bool have = false;
  std::vector<int> chosen;

  // Depth-first enumeration: depth i decides whether others[i] is bought.
  auto visit = [&](auto&& self, int depth, double edge_weight) -> void {
    if (depth == m) {
      const double cost = alpha * edge_weight + levels[depth].sum();
      const double eps = opts.tol.improvement * std::max(1.0, std::abs(have ? best.cost : cost));
      if (!have || (best.cost == kInf && cost < kInf) ||
          better(cost, chosen, best.cost, best.strategy, eps)) {
        best.cost = cost;
        best.strategy = chosen;
        have = true;
      }
      return;
    }
    chosen.push_back(others[depth]);
    levels[depth + 1] = levels[depth].cwiseMin((dm.col(depth).array() + hop[depth]).matrix());
    self(self, depth + 1, edge_weight + hop[depth]);
    chosen.pop_back();
    levels[depth + 1] = levels[depth];
    self(self, depth + 1, edge_weight);
  };
  visit(visit, 0, 0.0);
  return best;
}

Deviation heuristic_deviations(const NetworkContext& ctx, int agent, double alpha,
                               const OracleOptions& opts) {
  check_agent(ctx, agent);
  const int n = ctx.size();
  const Matrix& w = ctx.weights();
  const Matrix& D = ctx.distances();
  const std::vector<int>& current = ctx.profile().strategy(agent);
  const double current_weight = strategy_weight(w, agent, current);
  const Vector du = D.col(agent);

  Deviation best{current, alpha * current_weight + du.sum()};
  // Costs of candidates assessed by bound; the winner is re-evaluated exactly.
  auto consider = [&](std::vector<int> s, double cost) {
    std::sort(s.begin(), s.end());
    const double eps = opts.tol.improvement * std::max(1.0, std::abs(best.cost));
    if (best.cost == kInf ? cost < kInf : better(cost, s, best.cost, best.strategy, eps)) {
      best.cost = cost;
      best.strategy = std::move(s);
    }
  };

  // Drop one owned edge, keeping the resulting distance vectors for swaps.
  std::vector<Vector> dropped(current.size(), Vector(n));
  for (std::size_t i = 0; i < current.size(); ++i) {
    std::vector<int> s = current;
    s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
    ctx.distances_after(agent, s, std::span<double>(dropped[i].data(), n));
    consider(s, alpha * (current_weight - w(agent, current[i])) + dropped[i].sum());
  }
  if (current.size() > 1) consider({}, ctx.evaluate(agent, {}, alpha));

  // Add one edge (exact: adding edges at the agent only shortens via the new hop).
  std::vector<char> owned(n, 0);
  for (int v : current) owned[v] = 1;
  std::vector<std::pair<double, int>> add_costs;
  for (int v = 0; v < n; ++v) {
    if (v == agent || owned[v]) continue;
    const double wv = w(agent, v);
    const double cost = alpha * (current_weight + wv) + du.cwiseMin((D.col(v).array() + wv).matrix()).sum();
    add_costs.emplace_back(cost, v);
    std::vector<int> s = current;
    s.push_back(v);
    consider(std::move(s), cost);
  }

  // Swap one owned edge for one new edge over a shortlist of targets.
  if (!current.empty() && !add_costs.empty()) {
    const int L = std::max(1, opts.swap_shortlist);
    std::vector<int> shortlist;
    auto by_cost = add_costs;
    std::sort(by_cost.begin(), by_cost.end());
    for (int i = 0; i < std::min<int>(L, static_cast<int>(by_cost.size())); ++i) {
      shortlist.push_back(by_cost[i].second);
    }
    std::vector<std::pair<double, int>> by_length;
    for (const auto& [c, v] : add_costs) {
      if (!ctx.network().has_edge(agent, v)) by_length.emplace_back(w(agent, v), v);
    }
    std::sort(by_length.begin(), by_length.end());
    for (int i = 0; i < std::min<int>(L, static_cast<int>(by_length.size())); ++i) {
      shortlist.push_back(by_length[i].second);
    }
    std::sort(shortlist.begin(), shortlist.end());
    shortlist.erase(std::unique(shortlist.begin(), shortlist.end()), shortlist.end());

    std::vector<int> best_swap;
    double best_bound = kInf;
    for (std::size_t i = 0; i < current.size(); ++i) {
      const int y = current[i];
      for (int v : shortlist) {
        const double wv = w(agent, v);
        // The new hop through v is only trusted where G's path from v did not
        // already run through the agent.
        const auto via = (D.col(v).array() + wv);
        const auto through = D(v, agent) + du.array();
        const auto margin = 1e-9 * through;
        const auto valid = (D.col(v).array() + margin < through);
        const Vector cand = valid.select(dropped[i].array().min(via), dropped[i].array()).matrix();
        const double bound = alpha * (current_weight - w(agent, y) + wv) + cand.sum();
        if (bound < best_bound) {
          best_bound = bound;
          best_swap = current;
          best_swap[i] = v;
        }
      }
    }
    if (!best_swap.empty()) {
      std::sort(best_swap.begin(), best_swap.end());
      consider(best_swap, ctx.evaluate(agent, best_swap, alpha));
    }
  }

  // Greedy multi-add from the current strategy. Gains only shrink as edges are
  // added, so stale gains are upper bounds (lazy evaluation).
  {
    std::vector<int> s = current;
    Vector d = du;
    double weight = current_weight;
    double cost = alpha * weight + d.sum();
    std::priority_queue<std::pair<double, int>> heap;
    for (const auto& [c, v] : add_costs) heap.emplace(cost - c, -v);
    while (!heap.empty()) {
      const int v = -heap.top().second;
      heap.pop();
      const double wv = w(agent, v);
      const double c = alpha * (weight + wv) + d.cwiseMin((D.col(v).array() + wv).matrix()).sum();
      const double gain = cost - c;
      if (!heap.empty() && gain < heap.top().first) {
        heap.emplace(gain, -v);
        continue;
      }
      if (gain <= opts.tol.improvement * std::max(1.0, std::abs(cost))) break;
      d = d.cwiseMin((D.col(v).array() + wv).matrix());
      weight += wv;
      cost = c;
      s.push_back(v);
    }
    if (s.size() > current.size() + 1) consider(std::move(s), cost);
  }

  // Report the exact cost of the chosen strategy.
  best.cost = std::min(best.cost, ctx.evaluate(agent, best.strategy, alpha));
  return best;
}

BetaGammaCertificate certify(const StrategyProfile& profile, const Matrix& weights, double alpha,
                             AuditMode mode, const OracleOptions& opts) {
  const int n = profile.size();
  if (!(alpha > 0.0)) throw InputError("alpha must be positive");
  NetworkContext ctx(profile, weights);
  if (mode == AuditMode::exact && n > opts.exhaustive_limit) {
    throw LimitError("exact audit limited to n <= " + std::to_string(opts.exhaustive_limit));
  }

  BetaGammaCertificate cert;
  cert.beta_exact = mode == AuditMode::exact;
  cert.agent_ratio = Vector::Ones(n);
  const CostReport report = cost_report(profile, weights, alpha);
  cert.social_cost = report.social_cost;
  cert.beta = 1.0;
  for (int u = 0; u < n; ++u) {
    Deviation dev = mode == AuditMode::exact ? exact_best_response(ctx, u, alpha, opts)
                                             : heuristic_deviations(ctx, u, alpha, opts);
    const double cur = report.total[u];
    double ratio;
    if (cur == kInf) {
      ratio = dev.cost == kInf ? 1.0 : kInf;
    } else {
      ratio = std::max(1.0, cur / dev.cost);
    }
    cert.agent_ratio[u] = ratio;
    if (cert.worst_agent < 0 || ratio > cert.beta) {
      cert.beta = ratio;
      cert.worst_agent = u;
      cert.deviation = std::move(dev);
    }
  }

  if (n <= opts.optimum_limit) {
    cert.reference_cost = brute_force_optimum(weights, alpha, opts.optimum_limit).social_cost;
    cert.gamma_exact = true;
  } else {
    cert.reference_cost = opts.metric_weights ? optimum_lower_bound(weights, alpha)
                                              : optimum_lower_bound(shortest_path_metric(weights), alpha);
  }
  cert.gamma = cert.social_cost / cert.reference_cost;
  if (cert.gamma_exact) cert.gamma = std::max(1.0, cert.gamma);
  return cert;
}

bool is_exact_nash(const StrategyProfile& profile, const Matrix& weights, double alpha,
                   const OracleOptions& opts) {
  const auto cert = certify(profile, weights, alpha, AuditMode::exact,
                            OracleOptions{opts.exhaustive_limit, 0, opts.swap_shortlist, true, opts.tol});
  return cert.beta <= 1.0 + opts.tol.relative;
}

OptimumResult brute_force_optimum(const Matrix& weights, double alpha, int limit) {
  const int n = static_cast<int>(weights.rows());
  if (n > limit) throw LimitError("brute-force optimum limited to n <= " + std::to_string(limit));
  if (n < 2) throw InputError("need at least two agents");
  std::vector<NodePair> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  const int m = static_cast<int>(pairs.size());
  const Matrix metric = shortest_path_metric(weights);
  const double base = metric.sum();

  OptimumResult best;
  std::uint64_t best_mask = 0;
  Matrix d(n, n);
  double running = 0.0;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t i = 1; i < total; ++i) {
    // Gray-code step flips exactly one edge.
    const int bit = std::countr_zero(i);
    const std::uint64_t mask = i ^ (i >> 1);
    const auto [a, b] = pairs[bit];
    running += (mask >> bit & 1) ? weights(a, b) : -weights(a, b);
    if (std::popcount(mask) < n - 1) continue;
    if (alpha * running + base >= best.social_cost * (1.0 + 1e-12)) continue;

    double exact_weight = 0.0;
    d.setConstant(kInf);
    d.diagonal().setZero();
    for (int e = 0; e < m; ++e) {
      if (mask >> e & 1) {
        const auto [p, q] = pairs[e];
        d(p, q) = d(q, p) = weights(p, q);
        exact_weight += weights(p, q);
      }
    }
    for (int k = 0; k < n; ++k) {
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) d(x, y) = std::min(d(x, y), d(x, k) + d(k, y));
      }
    }
    const double sc = alpha * exact_weight + d.sum();
    if (sc < best.social_cost) {
      best.social_cost = sc;
      best_mask = mask;
    }
  }
  StrategyProfile profile(n);
  for (int e = 0; e < m; ++e) {
    if (best_mask >> e & 1) {
      best.edges.push_back(pairs[e]);
      profile.buy(pairs[e].first, pairs[e].second);
    }
  }
  best.profile = std::move(profile);
  return best;
}

double optimum_lower_bound(const Matrix& metric, double alpha) {
  const auto tree = minimum_spanning_tree(metric);
  double w = 0.0;
  for (const auto& [a, b] : tree) w += metric(a, b);
  return alpha * w + metric.sum();
}

double star_ne_threshold(const Matrix& dist, int center) {
  const int n = static_cast<int>(dist.rows());
  if (center < 0 || center >= n) throw InputError("center out of range");
  double worst = 0.0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (u == center || v == center) continue;
      worst = std::max(worst, (dist(u, center) + dist(center, v)) / dist(u, v) - 1.0);
    }
  }
  return worst;
}

}  // namespace ncg
