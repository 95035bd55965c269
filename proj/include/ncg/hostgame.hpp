#pragma once

#include "ncg/common.hpp"
#include "ncg/designer.hpp"
#include "ncg/equilibrium.hpp"
#include "ncg/game_core.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ncg {

/// Complete host network with arbitrary positive symmetric weights.
class HostNetwork {
 public:
  /// Throws InputError unless weights are square, symmetric, finite and
  /// positive off the diagonal with a zero diagonal, and n >= 2.
  explicit HostNetwork(Matrix weights);

  int size() const { return static_cast<int>(weights_.rows()); }
  const Matrix& weights() const { return weights_; }
  double weight(int u, int v) const { return weights_(u, v); }

 private:
  Matrix weights_;
};

/// Weights drawn uniformly from [lo, hi); usually violates the triangle inequality.
HostNetwork random_host(int n, std::uint64_t seed, double lo = 1.0, double hi = 10.0);

struct WeightedEdge {
  int u;  // u < v
  int v;
  double w;
  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

struct MetricReduction {
  std::vector<WeightedEdge> edges;  // E_M, longest first
  Matrix weights;                   // +inf where no edge survives
  Matrix distances;                 // shortest-path metric of H_M
};

/// Drops every edge uv with d(u,v) < w(u,v), longest edges first. Entries of
/// +inf in `weights` are treated as absent edges, so the output can be fed
/// back in.
MetricReduction metric_closure_reduce(const Matrix& weights);
inline MetricReduction metric_closure_reduce(const HostNetwork& h) {
  return metric_closure_reduce(h.weights());
}

/// All edges tight against the host metric; the lower index owns each.
StrategyProfile shortest_path_subgraph_profile(const HostNetwork& h);

/// Minimum spanning tree of the host with child-to-parent ownership.
StrategyProfile host_mst_profile(const HostNetwork& h);

struct HostAlgorithm1Result {
  StrategyProfile profile;
  Algorithm1Result base;  // run over the shortest-path metric of H_M
  int max_owned = 0;      // after realising edges as host paths
};

/// Algorithm 1 over the H_M metric. Every bought metric edge is realised by
/// its shortest path in H_M; each path edge is owned by the endpoint nearer
/// the buyer unless someone already owns it.
HostAlgorithm1Result generalized_algorithm1(const HostNetwork& h, const Algorithm1Params& params,
                                            double alpha);

// ---------------------------------------------------------------------------
// Hitting-set reduction

struct HittingSetInstance {
  int universe = 0;
  std::vector<std::vector<int>> sets;
  double alpha = 0.0;
  int q = 0;
  double x = 0.0;
  int c = 0;
  int s = 0;
  int t = 1;
  std::vector<int> element_nodes;
  std::vector<std::vector<int>> set_nodes;  // c copies per set
  std::vector<NodePair> e1;                 // base edges, lower index first
  Matrix e1_weights;                        // +inf off E_1
  HostNetwork host;                         // E_1 plus metric closure

  int node_count() const { return host.size(); }
};

/// q = 1 + ceil(sqrt(alpha)/2), x = 2 + 4q^2/alpha, c = 1 + ceil(alpha x/(4q^2)).
/// Node layout: s, t, elements, set copies, then q-1 leaves per node in that order.
HittingSetInstance hitting_set_instance(int universe, const std::vector<std::vector<int>>& sets,
                                        double alpha);

/// All E_1 edges except the s-edges, plus s-edges to `hitting_set`.
StrategyProfile hitting_set_profile(const HittingSetInstance& inst, std::span<const int> hitting_set);

struct HittingSetFamilyRow {
  std::vector<int> hitting_set;
  double social_cost = 0.0;
  double offset = 0.0;  // social_cost - 2 alpha |H|
};

struct HittingSetAudit {
  std::vector<HittingSetFamilyRow> rows;
  int best_size = -1;         // |H| of the cheapest family member
  int minimum_size = -1;      // brute-force minimum hitting set
  double intercept = 0.0;     // fitted offset - 2 n q^2 (x + 2)
  double offset_spread = 0.0; // max - min offset over the family
};

/// Evaluates every hitting set of the instance as a restricted network.
HittingSetAudit audit_hitting_set(const HittingSetInstance& inst);

int minimum_hitting_set_size(int universe, const std::vector<std::vector<int>>& sets);

// ---------------------------------------------------------------------------

struct HostPoaEntry {
  double social_cost = 0.0;
  double ratio = 0.0;        // vs. the lower bound
  double stretch = 0.0;      // max d_G / d_H
  std::optional<double> optimum_ratio;
  bool spanner_ok = false;   // stretch <= alpha + 1
  bool ratio_ok = false;     // ratio <= 2 (alpha + 1)
};

struct HostPoaReport {
  double lower_bound = 0.0;  // alpha w(MST) + sum of host distances
  std::optional<double> optimum;
  std::vector<HostPoaEntry> entries;
  double max_ratio = 0.0;
  double max_stretch = 0.0;
  bool all_ok = true;
};

/// Throws InputError if any profile fails the exact NE check.
HostPoaReport host_poa_audit(const HostNetwork& h, double alpha,
                             std::span<const StrategyProfile> equilibria,
                             const OracleOptions& opts = {});

}  // namespace ncg
