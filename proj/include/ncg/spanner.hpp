#pragma once

#include "ncg/common.hpp"
#include "ncg/game_core.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ncg {

using NodePair = std::pair<int, int>;

struct SpannerParams {
  double t = 1.5;             // stretch target, > 1
  std::optional<int> k_cap;   // per-agent ownership cap; unset = minimise
};

struct Ownership {
  std::vector<int> owner;  // owner[i] is one endpoint of edge i
  int max_owned = 0;       // achieved cap
  bool feasible = true;    // max_owned <= requested cap (always true when no cap)
};

struct SpannerResult {
  std::vector<int> nodes;        // global indices the spanner spans, ascending
  std::vector<NodePair> edges;   // global indices, first < second
  int max_degree = 0;            // k_meas
  double stretch = 1.0;          // t_meas over pairs of `nodes`
  Ownership ownership;           // k_own = ownership.max_owned
};

/// Path-greedy t-spanner over the pairwise `dist` restricted to `subset`
/// (all nodes when empty). Pairs are examined by nondecreasing length, ties by
/// (min index, max index); a pair becomes an edge iff its current spanner
/// distance exceeds t times its length.
SpannerResult greedy_spanner(const Matrix& dist, std::span<const int> subset,
                             const SpannerParams& params);

/// Max over node pairs of network distance / `dist`; +inf if disconnected.
/// Restricted to `subset` when given.
double measure_stretch(const Network& network, const Matrix& dist,
                       std::span<const int> subset = {});

/// Assigns every edge to one endpoint. With a cap, high-degree endpoints are
/// filled first and rebalancing stops once the cap is met; without one, the
/// maximum owned count is minimised. Augmenting-path reversal makes the
/// reported cap the smallest achievable whenever the requested cap is not.
Ownership distribute_ownership(int n, std::span<const NodePair> edges,
                               std::optional<int> k_cap = std::nullopt);

/// Kruskal minimum spanning tree of the complete graph on `weights`; equal
/// lengths are ordered by (min index, max index).
std::vector<NodePair> minimum_spanning_tree(const Matrix& weights);

/// Orients tree edges child -> parent from `root` (each agent owns <= 1 edge).
StrategyProfile tree_profile(int n, std::span<const NodePair> tree, int root = 0);

/// Strategy profile realising `edges` with the given owners.
StrategyProfile ownership_profile(int n, std::span<const NodePair> edges, const Ownership& own);

}  // namespace ncg
