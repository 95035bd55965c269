#pragma once

#include "ncg/common.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace ncg {

/// Per-agent sets of bought edge targets. Each strategy is kept sorted and
/// duplicate-free; self-loops and out-of-range targets are rejected.
class StrategyProfile {
 public:
  StrategyProfile() = default;
  explicit StrategyProfile(int n) : strategies_(n) {}
  explicit StrategyProfile(std::vector<std::vector<int>> strategies);

  int size() const { return static_cast<int>(strategies_.size()); }
  const std::vector<int>& strategy(int u) const { return strategies_[u]; }
  const std::vector<std::vector<int>>& strategies() const { return strategies_; }

  void set_strategy(int u, std::vector<int> targets);
  void buy(int u, int v);
  bool owns(int u, int v) const;

  /// True if some edge is bought by both endpoints.
  bool has_double_buy() const;

  /// Hash of the ordered list of sorted strategies (ownership-sensitive).
  std::uint64_t canonical_hash() const;

  int max_owned() const;

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;

 private:
  void normalize(int u);
  std::vector<std::vector<int>> strategies_;
};

struct Neighbor {
  int to;
  double length;
};

struct Edge {
  int a;  // a < b
  int b;
  double length;
  int owner_count;         // 1 or 2
  std::array<int, 2> owners;
};

/// Undirected weighted network with per-edge ownership.
class Network {
 public:
  Network() = default;
  explicit Network(int n) : adjacency_(n) {}

  int size() const { return static_cast<int>(adjacency_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Neighbor>& neighbors(int u) const { return adjacency_[u]; }
  bool has_double_buy() const { return double_buy_; }

  /// Adds (or re-owns) the edge {u,v}; a second distinct owner marks a double-buy.
  void add_edge(int u, int v, double length, int owner);
  bool has_edge(int u, int v) const { return index_.count(key(u, v)) != 0; }
  const Edge* find_edge(int u, int v) const;
  double total_length() const;
  int degree(int u) const { return static_cast<int>(adjacency_[u].size()); }
  int max_degree() const;

 private:
  static std::uint64_t key(int u, int v);
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, int> index_;
  bool double_buy_ = false;
};

/// Union of bought edges; edge lengths are read from `weights`.
Network build_network(const StrategyProfile& profile, const Matrix& weights);

/// Binary-heap Dijkstra from `source`; unreachable nodes get +inf.
void single_source_distances(const Network& g, int source, std::span<double> out);
Vector single_source_distances(const Network& g, int source);

/// Dijkstra from every node. Column j holds distances from j.
Matrix all_pairs_distances(const Network& g);

/// Floyd-Warshall; must agree with all_pairs_distances.
Matrix floyd_warshall(const Network& g);

/// Shortest-path metric of a complete weighted graph given as a matrix.
Matrix shortest_path_metric(const Matrix& weights);

struct CostReport {
  Vector edge_cost;
  Vector distance_cost;
  Vector total;
  double social_cost = 0.0;
};

/// Per-agent and social cost. A double-bought edge is charged to both owners.
CostReport cost_report(const StrategyProfile& profile, const Network& network, double alpha);

/// Convenience overload building the network and its distances once.
CostReport cost_report(const StrategyProfile& profile, const Matrix& weights, double alpha);

double social_cost(const StrategyProfile& profile, const Matrix& weights, double alpha);

}  // namespace ncg
