#include "ncg/game_core.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <queue>

namespace ncg {

StrategyProfile::StrategyProfile(std::vector<std::vector<int>> strategies)
    : strategies_(std::move(strategies)) {
  for (int u = 0; u < size(); ++u) normalize(u);
}

void StrategyProfile::normalize(int u) {
  auto& s = strategies_[u];
  for (int v : s) {
    if (v == u) throw InputError("strategy of agent " + std::to_string(u) + " contains itself");
    if (v < 0 || v >= size()) {
      throw InputError("strategy of agent " + std::to_string(u) + " targets out-of-range agent " +
                       std::to_string(v));
    }
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

void StrategyProfile::set_strategy(int u, std::vector<int> targets) {
  strategies_.at(u) = std::move(targets);
  normalize(u);
}

void StrategyProfile::buy(int u, int v) {
  auto& s = strategies_.at(u);
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it != s.end() && *it == v) return;
  s.insert(it, v);
  normalize(u);
}

bool StrategyProfile::owns(int u, int v) const {
  const auto& s = strategies_[u];
  return std::binary_search(s.begin(), s.end(), v);
}

bool StrategyProfile::has_double_buy() const {
  for (int u = 0; u < size(); ++u) {
    for (int v : strategies_[u]) {
      if (v > u && owns(v, u)) return true;
    }
  }
  return false;
}

std::uint64_t StrategyProfile::canonical_hash() const {
  // FNV-1a over (agent separator, sorted targets).
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(size()));
  for (const auto& s : strategies_) {
    mix(0xffffffffffffffffULL);
    for (int v : s) mix(static_cast<std::uint64_t>(v));
  }
  return h;
}

int StrategyProfile::max_owned() const {
  std::size_t m = 0;
  for (const auto& s : strategies_) m = std::max(m, s.size());
  return static_cast<int>(m);
}

std::uint64_t Network::key(int u, int v) {
  const auto a = static_cast<std::uint64_t>(std::min(u, v));
  const auto b = static_cast<std::uint64_t>(std::max(u, v));
  return (a << 32) | b;
}

void Network::add_edge(int u, int v, double length, int owner) {
  const auto k = key(u, v);
  if (auto it = index_.find(k); it != index_.end()) {
    Edge& e = edges_[it->second];
    if (e.owners[0] != owner && e.owner_count == 1) {
      e.owners[1] = owner;
      e.owner_count = 2;
      double_buy_ = true;
    }
    return;
  }
  index_.emplace(k, static_cast<int>(edges_.size()));
  edges_.push_back(Edge{std::min(u, v), std::max(u, v), length, 1, {owner, -1}});
  adjacency_[u].push_back({v, length});
  adjacency_[v].push_back({u, length});
}

const Edge* Network::find_edge(int u, int v) const {
  auto it = index_.find(key(u, v));
  return it == index_.end() ? nullptr : &edges_[it->second];
}

double Network::total_length() const {
  double sum = 0.0;
  for (const auto& e : edges_) sum += e.length;
  return sum;
}

int Network::max_degree() const {
  int m = 0;
  for (int u = 0; u < size(); ++u) m = std::max(m, degree(u));
  return m;
}

Network build_network(const StrategyProfile& profile, const Matrix& weights) {
  const int n = profile.size();
  if (weights.rows() != n || weights.cols() != n) {
    throw InputError("build_network: profile size does not match weight matrix");
  }
  Network g(n);
  for (int u = 0; u < n; ++u) {
    for (int v : profile.strategy(u)) g.add_edge(u, v, weights(u, v), u);
  }
  return g;
}

void single_source_distances(const Network& g, int source, std::span<double> out) {
  std::fill(out.begin(), out.end(), kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  out[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > out[u]) continue;
    for (const auto& [v, w] : g.neighbors(u)) {
      const double nd = d + w;
      if (nd < out[v]) {
        out[v] = nd;
        heap.emplace(nd, v);
      }
    }
  }
}

Vector single_source_distances(const Network& g, int source) {
  Vector out(g.size());
  single_source_distances(g, source, std::span<double>(out.data(), out.size()));
  return out;
}

Matrix all_pairs_distances(const Network& g) {
  const int n = g.size();
  Matrix d(n, n);
  for (int s = 0; s < n; ++s) {
    single_source_distances(g, s, std::span<double>(d.col(s).data(), n));
  }
  return d;
}

namespace {

void floyd_warshall_in_place(Matrix& d) {
  const auto n = d.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double dkj = d(k, j);
      if (dkj == kInf) continue;
      for (Eigen::Index i = 0; i < n; ++i) {
        const double via = d(i, k) + dkj;
        if (via < d(i, j)) d(i, j) = via;
      }
    }
  }
}

}  // namespace

Matrix floyd_warshall(const Network& g) {
  const int n = g.size();
  Matrix d = Matrix::Constant(n, n, kInf);
  d.diagonal().setZero();
  for (const auto& e : g.edges()) {
    d(e.a, e.b) = std::min(d(e.a, e.b), e.length);
    d(e.b, e.a) = d(e.a, e.b);
  }
  floyd_warshall_in_place(d);
  return d;
}

Matrix shortest_path_metric(const Matrix& weights) {
  Matrix d = weights;
  d.diagonal().setZero();
  floyd_warshall_in_place(d);
  return d;
}

CostReport cost_report(const StrategyProfile& profile, const Network& network, double alpha) {
  const int n = profile.size();
  CostReport r;
  r.edge_cost = Vector::Zero(n);
  r.distance_cost.resize(n);
  std::vector<double> buf(n);
  for (int u = 0; u < n; ++u) {
    double owned = 0.0;
    for (int v : profile.strategy(u)) {
      const Edge* e = network.find_edge(u, v);
      assert(e != nullptr);
      owned += e->length;
    }
    r.edge_cost[u] = alpha * owned;
    single_source_distances(network, u, buf);
    double sum = 0.0;
    for (double d : buf) sum += d;
    r.distance_cost[u] = sum;
  }
  r.total = r.edge_cost + r.distance_cost;
  r.social_cost = r.total.sum();
  assert(!std::isnan(r.social_cost));
  return r;
}

CostReport cost_report(const StrategyProfile& profile, const Matrix& weights, double alpha) {
  return cost_report(profile, build_network(profile, weights), alpha);
}

double social_cost(const StrategyProfile& profile, const Matrix& weights, double alpha) {
  return cost_report(profile, weights, alpha).social_cost;
}

}  // namespace ncg
