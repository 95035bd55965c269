#include "ncg/spanner.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace ncg {

namespace {

struct Pair {
  double length;
  int i;  // local indices, i < j
  int j;
};

std::vector<int> resolve_subset(int n, std::span<const int> subset) {
  std::vector<int> nodes;
  if (subset.empty()) {
    nodes.resize(n);
    std::iota(nodes.begin(), nodes.end(), 0);
  } else {
    nodes.assign(subset.begin(), subset.end());
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  }
  return nodes;
}

}  // namespace

SpannerResult greedy_spanner(const Matrix& dist, std::span<const int> subset,
                             const SpannerParams& params) {
  if (!(params.t > 1.0)) throw InputError("greedy_spanner: stretch t must be > 1");
  SpannerResult result;
  result.nodes = resolve_subset(static_cast<int>(dist.rows()), subset);
  const auto& nodes = result.nodes;
  const int m = static_cast<int>(nodes.size());
  if (m == 0) throw InputError("greedy_spanner: empty point subset");

  std::vector<Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) pairs.push_back({dist(nodes[i], nodes[j]), i, j});
  }
  // Local order equals global order because `nodes` is ascending.
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    if (a.length != b.length) return a.length < b.length;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });

  Network local(m);
  Matrix bound = Matrix::Constant(m, m, kInf);  // upper bounds on spanner distances
  bound.diagonal().setZero();
  std::vector<double> row(m);
  for (const auto& p : pairs) {
    const double limit = params.t * p.length;
    if (bound(p.i, p.j) <= limit) continue;
    single_source_distances(local, p.i, row);
    for (int x = 0; x < m; ++x) {
      bound(x, p.i) = row[x];
      bound(p.i, x) = row[x];
    }
    if (bound(p.i, p.j) <= limit) continue;
    local.add_edge(p.i, p.j, p.length, p.i);
    bound(p.i, p.j) = p.length;
    bound(p.j, p.i) = p.length;
    result.edges.emplace_back(nodes[p.i], nodes[p.j]);
  }

  result.max_degree = local.max_degree();
  double stretch = 1.0;
  for (int s = 0; s < m; ++s) {
    single_source_distances(local, s, row);
    for (int x = s + 1; x < m; ++x) stretch = std::max(stretch, row[x] / dist(nodes[s], nodes[x]));
  }
  result.stretch = stretch;
  result.ownership = distribute_ownership(static_cast<int>(dist.rows()), result.edges,
                                          params.k_cap);
  return result;
}

double measure_stretch(const Network& network, const Matrix& dist, std::span<const int> subset) {
  const auto nodes = resolve_subset(network.size(), subset);
  std::vector<double> row(network.size());
  double stretch = 1.0;
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    single_source_distances(network, nodes[a], row);
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      const double d = row[nodes[b]];
      if (d == kInf) return kInf;
      stretch = std::max(stretch, d / dist(nodes[a], nodes[b]));
    }
  }
  return stretch;
}

Ownership distribute_ownership(int n, std::span<const NodePair> edges, std::optional<int> k_cap) {
  Ownership own;
  own.owner.resize(edges.size());
  std::vector<int> degree(n, 0), owned(n, 0);
  std::vector<std::vector<int>> incident(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [a, b] = edges[e];
    ++degree[a];
    ++degree[b];
    incident[a].push_back(static_cast<int>(e));
    incident[b].push_back(static_cast<int>(e));
  }

  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [a, b] = edges[e];
    int pick;
    if (k_cap) {
      const int hub = (degree[b] > degree[a]) ? b : a;
      const int other = (hub == a) ? b : a;
      if (owned[hub] < *k_cap) {
        pick = hub;
      } else if (owned[other] < *k_cap) {
        pick = other;
      } else {
        pick = (owned[b] < owned[a]) ? b : a;
      }
    } else {
      pick = (owned[b] < owned[a]) ? b : a;
    }
    own.owner[e] = pick;
    ++owned[pick];
  }

  // Reverse owner paths from a maximum node to a node owning at most max-2
  // edges. When a maximum node admits no such path the maximum is optimal.
  std::vector<int> parent_edge(n);
  std::vector<char> seen(n);
  while (!edges.empty()) {
    const int top = *std::max_element(owned.begin(), owned.end());
    if (k_cap && top <= *k_cap) break;
    const int source = static_cast<int>(std::find(owned.begin(), owned.end(), top) - owned.begin());
    std::fill(seen.begin(), seen.end(), 0);
    std::queue<int> queue;
    queue.push(source);
    seen[source] = 1;
    int sink = -1;
    while (!queue.empty() && sink < 0) {
      const int x = queue.front();
      queue.pop();
      for (int e : incident[x]) {
        if (own.owner[e] != x) continue;
        const int y = edges[e].first == x ? edges[e].second : edges[e].first;
        if (seen[y]) continue;
        seen[y] = 1;
        parent_edge[y] = e;
        if (owned[y] <= top - 2) {
          sink = y;
          break;
        }
        queue.push(y);
      }
    }
    if (sink < 0) break;
    ++owned[sink];
    --owned[source];
    for (int y = sink; y != source;) {
      const int e = parent_edge[y];
      const int x = own.owner[e];
      own.owner[e] = y;
      y = x;
    }
  }

  own.max_owned = edges.empty() ? 0 : *std::max_element(owned.begin(), owned.end());
  own.feasible = !k_cap || own.max_owned <= *k_cap;
  return own;
}

StrategyProfile ownership_profile(int n, std::span<const NodePair> edges, const Ownership& own) {
  StrategyProfile profile(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const int u = own.owner[e];
    const int v = edges[e].first == u ? edges[e].second : edges[e].first;
    profile.buy(u, v);
  }
  return profile;
}

}  // namespace ncg

namespace ncg {

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n), rank(n, 0) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank[a] < rank[b]) std::swap(a, b);
    parent[b] = a;
    if (rank[a] == rank[b]) ++rank[a];
    return true;
  }
  std::vector<int> parent;
  std::vector<int> rank;
};

}  // namespace

std::vector<NodePair> minimum_spanning_tree(const Matrix& weights) {
  const int n = static_cast<int>(weights.rows());
  std::vector<Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.push_back({weights(i, j), i, j});
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    if (a.length != b.length) return a.length < b.length;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  DisjointSets sets(n);
  std::vector<NodePair> tree;
  tree.reserve(n > 0 ? n - 1 : 0);
  for (const auto& p : pairs) {
    if (sets.unite(p.i, p.j)) {
      tree.emplace_back(p.i, p.j);
      if (static_cast<int>(tree.size()) == n - 1) break;
    }
  }
  return tree;
}

StrategyProfile tree_profile(int n, std::span<const NodePair> tree, int root) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : tree) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  StrategyProfile profile(n);
  std::vector<char> seen(n, 0);
  std::queue<int> queue;
  queue.push(root);
  seen[root] = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop();
    for (int y : adj[x]) {
      if (seen[y]) continue;
      seen[y] = 1;
      profile.buy(y, x);
      queue.push(y);
    }
  }
  return profile;
}

}  // namespace ncg
