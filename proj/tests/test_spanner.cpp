#include "ncg/spanner.hpp"
#include "ncg/geometry.hpp"

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

using namespace ncg;

namespace {

PointSet line(std::vector<double> xs) {
  Matrix c(1, static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) c(0, static_cast<Eigen::Index>(i)) = xs[i];
  return PointSet(c);
}

oracle::Strategies as_strategies(int n, const std::vector<NodePair>& edges) {
  oracle::Strategies s(n);
  for (const auto& [a, b] : edges) s[a].push_back(b);
  return s;
}

std::vector<int> owned_counts(int n, const std::vector<NodePair>& edges, const Ownership& own) {
  std::vector<int> c(n, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    EXPECT_TRUE(own.owner[i] == edges[i].first || own.owner[i] == edges[i].second);
    ++c[own.owner[i]];
  }
  return c;
}

}  // namespace

TEST(GreedySpanner, CollinearKeepsConsecutiveEdges) {
  const auto r = greedy_spanner(line({0, 1, 2}).distances(), {}, SpannerParams{1.5, {}});
  EXPECT_EQ(r.edges, (std::vector<NodePair>{{0, 1}, {1, 2}}));
  EXPECT_DOUBLE_EQ(r.stretch, 1.0);
}

TEST(GreedySpanner, TwoPointsSingleEdge) {
  const auto r = greedy_spanner(line({0, 5}).distances(), {}, SpannerParams{3.0, {}});
  EXPECT_EQ(r.edges, (std::vector<NodePair>{{0, 1}}));
}

TEST(GreedySpanner, UnitSquareCornersWithinStretch) {
  const std::vector<int> ext{1, 1};
  const PointSet p = integer_grid(ext);
  const auto r = greedy_spanner(p.distances(), {}, SpannerParams{3.0, {}});
  EXPECT_LE(r.stretch, 3.0);
  EXPECT_NEAR(r.stretch, oracle::stretch(as_strategies(4, r.edges), p.distances()), 1e-12);
}

TEST(GreedySpanner, RejectsStretchAtMostOne) {
  EXPECT_THROW(greedy_spanner(line({0, 1}).distances(), {}, SpannerParams{1.0, {}}), InputError);
}

TEST(GreedySpanner, StretchMatchesBruteForceOnSmallSets) {
  for (int seed = 0; seed < 30; ++seed) {
    const PointSet p = random_unit_square(8, seed);
    for (double t : {1.1, 1.5, 2.0}) {
      const auto r = greedy_spanner(p.distances(), {}, SpannerParams{t, {}});
      const double brute = oracle::stretch(as_strategies(8, r.edges), p.distances());
      EXPECT_LE(brute, t + 1e-12);
      EXPECT_NEAR(r.stretch, brute, 1e-12);
      EXPECT_EQ(r.ownership.owner.size(), r.edges.size());
    }
  }
}

TEST(GreedySpanner, SubsetUsesGlobalIndices) {
  const PointSet p = random_unit_square(20, 4);
  const std::vector<int> subset{3, 7, 11, 15};
  const auto r = greedy_spanner(p.distances(), subset, SpannerParams{1.5, {}});
  EXPECT_EQ(r.nodes, subset);
  for (const auto& [a, b] : r.edges) {
    EXPECT_TRUE(std::count(subset.begin(), subset.end(), a));
    EXPECT_TRUE(std::count(subset.begin(), subset.end(), b));
  }
}

TEST(GreedySpanner, DegreeStaysSmallAsNGrows) {
  int previous = 0;
  for (int n : {200, 400, 800}) {
    const auto r = greedy_spanner(random_unit_square(n, 1).distances(), {}, SpannerParams{1.5, {}});
    EXPECT_LE(r.max_degree, 12);
    EXPECT_LE(r.stretch, 1.5);
    previous = std::max(previous, r.max_degree);
  }
  EXPECT_GT(previous, 0);
}

TEST(MeasureStretch, CompleteAndDisconnected) {
  const PointSet p = random_unit_square(6, 2);
  StrategyProfile k(6);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) k.buy(u, v);
  EXPECT_NEAR(measure_stretch(build_network(k, p.distances()), p.distances()), 1.0, 1e-12);
  EXPECT_EQ(measure_stretch(build_network(StrategyProfile(6), p.distances()), p.distances()), kInf);
}

TEST(MeasureStretch, SquarePath) {
  const std::vector<int> ext{1, 1};
  const PointSet p = integer_grid(ext);  // (0,0) (1,0) (0,1) (1,1)
  // Path 0-1-3-2: corners 0 and 2 are 3 apart along a side of length 1.
  const StrategyProfile s({{1}, {3}, {}, {2}});
  EXPECT_DOUBLE_EQ(measure_stretch(build_network(s, p.distances()), p.distances()), 3.0);
}

TEST(MeasureStretch, GridWithinSqrtD) {
  const std::vector<int> ext{3, 2, 2};
  const PointSet p = integer_grid(ext);
  StrategyProfile s(p.size());
  for (int u = 0; u < p.size(); ++u)
    for (int v = u + 1; v < p.size(); ++v)
      if (std::abs(p.distance(u, v) - 1.0) < 1e-12) s.buy(u, v);
  EXPECT_LE(measure_stretch(build_network(s, p.distances()), p.distances()), std::sqrt(3.0) + 1e-12);
}

TEST(DistributeOwnership, StarCenterOwnsAll) {
  const std::vector<NodePair> star{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  const auto own = distribute_ownership(5, star, 4);
  EXPECT_TRUE(own.feasible);
  for (int o : own.owner) EXPECT_EQ(o, 0);
  EXPECT_EQ(own.max_owned, 4);
}

TEST(DistributeOwnership, EvenCycleCapOne) {
  const std::vector<NodePair> cycle{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  const auto own = distribute_ownership(4, cycle, 1);
  EXPECT_TRUE(own.feasible);
  for (int c : owned_counts(4, cycle, own)) EXPECT_EQ(c, 1);
  EXPECT_EQ(own.max_owned, 1);
}

TEST(DistributeOwnership, TreeCapOne) {
  const std::vector<NodePair> tree{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}};
  const auto own = distribute_ownership(6, tree, 1);
  EXPECT_TRUE(own.feasible);
  EXPECT_EQ(own.max_owned, 1);
}

TEST(DistributeOwnership, InfeasibleReportsMinimum) {
  // K4 has 6 edges on 4 nodes, so someone owns at least 2.
  const std::vector<NodePair> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  const auto own = distribute_ownership(4, k4, 1);
  EXPECT_FALSE(own.feasible);
  EXPECT_EQ(own.max_owned, 2);
  const auto counts = owned_counts(4, k4, own);
  EXPECT_EQ(*std::max_element(counts.begin(), counts.end()), own.max_owned);
}

TEST(DistributeOwnership, UncappedWithinHalfDegree) {
  for (int seed = 0; seed < 10; ++seed) {
    const auto r = greedy_spanner(random_unit_square(60, seed).distances(), {}, SpannerParams{1.3, {}});
    const auto counts = owned_counts(60, r.edges, r.ownership);
    EXPECT_EQ(*std::max_element(counts.begin(), counts.end()), r.ownership.max_owned);
    EXPECT_LE(r.ownership.max_owned, (r.max_degree + 1) / 2 + 1);
  }
}

TEST(MinimumSpanningTree, SquareUsesSidesOnly) {
  const std::vector<int> ext{1, 1};
  const PointSet p = integer_grid(ext);
  const auto tree = minimum_spanning_tree(p.distances());
  ASSERT_EQ(tree.size(), 3u);
  double total = 0.0;
  for (const auto& [a, b] : tree) total += p.distance(a, b);
  EXPECT_DOUBLE_EQ(total, 3.0);
}

TEST(TreeProfile, EachAgentOwnsAtMostOne) {
  const PointSet p = random_unit_square(30, 8);
  const auto tree = minimum_spanning_tree(p.distances());
  const StrategyProfile s = tree_profile(30, tree);
  EXPECT_LE(s.max_owned(), 1);
  EXPECT_TRUE(s.strategy(0).empty());
  EXPECT_LT(measure_stretch(build_network(s, p.distances()), p.distances()), kInf);
}
