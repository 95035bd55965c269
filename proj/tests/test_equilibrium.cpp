#include "ncg/designer.hpp"
#include "ncg/equilibrium.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"

using namespace ncg;

namespace {

PointSet line(std::vector<double> xs) {
  Matrix c(1, static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) c(0, static_cast<Eigen::Index>(i)) = xs[i];
  return PointSet(c);
}

StrategyProfile random_connected_profile(const PointSet& p, std::mt19937_64& rng, double extra) {
  StrategyProfile s = mst_profile(p);
  std::bernoulli_distribution coin(extra);
  for (int u = 0; u < p.size(); ++u)
    for (int v = 0; v < p.size(); ++v)
      if (u != v && coin(rng)) s.buy(u, v);
  return s;
}

}  // namespace

TEST(ExactBestResponse, CliqueOnLine) {
  const PointSet p = line({0, 1, 2});
  const NetworkContext ctx(clique_profile(3), p.distances());
  const Deviation br = exact_best_response(ctx, 0, 3.0);
  EXPECT_EQ(br.strategy, (std::vector<int>{1}));
  EXPECT_DOUBLE_EQ(br.cost, 6.0);
  EXPECT_DOUBLE_EQ(ctx.agent_cost(0, 3.0), 12.0);
}

TEST(ExactBestResponse, EmptyWhenOthersCoverEverything) {
  const PointSet p = random_unit_square(5, 1);
  // Everyone else buys the complete graph including the edges to agent 0.
  StrategyProfile s(5);
  for (int u = 1; u < 5; ++u)
    for (int v = 0; v < 5; ++v)
      if (u != v && (v == 0 || u < v)) s.buy(u, v);
  const Deviation br = exact_best_response(NetworkContext(s, p.distances()), 0, 1.0);
  EXPECT_TRUE(br.strategy.empty());
}

TEST(ExactBestResponse, IsolatedAgentBuys) {
  const PointSet p = random_unit_square(5, 2);
  StrategyProfile s({{}, {2}, {3}, {4}, {}});
  const Deviation br = exact_best_response(NetworkContext(s, p.distances()), 0, 1.0);
  EXPECT_FALSE(br.strategy.empty());
  EXPECT_LT(br.cost, kInf);
}

TEST(ExactBestResponse, RefusesAboveLimit) {
  const PointSet p = random_unit_square(17, 3);
  EXPECT_THROW(exact_best_response(NetworkContext(mst_profile(p), p.distances()), 0, 1.0), LimitError);
  OracleOptions o;
  o.exhaustive_limit = 4;
  const PointSet q = random_unit_square(5, 3);
  EXPECT_THROW(exact_best_response(NetworkContext(mst_profile(q), q.distances()), 0, 1.0, o), LimitError);
}

TEST(ExactBestResponse, MatchesNaiveEnumeration) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 5;
    const PointSet p = random_unit_square(n, 300 + trial);
    const StrategyProfile s = random_connected_profile(p, rng, 0.15);
    const double alpha = 0.3 + 0.7 * (trial % 6);
    const NetworkContext ctx(s, p.distances());
    for (int u = 0; u < n; ++u) {
      const Deviation br = exact_best_response(ctx, u, alpha);
      const auto ref = oracle::naive_best_response(s.strategies(), p.distances(), alpha, u);
      EXPECT_NEAR(br.cost, ref.cost, 1e-9 * ref.cost);
      auto changed = s.strategies();
      changed[u] = br.strategy;
      EXPECT_NEAR(oracle::agent_cost(changed, p.distances(), alpha, u), br.cost, 1e-9 * br.cost);
    }
  }
}

TEST(HeuristicDeviations, DropOneMatchesExactOnLine) {
  const PointSet p = line({0, 1, 2});
  const NetworkContext ctx(clique_profile(3), p.distances());
  const Deviation h = heuristic_deviations(ctx, 0, 3.0);
  EXPECT_DOUBLE_EQ(h.cost, 6.0);
  EXPECT_EQ(h.strategy, (std::vector<int>{1}));
}

TEST(HeuristicDeviations, ReportedCostIsExact) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const PointSet p = random_unit_square(9, 400 + trial);
    const StrategyProfile s = random_connected_profile(p, rng, 0.1);
    const NetworkContext ctx(s, p.distances());
    for (int u = 0; u < 9; ++u) {
      const Deviation h = heuristic_deviations(ctx, u, 1.0 + trial % 4);
      EXPECT_NEAR(ctx.evaluate(u, h.strategy, 1.0 + trial % 4), h.cost, 1e-9 * h.cost);
    }
  }
}

TEST(HeuristicDeviations, ExactDominates) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 7;
    const PointSet p = random_unit_square(n, 500 + trial);
    const StrategyProfile s = random_connected_profile(p, rng, 0.1);
    const double alpha = 0.5 + trial % 5;
    const NetworkContext ctx(s, p.distances());
    for (int u = 0; u < n; ++u) {
      EXPECT_LE(exact_best_response(ctx, u, alpha).cost,
                heuristic_deviations(ctx, u, alpha).cost * (1 + 1e-12));
    }
    const double exact = certify(s, p.distances(), alpha, AuditMode::exact).beta;
    const double heur = certify(s, p.distances(), alpha, AuditMode::heuristic).beta;
    EXPECT_GE(exact, heur - 1e-9);
  }
}

TEST(Certify, CenteredStarOnLineIsNash) {
  const PointSet p = line({0, 1, 2});
  for (double alpha : {0.1, 1.0, 7.0}) {
    const auto cert = certify(star_profile(3, 1), p.distances(), alpha, AuditMode::exact);
    EXPECT_NEAR(cert.beta, 1.0, 1e-9);
    EXPECT_EQ(cert.beta_kind(), "exact");
  }
}

TEST(Certify, CliqueAndMstWithinTheirBounds) {
  for (int seed = 0; seed < 5; ++seed) {
    const PointSet p5 = random_unit_square(5, seed);
    const auto cc = certify(clique_profile(5), p5.distances(), 3.0, AuditMode::exact);
    EXPECT_LE(cc.beta, 4.0 + 1e-9);
    EXPECT_LE(cc.gamma, 2.5 + 1e-9);
    EXPECT_EQ(cc.gamma_kind(), "exact");
    const PointSet p6 = random_unit_square(6, seed);
    const auto mc = certify(mst_profile(p6), p6.distances(), 2.0, AuditMode::exact);
    EXPECT_LE(mc.beta, 5.0 + 1e-9);
    EXPECT_LE(mc.gamma, 5.0 + 1e-9);
  }
}

TEST(Certify, MatchesNaiveBeta) {
  for (int seed = 0; seed < 6; ++seed) {
    const PointSet p = random_unit_square(5, 60 + seed);
    const StrategyProfile s = mst_profile(p);
    const auto cert = certify(s, p.distances(), 1.5, AuditMode::exact);
    EXPECT_NEAR(cert.beta, oracle::naive_beta(s.strategies(), p.distances(), 1.5), 1e-9);
  }
}

TEST(Certify, LargeInstanceUsesBounds) {
  const PointSet p = random_unit_square(30, 1);
  const auto cert = certify(mst_profile(p), p.distances(), 1.0, AuditMode::heuristic);
  EXPECT_EQ(cert.beta_kind(), "lower_bound");
  EXPECT_EQ(cert.gamma_kind(), "upper_bound");
  EXPECT_GE(cert.gamma, 1.0);
  EXPECT_THROW(certify(mst_profile(p), p.distances(), 1.0, AuditMode::exact), LimitError);
}

TEST(BruteForceOptimum, MatchesOracle) {
  for (int seed = 0; seed < 4; ++seed) {
    const PointSet p = random_unit_square(5, 70 + seed);
    for (double alpha : {0.5, 2.0, 10.0}) {
      const auto opt = brute_force_optimum(p.distances(), alpha);
      EXPECT_NEAR(opt.social_cost, oracle::optimum(p.distances(), alpha), 1e-9 * opt.social_cost);
      EXPECT_NEAR(social_cost(opt.profile, p.distances(), alpha), opt.social_cost, 1e-9 * opt.social_cost);
      EXPECT_LE(optimum_lower_bound(p.distances(), alpha), opt.social_cost * (1 + 1e-12));
    }
  }
}

TEST(BruteForceOptimum, InvariantUnderRelabeling) {
  const PointSet p = random_unit_square(7, 9);
  std::vector<int> perm(7);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(3);
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix q(2, 7);
  for (int i = 0; i < 7; ++i) q.col(i) = p.coords().col(perm[i]);
  const double a = brute_force_optimum(p.distances(), 1.0).social_cost;
  const double b = brute_force_optimum(PointSet(q).distances(), 1.0).social_cost;
  EXPECT_NEAR(a, b, 1e-9 * a);
  EXPECT_THROW(brute_force_optimum(random_unit_square(8, 1).distances(), 1.0), LimitError);
}

TEST(StarThreshold, HandExamples) {
  EXPECT_DOUBLE_EQ(star_ne_threshold(line({0, 1, 2}).distances(), 1), 0.0);
  Matrix tri(2, 3);
  tri << 0, 1, 0.5, 0, 0, std::sqrt(3.0) / 2;
  EXPECT_NEAR(star_ne_threshold(PointSet(tri).distances(), 0), 1.0, 1e-12);
}

TEST(StarThreshold, BoundedByAspectRatio) {
  for (int seed = 0; seed < 20; ++seed) {
    const PointSet p = random_unit_square(15, seed);
    for (int c = 0; c < 15; c += 7) {
      EXPECT_LE(star_ne_threshold(p.distances(), c), 2 * p.aspect_ratio() - 1 + 1e-9);
    }
  }
}

TEST(IsExactNash, StarAboveThreshold) {
  const PointSet p = random_unit_square(8, 77);
  const double thr = star_ne_threshold(p.distances(), 0);
  EXPECT_TRUE(is_exact_nash(star_profile(8, 0), p.distances(), thr + 0.01));
}
