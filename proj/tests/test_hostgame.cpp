#include "ncg/hostgame.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"

using namespace ncg;

namespace {

HostNetwork triangle(double a, double b, double c) {
  Matrix w(3, 3);
  w << 0, a, c, a, 0, b, c, b, 0;
  return HostNetwork(w);
}

std::vector<int> identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST(HostNetwork, Validation) {
  Matrix w(2, 2);
  w << 0, 1, 2, 0;
  EXPECT_THROW(HostNetwork{w}, InputError);
  w << 0, -1, -1, 0;
  EXPECT_THROW(HostNetwork{w}, InputError);
  w << 1, 1, 1, 0;
  EXPECT_THROW(HostNetwork{w}, InputError);
}

TEST(MetricClosureReduce, Triangles) {
  const auto r = metric_closure_reduce(triangle(1, 1, 3));
  ASSERT_EQ(r.edges.size(), 2u);
  EXPECT_EQ(r.weights(0, 2), kInf);
  EXPECT_DOUBLE_EQ(r.distances(0, 2), 2.0);
  EXPECT_EQ(metric_closure_reduce(triangle(1, 1, 2)).edges.size(), 3u);
}

TEST(MetricClosureReduce, MetricHostKeepsEverything) {
  const PointSet p = random_unit_square(12, 2);
  EXPECT_EQ(metric_closure_reduce(HostNetwork(p.distances())).edges.size(), 66u);
}

TEST(MetricClosureReduce, TightIdempotentAndMetricPreserving) {
  for (int seed = 0; seed < 20; ++seed) {
    const HostNetwork h = random_host(5 + seed, seed);
    const auto r = metric_closure_reduce(h);
    const Matrix d = shortest_path_metric(h.weights());
    EXPECT_LE((r.distances - d).cwiseAbs().maxCoeff(), 1e-9);
    for (const auto& e : r.edges) EXPECT_NEAR(e.w, r.distances(e.u, e.v), 1e-9 * e.w);
    for (std::size_t i = 1; i < r.edges.size(); ++i) EXPECT_GE(r.edges[i - 1].w, r.edges[i].w);
    const auto again = metric_closure_reduce(r.weights);
    EXPECT_EQ(again.edges, r.edges);
  }
}

TEST(ShortestPathSubgraph, Examples) {
  const auto s = shortest_path_subgraph_profile(triangle(1, 1, 3));
  EXPECT_EQ(build_network(s, triangle(1, 1, 3).weights()).edges().size(), 2u);
  const PointSet p = random_unit_square(5, 3);
  const auto k = shortest_path_subgraph_profile(HostNetwork(p.distances()));
  EXPECT_EQ(build_network(k, p.distances()).edges().size(), 10u);
}

TEST(ShortestPathSubgraph, WithinCliqueBound) {
  for (int seed = 0; seed < 6; ++seed) {
    const HostNetwork h = random_host(6, 30 + seed);
    for (double alpha : {0.5, 2.0}) {
      const auto cert = certify(shortest_path_subgraph_profile(h), h.weights(), alpha, AuditMode::exact,
                                OracleOptions{16, 0, 8, false, {}});
      EXPECT_LE(cert.beta, alpha + 1 + 1e-9);
    }
  }
}

TEST(HostMst, ExamplesAndBound) {
  const auto t = host_mst_profile(triangle(1, 1, 3));
  const Network g = build_network(t, triangle(1, 1, 3).weights());
  EXPECT_DOUBLE_EQ(g.total_length(), 2.0);
  for (int seed = 0; seed < 6; ++seed) {
    const HostNetwork h = random_host(7, 80 + seed);
    const auto cert = certify(host_mst_profile(h), h.weights(), 1.0, AuditMode::exact);
    EXPECT_LE(cert.beta, 6.0 + 1e-9);
  }
}

TEST(GeneralizedAlgorithm1, EuclideanHostMatchesPointVersion) {
  for (int seed = 0; seed < 5; ++seed) {
    const PointSet p = random_unit_square(30, seed);
    const Algorithm1Params params = choose_params(2.0, 30);
    const auto direct = algorithm1(p, params, 2.0);
    const auto host = generalized_algorithm1(HostNetwork(p.distances()), params, 2.0);
    EXPECT_EQ(host.profile, direct.profile);
  }
}

TEST(GeneralizedAlgorithm1, StarMetricHost) {
  // Hub 0 with unit spokes; rim edges cost 5, far above the 2-hop detour.
  const int n = 6;
  Matrix w = Matrix::Constant(n, n, 5.0);
  w.diagonal().setZero();
  for (int v = 1; v < n; ++v) w(0, v) = w(v, 0) = 1.0;
  const HostNetwork h(w);
  const auto red = metric_closure_reduce(h);
  EXPECT_EQ(red.edges.size(), 5u);
  Algorithm1Params params;
  params.b = 1;
  params.c = 0;
  const auto r = generalized_algorithm1(h, params, 1.0);
  const Network g = build_network(r.profile, w);
  EXPECT_EQ(g.edges().size(), 5u);
  for (const auto& e : g.edges()) EXPECT_EQ(e.a, 0);
}

TEST(GeneralizedAlgorithm1, AlwaysConnected) {
  for (int seed = 0; seed < 10; ++seed) {
    const HostNetwork h = random_host(20, seed);
    const auto r = generalized_algorithm1(h, choose_params(3.0, 20), 3.0);
    EXPECT_TRUE(all_pairs_distances(build_network(r.profile, h.weights())).allFinite());
    EXPECT_EQ(r.max_owned, r.profile.max_owned());
  }
}

TEST(HittingSetInstance, ParametersAndLayout) {
  const auto inst = hitting_set_instance(1, {{0}}, 4.0);
  EXPECT_EQ(inst.q, 2);
  EXPECT_DOUBLE_EQ(inst.x, 6.0);
  EXPECT_EQ(inst.c, 3);
  EXPECT_EQ(inst.node_count(), 12);
  EXPECT_DOUBLE_EQ(inst.host.weight(inst.s, inst.element_nodes[0]), 6.0);
  EXPECT_THROW(hitting_set_instance(2, {{0}, {}}, 1.0), InputError);
}

TEST(HittingSetInstance, ClosureEdgesAreShortestPaths) {
  const auto inst = hitting_set_instance(3, {{0, 1}, {1, 2}}, 1.0);
  const Matrix base = shortest_path_metric(inst.e1_weights);
  EXPECT_LE((shortest_path_metric(inst.host.weights()) - base).cwiseAbs().maxCoeff(), 1e-12);
  for (int u = 0; u < inst.node_count(); ++u)
    for (int v = 0; v < inst.node_count(); ++v)
      if (inst.e1_weights(u, v) == kInf) EXPECT_DOUBLE_EQ(inst.host.weight(u, v), base(u, v));
}

TEST(HittingSetInstance, PermutingUniverseGivesSameCosts) {
  const auto a = audit_hitting_set(hitting_set_instance(3, {{0, 1}, {2}}, 4.0));
  const auto b = audit_hitting_set(hitting_set_instance(3, {{2, 1}, {0}}, 4.0));
  ASSERT_EQ(a.rows.size(), b.rows.size());
  std::vector<double> ca, cb;
  for (const auto& r : a.rows) ca.push_back(r.social_cost);
  for (const auto& r : b.rows) cb.push_back(r.social_cost);
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  for (std::size_t i = 0; i < ca.size(); ++i) EXPECT_NEAR(ca[i], cb[i], 1e-9 * ca[i]);
}

TEST(HittingSetAudit, AffineInSizeAndMinimizerMatches) {
  for (double alpha : {1.0, 4.0}) {
    const auto inst = hitting_set_instance(3, {{0, 1}, {1, 2}, {0, 2}}, alpha);
    const auto audit = audit_hitting_set(inst);
    EXPECT_EQ(audit.minimum_size, 2);
    EXPECT_EQ(audit.best_size, 2);
    EXPECT_LE(audit.offset_spread, 1e-9 * audit.rows.front().social_cost);
  }
  EXPECT_EQ(minimum_hitting_set_size(3, {{0}, {1}, {2}}), 3);
  EXPECT_EQ(minimum_hitting_set_size(2, {}), 0);
}

TEST(HostPoaAudit, MstEquilibriaWithinBound) {
  int audited = 0;
  for (int seed = 0; seed < 10; ++seed) {
    const HostNetwork h = random_host(5, 90 + seed);
    for (double alpha : {1.0, 2.0, 5.0}) {
      const auto out = dynamics(host_mst_profile(h), h.weights(), alpha, DynamicsPolicy::best_response,
                                identity(5), 200);
      if (out.kind != DynamicsKind::converged) continue;
      const std::vector<StrategyProfile> eq{out.final_profile};
      const auto rep = host_poa_audit(h, alpha, eq);
      EXPECT_TRUE(rep.all_ok);
      EXPECT_LE(rep.max_stretch, alpha + 1 + 1e-9);
      ASSERT_TRUE(rep.optimum.has_value());
      EXPECT_LE(*rep.optimum, rep.entries[0].social_cost * (1 + 1e-12));
      EXPECT_GE(*rep.optimum, rep.lower_bound * (1 - 1e-12));
      ++audited;
    }
  }
  EXPECT_GT(audited, 0);
}

TEST(HostPoaAudit, RejectsNonEquilibrium) {
  const HostNetwork h = random_host(5, 1);
  StrategyProfile s(5);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) s.buy(u, v);
  const std::vector<StrategyProfile> eq{s};
  EXPECT_THROW(host_poa_audit(h, 50.0, eq), InputError);
}
