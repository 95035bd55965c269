#include "ncg/io.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace ncg;

TEST(Io, PointInstanceRoundTripIsExact) {
  Instance inst;
  inst.points = random_unit_square(25, 77);
  inst.alpha = 0.1 + 0.2;
  inst.seed = 77;
  inst.profiles.emplace("star", StrategyProfile({{1, 2}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {},
                                                 {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}}));
  const Json j = Json::parse(to_json(inst).dump());
  const Instance back = instance_from_json(j);
  EXPECT_TRUE(back.points->coords() == inst.points->coords());
  EXPECT_EQ(*back.alpha, *inst.alpha);
  EXPECT_EQ(*back.seed, 77u);
  EXPECT_EQ(back.profiles.at("star"), inst.profiles.at("star"));
}

TEST(Io, HostLowerTriangle) {
  const Json j = Json::parse(R"({"n": 3, "weights": [1, 3, 1]})");
  const HostNetwork h = host_from_json(j);
  EXPECT_DOUBLE_EQ(h.weight(1, 0), 1.0);
  EXPECT_DOUBLE_EQ(h.weight(2, 0), 3.0);
  EXPECT_DOUBLE_EQ(h.weight(2, 1), 1.0);
  EXPECT_EQ(to_json(h), j);
  const Json diag = Json::parse(R"({"n": 3, "weights": [0, 1, 0, 3, 1, 0]})");
  EXPECT_TRUE(host_from_json(diag).weights() == h.weights());
  EXPECT_THROW(host_from_json(Json::parse(R"({"n": 3, "weights": [1, 2]})")), InputError);
}

TEST(Io, ProfileSizeMismatch) {
  EXPECT_THROW(profile_from_json(Json::parse(R"({"strategies": [[1], []]})"), 3), InputError);
  EXPECT_THROW(profile_from_json(Json::parse(R"({"strategies": [[0], []]})"), 2), InputError);
}

TEST(Io, CertificateFields) {
  BetaGammaCertificate c;
  c.beta = 1.5;
  c.beta_exact = true;
  c.gamma = 2.0;
  c.worst_agent = 3;
  c.deviation = {{1, 2}, 4.0};
  const Json j = to_json(c);
  for (const char* key : {"beta", "beta_kind", "gamma", "gamma_kind", "worst_agent", "deviation"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["beta_kind"], "exact");
  EXPECT_EQ(j["gamma_kind"], "upper_bound");
}

TEST(Io, CostReportCsv) {
  Matrix c(1, 3);
  c << 0, 1, 2;
  const PointSet p(c);
  std::ostringstream os;
  write_cost_report_csv(os, cost_report(StrategyProfile({{1}, {2}, {}}), p.distances(), 2.0));
  EXPECT_EQ(os.str(), "agent,edge_cost,dist_cost,total\n0,2,3,5\n1,2,2,4\n2,0,3,3\nsocial,4,8,12\n");
}
