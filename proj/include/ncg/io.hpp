#pragma once

#include "ncg/common.hpp"
#include "ncg/equilibrium.hpp"
#include "ncg/game_core.hpp"
#include "ncg/geometry.hpp"
#include "ncg/hostgame.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>

namespace ncg {

using Json = nlohmann::json;

/// A point set or a host network, plus optional metadata and named profiles.
struct Instance {
  std::optional<PointSet> points;
  std::optional<HostNetwork> host;
  std::optional<double> alpha;
  std::optional<std::uint64_t> seed;
  std::map<std::string, StrategyProfile> profiles;

  int size() const;
  const Matrix& weights() const;
  bool metric() const { return points.has_value(); }
};

Json to_json(const StrategyProfile& p);
StrategyProfile profile_from_json(const Json& j, int n);

Json to_json(const PointSet& points);
PointSet points_from_json(const Json& j);

/// {"n": n, "weights": [w(1,0), w(2,0), w(2,1), ...]} (strictly lower
/// triangle, row-major). A list that also carries the zero diagonal is accepted.
Json to_json(const HostNetwork& h);
HostNetwork host_from_json(const Json& j);

Json to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

Json to_json(const BetaGammaCertificate& c);
Json to_json(const DynamicsOutcome& d, bool with_trajectory);
Json to_json(const MetricReduction& r, int n);

Json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& j);

/// agent,edge_cost,dist_cost,total rows followed by a social-cost row.
void write_cost_report_csv(std::ostream& os, const CostReport& report);

}  // namespace ncg
