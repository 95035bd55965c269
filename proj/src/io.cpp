#include "ncg/io.hpp"

#include <fstream>
#include <iomanip>

namespace ncg {

int Instance::size() const {
  if (points) return points->size();
  if (host) return host->size();
  throw InputError("empty instance");
}

const Matrix& Instance::weights() const {
  if (points) return points->distances();
  if (host) return host->weights();
  throw InputError("empty instance");
}

Json to_json(const StrategyProfile& p) { return Json{{"strategies", p.strategies()}}; }

StrategyProfile profile_from_json(const Json& j, int n) {
  const Json& s = j.contains("strategies") ? j.at("strategies") : j;
  if (!s.is_array()) throw InputError("profile: expected a list of strategies");
  auto strategies = s.get<std::vector<std::vector<int>>>();
  if (static_cast<int>(strategies.size()) != n) {
    throw InputError("profile has " + std::to_string(strategies.size()) + " agents, instance has " +
                     std::to_string(n));
  }
  return StrategyProfile(std::move(strategies));
}

Json to_json(const PointSet& points) {
  Json rows = Json::array();
  for (int i = 0; i < points.size(); ++i) {
    const auto col = points.point(i);
    rows.push_back(std::vector<double>(col.data(), col.data() + col.size()));
  }
  return Json{{"dim", points.dim()}, {"points", rows}};
}

PointSet points_from_json(const Json& j) {
  const auto rows = j.at("points").get<std::vector<std::vector<double>>>();
  if (rows.empty()) throw InputError("instance has no points");
  const auto dim = static_cast<Eigen::Index>(rows.front().size());
  if (j.contains("dim") && j.at("dim").get<Eigen::Index>() != dim) {
    throw InputError("declared dim does not match the points");
  }
  Matrix coords(dim, static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != dim) throw InputError("points differ in dimension");
    for (Eigen::Index k = 0; k < dim; ++k) coords(k, static_cast<Eigen::Index>(i)) = rows[i][k];
  }
  return PointSet(std::move(coords));
}

Json to_json(const HostNetwork& h) {
  std::vector<double> tri;
  for (int i = 0; i < h.size(); ++i) {
    for (int j = 0; j < i; ++j) tri.push_back(h.weight(i, j));
  }
  return Json{{"n", h.size()}, {"weights", tri}};
}

HostNetwork host_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  const auto tri = j.at("weights").get<std::vector<double>>();
  const auto strict = static_cast<std::size_t>(n) * (n - 1) / 2;
  const auto with_diag = strict + static_cast<std::size_t>(n);
  if (n < 2 || (tri.size() != strict && tri.size() != with_diag)) {
    throw InputError("host weights: expected n(n-1)/2 lower-triangular entries");
  }
  const bool diag = tri.size() == with_diag;
  Matrix w = Matrix::Zero(n, n);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < i + (diag ? 1 : 0); ++c) {
      const double v = tri[k++];
      if (c == i) {
        if (v != 0.0) throw InputError("host weights: nonzero diagonal entry");
        continue;
      }
      w(i, c) = w(c, i) = v;
    }
  }
  return HostNetwork(std::move(w));
}

Json to_json(const Instance& inst) {
  Json j = inst.points ? to_json(*inst.points) : to_json(*inst.host);
  if (inst.alpha) j["alpha"] = *inst.alpha;
  if (inst.seed) j["seed"] = *inst.seed;
  if (!inst.profiles.empty()) {
    Json p = Json::object();
    for (const auto& [name, prof] : inst.profiles) p[name] = to_json(prof);
    j["profiles"] = p;
  }
  return j;
}

Instance instance_from_json(const Json& j) {
  Instance inst;
  if (j.contains("points")) {
    inst.points = points_from_json(j);
  } else if (j.contains("weights")) {
    inst.host = host_from_json(j);
  } else {
    throw InputError("instance needs \"points\" or \"weights\"");
  }
  if (j.contains("alpha")) inst.alpha = j.at("alpha").get<double>();
  if (j.contains("seed")) inst.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("profiles")) {
    for (const auto& [name, p] : j.at("profiles").items()) {
      inst.profiles.emplace(name, profile_from_json(p, inst.size()));
    }
  }
  return inst;
}

Json to_json(const BetaGammaCertificate& c) {
  return Json{{"beta", c.beta},
              {"beta_kind", c.beta_kind()},
              {"gamma", c.gamma},
              {"gamma_kind", c.gamma_kind()},
              {"worst_agent", c.worst_agent},
              {"deviation", {{"strategy", c.deviation.strategy}, {"cost", c.deviation.cost}}},
              {"social_cost", c.social_cost},
              {"reference_cost", c.reference_cost}};
}

Json to_json(const DynamicsOutcome& d, bool with_trajectory) {
  Json j{{"kind", to_string(d.kind)},
         {"steps", d.steps},
         {"cycle_length", d.cycle_length},
         {"final_profile", to_json(d.final_profile)}};
  if (!d.cycle.empty()) {
    Json cyc = Json::array();
    for (const auto& p : d.cycle) cyc.push_back(to_json(p));
    j["cycle"] = cyc;
  }
  if (with_trajectory) {
    Json t = Json::array();
    for (const auto& m : d.trajectory) {
      t.push_back({{"agent", m.agent},
                   {"before", m.before},
                   {"after", m.after},
                   {"cost_before", m.cost_before},
                   {"cost_after", m.cost_after}});
    }
    j["trajectory"] = t;
  }
  return j;
}

Json to_json(const MetricReduction& r, int n) {
  Json edges = Json::array();
  for (const auto& e : r.edges) edges.push_back({e.u, e.v, e.w});
  return Json{{"n", n}, {"edges", edges}};
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << std::setw(2) << j << '\n';
}

void write_cost_report_csv(std::ostream& os, const CostReport& report) {
  const auto old = os.precision(17);
  os << "agent,edge_cost,dist_cost,total\n";
  for (Eigen::Index u = 0; u < report.total.size(); ++u) {
    os << u << ',' << report.edge_cost[u] << ',' << report.distance_cost[u] << ',' << report.total[u]
       << '\n';
  }
  os << "social," << report.edge_cost.sum() << ',' << report.distance_cost.sum() << ','
     << report.social_cost << '\n';
  os.precision(old);
}

}  // namespace ncg
