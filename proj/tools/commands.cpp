#include "commands.hpp"

#include "ncg/constructions.hpp"
#include "ncg/designer.hpp"
#include "ncg/spanner.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>

namespace ncg::cli {

namespace {

void emit(const Json& j, const std::string& path, std::ostream& os) {
  if (path.empty() || path == "-") {
    os << std::setw(2) << j << '\n';
  } else {
    write_json(path, j);
  }
}

double resolve_alpha(const std::optional<double>& given, const Instance& inst) {
  if (given) return *given;
  if (inst.alpha) return *inst.alpha;
  throw InputError("no alpha given and the instance does not record one");
}

StrategyProfile resolve_profile(const std::string& ref, const Instance& inst) {
  if (auto it = inst.profiles.find(ref); it != inst.profiles.end()) return it->second;
  return profile_from_json(read_json(ref), inst.size());
}

}  // namespace

std::vector<std::vector<int>> parse_sets(const std::string& text) {
  std::vector<std::vector<int>> sets;
  std::stringstream outer(text);
  std::string group;
  while (std::getline(outer, group, ';')) {
    std::vector<int> s;
    std::stringstream inner(group);
    std::string item;
    while (std::getline(inner, item, ',')) {
      if (item.empty()) continue;
      try {
        s.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw InputError("bad set element '" + item + "'");
      }
    }
    sets.push_back(std::move(s));
  }
  return sets;
}

int cmd_generate(const GenerateOptions& o, std::ostream& os) {
  Instance inst;
  const std::string& p = o.preset;
  if (p == "random-square") {
    inst.points = random_unit_square(o.n, o.seed);
    inst.seed = o.seed;
  } else if (p == "grid") {
    if (o.dims.empty()) throw InputError("grid preset needs --dims");
    inst.points = integer_grid(o.dims);
  } else if (p == "r1-chain") {
    auto chain = r1_chain(o.alpha, o.n);
    inst.points = std::move(chain.points);
    inst.alpha = o.alpha;
    inst.profiles.emplace("star", std::move(chain.star));
    inst.profiles.emplace("path", std::move(chain.path));
  } else if (p == "dinfty-star") {
    auto star = dinfty_star(o.d, o.alpha, false);
    inst.points = std::move(star.points);
    inst.alpha = o.alpha;
    inst.profiles.emplace("star_u", std::move(star.star_u));
    inst.profiles.emplace("star_m", std::move(star.star_m));
  } else if (p == "triangle-clusters" || p == "pos-instance") {
    if (p == "pos-instance" && !(o.alpha > 2.0)) throw InputError("pos-instance needs alpha > 2");
    if (p == "triangle-clusters" && !(o.alpha >= 1.0)) throw InputError("triangle-clusters needs alpha >= 1");
    const int k = p == "pos-instance" ? static_cast<int>(std::ceil(o.alpha)) - 1
                                      : static_cast<int>(std::floor(std::sqrt(o.alpha) + 1.0));
    auto c = cluster_triangle(k, o.epsilon);
    inst.points = std::move(c.points);
    inst.alpha = o.alpha;
    inst.profiles.emplace("three_edge", std::move(c.three_edge));
    inst.profiles.emplace("two_edge", std::move(c.two_edge));
  } else if (p == "hs-instance") {
    auto hs = hitting_set_instance(o.universe, parse_sets(o.sets), o.alpha);
    inst.host = std::move(hs.host);
    inst.alpha = o.alpha;
  } else {
    throw InputError("unknown preset '" + p + "'");
  }
  emit(to_json(inst), o.out, os);
  return kOk;
}

int cmd_design(const DesignOptions& o, std::ostream& os) {
  const Instance inst = instance_from_json(read_json(o.instance));
  const double alpha = resolve_alpha(o.alpha, inst);
  const int n = inst.size();
  const Matrix& w = inst.weights();
  Json summary{{"designer", o.designer}, {"n", n}, {"alpha", alpha}};
  StrategyProfile profile;
  if (o.designer == "alg1") {
    const auto params = choose_params(alpha, n);
    Algorithm1Result r;
    if (inst.host) {
      auto g = generalized_algorithm1(*inst.host, params, alpha);
      r = std::move(g.base);
      profile = std::move(g.profile);
      summary["realized_max_owned"] = g.max_owned;
    } else {
      r = algorithm1(w, params, alpha);
      profile = r.profile;
    }
    summary["formula_beta"] = r.bound.beta;
    summary["branch_beta"] = r.branch_beta;
    summary["cluster_branch"] = r.cluster_branch;
    summary["b"] = r.params.b;
    summary["c"] = r.params.c;
    summary["k_own"] = r.k_own();
    summary["t_meas"] = r.t_meas();
  } else if (o.designer == "mst") {
    profile = tree_profile(n, minimum_spanning_tree(w));
    summary["formula_beta"] = n - 1;
  } else if (o.designer == "clique") {
    profile = clique_profile(n);
    summary["formula_beta"] = alpha + 1.0;
  } else if (o.designer == "star") {
    profile = star_profile(n, 0);
    if (inst.points) summary["ne_threshold"] = star_ne_threshold(w, 0);
  } else if (o.designer == "grid") {
    if (!inst.points) throw InputError("grid designer needs a point instance");
    profile = grid_profile(*inst.points);
    summary["formula_beta"] = 2 * inst.points->dim();
  } else if (o.designer == "best") {
    if (!inst.points) throw InputError("best designer needs a point instance");
    auto b = best_of(*inst.points, alpha);
    profile = std::move(b.profile);
    summary["winner"] = b.winner;
    summary["formula_beta"] = b.winner == "alg1" ? b.alg1.bound.beta : static_cast<double>(n - 1);
  } else {
    throw InputError("unknown designer '" + o.designer + "'");
  }
  summary["social_cost"] = social_cost(profile, w, alpha);
  if (!o.out.empty()) write_json(o.out, to_json(profile));
  else summary["profile"] = to_json(profile);
  os << std::setw(2) << summary << '\n';
  return kOk;
}

int cmd_verify(const VerifyOptions& o, std::ostream& os) {
  const Instance inst = instance_from_json(read_json(o.instance));
  const double alpha = resolve_alpha(o.alpha, inst);
  const StrategyProfile profile = resolve_profile(o.profile, inst);
  AuditMode mode;
  if (o.mode == "exact") mode = AuditMode::exact;
  else if (o.mode == "heuristic") mode = AuditMode::heuristic;
  else throw InputError("mode must be exact or heuristic");
  OracleOptions opts;
  opts.metric_weights = inst.metric();
  const auto cert = certify(profile, inst.weights(), alpha, mode, opts);
  emit(to_json(cert), o.out, os);
  if (!o.csv.empty()) {
    std::ofstream csv(o.csv);
    if (!csv) throw InputError("cannot write " + o.csv);
    write_cost_report_csv(csv, cost_report(profile, inst.weights(), alpha));
  }
  if (o.bound && cert.beta > *o.bound * (1.0 + opts.tol.relative)) return kBoundViolated;
  return kOk;
}

int cmd_dynamics(const DynamicsOptions& o, std::ostream& os) {
  const Instance inst = instance_from_json(read_json(o.instance));
  const double alpha = resolve_alpha(o.alpha, inst);
  const int n = inst.size();
  const StrategyProfile start =
      o.start.empty() ? tree_profile(n, minimum_spanning_tree(inst.weights())) : resolve_profile(o.start, inst);
  DynamicsPolicy policy;
  if (o.policy == "best_response") policy = DynamicsPolicy::best_response;
  else if (o.policy == "first_improving") policy = DynamicsPolicy::first_improving;
  else throw InputError("policy must be best_response or first_improving");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (o.seed) {
    std::mt19937_64 rng(*o.seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  const auto outcome = dynamics(start, inst.weights(), alpha, policy, order, o.max_steps);
  Json j = to_json(outcome, o.trajectory);
  j["order"] = order;
  emit(j, o.out, os);
  return kOk;
}

int cmd_reduce(const ReduceOptions& o, std::ostream& os) {
  const Instance inst = instance_from_json(read_json(o.instance));
  emit(to_json(metric_closure_reduce(inst.weights()), inst.size()), o.out, os);
  return kOk;
}

}  // namespace ncg::cli
