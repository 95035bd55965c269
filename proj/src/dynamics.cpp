#include "ncg/equilibrium.hpp"

#include <algorithm>
#include <unordered_map>

namespace ncg {

std::string to_string(DynamicsKind kind) {
  switch (kind) {
    case DynamicsKind::converged: return "converged";
    case DynamicsKind::cycle: return "cycle";
    case DynamicsKind::step_limit: return "step_limit";
  }
  return "unknown";
}

DynamicsOutcome run_dynamics(StrategyProfile start, std::span<const int> order, int max_steps,
                             const ResponseFn& respond) {
  if (order.empty()) throw InputError("empty activation order");
  for (int u : order) {
    if (u < 0 || u >= start.size()) throw InputError("activation order names an unknown agent");
  }
  DynamicsOutcome out;
  std::vector<StrategyProfile> history{start};
  std::unordered_multimap<std::uint64_t, int> seen{{start.canonical_hash(), 0}};
  StrategyProfile current = std::move(start);

  const int round = static_cast<int>(order.size());
  int idle = 0;
  for (std::size_t pos = 0;; pos = (pos + 1) % order.size()) {
    if (idle >= round) {
      out.kind = DynamicsKind::converged;
      break;
    }
    if (out.steps >= max_steps) {
      out.kind = DynamicsKind::step_limit;
      break;
    }
    const int u = order[pos];
    auto move = respond(current, u);
    if (!move) {
      ++idle;
      continue;
    }
    idle = 0;
    current.set_strategy(u, move->after);
    out.trajectory.push_back(std::move(*move));
    ++out.steps;

    const auto hash = current.canonical_hash();
    int repeat = -1;
    for (auto [it, end] = seen.equal_range(hash); it != end; ++it) {
      if (history[it->second] == current) repeat = it->second;
    }
    if (repeat >= 0) {
      out.kind = DynamicsKind::cycle;
      out.cycle_length = out.steps - repeat;
      out.cycle.assign(history.begin() + repeat, history.end());
      break;
    }
    seen.emplace(hash, static_cast<int>(history.size()));
    history.push_back(current);
  }
  out.final_profile = std::move(current);
  return out;
}

namespace {

std::optional<DynamicsMove> first_improving_move(const NetworkContext& ctx, int u, double alpha,
                                                 double current_cost, const Tolerance& tol) {
  const int n = ctx.size();
  const std::vector<int>& s = ctx.profile().strategy(u);
  auto try_strategy = [&](std::vector<int> cand) -> std::optional<DynamicsMove> {
    std::sort(cand.begin(), cand.end());
    const double c = ctx.evaluate(u, cand, alpha);
    if (c < current_cost - tol.improvement) return DynamicsMove{u, s, std::move(cand), current_cost, c};
    return std::nullopt;
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto cand = s;
    cand.erase(cand.begin() + static_cast<std::ptrdiff_t>(i));
    if (auto m = try_strategy(std::move(cand))) return m;
  }
  for (int v = 0; v < n; ++v) {
    if (v == u || ctx.profile().owns(u, v)) continue;
    auto cand = s;
    cand.push_back(v);
    if (auto m = try_strategy(std::move(cand))) return m;
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (int v = 0; v < n; ++v) {
      if (v == u || ctx.profile().owns(u, v)) continue;
      auto cand = s;
      cand[i] = v;
      if (auto m = try_strategy(std::move(cand))) return m;
    }
  }
  return std::nullopt;
}

}  // namespace

DynamicsOutcome dynamics(const StrategyProfile& start, const Matrix& weights, double alpha,
                         DynamicsPolicy policy, std::span<const int> order, int max_steps,
                         const OracleOptions& opts) {
  auto respond = [&](const StrategyProfile& profile, int u) -> std::optional<DynamicsMove> {
    NetworkContext ctx(profile, weights);
    const double cost = ctx.agent_cost(u, alpha);
    if (policy == DynamicsPolicy::first_improving) {
      return first_improving_move(ctx, u, alpha, cost, opts.tol);
    }
    Deviation br = exact_best_response(ctx, u, alpha, opts);
    if (br.cost < cost - opts.tol.improvement) {
      return DynamicsMove{u, profile.strategy(u), br.strategy, cost, br.cost};
    }
    return std::nullopt;
  };
  return run_dynamics(start, order, max_steps, respond);
}

}  // namespace ncg
