#pragma once

#include "ncg/common.hpp"
#include "ncg/game_core.hpp"
#include "ncg/spanner.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ncg {

struct OracleOptions {
  int exhaustive_limit = 16;  // max n for the exhaustive best response
  int optimum_limit = 7;      // max n for the brute-force social optimum
  int swap_shortlist = 8;     // swap targets examined per dropped edge
  bool metric_weights = true; // weights already are a shortest-path metric
  Tolerance tol;
};

/// A unilateral strategy of one agent and the cost it achieves.
struct Deviation {
  std::vector<int> strategy;
  double cost = kInf;
};

/// A strategy profile with its network and (lazily) its all-pairs distances.
class NetworkContext {
 public:
  NetworkContext(StrategyProfile profile, const Matrix& weights);

  const StrategyProfile& profile() const { return profile_; }
  const Matrix& weights() const { return *weights_; }
  const Network& network() const { return network_; }
  int size() const { return profile_.size(); }
  const Matrix& distances() const;

  /// Agents other than u that bought an edge to u.
  std::vector<int> incoming(int u) const;

  /// Exact cost of u if it played `strategy` while all others stay fixed.
  double evaluate(int u, std::span<const int> strategy, double alpha) const;
  /// Distances from u under that unilateral change.
  void distances_after(int u, std::span<const int> strategy, std::span<double> out) const;

  double agent_cost(int u, double alpha) const;

 private:
  StrategyProfile profile_;
  const Matrix* weights_;
  Network network_;
  mutable std::optional<Matrix> apsp_;
};

/// Globally optimal strategy of `agent` by exhaustive search over all 2^(n-1)
/// subsets. Ties go to the lexicographically smallest sorted target list.
/// Throws LimitError if n exceeds the exhaustive limit.
Deviation exact_best_response(const NetworkContext& ctx, int agent, double alpha,
                              const OracleOptions& opts = {});

/// Best of: current strategy, drop one owned edge, drop all, add one edge,
/// swap one owned edge, greedy multi-add. The returned cost is exact for the
/// returned strategy and upper-bounds the best-response cost.
Deviation heuristic_deviations(const NetworkContext& ctx, int agent, double alpha,
                               const OracleOptions& opts = {});

enum class AuditMode { exact, heuristic };

struct BetaGammaCertificate {
  double beta = 1.0;
  bool beta_exact = false;     // exhaustive oracle ran for every agent
  int worst_agent = -1;
  Deviation deviation;         // best deviation found for the worst agent
  Vector agent_ratio;          // cost(u) / deviation cost(u)
  double gamma = 1.0;
  bool gamma_exact = false;    // vs. brute-force optimum; otherwise vs. lower bound
  double social_cost = 0.0;
  double reference_cost = 0.0; // optimum or its lower bound

  std::string beta_kind() const { return beta_exact ? "exact" : "lower_bound"; }
  std::string gamma_kind() const { return gamma_exact ? "exact" : "upper_bound"; }
};

BetaGammaCertificate certify(const StrategyProfile& profile, const Matrix& weights, double alpha,
                             AuditMode mode, const OracleOptions& opts = {});

/// True when no agent can improve by more than the relative tolerance.
bool is_exact_nash(const StrategyProfile& profile, const Matrix& weights, double alpha,
                   const OracleOptions& opts = {});

struct OptimumResult {
  double social_cost = kInf;
  std::vector<NodePair> edges;
  StrategyProfile profile;  // lower index owns
};

/// Social optimum by enumerating every edge subset of the complete graph.
OptimumResult brute_force_optimum(const Matrix& weights, double alpha, int limit = 7);

/// alpha * w(MST) + sum_u d(u, P) over the shortest-path metric `metric`.
double optimum_lower_bound(const Matrix& metric, double alpha);

/// max_{u != v} (|u,c| + |c,v|) / |u,v| - 1.
double star_ne_threshold(const Matrix& dist, int center);

// ---------------------------------------------------------------------------
// Improving-response dynamics

enum class DynamicsPolicy { best_response, first_improving };
enum class DynamicsKind { converged, cycle, step_limit };

struct DynamicsMove {
  int agent = -1;
  std::vector<int> before;
  std::vector<int> after;
  double cost_before = 0.0;
  double cost_after = 0.0;
};

struct DynamicsOutcome {
  DynamicsKind kind = DynamicsKind::step_limit;
  int steps = 0;                          // executed moves
  int cycle_length = 0;                   // moves between the repeated profiles
  StrategyProfile final_profile;
  std::vector<StrategyProfile> cycle;     // profiles on the detected cycle
  std::vector<DynamicsMove> trajectory;
};

std::string to_string(DynamicsKind kind);

/// Returns the move agent `u` makes in `profile`, or nothing if it stays.
using ResponseFn = std::function<std::optional<DynamicsMove>(const StrategyProfile&, int)>;

/// Round-robin dynamics engine: halts on a full round without moves, on a
/// repeated profile, or after `max_steps` moves.
DynamicsOutcome run_dynamics(StrategyProfile start, std::span<const int> order, int max_steps,
                             const ResponseFn& respond);

DynamicsOutcome dynamics(const StrategyProfile& start, const Matrix& weights, double alpha,
                         DynamicsPolicy policy, std::span<const int> order, int max_steps,
                         const OracleOptions& opts = {});

}  // namespace ncg
