#include "ncg/constructions.hpp"

#include "ncg/designer.hpp"

#include <cmath>
#include <numbers>

namespace ncg {

namespace {

void require_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InputError("alpha must be positive");
}

// Exact audit when the oracle allows it, heuristic otherwise.
BetaGammaCertificate audit(const StrategyProfile& profile, const Matrix& dist, double alpha,
                           const OracleOptions& opts, bool& exact) {
  OracleOptions o = opts;
  o.optimum_limit = 0;
  exact = profile.size() <= opts.exhaustive_limit;
  return certify(profile, dist, alpha, exact ? AuditMode::exact : AuditMode::heuristic, o);
}

}  // namespace

R1Chain r1_chain(double alpha, int n) {
  require_alpha(alpha);
  if (n < 1) throw InputError("r1_chain needs n >= 1");
  Matrix coords(1, n + 1);
  coords(0, 0) = 0.0;
  for (int i = 1; i <= n; ++i) coords(0, i) = std::pow(1.0 + 2.0 / alpha, i - 1);
  StrategyProfile star(n + 1);
  StrategyProfile path(n + 1);
  for (int i = 1; i <= n; ++i) {
    star.buy(0, i);
    path.buy(i - 1, i);
  }
  return {PointSet(std::move(coords)), std::move(star), std::move(path)};
}

double r1_star_cost(double alpha, int n) {
  return alpha * (std::pow(1.0 + 2.0 / alpha, n) - 1.0) * (n + alpha / 2.0);
}

double r1_path_cost(double alpha, int n) {
  const double g = 1.0 + 2.0 / alpha;
  return alpha * ((n - alpha) * std::pow(g, n) + alpha + n + std::pow(g, n - 1));
}

std::pair<double, double> weird_sum_check(double alpha, int n) {
  require_alpha(alpha);
  if (n < 1) throw InputError("weird_sum_check needs n >= 1");
  const double g = 1.0 + 2.0 / alpha;
  double lhs = 2.0 * n;
  for (int i = 1; i <= n - 1; ++i) {
    lhs += 4.0 / alpha * std::pow(g, i - 1) * (i + 1) * (n - i);
  }
  const double rhs = (alpha * n - alpha * alpha) * std::pow(g, n) + alpha * alpha + alpha * n;
  return {lhs, rhs};
}

R1PoaResult r1_poa_ratio(double alpha, const OracleOptions& opts) {
  require_alpha(alpha);
  R1PoaResult out;
  out.n = std::max(4, static_cast<int>(std::lround(std::pow(alpha, 2.0 / 3.0))));
  const R1Chain chain = r1_chain(alpha, out.n);
  const Matrix& dist = chain.points.distances();
  out.ratio = social_cost(chain.star, dist, alpha) / social_cost(chain.path, dist, alpha);
  out.closed_form_ratio = r1_star_cost(alpha, out.n) / r1_path_cost(alpha, out.n);
  if (out.n + 1 <= opts.exhaustive_limit) out.star_is_ne = is_exact_nash(chain.star, dist, alpha, opts);
  return out;
}

double dinfty_x(double alpha) {
  if (!(alpha > std::sqrt(2.0) - 1.0)) throw InputError("alpha must exceed sqrt(2) - 1");
  if (alpha >= std::sqrt(1.0 + std::sqrt(2.0)) - 1.0) {
    return (alpha * alpha + 2.0 * alpha) / (2.0 * alpha + 2.0);
  }
  return std::sqrt((alpha * alpha + 2.0 * alpha - 1.0) / 2.0);
}

DInftyStar dinfty_star(int d, double alpha, bool verify, const OracleOptions& opts) {
  if (d < 2) throw InputError("dinfty_star needs d >= 2");
  const double x = dinfty_x(alpha);
  const int n = 2 * d;
  Matrix coords = Matrix::Zero(d, n);
  coords(d - 1, 1) = x;
  for (int i = 0; i < d - 1; ++i) {
    coords(i, 2 + 2 * i) = 1.0;
    coords(i, 3 + 2 * i) = -1.0;
  }
  DInftyStar out{PointSet(std::move(coords)), x, star_profile(n, 1), star_profile(n, 0)};
  const Matrix& dist = out.points.distances();
  out.ratio = social_cost(out.star_u, dist, alpha) / social_cost(out.star_m, dist, alpha);
  const double r = std::sqrt(1.0 + x * x);
  const double base = (n - 2) * alpha + 2.0 * n * n - 6.0 * n + 4.0;
  const double tail = (2.0 * n - 2.0 + alpha) * x;
  out.closed_form_ratio = (r * base + tail) / (base + tail);
  if (verify && n <= opts.exhaustive_limit) out.star_u_is_ne = is_exact_nash(out.star_u, dist, alpha, opts);
  return out;
}

ClusterInstance cluster_triangle(int cluster_size, double epsilon) {
  if (cluster_size < 1) throw InputError("cluster size must be positive");
  if (!(epsilon > 0.0) || epsilon >= 0.1) throw InputError("epsilon must lie in (0, 0.1)");
  const int k = cluster_size;
  const double pi = std::numbers::pi;
  const Eigen::Vector2d centroid(0.5, std::sqrt(3.0) / 6.0);
  const std::array<Eigen::Vector2d, 3> corners{Eigen::Vector2d(0.0, 0.0), Eigen::Vector2d(1.0, 0.0),
                                               Eigen::Vector2d(0.5, std::sqrt(3.0) / 2.0)};
  const double spread = 50.0 * pi / 180.0;
  Matrix coords(2, 3 * k);
  for (int c = 0; c < 3; ++c) {
    const Eigen::Vector2d out_dir = corners[c] - centroid;
    const double bisector = std::atan2(out_dir.y(), out_dir.x());
    coords.col(c * k) = corners[c];
    for (int j = 1; j < k; ++j) {
      const double offset = k == 2 ? 0.0 : -spread + 2.0 * spread * (j - 1) / (k - 2);
      const double a = bisector + offset;
      coords.col(c * k + j) = corners[c] + epsilon * Eigen::Vector2d(std::cos(a), std::sin(a));
    }
  }
  ClusterInstance out{PointSet(std::move(coords)), k, {0, k, 2 * k}, StrategyProfile(3 * k),
                      StrategyProfile(3 * k)};
  for (int c = 0; c < 3; ++c) {
    for (int j = 1; j < k; ++j) {
      out.three_edge.buy(c * k, c * k + j);
      out.two_edge.buy(c * k, c * k + j);
    }
  }
  for (int c = 0; c < 3; ++c) {
    out.three_edge.buy(out.reps[c], out.reps[(c + 1) % 3]);
    if (c < 2) out.two_edge.buy(out.reps[c], out.reps[c + 1]);
  }
  return out;
}

TriangleClustersResult triangle_clusters(double alpha, double epsilon, const OracleOptions& opts) {
  if (!(alpha >= 1.0)) throw InputError("triangle_clusters needs alpha >= 1");
  const int k = static_cast<int>(std::floor(std::sqrt(alpha) + 1.0));
  TriangleClustersResult out{cluster_triangle(k, epsilon), alpha};
  const NetworkContext ctx(out.instance.three_edge, out.instance.points.distances());
  for (int rep : out.instance.reps) {
    Deviation dev = heuristic_deviations(ctx, rep, alpha, opts);
    const double factor = ctx.agent_cost(rep, alpha) / dev.cost;
    if (factor > out.improvement_factor) {
      out.improvement_factor = factor;
      out.deviating_agent = rep;
      out.deviation = std::move(dev);
    }
  }
  out.limit_factor = (alpha + 2.0 * k) / (3.0 * k);
  out.optimum_condition = alpha < 2.0 * k * k;
  return out;
}

PosInstanceResult pos_instance(double alpha, double epsilon, const OracleOptions& opts) {
  if (!(alpha > 2.0)) throw InputError("pos_instance needs alpha > 2");
  const int k = static_cast<int>(std::ceil(alpha)) - 1;
  PosInstanceResult out{cluster_triangle(k, epsilon), alpha};
  const Matrix& dist = out.instance.points.distances();
  out.sc_three = social_cost(out.instance.three_edge, dist, alpha);
  out.sc_two = social_cost(out.instance.two_edge, dist, alpha);
  out.three_audit = audit(out.instance.three_edge, dist, alpha, opts, out.exact);
  out.two_audit = audit(out.instance.two_edge, dist, alpha, opts, out.exact);
  out.three_is_ne = out.three_audit.beta <= 1.0 + opts.tol.relative;
  out.two_is_ne = out.two_audit.beta <= 1.0 + opts.tol.relative;
  out.optimum_condition = 4.0 * k * k > alpha + 2.0 * k * k;
  out.selling_condition = 2.0 * k < alpha + k;
  return out;
}

}  // namespace ncg
