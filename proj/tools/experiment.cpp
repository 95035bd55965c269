#include "commands.hpp"

#include "ncg/constructions.hpp"
#include "ncg/designer.hpp"
#include "ncg/spanner.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

namespace ncg::cli {

namespace {

struct RowSpec {
  int n = 0;
  double alpha = 0.0;
  std::string designer;
  std::uint64_t seed = 0;
  int grid_dim = 0;
};

struct Row {
  explicit Row(RowSpec s) : spec(std::move(s)) {}
  RowSpec spec;
  int n = 0;
  double formula_beta = std::nan("");
  double certified_beta = std::nan("");
  std::string beta_kind;
  double sc = std::nan("");
  double gamma = std::nan("");
  std::string gamma_kind;
  double runtime_ms = 0.0;
  std::string error;
};

std::string fmt(double v) {
  if (std::isnan(v)) return "";
  std::ostringstream s;
  s.precision(12);
  s << v;
  return s.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void audit_into(Row& row, const StrategyProfile& profile, const Matrix& w, double alpha,
                const std::string& mode) {
  const bool exact = mode == "exact" || (mode == "auto" && profile.size() <= 10);
  OracleOptions opts;
  const auto cert = certify(profile, w, alpha, exact ? AuditMode::exact : AuditMode::heuristic, opts);
  row.certified_beta = cert.beta;
  row.beta_kind = cert.beta_kind();
  row.sc = cert.social_cost;
  row.gamma = cert.gamma;
  row.gamma_kind = cert.gamma_kind();
}

void run_row(Row& row, const ExperimentOptions& o) {
  const RowSpec& s = row.spec;
  const double alpha = s.alpha;
  if (o.preset == "r1-poa") {
    const auto r = r1_poa_ratio(alpha);
    const auto chain = r1_chain(alpha, r.n);
    row.n = r.n + 1;
    row.sc = social_cost(chain.star, chain.points.distances(), alpha);
    row.gamma = r.ratio;
    row.gamma_kind = "poa_ratio";
    if (r.star_is_ne) {
      row.certified_beta = *r.star_is_ne ? 1.0 : std::nan("");
      row.beta_kind = "exact";
    }
    return;
  }
  PointSet points = o.preset == "grid" ? integer_grid(std::vector<int>(s.grid_dim, std::max(1, s.n)))
                                       : random_unit_square(s.n, s.seed);
  const Matrix& w = points.distances();
  row.n = points.size();
  StrategyProfile profile;
  if (s.designer == "alg1") {
    const auto r = algorithm1(points, choose_params(alpha, points.size()), alpha);
    profile = r.profile;
    row.formula_beta = r.bound.beta;
  } else if (s.designer == "mst") {
    profile = mst_profile(points);
    row.formula_beta = points.size() - 1;
  } else if (s.designer == "clique") {
    profile = clique_profile(points.size());
    row.formula_beta = alpha + 1.0;
  } else if (s.designer == "star") {
    profile = star_profile(points.size(), 0);
  } else if (s.designer == "grid") {
    profile = grid_profile(points);
    row.formula_beta = 2.0 * points.dim();
  } else if (s.designer == "best") {
    auto b = best_of(points, alpha);
    profile = std::move(b.profile);
    row.formula_beta = b.winner == "alg1" ? b.alg1.bound.beta : points.size() - 1.0;
  } else {
    throw InputError("unknown designer '" + s.designer + "'");
  }
  audit_into(row, profile, w, alpha, o.mode);
}

}  // namespace

const std::vector<std::string>& experiment_columns() {
  static const std::vector<std::string> cols{"n",     "alpha",      "designer", "formula_beta",
                                             "certified_beta", "beta_kind", "SC", "gamma",
                                             "gamma_kind", "runtime_ms", "seed", "error"};
  return cols;
}

int cmd_experiment(const ExperimentOptions& o, std::ostream& os) {
  if (o.preset != "random-square" && o.preset != "grid" && o.preset != "r1-poa") {
    throw InputError("experiment preset must be random-square, grid or r1-poa");
  }
  if (o.mode != "auto" && o.mode != "exact" && o.mode != "heuristic") {
    throw InputError("mode must be exact, heuristic or auto");
  }
  std::vector<Row> rows;
  if (o.preset == "r1-poa") {
    for (double a : o.alphas) rows.emplace_back(RowSpec{0, a, "star", 0, 0});
  } else if (o.preset == "grid") {
    for (int d : o.grid_dims) {
      for (int side : o.sizes) {
        for (double a : o.alphas) rows.emplace_back(RowSpec{side, a, "grid", 0, d});
      }
    }
  } else {
    for (int n : o.sizes) {
      for (double a : o.alphas) {
        for (const auto& d : o.designers) {
          for (int k = 0; k < o.seeds; ++k) rows.emplace_back(RowSpec{n, a, d, o.seed + k, 0});
        }
      }
    }
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      Row& row = rows[i];
      const auto t0 = std::chrono::steady_clock::now();
      try {
        run_row(row, o);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      row.runtime_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  unsigned threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, rows.size())));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::ofstream file;
  if (!o.out.empty() && o.out != "-") {
    file.open(o.out);
    if (!file) throw InputError("cannot write " + o.out);
  }
  std::ostream& out = file.is_open() ? static_cast<std::ostream&>(file) : os;
  const auto& cols = experiment_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << fmt(r.spec.alpha) << ',' << r.spec.designer << ',' << fmt(r.formula_beta) << ','
        << fmt(r.certified_beta) << ',' << r.beta_kind << ',' << fmt(r.sc) << ',' << fmt(r.gamma) << ','
        << r.gamma_kind << ',' << fmt(r.runtime_ms) << ',' << r.spec.seed << ',' << csv_field(r.error)
        << '\n';
  }
  return kOk;
}

}  // namespace ncg::cli
