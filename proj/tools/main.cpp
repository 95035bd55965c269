#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace ncg::cli;

int main(int argc, char** argv) {
  CLI::App app{"Network creation games on point sets and host networks"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* g = app.add_subcommand("generate", "Write an instance (and its profiles) as JSON");
  g->add_option("--preset", gen.preset,
                "random-square|grid|r1-chain|dinfty-star|triangle-clusters|pos-instance|hs-instance")
      ->required();
  g->add_option("--n", gen.n, "points (random-square) or chain length (r1-chain)");
  g->add_option("--seed", gen.seed);
  g->add_option("--alpha", gen.alpha);
  g->add_option("--dims", gen.dims, "grid extents, e.g. 3,3")->delimiter(',');
  g->add_option("--d", gen.d, "dimension of dinfty-star");
  g->add_option("--epsilon", gen.epsilon, "cluster spread");
  g->add_option("--universe", gen.universe, "hs-instance universe size");
  g->add_option("--sets", gen.sets, "hs-instance sets, e.g. 0,1;1,2");
  g->add_option("--out", gen.out);

  GenerateOptions hs;
  hs.preset = "hs-instance";
  auto* h = app.add_subcommand("hs-instance", "Write the hitting-set reduction host");
  h->add_option("--universe", hs.universe)->required();
  h->add_option("--sets", hs.sets)->required();
  h->add_option("--alpha", hs.alpha);
  h->add_option("--out", hs.out);

  DesignOptions des;
  auto* d = app.add_subcommand("design", "Build a profile with a designer");
  d->add_option("--instance", des.instance)->required();
  d->add_option("--designer", des.designer, "alg1|mst|clique|star|grid|best");
  d->add_option("--alpha", des.alpha);
  d->add_option("--out", des.out, "profile output file");

  VerifyOptions ver;
  auto* v = app.add_subcommand("verify", "Certify beta and gamma of a profile");
  v->add_option("--instance", ver.instance)->required();
  v->add_option("--profile", ver.profile, "profile file or name stored in the instance")->required();
  v->add_option("--alpha", ver.alpha);
  v->add_option("--mode", ver.mode, "exact|heuristic");
  v->add_option("--bound", ver.bound, "exit with status 2 if beta exceeds this");
  v->add_option("--out", ver.out);
  v->add_option("--csv", ver.csv, "per-agent cost report");

  DynamicsOptions dyn;
  auto* y = app.add_subcommand("dynamics", "Run round-robin improving dynamics");
  y->add_option("--instance", dyn.instance)->required();
  y->add_option("--start", dyn.start, "start profile file or name (default: MST)");
  y->add_option("--alpha", dyn.alpha);
  y->add_option("--policy", dyn.policy, "best_response|first_improving");
  y->add_option("--max-steps", dyn.max_steps);
  y->add_option("--seed", dyn.seed, "shuffle the activation order");
  y->add_flag("--trajectory", dyn.trajectory, "include every move");
  y->add_option("--out", dyn.out);

  ExperimentOptions exp;
  auto* e = app.add_subcommand("experiment", "Sweep designers and audits into a CSV table");
  e->add_option("--preset", exp.preset, "random-square|grid|r1-poa");
  e->add_option("--n", exp.sizes, "sizes (grid: side length)")->delimiter(',');
  e->add_option("--alpha", exp.alphas)->delimiter(',');
  e->add_option("--designer", exp.designers)->delimiter(',');
  e->add_option("--dims", exp.grid_dims, "grid dimensions")->delimiter(',');
  e->add_option("--seeds", exp.seeds, "number of seeds per cell");
  e->add_option("--seed", exp.seed, "first seed");
  e->add_option("--mode", exp.mode, "exact|heuristic|auto");
  e->add_option("--threads", exp.threads);
  e->add_option("--out", exp.out);

  ReduceOptions red;
  auto* r = app.add_subcommand("reduce", "Metric-closure reduction of a host network");
  r->add_option("--instance", red.instance)->required();
  r->add_option("--out", red.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (g->parsed()) return cmd_generate(gen, std::cout);
    if (h->parsed()) return cmd_generate(hs, std::cout);
    if (d->parsed()) return cmd_design(des, std::cout);
    if (v->parsed()) return cmd_verify(ver, std::cout);
    if (y->parsed()) return cmd_dynamics(dyn, std::cout);
    if (e->parsed()) return cmd_experiment(exp, std::cout);
    if (r->parsed()) return cmd_reduce(red, std::cout);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
