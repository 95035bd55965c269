#pragma once

#include "ncg/io.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ncg::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kBoundViolated = 2 };

struct GenerateOptions {
  std::string preset;
  int n = 10;
  std::uint64_t seed = 0;
  double alpha = 2.0;
  std::vector<int> dims;          // grid extents
  int d = 8;                      // dinfty-star dimension
  double epsilon = 1e-6;          // cluster spread
  int universe = 1;               // hs-instance
  std::string sets = "0";         // hs-instance, e.g. "0,1;1,2"
  std::string out;
};

struct DesignOptions {
  std::string instance;
  std::string designer = "alg1";
  std::optional<double> alpha;
  std::string out;
};

struct VerifyOptions {
  std::string instance;
  std::string profile;            // file path or profile name stored in the instance
  std::optional<double> alpha;
  std::string mode = "exact";
  std::optional<double> bound;    // exit 2 if certified beta exceeds it
  std::string out;
  std::string csv;                // per-agent cost report
};

struct DynamicsOptions {
  std::string instance;
  std::string start;              // profile file or name; empty = MST
  std::optional<double> alpha;
  std::string policy = "best_response";
  int max_steps = 1000;
  std::optional<std::uint64_t> seed;  // shuffles the activation order
  bool trajectory = false;
  std::string out;
};

struct ExperimentOptions {
  std::string preset = "random-square";
  std::vector<int> sizes{8};
  std::vector<double> alphas{1.0};
  std::vector<std::string> designers{"alg1"};
  std::vector<int> grid_dims{1, 2, 3};
  int seeds = 1;
  std::uint64_t seed = 0;         // first seed
  std::string mode = "auto";      // exact | heuristic | auto
  unsigned threads = 0;           // 0 = hardware concurrency
  std::string out;
};

struct ReduceOptions {
  std::string instance;
  std::string out;
};

int cmd_generate(const GenerateOptions& o, std::ostream& os);
int cmd_design(const DesignOptions& o, std::ostream& os);
int cmd_verify(const VerifyOptions& o, std::ostream& os);
int cmd_dynamics(const DynamicsOptions& o, std::ostream& os);
int cmd_experiment(const ExperimentOptions& o, std::ostream& os);
int cmd_reduce(const ReduceOptions& o, std::ostream& os);

/// Parses "0,1;1,2" into {{0,1},{1,2}}.
std::vector<std::vector<int>> parse_sets(const std::string& text);

/// Fixed experiment CSV header.
const std::vector<std::string>& experiment_columns();

}  // namespace ncg::cli
