#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rigidity/rational.hpp"

namespace rigidity {

// Every runner is a pure function of its config: rerunning yields
// byte-identical CSV. Trials use stream_id = trial index, so rows are
// independent of scheduling. CSV begins with '#' provenance comments.

struct ThresholdConfig {
  int n = 0;
  int d = 1;
  std::vector<double> p_grid;
  int trials = 1;
  uint64_t seed = 0;
  int threads = 1;
};
std::string run_threshold(const ThresholdConfig& cfg);

struct RegularConfig {
  int n = 0;
  int r = 0;
  int d = 1;
  int trials = 1;
  uint64_t seed = 0;
  int threads = 1;
};
std::string run_regular(const RegularConfig& cfg);

struct GiantConfig {
  int n = 0;
  double p = 0.0;
  int m = 1;
  int k = 1;
  Rational eta{1};
  int trials = 1;
  uint64_t seed = 0;
  int threads = 1;
};
std::string run_giant(const GiantConfig& cfg);

struct CodegreeConfig {
  int n = 0;
  std::string model = "cliques";  // cliques | gnp | partition
  std::vector<int> k_grid;        // cliques only
  int trials = 1;
  uint64_t seed = 0;
  int threads = 1;
};
std::string run_codegree(const CodegreeConfig& cfg);

// Dispatch on the "experiment" field of a JSON config mirroring the
// structs above.
std::string run_experiment_json(const std::string& config_json);

}  // namespace rigidity
