#pragma once

#include <string>
#include <vector>

#include "rbmle/environment.hpp"

namespace rbmle {

// Canonical experiment configurations: fig2a/fig2b (static linear),
// fig2c/fig2d (time-varying), fig4a/fig4b (logistic GLM). "table3" is the
// scalability timing grid and is handled by the bench path.
ExperimentConfig preset_config(const std::string& name);

bool is_bench_preset(const std::string& name);

struct BenchPreset {
  std::vector<std::pair<int, int>> grid_dim_arms;
  int horizon = 100;
  int trials = 50;
  std::vector<PolicySpec> policies;
  std::uint64_t seed = 46;
};

BenchPreset bench_preset(const std::string& name);

std::vector<std::string> preset_names();

}  // namespace rbmle
