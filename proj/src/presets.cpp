#include "rbmle/presets.hpp"

#include "rbmle/errors.hpp"

namespace rbmle {
namespace {

std::vector<PolicySpec> linear_policies() {
  return {{"lin-rbmle", {}},
          {"lin-ucb", {{"gamma", 1.0}}},
          {"gpucb", {{"delta", 1e-5}}},
          {"gpucbt", {{"c", 0.9}}},
          {"lin-ts", {{"delta", 0.5}, {"epsilon", 0.9}}}};
}

std::vector<PolicySpec> glm_policies() {
  return {{"glm-rbmle", {}}, {"ucb-glm", {{"delta", 0.1}, {"sigma", 1.0}}}};
}

ExperimentConfig linear_preset(std::initializer_list<double> theta,
                               ContextMode mode) {
  ExperimentConfig config;
  config.num_arms = 10;
  config.dim = 3;
  config.horizon = 30000;
  config.trials = 50;
  config.theta_star = Eigen::Map<const Eigen::VectorXd>(theta.begin(), 3);
  config.context_mode = mode;
  config.link = LinkKind::kIdentity;
  config.seed = 46;
  config.policies = linear_policies();
  config.record_every = 10;
  return config;
}

ExperimentConfig glm_preset(std::initializer_list<double> theta) {
  ExperimentConfig config;
  config.num_arms = 10;
  config.dim = 5;
  config.horizon = 1000;
  config.trials = 50;
  config.theta_star = Eigen::Map<const Eigen::VectorXd>(theta.begin(), 5);
  config.context_mode = ContextMode::kStatic;
  config.link = LinkKind::kLogistic;
  config.clamp_radius = 1.0;
  config.seed = 46;
  config.policies = glm_policies();
  config.record_every = 1;
  return config;
}

}  // namespace

ExperimentConfig preset_config(const std::string& name) {
  if (name == "fig2a") {
    return linear_preset({-0.3, 0.5, 0.8}, ContextMode::kStatic);
  }
  if (name == "fig2b") {
    return linear_preset({-0.7, -0.6, 0.1}, ContextMode::kStatic);
  }
  if (name == "fig2c") {
    return linear_preset({-0.3, 0.5, 0.8}, ContextMode::kTimeVarying);
  }
  if (name == "fig2d") {
    return linear_preset({-0.7, -0.6, 0.1}, ContextMode::kTimeVarying);
  }
  if (name == "fig4a") {
    return glm_preset({0.3, -0.5, 0.2, -0.7, -0.1});
  }
  if (name == "fig4b") {
    return glm_preset({0.2, -0.8, -0.5, 0.1, 0.1});
  }
  throw ConfigError("unknown preset: " + name);
}

bool is_bench_preset(const std::string& name) { return name == "table3"; }

BenchPreset bench_preset(const std::string& name) {
  if (name != "table3") throw ConfigError("unknown bench preset: " + name);
  BenchPreset preset;
  for (int dim : {100, 200, 300}) {
    for (int num_arms : {100, 200}) {
      preset.grid_dim_arms.emplace_back(dim, num_arms);
    }
  }
  preset.horizon = 100;
  preset.trials = 50;
  preset.policies = linear_policies();
  preset.seed = 46;
  return preset;
}

std::vector<std::string> preset_names() {
  return {"fig2a", "fig2b", "fig2c", "fig2d", "fig4a", "fig4b", "table3"};
}

}  // namespace rbmle
