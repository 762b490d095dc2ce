#include "rbmle/environment.hpp"

#include <cmath>

#include "rbmle/errors.hpp"

namespace rbmle {

BiasSchedule BiasSchedule::sqrt_t() { return BiasSchedule{}; }

BiasSchedule BiasSchedule::table(std::vector<double> values) {
  BiasSchedule s;
  s.values_ = std::move(values);
  for (double v : s.values_) {
    if (v <= 0.0) throw ConfigError("bias schedule values must be positive");
  }
  return s;
}

double BiasSchedule::operator()(int t) const {
  if (values_.empty()) return std::sqrt(static_cast<double>(t));
  const int i = t <= static_cast<int>(values_.size())
                    ? t - 1
                    : static_cast<int>(values_.size()) - 1;
  return values_[i];
}

double EtaSchedule::operator()(int t) const {
  return 1.0 + std::log(static_cast<double>(t));
}

LinkFunction ExperimentConfig::link_function() const {
  return link == LinkKind::kIdentity ? LinkFunction::identity()
                                     : LinkFunction::logistic(clamp_radius);
}

void ExperimentConfig::validate() const {
  if (num_arms < 2) throw ConfigError("config field 'num_arms': must be >= 2");
  if (dim < 1) throw ConfigError("config field 'dim': must be >= 1");
  if (horizon < 1) throw ConfigError("config field 'horizon': must be >= 1");
  if (trials < 1) throw ConfigError("config field 'trials': must be >= 1");
  if (theta_star.size() != dim) {
    throw ConfigError("config field 'theta_star': length must equal dim");
  }
  if (theta_star.norm() > 1.0 + 1e-12) {
    throw ConfigError("config field 'theta_star': l2 norm must be <= 1");
  }
  if (link == LinkKind::kLogistic && clamp_radius <= 0.0) {
    throw ConfigError("config field 'clamp_radius': must be positive");
  }
  if (record_every < 1) {
    throw ConfigError("config field 'record_every': must be >= 1");
  }
}

std::uint64_t trial_stream_seed(std::uint64_t base_seed, int trial) {
  return mix_stream(base_seed, static_cast<std::uint64_t>(trial));
}

namespace {

// One context set: each row drawn from N(0, 10 I) then normalized.
Eigen::MatrixXd draw_contexts(int num_arms, int dim, Rng& rng) {
  Eigen::MatrixXd contexts(num_arms, dim);
  const double scale = std::sqrt(10.0);
  for (int a = 0; a < num_arms; ++a) {
    for (int j = 0; j < dim; ++j) contexts(a, j) = scale * rng.normal();
    contexts.row(a).normalize();
  }
  return contexts;
}

}  // namespace

TrialData generate_trial(const ExperimentConfig& config, int trial) {
  config.validate();
  const LinkFunction link = config.link_function();
  Rng rng(trial_stream_seed(config.seed, trial));

  TrialData data;
  data.trial_index = trial;
  data.mode = config.context_mode;
  data.rewards.resize(config.horizon, config.num_arms);

  if (config.context_mode == ContextMode::kStatic) {
    data.contexts.push_back(draw_contexts(config.num_arms, config.dim, rng));
  } else {
    data.contexts.reserve(config.horizon);
  }
  for (int t = 1; t <= config.horizon; ++t) {
    if (config.context_mode == ContextMode::kTimeVarying) {
      data.contexts.push_back(draw_contexts(config.num_arms, config.dim, rng));
    }
    const Eigen::MatrixXd& contexts = data.contexts_at(t);
    for (int a = 0; a < config.num_arms; ++a) {
      const double mean = link.mu(config.theta_star.dot(contexts.row(a)));
      data.rewards(t - 1, a) = mean + rng.normal();
    }
  }
  return data;
}

Dataset build_dataset(const ExperimentConfig& config) {
  config.validate();
  Dataset dataset;
  dataset.config = config;
  dataset.trials.reserve(config.trials);
  for (int trial = 0; trial < config.trials; ++trial) {
    dataset.trials.push_back(generate_trial(config, trial));
  }
  return dataset;
}

int optimal_arm(const Eigen::VectorXd& theta_star,
                const Eigen::MatrixXd& contexts) {
  int best = 0;
  double best_value = theta_star.dot(contexts.row(0));
  for (int a = 1; a < contexts.rows(); ++a) {
    const double value = theta_star.dot(contexts.row(a));
    if (value > best_value) {
      best = a;
      best_value = value;
    }
  }
  return best;
}

double pseudo_regret_step(const Eigen::VectorXd& theta_star,
                          const LinkFunction& link,
                          const Eigen::MatrixXd& contexts, int chosen) {
  const int star = optimal_arm(theta_star, contexts);
  return link.mu(theta_star.dot(contexts.row(star))) -
         link.mu(theta_star.dot(contexts.row(chosen)));
}

}  // namespace rbmle
