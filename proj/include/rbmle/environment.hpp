#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rbmle/link.hpp"
#include "rbmle/rng.hpp"

namespace rbmle {

enum class ContextMode { kStatic, kTimeVarying };

// Bias schedule alpha(t), t >= 1. Either sqrt(t) or an explicit table.
class BiasSchedule {
 public:
  static BiasSchedule sqrt_t();
  static BiasSchedule table(std::vector<double> values);

  double operator()(int t) const;
  bool is_sqrt_t() const { return values_.empty(); }

 private:
  std::vector<double> values_;  // empty means sqrt(t)
};

// eta(t) = 1 + log t, the slowly increasing factor in the GLM arm score.
class EtaSchedule {
 public:
  double operator()(int t) const;
};

struct PolicySpec {
  std::string name;
  std::map<std::string, double> params;
};

struct ExperimentConfig {
  int num_arms = 2;           // K
  int dim = 1;                // d
  int horizon = 1;            // T
  int trials = 1;
  Eigen::VectorXd theta_star;
  ContextMode context_mode = ContextMode::kStatic;
  LinkKind link = LinkKind::kIdentity;
  double clamp_radius = 1.0;  // S, logistic only
  std::uint64_t seed = 0;
  std::vector<PolicySpec> policies;
  int record_every = 1;       // stride for persisted per-round records

  LinkFunction link_function() const;
  // Throws ConfigError naming the offending field.
  void validate() const;
};

// One round's contexts are the rows of a K x d matrix, each of unit l2 norm.
struct TrialData {
  int trial_index = 0;
  ContextMode mode = ContextMode::kStatic;
  // Static mode stores one matrix; time-varying stores one per round.
  std::vector<Eigen::MatrixXd> contexts;
  // rewards(t-1, a): pre-drawn realized reward for every arm at every round.
  Eigen::MatrixXd rewards;

  const Eigen::MatrixXd& contexts_at(int t) const {
    return mode == ContextMode::kStatic ? contexts.front() : contexts[t - 1];
  }
  int horizon() const { return static_cast<int>(rewards.rows()); }
  int num_arms() const { return static_cast<int>(rewards.cols()); }
};

// Pre-materialized contexts and rewards for all trials (sample-path
// coupling: every policy replays the same draws).
struct Dataset {
  ExperimentConfig config;
  std::vector<TrialData> trials;
};

std::uint64_t trial_stream_seed(std::uint64_t base_seed, int trial);

// Deterministic in (config, seed, trial); see rng.hpp for the frozen
// generator contract. Draw order within a trial: static contexts up front
// (or per-round contexts first in time-varying mode), then the K rewards of
// each round in arm order.
TrialData generate_trial(const ExperimentConfig& config, int trial);

Dataset build_dataset(const ExperimentConfig& config);

// Smallest index attaining max_a theta_star . x_a.
int optimal_arm(const Eigen::VectorXd& theta_star,
                const Eigen::MatrixXd& contexts);

// mu(theta* . x*) - mu(theta* . x_chosen) >= 0.
double pseudo_regret_step(const Eigen::VectorXd& theta_star,
                          const LinkFunction& link,
                          const Eigen::MatrixXd& contexts, int chosen);

}  // namespace rbmle
