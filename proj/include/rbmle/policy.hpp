#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>

#include "rbmle/environment.hpp"

namespace rbmle {

// One policy instance is owned by exactly one trial.
class Policy {
 public:
  virtual ~Policy() = default;

  virtual int select_arm(const Eigen::MatrixXd& contexts) = 0;
  virtual void update(const Eigen::VectorXd& x, double r) = 0;
  virtual const std::string& name() const = 0;
};

// Registered names: lin-rbmle, lin-ucb, gpucb, gpucbt, lin-ts, greedy,
// glm-rbmle, ucb-glm, oracle, random. Throws ConfigError for unknown names
// or invalid hyperparameters. rng_seed feeds the policies that sample
// (lin-ts, random); the rest ignore it.
std::unique_ptr<Policy> make_policy(const PolicySpec& spec,
                                    const ExperimentConfig& config,
                                    std::uint64_t rng_seed);

}  // namespace rbmle
