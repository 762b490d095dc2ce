#pragma once

#include <Eigen/Dense>

#include "rbmle/environment.hpp"
#include "rbmle/rng.hpp"
#include "rbmle/spd.hpp"

namespace rbmle {

// Online ridge state shared by the linear-bandit index policies:
// V = X^T X + lambda*I, b = X^T R, theta_hat = V^{-1} b.
struct LinearPolicyState {
  int t = 1;
  double lambda = 1.0;
  DesignMatrix design;
  Eigen::VectorXd b;
  Eigen::VectorXd theta_hat;

  LinearPolicyState(int dim, double lambda_in, int refresh_interval = 1000)
      : lambda(lambda_in),
        design(dim, lambda_in, refresh_interval),
        b(Eigen::VectorXd::Zero(dim)),
        theta_hat(Eigen::VectorXd::Zero(dim)) {}
};

// theta_hat.x + 0.5 * alpha * ||x||^2_{V^-1}
double lin_rbmle_index(const LinearPolicyState& state, const Eigen::VectorXd& x,
                       double alpha);

// V^{-1} (b + alpha*x), the unique maximizer of the biased Gaussian
// objective for arm context x.
Eigen::VectorXd closed_form_biased_estimate(const LinearPolicyState& state,
                                            const Eigen::VectorXd& x,
                                            double alpha);

// theta_hat.x + gamma * ||x||_{V^-1}
double lin_ucb_index(const LinearPolicyState& state, const Eigen::VectorXd& x,
                     double gamma);

enum class GpucbVariant { kStandard, kTuned };

// Standard: beta_t = 2 log(K t^2 pi^2 / (6 delta)).
// Tuned: beta_t = c * max(log t, 0).
double gpucb_index(const LinearPolicyState& state, const Eigen::VectorXd& x,
                   int t, int num_arms, double delta, GpucbVariant variant,
                   double c);

double lin_ts_scale(int t, int dim, double delta, double epsilon);

// Samples theta ~ N(theta_hat, v_t^2 V^{-1}) and returns the argmax arm
// (lowest index on ties). scale_override < 0 means use the default schedule.
int lin_ts_select(const LinearPolicyState& state,
                  const Eigen::MatrixXd& contexts, int t, double delta,
                  double epsilon, Rng& rng, double scale_override = -1.0);

enum class LinearPolicyKind { kRbmle, kUcb, kGpucb, kGpucbTuned, kGreedy };

struct LinearPolicyConfig {
  LinearPolicyKind kind = LinearPolicyKind::kRbmle;
  double lambda = 1.0;
  BiasSchedule alpha = BiasSchedule::sqrt_t();  // rbmle
  double gamma = 1.0;                           // ucb
  double delta = 1e-5;                          // gpucb
  double c = 0.9;                               // gpucb tuned
  int num_arms = 2;
};

// Lowest argmax of the configured per-arm index.
int select_arm_linear(const LinearPolicyState& state,
                      const Eigen::MatrixXd& contexts,
                      const LinearPolicyConfig& config);

// V += x x^T, b += r*x, theta_hat = V^{-1} b, t += 1.
void update_linear(LinearPolicyState& state, const Eigen::VectorXd& x,
                   double r);

}  // namespace rbmle
