#pragma once

#include <Eigen/Dense>
#include <vector>

#include "rbmle/environment.hpp"
#include "rbmle/link.hpp"
#include "rbmle/spd.hpp"

namespace rbmle {

// Full-history state for the generalized-linear policies. The biased
// first-order condition has no incremental form, so every stored (x_s, r_s)
// pair is revisited at each solve.
struct GlmPolicyState {
  int t = 1;
  double lambda = 1.0;
  LinkFunction link = LinkFunction::logistic();
  std::vector<Eigen::VectorXd> contexts;  // x_s, s = 1..t-1
  std::vector<double> rewards;            // r_s
  Eigen::MatrixXd warm_starts;            // K x d, previous round's solutions
  Eigen::VectorXd mle_warm;

  GlmPolicyState(int dim, int num_arms, double lambda_in,
                 const LinkFunction& link_in)
      : lambda(lambda_in),
        link(link_in),
        warm_starts(Eigen::MatrixXd::Zero(num_arms, dim)),
        mle_warm(Eigen::VectorXd::Zero(dim)) {}

  int dim() const { return static_cast<int>(mle_warm.size()); }

  void record(const Eigen::VectorXd& x, double r) {
    contexts.push_back(x);
    rewards.push_back(r);
    ++t;
  }
};

// sum_s [ r_s (x_s . theta) - b(x_s . theta) ], the theta-dependent part of
// the exponential-family log-likelihood.
double glm_log_likelihood(const std::vector<Eigen::VectorXd>& contexts,
                          const std::vector<double>& rewards,
                          const Eigen::VectorXd& theta,
                          const LinkFunction& link);

struct NewtonOptions {
  int max_iterations = 100;
  double gradient_tol = 1e-10;
};

// Solves sum_s (r_s x_s - mu(x_s.theta) x_s) - lambda*theta + alpha*x_a = 0
// by damped Newton on the strictly concave biased objective. Throws
// SolverError carrying the final residual on non-convergence.
Eigen::VectorXd glm_rbmle_arm_solve(const GlmPolicyState& state,
                                    const Eigen::VectorXd& x_a, double alpha,
                                    const Eigen::VectorXd& warm_start,
                                    const NewtonOptions& options = {});

Eigen::VectorXd glm_rbmle_arm_solve(const GlmPolicyState& state,
                                    const Eigen::VectorXd& x_a, double alpha);

// Arm score of the GLM-RBMLE selection rule:
// l(F_t; theta_bar) + eta*alpha*theta_bar.x_a - (lambda/2)||theta_bar||^2.
double glm_rbmle_score(const GlmPolicyState& state,
                       const Eigen::VectorXd& theta_bar,
                       const Eigen::VectorXd& x_a, double alpha, double eta);

// Ridge-regularized GLM maximum-likelihood estimate (alpha = 0 solve).
Eigen::VectorXd glm_mle(const GlmPolicyState& state,
                        const NewtonOptions& options = {});

// theta_hat.x + chi * ||x||_{V^-1}; V comes from the same history plus
// lambda*I and must be maintained by the caller.
double ucb_glm_index(const Eigen::VectorXd& theta_hat,
                     const Eigen::MatrixXd& vinv, const Eigen::VectorXd& x,
                     double chi);

// chi = (sigma/kappa) sqrt(d/2 log(1+2T/d) + log(1/delta)).
double ucb_glm_chi(double sigma, double kappa_mu, int dim, int horizon,
                   double delta);

}  // namespace rbmle
