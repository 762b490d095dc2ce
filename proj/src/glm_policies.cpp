#include "rbmle/glm_policies.hpp"

#include <cmath>

#include "rbmle/errors.hpp"

namespace rbmle {

double glm_log_likelihood(const std::vector<Eigen::VectorXd>& contexts,
                          const std::vector<double>& rewards,
                          const Eigen::VectorXd& theta,
                          const LinkFunction& link) {
  double total = 0.0;
  for (std::size_t s = 0; s < contexts.size(); ++s) {
    const double z = contexts[s].dot(theta);
    total += rewards[s] * z - link.antideriv(z);
  }
  return total;
}

namespace {

// Biased objective l(F;theta) + alpha*theta.x_a - (lambda/2)||theta||^2 and
// its gradient/Hessian. Strictly concave: Hessian <= -lambda*I.
struct BiasedObjective {
  const GlmPolicyState& state;
  const Eigen::VectorXd& x_a;
  double alpha;

  double value(const Eigen::VectorXd& theta) const {
    return glm_log_likelihood(state.contexts, state.rewards, theta,
                              state.link) +
           alpha * theta.dot(x_a) - 0.5 * state.lambda * theta.squaredNorm();
  }

  Eigen::VectorXd gradient(const Eigen::VectorXd& theta) const {
    Eigen::VectorXd g = alpha * x_a - state.lambda * theta;
    for (std::size_t s = 0; s < state.contexts.size(); ++s) {
      const double z = state.contexts[s].dot(theta);
      g += (state.rewards[s] - state.link.mu(z)) * state.contexts[s];
    }
    return g;
  }

  Eigen::MatrixXd hessian(const Eigen::VectorXd& theta) const {
    const int d = state.dim();
    Eigen::MatrixXd h =
        -state.lambda * Eigen::MatrixXd::Identity(d, d);
    for (std::size_t s = 0; s < state.contexts.size(); ++s) {
      const double z = state.contexts[s].dot(theta);
      h.noalias() -= state.link.mu_prime(z) * state.contexts[s] *
                     state.contexts[s].transpose();
    }
    return h;
  }
};

Eigen::VectorXd damped_newton(const BiasedObjective& objective,
                              const Eigen::VectorXd& start,
                              const NewtonOptions& options) {
  Eigen::VectorXd theta = start;
  Eigen::VectorXd grad = objective.gradient(theta);
  if (grad.norm() <= options.gradient_tol) return theta;

  double value = objective.value(theta);
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    // Hessian is negative definite; solve -H step = grad.
    const Eigen::MatrixXd neg_hess = -objective.hessian(theta);
    const Eigen::VectorXd step = neg_hess.llt().solve(grad);

    double scale = 1.0;
    Eigen::VectorXd candidate = theta + step;
    double candidate_value = objective.value(candidate);
    Eigen::VectorXd candidate_grad = objective.gradient(candidate);
    // Near the optimum the objective change falls below floating-point
    // resolution, so a shrinking gradient also counts as progress.
    while (candidate_value < value &&
           candidate_grad.norm() >= grad.norm() && scale > 1e-12) {
      scale *= 0.5;
      candidate = theta + scale * step;
      candidate_value = objective.value(candidate);
      candidate_grad = objective.gradient(candidate);
    }
    theta = candidate;
    value = candidate_value;
    grad = candidate_grad;
    if (grad.norm() <= options.gradient_tol) return theta;
  }
  throw SolverError("Newton solver did not converge", grad.norm());
}

}  // namespace

Eigen::VectorXd glm_rbmle_arm_solve(const GlmPolicyState& state,
                                    const Eigen::VectorXd& x_a, double alpha,
                                    const Eigen::VectorXd& warm_start,
                                    const NewtonOptions& options) {
  if (state.lambda <= 0.0) throw ConfigError("lambda must be positive");
  if (state.contexts.empty()) {
    // First-order condition degenerates to -lambda*theta + alpha*x_a = 0.
    return (alpha / state.lambda) * x_a;
  }
  return damped_newton(BiasedObjective{state, x_a, alpha}, warm_start,
                       options);
}

Eigen::VectorXd glm_rbmle_arm_solve(const GlmPolicyState& state,
                                    const Eigen::VectorXd& x_a, double alpha) {
  return glm_rbmle_arm_solve(state, x_a, alpha,
                             Eigen::VectorXd::Zero(state.dim()));
}

double glm_rbmle_score(const GlmPolicyState& state,
                       const Eigen::VectorXd& theta_bar,
                       const Eigen::VectorXd& x_a, double alpha, double eta) {
  return glm_log_likelihood(state.contexts, state.rewards, theta_bar,
                            state.link) +
         eta * alpha * theta_bar.dot(x_a) -
         0.5 * state.lambda * theta_bar.squaredNorm();
}

Eigen::VectorXd glm_mle(const GlmPolicyState& state,
                        const NewtonOptions& options) {
  const Eigen::VectorXd zero_bias = Eigen::VectorXd::Zero(state.dim());
  return glm_rbmle_arm_solve(state, zero_bias, 0.0, state.mle_warm, options);
}

double ucb_glm_index(const Eigen::VectorXd& theta_hat,
                     const Eigen::MatrixXd& vinv, const Eigen::VectorXd& x,
                     double chi) {
  return theta_hat.dot(x) + chi * std::sqrt(quad_form(vinv, x));
}

double ucb_glm_chi(double sigma, double kappa_mu, int dim, int horizon,
                   double delta) {
  return sigma / kappa_mu *
         std::sqrt(0.5 * dim * std::log(1.0 + 2.0 * horizon / dim) +
                   std::log(1.0 / delta));
}

}  // namespace rbmle
