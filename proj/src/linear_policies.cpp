#include "rbmle/linear_policies.hpp"

#include <cmath>

#include "rbmle/errors.hpp"

namespace rbmle {

double lin_rbmle_index(const LinearPolicyState& state, const Eigen::VectorXd& x,
                       double alpha) {
  return state.theta_hat.dot(x) +
         0.5 * alpha * quad_form(state.design.inverse(), x);
}

Eigen::VectorXd closed_form_biased_estimate(const LinearPolicyState& state,
                                            const Eigen::VectorXd& x,
                                            double alpha) {
  return state.design.inverse() * (state.b + alpha * x);
}

double lin_ucb_index(const LinearPolicyState& state, const Eigen::VectorXd& x,
                     double gamma) {
  return state.theta_hat.dot(x) +
         gamma * std::sqrt(quad_form(state.design.inverse(), x));
}

double gpucb_index(const LinearPolicyState& state, const Eigen::VectorXd& x,
                   int t, int num_arms, double delta, GpucbVariant variant,
                   double c) {
  double beta;
  if (variant == GpucbVariant::kStandard) {
    beta = 2.0 * std::log(num_arms * static_cast<double>(t) * t * M_PI * M_PI /
                          (6.0 * delta));
  } else {
    beta = c * std::max(std::log(static_cast<double>(t)), 0.0);
  }
  return state.theta_hat.dot(x) +
         std::sqrt(beta) * std::sqrt(quad_form(state.design.inverse(), x));
}

double lin_ts_scale(int t, int dim, double delta, double epsilon) {
  const double tt = std::max(t, 2);
  return std::sqrt(24.0 / epsilon * dim * std::log(tt / delta));
}

int lin_ts_select(const LinearPolicyState& state,
                  const Eigen::MatrixXd& contexts, int t, double delta,
                  double epsilon, Rng& rng, double scale_override) {
  const int dim = state.design.dim();
  const double v =
      scale_override >= 0.0 ? scale_override
                            : lin_ts_scale(t, dim, delta, epsilon);
  Eigen::VectorXd z(dim);
  for (int j = 0; j < dim; ++j) z(j) = rng.normal();
  Eigen::LLT<Eigen::MatrixXd> llt(state.design.inverse());
  const Eigen::VectorXd correlated = llt.matrixL() * z;
  const Eigen::VectorXd theta = state.theta_hat + v * correlated;

  int best = 0;
  double best_value = theta.dot(contexts.row(0));
  for (int a = 1; a < contexts.rows(); ++a) {
    const double value = theta.dot(contexts.row(a));
    if (value > best_value) {
      best = a;
      best_value = value;
    }
  }
  return best;
}

int select_arm_linear(const LinearPolicyState& state,
                      const Eigen::MatrixXd& contexts,
                      const LinearPolicyConfig& config) {
  int best = 0;
  double best_value = 0.0;
  for (int a = 0; a < contexts.rows(); ++a) {
    const Eigen::VectorXd x = contexts.row(a);
    double value;
    switch (config.kind) {
      case LinearPolicyKind::kRbmle:
        value = lin_rbmle_index(state, x, config.alpha(state.t));
        break;
      case LinearPolicyKind::kUcb:
        value = lin_ucb_index(state, x, config.gamma);
        break;
      case LinearPolicyKind::kGpucb:
        value = gpucb_index(state, x, state.t, config.num_arms, config.delta,
                            GpucbVariant::kStandard, 0.0);
        break;
      case LinearPolicyKind::kGpucbTuned:
        value = gpucb_index(state, x, state.t, config.num_arms, config.delta,
                            GpucbVariant::kTuned, config.c);
        break;
      case LinearPolicyKind::kGreedy:
        value = state.theta_hat.dot(x);
        break;
    }
    if (a == 0 || value > best_value) {
      best = a;
      best_value = value;
    }
  }
  return best;
}

void update_linear(LinearPolicyState& state, const Eigen::VectorXd& x,
                   double r) {
  state.design.add(x);
  state.b += r * x;
  state.theta_hat = state.design.inverse() * state.b;
  ++state.t;
}

}  // namespace rbmle
