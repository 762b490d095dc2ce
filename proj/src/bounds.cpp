#include "rbmle/bounds.hpp"

#include <cmath>

#include "rbmle/errors.hpp"

namespace rbmle {

void BoundParams::validate() const {
  if (dim < 1) throw ConfigError("bound param 'dim': must be >= 1");
  if (lambda <= 0.0) throw ConfigError("bound param 'lambda': must be > 0");
  if (sigma <= 0.0) throw ConfigError("bound param 'sigma': must be > 0");
  if (delta <= 0.0 || delta >= 1.0) {
    throw ConfigError("bound param 'delta': must be in (0, 1)");
  }
  if (kappa_mu <= 0.0) throw ConfigError("bound param 'kappa_mu': must be > 0");
  if (l_mu < kappa_mu) {
    throw ConfigError("bound param 'l_mu': must be >= kappa_mu");
  }
}

double g0(int t, const BoundParams& params) {
  return params.sigma * std::sqrt(params.dim *
                                  std::log((params.lambda + t) /
                                           (params.lambda * params.delta))) +
         std::sqrt(params.lambda);
}

bool g1_clamped(int t, const BoundParams& params) {
  return (params.lambda + t) / params.dim < 1.0;
}

double g1(int t, const BoundParams& params) {
  const double arg = std::log((params.lambda + t) / params.dim);
  return std::sqrt(2.0 * params.dim * std::max(arg, 0.0));
}

double g2(int t, const BoundParams& params) {
  return params.sigma / params.kappa_mu *
         std::sqrt(0.5 * params.dim *
                       std::log(1.0 + 2.0 * static_cast<double>(t) /
                                          params.dim) +
                   std::log(1.0 / params.delta));
}

double linear_regret_bound(int horizon, const BoundParams& params) {
  params.validate();
  double inv_alpha_sum = 0.0;
  for (int t = 1; t <= horizon; ++t) inv_alpha_sum += 1.0 / (2.0 * params.alpha(t));
  const double g0T = g0(horizon, params);
  const double g1T = g1(horizon, params);
  return g0T * g0T * inv_alpha_sum +
         std::sqrt(static_cast<double>(horizon)) * g0T * g1T +
         0.5 * params.alpha(horizon) * g1T * g1T;
}

int glm_t0(const BoundParams& params) {
  const double numerator =
      params.l_mu * params.l_mu * params.l_mu /
      (2.0 * params.kappa_mu * params.kappa_mu);
  for (int t = 1;; ++t) {
    if (numerator / params.eta(t) < 0.5) return t;
  }
}

double glm_regret_bound(int horizon, const BoundParams& params) {
  params.validate();
  const double l = params.l_mu;
  const double k = params.kappa_mu;
  const double c1 = 2.0 * l * l * l * l / (k * k * k * k) + 1.0 / (k * k);
  const double c2 = 2.0 * l * l * l / (k * k) + l / k;
  const double c3 = 0.5 * l * l;

  double inv_alpha_sum = 0.0;
  for (int t = 1; t <= horizon; ++t) inv_alpha_sum += 1.0 / params.alpha(t);

  const double g1T = g1(horizon, params);
  const double g2T = g2(horizon, params);
  return glm_t0(params) + c1 * params.alpha(horizon) * g1T * g1T +
         c2 * std::sqrt(static_cast<double>(horizon)) * g1T * g2T +
         c3 * g2T * g2T * inv_alpha_sum;
}

}  // namespace rbmle
