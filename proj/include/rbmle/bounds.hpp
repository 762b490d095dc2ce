#pragma once

#include "rbmle/environment.hpp"

namespace rbmle {

// Constants feeding the theoretical regret-bound expressions.
struct BoundParams {
  int dim = 3;
  double lambda = 1.0;
  double sigma = 1.0;
  double delta = 0.1;
  double kappa_mu = 1.0;
  double l_mu = 1.0;
  BiasSchedule alpha = BiasSchedule::sqrt_t();
  EtaSchedule eta{};

  void validate() const;
};

// sigma * sqrt(d log((lambda+t)/(lambda*delta))) + sqrt(lambda)
double g0(int t, const BoundParams& params);

// sqrt(2d * max(log((lambda+t)/d), 0)); the log is clamped at 0 where the
// raw expression would be imaginary for small t.
double g1(int t, const BoundParams& params);

// (sigma/kappa) * sqrt(d/2 log(1+2t/d) + log(1/delta))
double g2(int t, const BoundParams& params);

// True when the g1 clamp fires at t (recorded in output metadata).
bool g1_clamped(int t, const BoundParams& params);

// G0(T)^2 sum_t 1/(2 alpha(t)) + sqrt(T) G0(T) G1(T) + alpha(T) G1(T)^2 / 2,
// partial sum computed exactly by loop.
double linear_regret_bound(int horizon, const BoundParams& params);

// Smallest t with L^3 / (2 kappa^2 eta(t)) < 1/2, by forward scan.
int glm_t0(const BoundParams& params);

// T0 + C1 alpha(T) G1(T)^2 + C2 sqrt(T) G1(T) G2(T) + C3 G2(T)^2 sum 1/alpha,
// with C1 = 2L^4/kappa^4 + 1/kappa^2, C2 = 2L^3/kappa^2 + L/kappa,
// C3 = L^2/2.
double glm_regret_bound(int horizon, const BoundParams& params);

}  // namespace rbmle
