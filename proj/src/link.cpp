#include "rbmle/link.hpp"

#include <cmath>

#include "rbmle/errors.hpp"

namespace rbmle {
namespace {

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double sigmoid_prime(double z) {
  const double s = sigmoid(z);
  return s * (1.0 - s);
}

// log(1 + e^z), overflow-safe.
double softplus(double z) {
  if (z > 0.0) return z + std::log1p(std::exp(-z));
  return std::log1p(std::exp(z));
}

}  // namespace

LinkFunction::LinkFunction(LinkKind kind, double clamp_radius)
    : kind_(kind), clamp_radius_(clamp_radius) {
  if (kind_ == LinkKind::kIdentity) {
    l_mu_ = 1.0;
    kappa_mu_ = 1.0;
  } else {
    if (clamp_radius <= 0.0) {
      throw ConfigError("clamp_radius must be positive");
    }
    l_mu_ = 0.25;  // mu'(0)
    kappa_mu_ = sigmoid_prime(clamp_radius);
  }
}

LinkFunction LinkFunction::identity() {
  return LinkFunction(LinkKind::kIdentity, 0.0);
}

LinkFunction LinkFunction::logistic(double clamp_radius) {
  return LinkFunction(LinkKind::kLogistic, clamp_radius);
}

double LinkFunction::mu(double z) const {
  if (kind_ == LinkKind::kIdentity) return z;
  const double s = clamp_radius_;
  if (z > s) return sigmoid(s) + sigmoid_prime(s) * (z - s);
  if (z < -s) return sigmoid(-s) + sigmoid_prime(-s) * (z + s);
  return sigmoid(z);
}

double LinkFunction::mu_prime(double z) const {
  if (kind_ == LinkKind::kIdentity) return 1.0;
  const double s = clamp_radius_;
  if (z > s) return sigmoid_prime(s);
  if (z < -s) return sigmoid_prime(-s);
  return sigmoid_prime(z);
}

double LinkFunction::antideriv(double z) const {
  if (kind_ == LinkKind::kIdentity) return 0.5 * z * z;
  const double s = clamp_radius_;
  if (z > s) {
    const double u = z - s;
    return softplus(s) + sigmoid(s) * u + 0.5 * sigmoid_prime(s) * u * u;
  }
  if (z < -s) {
    const double u = z + s;
    return softplus(-s) + sigmoid(-s) * u + 0.5 * sigmoid_prime(-s) * u * u;
  }
  return softplus(z);
}

}  // namespace rbmle
