#pragma once

namespace rbmle {

enum class LinkKind { kIdentity, kLogistic };

// Strictly increasing link function mu together with its derivative and
// antiderivative b (b' = mu). The logistic variant is the clamped extension:
// logistic on [-S, S], linear outside, so mu' stays in [kappa_mu, L_mu] with
// kappa_mu = mu'(S) > 0. The antiderivative gets the matching quadratic
// extension so b' = mu everywhere.
class LinkFunction {
 public:
  static LinkFunction identity();
  static LinkFunction logistic(double clamp_radius = 1.0);

  double mu(double z) const;
  double mu_prime(double z) const;
  double antideriv(double z) const;

  double l_mu() const { return l_mu_; }
  double kappa_mu() const { return kappa_mu_; }
  LinkKind kind() const { return kind_; }
  double clamp_radius() const { return clamp_radius_; }

 private:
  LinkFunction(LinkKind kind, double clamp_radius);

  LinkKind kind_;
  double clamp_radius_;
  double l_mu_;
  double kappa_mu_;
};

}  // namespace rbmle
