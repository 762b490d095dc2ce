#pragma once

#include <Eigen/Dense>

namespace rbmle {

// Symmetric-positive-definite kernel shared by every policy: inversion via
// Cholesky, Sherman-Morrison rank-one inverse updates, and quadratic forms.

// Throws SolverError("not positive definite") if the Cholesky factorization
// fails; symmetry is enforced within 1e-10 elementwise.
Eigen::MatrixXd spd_inverse(const Eigen::MatrixXd& m);

// Returns (M + x x^T)^{-1} given M^{-1}, via the Sherman-Morrison identity.
Eigen::MatrixXd rank_one_inverse_update(const Eigen::MatrixXd& minv,
                                        const Eigen::VectorXd& x);

// x^T Minv x.
double quad_form(const Eigen::MatrixXd& minv, const Eigen::VectorXd& x);

bool is_spd(const Eigen::MatrixXd& m, double sym_tol = 1e-10);

// Ridge design matrix V = lambda*I + sum x x^T with an incrementally
// maintained inverse. The inverse is refreshed by full factorization every
// refresh_interval updates to bound Sherman-Morrison drift.
class DesignMatrix {
 public:
  DesignMatrix(int dim, double lambda, int refresh_interval = 1000);

  void add(const Eigen::VectorXd& x);

  const Eigen::MatrixXd& matrix() const { return v_; }
  const Eigen::MatrixXd& inverse() const { return vinv_; }
  int dim() const { return static_cast<int>(v_.rows()); }

 private:
  Eigen::MatrixXd v_;
  Eigen::MatrixXd vinv_;
  int refresh_interval_;
  int updates_since_refresh_ = 0;
};

}  // namespace rbmle
