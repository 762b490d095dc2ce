#include "rbmle/spd.hpp"

#include <cmath>

#include "rbmle/errors.hpp"

namespace rbmle {

bool is_spd(const Eigen::MatrixXd& m, double sym_tol) {
  if (m.rows() != m.cols()) return false;
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > sym_tol) return false;
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  return llt.info() == Eigen::Success;
}

Eigen::MatrixXd spd_inverse(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() ||
      (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
    throw SolverError("not positive definite: matrix is not symmetric", 0.0);
  }
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) {
    throw SolverError("not positive definite: Cholesky factorization failed",
                      0.0);
  }
  return llt.solve(Eigen::MatrixXd::Identity(m.rows(), m.cols()));
}

Eigen::MatrixXd rank_one_inverse_update(const Eigen::MatrixXd& minv,
                                        const Eigen::VectorXd& x) {
  const Eigen::VectorXd mx = minv * x;
  const double denom = 1.0 + x.dot(mx);
  return minv - (mx * mx.transpose()) / denom;
}

double quad_form(const Eigen::MatrixXd& minv, const Eigen::VectorXd& x) {
  return x.dot(minv * x);
}

DesignMatrix::DesignMatrix(int dim, double lambda, int refresh_interval)
    : v_(lambda * Eigen::MatrixXd::Identity(dim, dim)),
      vinv_((1.0 / lambda) * Eigen::MatrixXd::Identity(dim, dim)),
      refresh_interval_(refresh_interval) {}

void DesignMatrix::add(const Eigen::VectorXd& x) {
  v_.noalias() += x * x.transpose();
  ++updates_since_refresh_;
  if (updates_since_refresh_ >= refresh_interval_) {
    vinv_ = spd_inverse(v_);
    updates_since_refresh_ = 0;
  } else {
    vinv_ = rank_one_inverse_update(vinv_, x);
  }
}

}  // namespace rbmle
