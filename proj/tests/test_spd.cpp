#include <Eigen/Dense>
#include <random>

#include "doctest.h"
#include "rbmle/errors.hpp"
#include "rbmle/spd.hpp"

using namespace rbmle;

namespace {

Eigen::MatrixXd random_spd(int dim, std::mt19937_64& gen) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd a(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) a(i, j) = normal(gen);
  }
  return a * a.transpose() + Eigen::MatrixXd::Identity(dim, dim);
}

Eigen::VectorXd random_vec(int dim, std::mt19937_64& gen) {
  std::normal_distribution<double> normal;
  Eigen::VectorXd x(dim);
  for (int i = 0; i < dim; ++i) x(i) = normal(gen);
  return x;
}

}  // namespace

TEST_CASE("spd_inverse identity and diagonal") {
  const Eigen::MatrixXd id3 = Eigen::MatrixXd::Identity(3, 3);
  CHECK((spd_inverse(id3) - id3).cwiseAbs().maxCoeff() < 1e-12);

  Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(2, 2);
  diag(0, 0) = 2.0;
  diag(1, 1) = 4.0;
  const Eigen::MatrixXd inv = spd_inverse(diag);
  CHECK(inv(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(inv(1, 1) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(std::abs(inv(0, 1)) < 1e-14);
}

TEST_CASE("spd_inverse product check on random matrices") {
  std::mt19937_64 gen(7);
  for (int rep = 0; rep < 20; ++rep) {
    const Eigen::MatrixXd a = random_spd(5, gen);
    const Eigen::MatrixXd b = spd_inverse(a);
    const Eigen::MatrixXd prod = a * b;
    CHECK((prod - Eigen::MatrixXd::Identity(5, 5)).cwiseAbs().maxCoeff() <
          1e-8);
  }
}

TEST_CASE("spd_inverse rejects non-SPD input") {
  Eigen::MatrixXd negative = -Eigen::MatrixXd::Identity(2, 2);
  CHECK_THROWS_AS(spd_inverse(negative), SolverError);
  Eigen::MatrixXd asym(2, 2);
  asym << 1.0, 0.5, -0.5, 1.0;
  CHECK_THROWS_AS(spd_inverse(asym), SolverError);
}

TEST_CASE("rank_one_inverse_update basic cases") {
  const Eigen::MatrixXd id2 = Eigen::MatrixXd::Identity(2, 2);
  Eigen::VectorXd e1(2);
  e1 << 1.0, 0.0;
  const Eigen::MatrixXd updated = rank_one_inverse_update(id2, e1);
  CHECK(updated(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(updated(1, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(updated(0, 1)) < 1e-14);

  std::mt19937_64 gen(11);
  const Eigen::MatrixXd minv = spd_inverse(random_spd(4, gen));
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(4);
  CHECK((rank_one_inverse_update(minv, zero) - minv).cwiseAbs().maxCoeff() <
        1e-14);
}

TEST_CASE("200 sequential updates match direct inversion oracle") {
  std::mt19937_64 gen(21);
  std::uniform_int_distribution<int> dim_dist(1, 10);
  for (int seq = 0; seq < 10; ++seq) {
    const int dim = dim_dist(gen);
    Eigen::MatrixXd m = random_spd(dim, gen);
    Eigen::MatrixXd minv = spd_inverse(m);
    for (int step = 0; step < 20; ++step) {
      const Eigen::VectorXd x = random_vec(dim, gen);
      m += x * x.transpose();
      minv = rank_one_inverse_update(minv, x);
      CHECK(is_spd(m));
      CHECK((minv - spd_inverse(m)).cwiseAbs().maxCoeff() < 1e-8);
    }
  }
}

TEST_CASE("quad_form values and scaling property") {
  const Eigen::MatrixXd id2 = Eigen::MatrixXd::Identity(2, 2);
  Eigen::VectorXd x(2);
  x << 0.6, 0.8;
  CHECK(quad_form(id2, x) == doctest::Approx(1.0).epsilon(1e-12));

  Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(2, 2);
  diag(0, 0) = 0.5;
  diag(1, 1) = 1.0;
  CHECK(quad_form(diag, x) == doctest::Approx(0.82).epsilon(1e-12));

  CHECK(quad_form(diag, Eigen::VectorXd::Zero(2)) == 0.0);

  std::mt19937_64 gen(3);
  for (int rep = 0; rep < 50; ++rep) {
    const Eigen::MatrixXd minv = spd_inverse(random_spd(4, gen));
    const Eigen::VectorXd v = random_vec(4, gen);
    const double c = std::normal_distribution<double>()(gen);
    CHECK(quad_form(minv, c * v) ==
          doctest::Approx(c * c * quad_form(minv, v)).epsilon(1e-10));
    CHECK(quad_form(minv, v) >= 0.0);
  }
}

TEST_CASE("DesignMatrix tracks inverse through refresh boundary") {
  std::mt19937_64 gen(5);
  DesignMatrix design(3, 2.0, 50);
  Eigen::MatrixXd reference = 2.0 * Eigen::MatrixXd::Identity(3, 3);
  for (int step = 0; step < 120; ++step) {
    const Eigen::VectorXd x = random_vec(3, gen).normalized();
    design.add(x);
    reference += x * x.transpose();
  }
  CHECK((design.matrix() - reference).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((design.inverse() - spd_inverse(reference)).cwiseAbs().maxCoeff() <
        1e-8);
}
