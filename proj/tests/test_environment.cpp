#include <cmath>

#include "doctest.h"
#include "rbmle/environment.hpp"
#include "rbmle/errors.hpp"
#include "rbmle/io.hpp"

using namespace rbmle;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig config;
  config.num_arms = 4;
  config.dim = 3;
  config.horizon = 20;
  config.trials = 2;
  config.theta_star = Eigen::Vector3d(-0.3, 0.5, 0.8);
  config.seed = 46;
  return config;
}

}  // namespace

TEST_CASE("link evaluation") {
  const LinkFunction logistic = LinkFunction::logistic(1.0);
  CHECK(logistic.mu(0.0) == doctest::Approx(0.5).epsilon(1e-12));
  // Linear extension past the clamp radius.
  CHECK(logistic.mu(2.0) == doctest::Approx(0.927671).epsilon(1e-5));

  const LinkFunction identity = LinkFunction::identity();
  CHECK(identity.mu(-0.3) == doctest::Approx(-0.3));
  CHECK(identity.l_mu() == 1.0);
  CHECK(identity.kappa_mu() == 1.0);
  CHECK(identity.antideriv(2.0) == doctest::Approx(2.0));

  CHECK(logistic.l_mu() == doctest::Approx(0.25));
  CHECK(logistic.kappa_mu() == doctest::Approx(0.196612).epsilon(1e-5));
}

TEST_CASE("link derivative and antiderivative are consistent") {
  // Finite differences as the oracle, across the clamp boundary.
  const LinkFunction logistic = LinkFunction::logistic(1.0);
  const double h = 1e-6;
  for (double z = -3.0; z <= 3.0; z += 0.1) {
    const double numeric_mu =
        (logistic.antideriv(z + h) - logistic.antideriv(z - h)) / (2.0 * h);
    CHECK(numeric_mu == doctest::Approx(logistic.mu(z)).epsilon(1e-6));
    const double numeric_prime =
        (logistic.mu(z + h) - logistic.mu(z - h)) / (2.0 * h);
    CHECK(numeric_prime == doctest::Approx(logistic.mu_prime(z)).epsilon(1e-4));
    CHECK(logistic.mu_prime(z) >= logistic.kappa_mu() - 1e-12);
    CHECK(logistic.mu_prime(z) <= logistic.l_mu() + 1e-12);
  }
}

TEST_CASE("generated contexts are unit norm and static mode repeats") {
  ExperimentConfig config = small_config();
  const TrialData trial = generate_trial(config, 0);
  for (int a = 0; a < config.num_arms; ++a) {
    CHECK(trial.contexts_at(1).row(a).norm() ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK((trial.contexts_at(1) - trial.contexts_at(config.horizon))
            .cwiseAbs()
            .maxCoeff() == 0.0);

  config.context_mode = ContextMode::kTimeVarying;
  const TrialData varying = generate_trial(config, 0);
  CHECK((varying.contexts_at(1) - varying.contexts_at(2))
            .cwiseAbs()
            .maxCoeff() > 0.0);
  for (int t = 1; t <= config.horizon; ++t) {
    for (int a = 0; a < config.num_arms; ++a) {
      CHECK(varying.contexts_at(t).row(a).norm() ==
            doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("dataset generation is byte-deterministic") {
  const ExperimentConfig config = small_config();
  const Dataset first = build_dataset(config);
  const Dataset second = build_dataset(config);
  CHECK(dataset_digest(first) == dataset_digest(second));

  ExperimentConfig other = config;
  other.seed = 47;
  CHECK(dataset_digest(build_dataset(other)) != dataset_digest(first));
}

TEST_CASE("invalid configuration names the field") {
  ExperimentConfig config = small_config();
  config.trials = 0;
  CHECK_THROWS_WITH_AS(config.validate(),
                       "config field 'trials': must be >= 1", ConfigError);
  config = small_config();
  config.theta_star *= 2.0;
  CHECK_THROWS_AS(config.validate(), ConfigError);
}

TEST_CASE("reward sample mean matches the link mean") {
  // 1e5 redraws of the same (t, a) cell across seeds.
  ExperimentConfig config = small_config();
  config.horizon = 1;
  config.trials = 1;
  const TrialData base = generate_trial(config, 0);
  const double expected =
      config.link_function().mu(config.theta_star.dot(base.contexts_at(1).row(0)));

  Rng rng(trial_stream_seed(config.seed, 0));
  // Recreate the context draw stream position, then sample the noise model.
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) sum += expected + rng.normal();
  CHECK(sum / n == doctest::Approx(expected).epsilon(0.02));
}

TEST_CASE("optimal_arm picks the argmax with lowest-index ties") {
  Eigen::VectorXd theta(2);
  theta << 1.0, 0.0;
  Eigen::MatrixXd contexts(2, 2);
  contexts << 1.0, 0.0, 0.0, 1.0;
  CHECK(optimal_arm(theta, contexts) == 0);

  Eigen::MatrixXd tied(2, 2);
  tied << 0.0, 1.0, 0.0, -1.0;
  CHECK(optimal_arm(theta, tied) == 0);
}

TEST_CASE("optimal_arm matches exhaustive scan") {
  ExperimentConfig config = small_config();
  config.num_arms = 8;
  for (int trial = 0; trial < 10; ++trial) {
    const TrialData data = generate_trial(config, trial);
    const Eigen::MatrixXd& contexts = data.contexts_at(1);
    int best = 0;
    for (int a = 1; a < config.num_arms; ++a) {
      if (config.theta_star.dot(contexts.row(a)) >
          config.theta_star.dot(contexts.row(best))) {
        best = a;
      }
    }
    CHECK(optimal_arm(config.theta_star, contexts) == best);
  }
}

TEST_CASE("pseudo_regret_step") {
  Eigen::VectorXd theta(2);
  theta << 1.0, 0.0;
  Eigen::MatrixXd contexts(2, 2);
  contexts << 1.0, 0.0, 0.0, 1.0;
  const LinkFunction identity = LinkFunction::identity();
  CHECK(pseudo_regret_step(theta, identity, contexts,
                           optimal_arm(theta, contexts)) == 0.0);
  CHECK(pseudo_regret_step(theta, identity, contexts, 1) ==
        doctest::Approx(1.0));

  ExperimentConfig config = small_config();
  for (int trial = 0; trial < 5; ++trial) {
    const TrialData data = generate_trial(config, trial);
    for (int a = 0; a < config.num_arms; ++a) {
      CHECK(pseudo_regret_step(config.theta_star, identity,
                               data.contexts_at(1), a) >= 0.0);
    }
  }
}

TEST_CASE("dataset directory round trip preserves bytes") {
  const ExperimentConfig config = small_config();
  const Dataset dataset = build_dataset(config);
  const std::string dir = "env_roundtrip_dataset";
  write_dataset(dataset, dir);

  const ExperimentConfig loaded_config = load_dataset_config(dir);
  CHECK(loaded_config.horizon == config.horizon);
  for (int trial = 0; trial < config.trials; ++trial) {
    const TrialData loaded = load_dataset_trial(dir, loaded_config, trial);
    CHECK(serialize_trial(loaded, config) ==
          serialize_trial(dataset.trials[trial], config));
  }
}
