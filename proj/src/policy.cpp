#include "rbmle/policy.hpp"

#include <cmath>

#include "rbmle/errors.hpp"
#include "rbmle/glm_policies.hpp"
#include "rbmle/linear_policies.hpp"

namespace rbmle {
namespace {

double param(const PolicySpec& spec, const std::string& key,
             double fallback) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

class LinearIndexPolicy : public Policy {
 public:
  LinearIndexPolicy(std::string name, const ExperimentConfig& config,
                    LinearPolicyConfig policy_config)
      : name_(std::move(name)),
        state_(config.dim, policy_config.lambda, 1000),
        config_(std::move(policy_config)) {}

  int select_arm(const Eigen::MatrixXd& contexts) override {
    return select_arm_linear(state_, contexts, config_);
  }

  void update(const Eigen::VectorXd& x, double r) override {
    update_linear(state_, x, r);
  }

  const std::string& name() const override { return name_; }

 private:
  std::string name_;
  LinearPolicyState state_;
  LinearPolicyConfig config_;
};

class LinTsPolicy : public Policy {
 public:
  LinTsPolicy(const ExperimentConfig& config, double lambda, double delta,
              double epsilon, double scale_override, std::uint64_t rng_seed)
      : state_(config.dim, lambda),
        delta_(delta),
        epsilon_(epsilon),
        scale_override_(scale_override),
        rng_(rng_seed) {}

  int select_arm(const Eigen::MatrixXd& contexts) override {
    return lin_ts_select(state_, contexts, state_.t, delta_, epsilon_, rng_,
                         scale_override_);
  }

  void update(const Eigen::VectorXd& x, double r) override {
    update_linear(state_, x, r);
  }

  const std::string& name() const override { return name_; }

 private:
  std::string name_ = "lin-ts";
  LinearPolicyState state_;
  double delta_;
  double epsilon_;
  double scale_override_;
  Rng rng_;
};

class GlmRbmlePolicy : public Policy {
 public:
  GlmRbmlePolicy(const ExperimentConfig& config, double lambda)
      : state_(config.dim, config.num_arms, lambda, config.link_function()) {}

  int select_arm(const Eigen::MatrixXd& contexts) override {
    const double alpha = alpha_(state_.t);
    const double eta = eta_(state_.t);
    int best = 0;
    double best_score = 0.0;
    for (int a = 0; a < contexts.rows(); ++a) {
      const Eigen::VectorXd x = contexts.row(a);
      const Eigen::VectorXd theta_bar =
          glm_rbmle_arm_solve(state_, x, alpha, state_.warm_starts.row(a));
      state_.warm_starts.row(a) = theta_bar;
      const double score = glm_rbmle_score(state_, theta_bar, x, alpha, eta);
      if (a == 0 || score > best_score) {
        best = a;
        best_score = score;
      }
    }
    return best;
  }

  void update(const Eigen::VectorXd& x, double r) override {
    state_.record(x, r);
  }

  const std::string& name() const override { return name_; }

 private:
  std::string name_ = "glm-rbmle";
  GlmPolicyState state_;
  BiasSchedule alpha_ = BiasSchedule::sqrt_t();
  EtaSchedule eta_{};
};

class UcbGlmPolicy : public Policy {
 public:
  UcbGlmPolicy(const ExperimentConfig& config, double lambda, double sigma,
               double delta)
      : state_(config.dim, config.num_arms, lambda, config.link_function()),
        design_(config.dim, lambda, 1000),
        tau_(config.num_arms),
        chi_(ucb_glm_chi(sigma, config.link_function().kappa_mu(), config.dim,
                         config.horizon, delta)) {}

  int select_arm(const Eigen::MatrixXd& contexts) override {
    // Round-robin warmup for the first tau rounds.
    if (state_.t <= tau_) return (state_.t - 1) % contexts.rows();
    const Eigen::VectorXd theta_hat = glm_mle(state_);
    state_.mle_warm = theta_hat;
    int best = 0;
    double best_value = 0.0;
    for (int a = 0; a < contexts.rows(); ++a) {
      const double value =
          ucb_glm_index(theta_hat, design_.inverse(), contexts.row(a), chi_);
      if (a == 0 || value > best_value) {
        best = a;
        best_value = value;
      }
    }
    return best;
  }

  void update(const Eigen::VectorXd& x, double r) override {
    state_.record(x, r);
    design_.add(x);
  }

  const std::string& name() const override { return name_; }

 private:
  std::string name_ = "ucb-glm";
  GlmPolicyState state_;
  DesignMatrix design_;
  int tau_;
  double chi_;
};

// Always pulls the per-round optimal arm; test/reference policy.
class OraclePolicy : public Policy {
 public:
  explicit OraclePolicy(const ExperimentConfig& config)
      : theta_star_(config.theta_star) {}

  int select_arm(const Eigen::MatrixXd& contexts) override {
    return optimal_arm(theta_star_, contexts);
  }

  void update(const Eigen::VectorXd&, double) override {}

  const std::string& name() const override { return name_; }

 private:
  std::string name_ = "oracle";
  Eigen::VectorXd theta_star_;
};

class RandomPolicy : public Policy {
 public:
  explicit RandomPolicy(std::uint64_t rng_seed) : rng_(rng_seed) {}

  int select_arm(const Eigen::MatrixXd& contexts) override {
    const int k = static_cast<int>(contexts.rows());
    int arm = static_cast<int>(rng_.uniform() * k);
    return arm >= k ? k - 1 : arm;
  }

  void update(const Eigen::VectorXd&, double) override {}

  const std::string& name() const override { return name_; }

 private:
  std::string name_ = "random";
  Rng rng_;
};

}  // namespace

std::unique_ptr<Policy> make_policy(const PolicySpec& spec,
                                    const ExperimentConfig& config,
                                    std::uint64_t rng_seed) {
  const double lambda = param(spec, "lambda", 1.0);
  if (lambda <= 0.0) throw ConfigError("policy param 'lambda': must be > 0");

  if (spec.name == "lin-rbmle" || spec.name == "lin-ucb" ||
      spec.name == "gpucb" || spec.name == "gpucbt" || spec.name == "greedy") {
    LinearPolicyConfig pc;
    pc.num_arms = config.num_arms;
    pc.lambda = lambda;
    if (spec.name == "lin-rbmle") {
      pc.kind = LinearPolicyKind::kRbmle;
    } else if (spec.name == "lin-ucb") {
      pc.kind = LinearPolicyKind::kUcb;
      pc.gamma = param(spec, "gamma", 1.0);
    } else if (spec.name == "gpucb") {
      pc.kind = LinearPolicyKind::kGpucb;
      pc.delta = param(spec, "delta", 1e-5);
    } else if (spec.name == "gpucbt") {
      pc.kind = LinearPolicyKind::kGpucbTuned;
      pc.c = param(spec, "c", 0.9);
    } else {
      pc.kind = LinearPolicyKind::kGreedy;
    }
    return std::make_unique<LinearIndexPolicy>(spec.name, config, pc);
  }
  if (spec.name == "lin-ts") {
    return std::make_unique<LinTsPolicy>(
        config, lambda, param(spec, "delta", 0.5),
        param(spec, "epsilon", 0.9), param(spec, "scale", -1.0), rng_seed);
  }
  if (spec.name == "glm-rbmle") {
    return std::make_unique<GlmRbmlePolicy>(config, lambda);
  }
  if (spec.name == "ucb-glm") {
    return std::make_unique<UcbGlmPolicy>(config, lambda,
                                          param(spec, "sigma", 1.0),
                                          param(spec, "delta", 0.1));
  }
  if (spec.name == "oracle") return std::make_unique<OraclePolicy>(config);
  if (spec.name == "random") return std::make_unique<RandomPolicy>(rng_seed);
  throw ConfigError("unknown policy name: " + spec.name);
}

}  // namespace rbmle
