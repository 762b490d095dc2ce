#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rbmle/bounds.hpp"
#include "rbmle/environment.hpp"
#include "rbmle/glm_policies.hpp"
#include "rbmle/harness.hpp"
#include "rbmle/io.hpp"
#include "rbmle/linear_policies.hpp"
#include "rbmle/presets.hpp"
#include "rbmle/spd.hpp"

namespace py = pybind11;
using namespace rbmle;

namespace {

ExperimentConfig config_from_json_arg(const std::string& text) {
  return config_from_json_string(text);
}

}  // namespace

PYBIND11_MODULE(_rbmle, m) {
  m.doc() = "Reward-biased MLE contextual bandit policies and harness";

  // spd kernel
  m.def("spd_inverse", &spd_inverse, py::arg("m"));
  m.def("rank_one_inverse_update", &rank_one_inverse_update, py::arg("minv"),
        py::arg("x"));
  m.def("quad_form", &quad_form, py::arg("minv"), py::arg("x"));

  // link functions
  py::class_<LinkFunction>(m, "LinkFunction")
      .def_static("identity", &LinkFunction::identity)
      .def_static("logistic", &LinkFunction::logistic,
                  py::arg("clamp_radius") = 1.0)
      .def("mu", &LinkFunction::mu)
      .def("mu_prime", &LinkFunction::mu_prime)
      .def("antideriv", &LinkFunction::antideriv)
      .def_property_readonly("l_mu", &LinkFunction::l_mu)
      .def_property_readonly("kappa_mu", &LinkFunction::kappa_mu);

  // environment
  m.def("optimal_arm", &optimal_arm, py::arg("theta_star"),
        py::arg("contexts"));
  m.def("pseudo_regret_step", &pseudo_regret_step, py::arg("theta_star"),
        py::arg("link"), py::arg("contexts"), py::arg("chosen"));

  // linear policies
  py::class_<LinearPolicyState>(m, "LinearPolicyState")
      .def(py::init<int, double, int>(), py::arg("dim"), py::arg("lambda"),
           py::arg("refresh_interval") = 1000)
      .def_readonly("t", &LinearPolicyState::t)
      .def_property_readonly(
          "theta_hat",
          [](const LinearPolicyState& s) { return s.theta_hat; })
      .def_property_readonly("vinv", [](const LinearPolicyState& s) {
        return s.design.inverse();
      });
  m.def("lin_rbmle_index", &lin_rbmle_index);
  m.def("lin_ucb_index", &lin_ucb_index);
  m.def("closed_form_biased_estimate", &closed_form_biased_estimate);
  m.def("update_linear", &update_linear);

  // glm policies
  py::class_<GlmPolicyState>(m, "GlmPolicyState")
      .def(py::init<int, int, double, const LinkFunction&>(), py::arg("dim"),
           py::arg("num_arms"), py::arg("lambda"), py::arg("link"))
      .def("record", &GlmPolicyState::record)
      .def_readonly("t", &GlmPolicyState::t);
  m.def("glm_rbmle_arm_solve",
        [](const GlmPolicyState& state, const Eigen::VectorXd& x_a,
           double alpha) { return glm_rbmle_arm_solve(state, x_a, alpha); });
  m.def("glm_mle",
        [](const GlmPolicyState& state) { return glm_mle(state); });
  m.def("glm_rbmle_score", &glm_rbmle_score);

  // bounds
  py::class_<BoundParams>(m, "BoundParams")
      .def(py::init<>())
      .def_readwrite("dim", &BoundParams::dim)
      .def_readwrite("lambda_", &BoundParams::lambda)
      .def_readwrite("sigma", &BoundParams::sigma)
      .def_readwrite("delta", &BoundParams::delta)
      .def_readwrite("kappa_mu", &BoundParams::kappa_mu)
      .def_readwrite("l_mu", &BoundParams::l_mu);
  m.def("g0", &g0);
  m.def("g1", &g1);
  m.def("g2", &g2);
  m.def("linear_regret_bound", &linear_regret_bound);
  m.def("glm_regret_bound", &glm_regret_bound);

  // harness entry points, config passed as a json string
  m.def("run_experiment_json", [](const std::string& config_json,
                                  int threads, bool timing) {
    RunOptions options;
    options.threads = threads;
    options.timing = timing;
    const ExperimentResults results =
        run_experiment(config_from_json_arg(config_json), options);
    py::list summaries;
    for (const auto& s : summarize_results(results)) {
      py::dict d;
      d["policy"] = s.policy;
      d["mean"] = s.mean;
      d["std"] = s.stddev;
      d["quantiles"] = s.quantiles;
      d["mean_decision_time_ns"] = s.mean_time_ns;
      summaries.append(d);
    }
    return summaries;
  }, py::arg("config_json"), py::arg("threads") = 1, py::arg("timing") = true);
  m.def("preset_config_json", [](const std::string& name) {
    return config_to_json_string(preset_config(name));
  });
  m.def("summarize", [](const std::vector<double>& finals) {
    const RegretSummary s = summarize("values", finals);
    py::dict d;
    d["mean"] = s.mean;
    d["std"] = s.stddev;
    d["quantiles"] = s.quantiles;
    return d;
  });
}
