#include "rbmle/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "rbmle/errors.hpp"
#include "rbmle/io.hpp"

namespace rbmle {

namespace fs = std::filesystem;
using nlohmann::json;

std::uint64_t policy_rng_seed(std::uint64_t base_seed, int trial,
                              int policy_ordinal) {
  return mix_stream(trial_stream_seed(base_seed, trial),
                    1000 + static_cast<std::uint64_t>(policy_ordinal));
}

TrialResult run_trial(const TrialData& data, Policy& policy,
                      const ExperimentConfig& config, bool timing) {
  if (data.horizon() < config.horizon) {
    throw ConfigError("dataset horizon shorter than configured horizon");
  }
  if (data.num_arms() != config.num_arms ||
      data.contexts_at(1).cols() != config.dim) {
    throw ConfigError("dataset/config dimension mismatch");
  }
  const LinkFunction link = config.link_function();

  TrialResult result;
  result.trial = data.trial_index;
  result.regret_cum.reserve(config.horizon);

  double cum = 0.0;
  double total_ns = 0.0;
  for (int t = 1; t <= config.horizon; ++t) {
    const Eigen::MatrixXd& contexts = data.contexts_at(t);

    std::int64_t elapsed_ns = 0;
    int arm;
    if (timing) {
      const auto start = std::chrono::steady_clock::now();
      arm = policy.select_arm(contexts);
      const auto stop = std::chrono::steady_clock::now();
      elapsed_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                       stop - start)
                       .count();
    } else {
      arm = policy.select_arm(contexts);
    }
    total_ns += static_cast<double>(elapsed_ns);

    const double reward = data.rewards(t - 1, arm);
    policy.update(contexts.row(arm), reward);

    const double inst =
        pseudo_regret_step(config.theta_star, link, contexts, arm);
    cum += inst;
    result.regret_cum.push_back(cum);
    if (t % config.record_every == 0 || t == config.horizon) {
      result.recorded.push_back({t, arm, inst, cum, elapsed_ns});
    }
  }
  result.final_regret = cum;
  result.mean_time_ns = total_ns / config.horizon;
  return result;
}

ExperimentResults run_experiment(const ExperimentConfig& config,
                                 const RunOptions& options) {
  config.validate();
  if (config.policies.empty()) {
    throw ConfigError("config field 'policies': must not be empty");
  }

  ExperimentResults results;
  results.config = config;
  results.policies.resize(config.policies.size());
  for (std::size_t ip = 0; ip < config.policies.size(); ++ip) {
    results.policies[ip].policy = config.policies[ip].name;
    results.policies[ip].trials.resize(config.trials);
  }

  std::atomic<std::uint64_t> digest_accumulator{0};
  std::vector<std::uint64_t> trial_digests(config.trials, 0);

  std::atomic<int> next_trial{0};
  std::vector<std::exception_ptr> errors(
      std::max(options.threads, 1), nullptr);

  auto worker = [&](int worker_index) {
    try {
      for (;;) {
        const int trial = next_trial.fetch_add(1);
        if (trial >= config.trials) break;
        TrialData data =
            options.dataset_dir.empty()
                ? generate_trial(config, trial)
                : load_dataset_trial(options.dataset_dir, config, trial);
        const std::string bytes = serialize_trial(data, config);
        trial_digests[trial] = fnv1a(bytes.data(), bytes.size());
        for (std::size_t ip = 0; ip < config.policies.size(); ++ip) {
          auto policy =
              make_policy(config.policies[ip], config,
                          policy_rng_seed(config.seed, trial,
                                          static_cast<int>(ip)));
          results.policies[ip].trials[trial] =
              run_trial(data, *policy, config, options.timing);
        }
      }
    } catch (...) {
      errors[worker_index] = std::current_exception();
    }
  };

  const int threads = std::max(options.threads, 1);
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker, i);
    for (auto& th : pool) th.join();
  }
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }

  // Deterministic fold over trial order regardless of completion order.
  std::uint64_t digest = 0xcbf29ce484222325ULL;
  for (std::uint64_t trial_digest : trial_digests) {
    digest = fnv1a(&trial_digest, sizeof(trial_digest), digest);
  }
  results.dataset_digest = digest;
  return results;
}

double quantile(std::vector<double> values, double level) {
  if (values.empty()) throw ConfigError("quantile of empty sample");
  if (level < 0.0 || level > 1.0) {
    throw ConfigError("quantile level must be in [0, 1]");
  }
  std::sort(values.begin(), values.end());
  const double h = (values.size() - 1) * level;
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - lo) * (values[hi] - values[lo]);
}

RegretSummary summarize(const std::string& policy,
                        const std::vector<double>& final_regrets,
                        double mean_time_ns,
                        const std::vector<double>& levels) {
  if (final_regrets.empty()) {
    throw ConfigError("summarize: empty regret list");
  }
  RegretSummary summary;
  summary.policy = policy;
  const double n = static_cast<double>(final_regrets.size());
  double sum = 0.0;
  for (double v : final_regrets) sum += v;
  summary.mean = sum / n;
  double ss = 0.0;
  for (double v : final_regrets) ss += (v - summary.mean) * (v - summary.mean);
  summary.stddev = std::sqrt(ss / n);
  summary.quantile_levels = levels;
  for (double level : levels) {
    summary.quantiles.push_back(quantile(final_regrets, level));
  }
  summary.mean_time_ns = mean_time_ns;
  return summary;
}

std::vector<RegretSummary> summarize_results(
    const ExperimentResults& results) {
  std::vector<RegretSummary> summaries;
  for (const auto& policy : results.policies) {
    std::vector<double> finals;
    double time_sum = 0.0;
    for (const auto& trial : policy.trials) {
      finals.push_back(trial.final_regret);
      time_sum += trial.mean_time_ns;
    }
    summaries.push_back(summarize(policy.policy, finals,
                                  time_sum / policy.trials.size()));
  }
  return summaries;
}

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string summary_to_csv(const std::vector<RegretSummary>& summaries) {
  std::string out = "policy,mean,std";
  if (!summaries.empty()) {
    for (double level : summaries.front().quantile_levels) {
      char buf[16];
      std::snprintf(buf, sizeof(buf), ",q%02d",
                    static_cast<int>(std::lround(level * 100)));
      out += buf;
    }
  }
  out += ",mean_decision_time_ns\n";
  for (const auto& s : summaries) {
    out += s.policy + "," + format_double(s.mean) + "," +
           format_double(s.stddev);
    for (double q : s.quantiles) out += "," + format_double(q);
    out += "," + format_double(s.mean_time_ns) + "\n";
  }
  return out;
}

void write_results(const ExperimentResults& results, const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory: " + dir);

  std::string rounds =
      "trial,t,policy,arm,regret_inst,regret_cum,decision_time_ns\n";
  for (const auto& policy : results.policies) {
    for (const auto& trial : policy.trials) {
      for (const auto& rec : trial.recorded) {
        rounds += std::to_string(trial.trial) + "," + std::to_string(rec.t) +
                  "," + policy.policy + "," + std::to_string(rec.arm) + "," +
                  format_double(rec.regret_inst) + "," +
                  format_double(rec.regret_cum) + "," +
                  std::to_string(rec.time_ns) + "\n";
      }
    }
  }
  atomic_write_file(dir + "/rounds.csv", rounds);
  atomic_write_file(dir + "/summary.csv",
                    summary_to_csv(summarize_results(results)));

  json manifest;
  manifest["format_version"] = kResultsFormatVersion;
  manifest["config"] =
      json::parse(config_to_json_string(results.config));
  manifest["config_digest"] = hex_digest(config_digest(results.config));
  manifest["dataset_digest"] = hex_digest(results.dataset_digest);
  atomic_write_file(dir + "/manifest.json", manifest.dump(2) + "\n");
}

std::vector<RegretSummary> summarize_results_dir(
    const std::string& dir, const std::vector<double>& levels) {
  std::ifstream in(dir + "/rounds.csv");
  if (!in) throw IoError("cannot open rounds file in " + dir);
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty rounds file in " + dir);

  // policy -> trial -> (last cumulative regret, sum/count of decision time)
  std::vector<std::string> policy_order;
  std::map<std::string, std::map<int, double>> finals;
  std::map<std::string, double> time_sum;
  std::map<std::string, std::int64_t> time_count;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 7) throw IoError("malformed rounds row: " + line);
    const int trial = std::stoi(fields[0]);
    const std::string& policy = fields[2];
    if (finals.find(policy) == finals.end()) policy_order.push_back(policy);
    finals[policy][trial] = std::stod(fields[5]);
    time_sum[policy] += std::stod(fields[6]);
    ++time_count[policy];
  }

  std::vector<RegretSummary> summaries;
  for (const auto& policy : policy_order) {
    std::vector<double> values;
    for (const auto& [trial, final_regret] : finals[policy]) {
      values.push_back(final_regret);
    }
    summaries.push_back(summarize(policy, values,
                                  time_sum[policy] / time_count[policy],
                                  levels));
  }
  return summaries;
}

BoundReport check_bound(const ExperimentConfig& config,
                        const std::vector<TrialResult>& trials,
                        const BoundParams& params, bool glm) {
  BoundReport report;
  report.trials_total = static_cast<int>(trials.size());
  std::vector<bool> dominated(trials.size(), true);

  // The bound's partial sum over 1/alpha is accumulated incrementally so the
  // whole curve costs O(T).
  double half_inv_alpha_sum = 0.0;
  double inv_alpha_sum = 0.0;
  const double l = params.l_mu;
  const double k = params.kappa_mu;
  const double c1 = 2.0 * l * l * l * l / (k * k * k * k) + 1.0 / (k * k);
  const double c2 = 2.0 * l * l * l / (k * k) + l / k;
  const double c3 = 0.5 * l * l;
  const int t0 = glm ? glm_t0(params) : 0;

  for (int t = 1; t <= config.horizon; ++t) {
    half_inv_alpha_sum += 1.0 / (2.0 * params.alpha(t));
    inv_alpha_sum += 1.0 / params.alpha(t);
    const double g1t = g1(t, params);
    double bound;
    if (glm) {
      const double g2t = g2(t, params);
      bound = t0 + c1 * params.alpha(t) * g1t * g1t +
              c2 * std::sqrt(static_cast<double>(t)) * g1t * g2t +
              c3 * g2t * g2t * inv_alpha_sum;
    } else {
      const double g0t = g0(t, params);
      bound = g0t * g0t * half_inv_alpha_sum +
              std::sqrt(static_cast<double>(t)) * g0t * g1t +
              0.5 * params.alpha(t) * g1t * g1t;
    }
    for (std::size_t i = 0; i < trials.size(); ++i) {
      if (trials[i].regret_cum[t - 1] > bound) dominated[i] = false;
    }
    if (t % config.record_every == 0 || t == config.horizon) {
      report.ts.push_back(t);
      report.bounds.push_back(bound);
    }
  }
  for (bool ok : dominated) {
    if (ok) ++report.trials_dominated;
  }
  return report;
}

std::vector<BenchRow> bench_scalability(
    const std::vector<std::pair<int, int>>& grid_dim_arms, int horizon,
    int trials, const std::vector<PolicySpec>& policies, std::uint64_t seed,
    int threads) {
  std::vector<BenchRow> rows;
  for (const auto& [dim, num_arms] : grid_dim_arms) {
    ExperimentConfig config;
    config.num_arms = num_arms;
    config.dim = dim;
    config.horizon = horizon;
    config.trials = trials;
    config.context_mode = ContextMode::kStatic;
    config.link = LinkKind::kIdentity;
    config.seed = seed;
    config.policies = policies;
    config.record_every = 1;  // keep every decision's timing sample
    // Deterministic unit-norm parameter for the timing instance.
    Rng rng(mix_stream(seed, static_cast<std::uint64_t>(dim) * 100000 +
                                 num_arms));
    config.theta_star.resize(dim);
    for (int j = 0; j < dim; ++j) config.theta_star(j) = rng.normal();
    config.theta_star.normalize();

    RunOptions options;
    options.threads = threads;
    options.timing = true;
    const ExperimentResults results = run_experiment(config, options);
    for (const auto& policy : results.policies) {
      std::vector<double> times;
      for (const auto& trial : policy.trials) {
        for (const auto& rec : trial.recorded) {
          times.push_back(static_cast<double>(rec.time_ns));
        }
      }
      double mean = 0.0;
      for (double v : times) mean += v;
      mean /= times.size();
      double ss = 0.0;
      for (double v : times) ss += (v - mean) * (v - mean);
      rows.push_back({policy.policy, num_arms, dim, mean,
                      std::sqrt(ss / times.size())});
    }
  }
  return rows;
}

std::string bench_to_csv(const std::vector<BenchRow>& rows) {
  std::string out = "policy,num_arms,dim,mean_time_ns,std_time_ns\n";
  for (const auto& row : rows) {
    out += row.policy + "," + std::to_string(row.num_arms) + "," +
           std::to_string(row.dim) + "," + format_double(row.mean_time_ns) +
           "," + format_double(row.std_time_ns) + "\n";
  }
  return out;
}

}  // namespace rbmle
