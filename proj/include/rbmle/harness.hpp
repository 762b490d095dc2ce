#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rbmle/bounds.hpp"
#include "rbmle/environment.hpp"
#include "rbmle/policy.hpp"

namespace rbmle {

struct RoundRecord {
  int t = 0;
  int arm = 0;
  double regret_inst = 0.0;
  double regret_cum = 0.0;
  std::int64_t time_ns = 0;
};

struct TrialResult {
  int trial = 0;
  // Full cumulative-regret curve, one entry per round.
  std::vector<double> regret_cum;
  // Records persisted at the configured stride.
  std::vector<RoundRecord> recorded;
  double final_regret = 0.0;
  double mean_time_ns = 0.0;
};

struct PolicyResults {
  std::string policy;
  std::vector<TrialResult> trials;
};

struct ExperimentResults {
  ExperimentConfig config;
  std::uint64_t dataset_digest = 0;
  std::vector<PolicyResults> policies;
};

inline constexpr std::array<double, 6> kDefaultQuantiles = {
    0.10, 0.25, 0.50, 0.75, 0.90, 0.95};

struct RegretSummary {
  std::string policy;
  double mean = 0.0;
  double stddev = 0.0;  // population
  std::vector<double> quantile_levels;
  std::vector<double> quantiles;
  double mean_time_ns = 0.0;
};

struct RunOptions {
  int threads = 1;
  bool timing = true;
  // When set, trials are loaded from this dataset directory instead of
  // being regenerated.
  std::string dataset_dir;
};

std::uint64_t policy_rng_seed(std::uint64_t base_seed, int trial,
                              int policy_ordinal);

// Replays one trial through one policy. The selection timer wraps only the
// select-arm call. Throws ConfigError on dataset/config dimension mismatch.
TrialResult run_trial(const TrialData& data, Policy& policy,
                      const ExperimentConfig& config, bool timing);

// Runs every configured policy over every trial on identical sample paths.
ExperimentResults run_experiment(const ExperimentConfig& config,
                                 const RunOptions& options = {});

// Linear interpolation between closest order statistics ("type 7").
double quantile(std::vector<double> values, double level);

RegretSummary summarize(const std::string& policy,
                        const std::vector<double>& final_regrets,
                        double mean_time_ns = 0.0,
                        const std::vector<double>& levels = {
                            kDefaultQuantiles.begin(),
                            kDefaultQuantiles.end()});

std::vector<RegretSummary> summarize_results(const ExperimentResults& results);

// Writes rounds.csv, summary.csv and manifest.json (write-then-rename).
void write_results(const ExperimentResults& results, const std::string& dir);

// Recomputes summaries from a persisted rounds.csv.
std::vector<RegretSummary> summarize_results_dir(
    const std::string& dir, const std::vector<double>& levels);

std::string summary_to_csv(const std::vector<RegretSummary>& summaries);

struct BoundReport {
  int trials_total = 0;
  int trials_dominated = 0;
  std::vector<int> ts;         // bound curve sample points
  std::vector<double> bounds;  // nondecreasing in t

  double coverage() const {
    return trials_total == 0
               ? 1.0
               : static_cast<double>(trials_dominated) / trials_total;
  }
};

// Per trial, checks cumulative regret at every t against the theoretical
// bound evaluated at (t, delta); reports the fraction fully dominated.
BoundReport check_bound(const ExperimentConfig& config,
                        const std::vector<TrialResult>& trials,
                        const BoundParams& params, bool glm);

struct BenchRow {
  std::string policy;
  int num_arms = 0;
  int dim = 0;
  double mean_time_ns = 0.0;
  double std_time_ns = 0.0;
};

// Timing grid: per (policy, K, d), mean and standard deviation of
// per-decision time across all decisions and trials.
std::vector<BenchRow> bench_scalability(
    const std::vector<std::pair<int, int>>& grid_dim_arms, int horizon,
    int trials, const std::vector<PolicySpec>& policies, std::uint64_t seed,
    int threads = 1);

std::string bench_to_csv(const std::vector<BenchRow>& rows);

}  // namespace rbmle
