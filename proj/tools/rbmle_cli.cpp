#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rbmle/bounds.hpp"
#include "rbmle/errors.hpp"
#include "rbmle/harness.hpp"
#include "rbmle/io.hpp"
#include "rbmle/presets.hpp"

namespace {

using namespace rbmle;

std::vector<double> parse_quantiles(const std::string& text) {
  std::vector<double> levels;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) levels.push_back(std::stod(item));
  }
  if (levels.empty()) throw ConfigError("empty quantile list");
  return levels;
}

// "d=100,200,300;k=100,200" -> cross product of dims and arm counts.
std::vector<std::pair<int, int>> parse_grid(const std::string& text) {
  std::vector<int> dims;
  std::vector<int> arms;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw ConfigError("malformed grid: " + text);
    const std::string key = part.substr(0, eq);
    std::vector<int>* target = nullptr;
    if (key == "d") target = &dims;
    else if (key == "k") target = &arms;
    else throw ConfigError("grid key must be 'd' or 'k': " + key);
    std::stringstream vs(part.substr(eq + 1));
    std::string value;
    while (std::getline(vs, value, ',')) {
      if (!value.empty()) target->push_back(std::stoi(value));
    }
  }
  if (dims.empty() || arms.empty()) {
    throw ConfigError("grid must list both d and k values");
  }
  std::vector<std::pair<int, int>> grid;
  for (int d : dims) {
    for (int k : arms) grid.emplace_back(d, k);
  }
  return grid;
}

void run_and_persist(const ExperimentConfig& config, const std::string& data,
                     const std::string& out, int threads, bool timing) {
  RunOptions options;
  options.threads = threads;
  options.timing = timing;
  if (!data.empty()) {
    if (!std::filesystem::exists(data + "/manifest.json")) {
      write_dataset(build_dataset(config), data);
    }
    // Replay from the persisted tables so external datasets are honored.
    const ExperimentConfig stored = load_dataset_config(data);
    if (stored.dim != config.dim || stored.num_arms != config.num_arms ||
        stored.horizon < config.horizon || stored.trials < config.trials) {
      throw ConfigError("dataset in " + data + " does not cover the config");
    }
    options.dataset_dir = data;
  }
  const ExperimentResults results = run_experiment(config, options);
  write_results(results, out);
  for (const auto& summary : summarize_results(results)) {
    std::printf("%-10s mean=%.4f std=%.4f\n", summary.policy.c_str(),
                summary.mean, summary.stddev);
  }
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Reward-biased MLE bandit experiments"};
  app.require_subcommand(1);

  std::string config_path;
  std::string data_dir;
  std::string out_dir;
  std::string in_dir;
  std::string quantiles = "0.10,0.25,0.50,0.75,0.90,0.95";
  std::string grid_text;
  std::string bound_policy;
  std::string preset_name;
  int horizon = 100;
  int trials = 50;
  int threads = 1;
  bool no_timing = false;
  double delta = 0.1;
  BoundParams bound_params;

  auto* gen = app.add_subcommand("gen", "Build and persist a dataset");
  gen->add_option("--config", config_path, "experiment config json")
      ->required();
  gen->add_option("--out", out_dir, "output dataset directory")->required();

  auto* run = app.add_subcommand("run", "Run an experiment");
  run->add_option("--config", config_path)->required();
  run->add_option("--data", data_dir, "dataset directory (built if absent)");
  run->add_option("--out", out_dir)->required();
  run->add_option("--threads", threads);
  run->add_flag("--no-timing", no_timing,
                "record zero decision times (deterministic output)");

  auto* stats = app.add_subcommand("stats", "Summarize persisted results");
  stats->add_option("--in", in_dir)->required();
  stats->add_option("--quantiles", quantiles);

  auto* bench = app.add_subcommand("bench", "Scalability timing grid");
  bench->add_option("--grid", grid_text, "e.g. d=100,200,300;k=100,200")
      ->required();
  bench->add_option("--t", horizon);
  bench->add_option("--trials", trials);
  bench->add_option("--out", out_dir)->required();
  bench->add_option("--threads", threads);

  auto* bound = app.add_subcommand("bound", "Evaluate a regret bound");
  bound->add_option("--policy", bound_policy, "lin-rbmle or glm-rbmle")
      ->required();
  bound->add_option("--t", horizon)->required();
  bound->add_option("--delta", delta)->required();
  bound->add_option("--d", bound_params.dim);
  bound->add_option("--lambda", bound_params.lambda);
  bound->add_option("--sigma", bound_params.sigma);
  bound->add_option("--kappa", bound_params.kappa_mu);
  bound->add_option("--lmu", bound_params.l_mu);

  auto* preset = app.add_subcommand("preset", "Run a canonical experiment");
  preset->add_option("--name", preset_name)->required();
  preset->add_option("--out", out_dir)->required();
  preset->add_option("--threads", threads);
  preset->add_flag("--no-timing", no_timing);

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    const ExperimentConfig config = load_config(config_path);
    write_dataset(build_dataset(config), out_dir);
    std::printf("dataset written to %s\n", out_dir.c_str());
  } else if (run->parsed()) {
    run_and_persist(load_config(config_path), data_dir, out_dir, threads,
                    !no_timing);
  } else if (stats->parsed()) {
    const auto summaries =
        summarize_results_dir(in_dir, parse_quantiles(quantiles));
    std::cout << summary_to_csv(summaries);
  } else if (bench->parsed()) {
    const auto rows =
        bench_scalability(parse_grid(grid_text), horizon, trials,
                          {{"lin-rbmle", {}}, {"lin-ucb", {}}}, 46, threads);
    std::filesystem::create_directories(out_dir);
    atomic_write_file(out_dir + "/bench.csv", bench_to_csv(rows));
    std::cout << bench_to_csv(rows);
  } else if (bound->parsed()) {
    bound_params.delta = delta;
    double value;
    if (bound_policy == "lin-rbmle") {
      value = linear_regret_bound(horizon, bound_params);
    } else if (bound_policy == "glm-rbmle") {
      value = glm_regret_bound(horizon, bound_params);
    } else {
      throw ConfigError("bound policy must be lin-rbmle or glm-rbmle");
    }
    std::printf("%.10g\n", value);
  } else if (preset->parsed()) {
    if (is_bench_preset(preset_name)) {
      const BenchPreset bp = bench_preset(preset_name);
      const auto rows = bench_scalability(bp.grid_dim_arms, bp.horizon,
                                          bp.trials, bp.policies, bp.seed,
                                          threads);
      std::filesystem::create_directories(out_dir);
      atomic_write_file(out_dir + "/bench.csv", bench_to_csv(rows));
      std::cout << bench_to_csv(rows);
    } else {
      run_and_persist(preset_config(preset_name), "", out_dir, threads,
                      !no_timing);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 2;
  } catch (const IoError& e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return 3;
  } catch (const SolverError& e) {
    std::fprintf(stderr, "solver error: %s (residual %.3e)\n", e.what(),
                 e.residual());
    return 4;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
