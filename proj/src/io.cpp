#include "rbmle/io.hpp"

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rbmle/errors.hpp"

namespace rbmle {

namespace fs = std::filesystem;
using nlohmann::json;

std::uint64_t fnv1a(const void* data, std::size_t size, std::uint64_t hash) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < size; ++i) {
    hash ^= bytes[i];
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string hex_digest(std::uint64_t hash) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

void atomic_write_file(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + tmp);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw IoError("write failed: " + tmp);
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw IoError("rename failed: " + tmp + " -> " + path);
}

namespace {

json config_to_json(const ExperimentConfig& config) {
  json j;
  j["num_arms"] = config.num_arms;
  j["dim"] = config.dim;
  j["horizon"] = config.horizon;
  j["trials"] = config.trials;
  j["theta_star"] = std::vector<double>(
      config.theta_star.data(), config.theta_star.data() + config.theta_star.size());
  j["context_mode"] =
      config.context_mode == ContextMode::kStatic ? "static" : "time-varying";
  j["link"] = config.link == LinkKind::kIdentity ? "identity" : "logistic";
  j["clamp_radius"] = config.clamp_radius;
  j["seed"] = config.seed;
  j["record_every"] = config.record_every;
  json policies = json::array();
  for (const auto& p : config.policies) {
    json jp;
    jp["name"] = p.name;
    jp["params"] = p.params;
    policies.push_back(jp);
  }
  j["policies"] = policies;
  return j;
}

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig config;
  try {
    config.num_arms = j.at("num_arms").get<int>();
    config.dim = j.at("dim").get<int>();
    config.horizon = j.at("horizon").get<int>();
    config.trials = j.at("trials").get<int>();
    const auto theta = j.at("theta_star").get<std::vector<double>>();
    config.theta_star =
        Eigen::Map<const Eigen::VectorXd>(theta.data(), theta.size());
    const auto mode = j.at("context_mode").get<std::string>();
    if (mode == "static") {
      config.context_mode = ContextMode::kStatic;
    } else if (mode == "time-varying") {
      config.context_mode = ContextMode::kTimeVarying;
    } else {
      throw ConfigError("config field 'context_mode': unknown value " + mode);
    }
    const auto link = j.at("link").get<std::string>();
    if (link == "identity") {
      config.link = LinkKind::kIdentity;
    } else if (link == "logistic") {
      config.link = LinkKind::kLogistic;
    } else {
      throw ConfigError("config field 'link': unknown value " + link);
    }
    config.clamp_radius = j.value("clamp_radius", 1.0);
    config.seed = j.at("seed").get<std::uint64_t>();
    config.record_every = j.value("record_every", 1);
    for (const auto& jp : j.at("policies")) {
      PolicySpec spec;
      spec.name = jp.at("name").get<std::string>();
      if (jp.contains("params")) {
        spec.params = jp.at("params").get<std::map<std::string, double>>();
      }
      config.policies.push_back(spec);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  config.validate();
  return config;
}

std::string trial_filename(int trial) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "trial_%04d.bin", trial);
  return buf;
}

void append_f64(std::string& out, double value) {
  char buf[sizeof(double)];
  std::memcpy(buf, &value, sizeof(double));
  out.append(buf, sizeof(double));
}

}  // namespace

std::string config_to_json_string(const ExperimentConfig& config) {
  return config_to_json(config).dump(2) + "\n";
}

ExperimentConfig config_from_json_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config json: ") + e.what());
  }
  return config_from_json(j);
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return config_from_json_string(ss.str());
}

std::uint64_t config_digest(const ExperimentConfig& config) {
  const std::string text = config_to_json_string(config);
  return fnv1a(text.data(), text.size());
}

std::string serialize_trial(const TrialData& trial,
                            const ExperimentConfig& config) {
  std::string out;
  const std::size_t row = 3 + static_cast<std::size_t>(config.dim);
  out.reserve(row * sizeof(double) * config.horizon * config.num_arms);
  for (int t = 1; t <= config.horizon; ++t) {
    const Eigen::MatrixXd& contexts = trial.contexts_at(t);
    for (int a = 0; a < config.num_arms; ++a) {
      append_f64(out, static_cast<double>(t));
      append_f64(out, static_cast<double>(a));
      for (int jcol = 0; jcol < config.dim; ++jcol) {
        append_f64(out, contexts(a, jcol));
      }
      append_f64(out, trial.rewards(t - 1, a));
    }
  }
  return out;
}

TrialData deserialize_trial(const std::string& bytes,
                            const ExperimentConfig& config, int trial_index) {
  const std::size_t row_doubles = 3 + static_cast<std::size_t>(config.dim);
  const std::size_t expected = row_doubles * sizeof(double) *
                               static_cast<std::size_t>(config.horizon) *
                               config.num_arms;
  if (bytes.size() != expected) {
    throw IoError("trial table has unexpected size");
  }
  TrialData trial;
  trial.trial_index = trial_index;
  trial.mode = config.context_mode;
  trial.rewards.resize(config.horizon, config.num_arms);
  if (config.context_mode == ContextMode::kTimeVarying) {
    trial.contexts.assign(config.horizon,
                          Eigen::MatrixXd(config.num_arms, config.dim));
  } else {
    trial.contexts.assign(1, Eigen::MatrixXd(config.num_arms, config.dim));
  }
  const char* p = bytes.data();
  auto read_f64 = [&p]() {
    double v;
    std::memcpy(&v, p, sizeof(double));
    p += sizeof(double);
    return v;
  };
  for (int t = 1; t <= config.horizon; ++t) {
    Eigen::MatrixXd& contexts =
        config.context_mode == ContextMode::kStatic ? trial.contexts[0]
                                                    : trial.contexts[t - 1];
    for (int a = 0; a < config.num_arms; ++a) {
      read_f64();  // t
      read_f64();  // arm
      for (int jcol = 0; jcol < config.dim; ++jcol) {
        contexts(a, jcol) = read_f64();
      }
      trial.rewards(t - 1, a) = read_f64();
    }
  }
  return trial;
}

std::uint64_t dataset_digest(const Dataset& dataset) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const auto& trial : dataset.trials) {
    const std::string bytes = serialize_trial(trial, dataset.config);
    hash = fnv1a(bytes.data(), bytes.size(), hash);
  }
  return hash;
}

void write_dataset(const Dataset& dataset, const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory: " + dir);

  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (int trial = 0; trial < dataset.config.trials; ++trial) {
    const std::string bytes =
        serialize_trial(dataset.trials[trial], dataset.config);
    hash = fnv1a(bytes.data(), bytes.size(), hash);
    atomic_write_file(dir + "/" + trial_filename(trial), bytes);
  }

  json manifest;
  manifest["format_version"] = kDatasetFormatVersion;
  manifest["seed"] = dataset.config.seed;
  manifest["digest"] = hex_digest(hash);
  manifest["config"] = config_to_json(dataset.config);
  atomic_write_file(dir + "/manifest.json", manifest.dump(2) + "\n");
}

ExperimentConfig load_dataset_config(const std::string& dir) {
  std::ifstream in(dir + "/manifest.json", std::ios::binary);
  if (!in) throw IoError("cannot open dataset manifest in " + dir);
  json manifest;
  try {
    in >> manifest;
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed dataset manifest: ") + e.what());
  }
  const auto version = manifest.value("format_version", std::string{});
  if (version != kDatasetFormatVersion) {
    throw IoError("unknown dataset format version: " + version);
  }
  return config_from_json(manifest.at("config"));
}

TrialData load_dataset_trial(const std::string& dir,
                             const ExperimentConfig& config, int trial) {
  const std::string path = dir + "/" + trial_filename(trial);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open trial table: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return deserialize_trial(ss.str(), config, trial);
}

}  // namespace rbmle
