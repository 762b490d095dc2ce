#pragma once

#include <cstdint>
#include <string>

#include "rbmle/environment.hpp"

namespace rbmle {

inline constexpr const char* kDatasetFormatVersion = "rbmle-dataset-1";
inline constexpr const char* kResultsFormatVersion = "rbmle-results-1";

// FNV-1a 64-bit over raw bytes; used for config and dataset digests.
std::uint64_t fnv1a(const void* data, std::size_t size,
                    std::uint64_t hash = 0xcbf29ce484222325ULL);
std::string hex_digest(std::uint64_t hash);

// Write to <path>.tmp then rename, so partial results are never left behind.
void atomic_write_file(const std::string& path, const std::string& contents);

std::string config_to_json_string(const ExperimentConfig& config);
ExperimentConfig config_from_json_string(const std::string& text);
ExperimentConfig load_config(const std::string& path);

std::uint64_t config_digest(const ExperimentConfig& config);

// Binary trial table: one row per (round, arm), columns
// (t, arm, context components..., reward), all little-endian f64.
std::string serialize_trial(const TrialData& trial,
                            const ExperimentConfig& config);
TrialData deserialize_trial(const std::string& bytes,
                            const ExperimentConfig& config, int trial_index);

// Dataset directory: manifest.json plus trial_NNNN.bin tables.
void write_dataset(const Dataset& dataset, const std::string& dir);
// Checks the format version; throws IoError on unknown versions.
ExperimentConfig load_dataset_config(const std::string& dir);
TrialData load_dataset_trial(const std::string& dir,
                             const ExperimentConfig& config, int trial);
std::uint64_t dataset_digest(const Dataset& dataset);

}  // namespace rbmle
