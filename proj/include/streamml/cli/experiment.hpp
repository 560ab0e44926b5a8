#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "streamml/core/stream.hpp"
#include "streamml/evaluation/evaluate.hpp"

namespace streamml {

struct ModelSpec {
    std::string name;
    std::string type;
    nlohmann::json parameters;
};

/// A full experiment: stream, models, evaluation protocol, output path,
/// one master seed. Component seeds derive from the master seed: stream =
/// derivation 0, evaluator = 1, model i = 2 + i.
struct ExperimentConfig {
    std::uint64_t seed = 1;
    std::string output_path;
    std::string stream_type;
    nlohmann::json stream_params;
    std::vector<ModelSpec> models;
    std::string evaluator_type;
    EvalConfig eval;
};

/// Parses and strictly validates a config document; unknown keys are
/// rejected with the offending key named.
ExperimentConfig parse_experiment_config(const nlohmann::json& doc);

/// Reads the file and parses it; malformed JSON becomes a ConfigError.
ExperimentConfig load_experiment_config(const std::string& path);

struct RunSummary {
    std::string output_path;
    std::size_t n_records = 0;
    std::uint64_t samples_seen = 0;
    /// (model name, final global accuracy) in config order.
    std::vector<std::pair<std::string, double>> final_accuracy;
};

/// Executes the configured run and writes the metric-trace CSV. With
/// include_timing false every wall_time_s cell is written as zero so
/// repeated runs produce byte-identical files.
RunSummary run_experiment(const ExperimentConfig& config, bool include_timing);

/// Writes `n` instances from the stream as CSV: header row of feature and
/// target names, features in shortest round-trip form, integer targets.
void write_stream_csv(Stream& stream, std::uint64_t n, std::ostream& out);

}  // namespace streamml
