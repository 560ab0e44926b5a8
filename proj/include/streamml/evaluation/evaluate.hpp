#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "streamml/core/model.hpp"
#include "streamml/core/stream.hpp"

namespace streamml {

struct EvalConfig {
    /// Training samples consumed after pretraining, at most.
    std::uint64_t max_samples = 100000;
    std::size_t batch_size = 1;
    /// A record is emitted after every this many scored training samples.
    std::uint64_t sample_frequency = 200;
    std::uint64_t pretrain_size = 200;
    /// Holdout mode only.
    std::uint64_t test_size = 200;
    std::uint64_t test_interval = 1000;
    /// Reserved for evaluator-level randomization; the two shipped
    /// protocols are deterministic and never draw from it.
    std::uint64_t seed = 1;

    void validate() const;
};

/// One metrics checkpoint. `values` is model-major in the column order of
/// the owning RunResult. `samples_seen` counts training samples consumed
/// so far, pretraining included.
struct EvaluationRecord {
    std::uint64_t samples_seen = 0;
    double wall_time_s = 0.0;
    std::vector<double> values;
    bool truncated = false;
};

/// A named model taking part in a run; the caller keeps ownership.
struct ModelEntry {
    std::string name;
    StreamModel* model = nullptr;
};

struct RunResult {
    /// "<model name>.<metric name>", model-major, fixed for the run.
    std::vector<std::string> columns;
    std::vector<EvaluationRecord> records;
};

/// Interleaved test-then-train evaluation: after an optional pretraining
/// phase every drawn batch is first scored by every model and then used
/// to train every model, so each model sees the identical sequence.
/// Records accumulate over the whole run; one terminal record is emitted
/// when the run ends off the sample_frequency grid.
RunResult prequential_run(Stream& stream, std::span<const ModelEntry> models,
                          const EvalConfig& config);

/// Dynamic holdout evaluation: models train on the stream, and after every
/// test_interval training samples a fresh batch of test_size is drawn and
/// scored without being trained on. Each record's metrics cover only its
/// own test batch; a short final test batch is flagged truncated.
RunResult holdout_run(Stream& stream, std::span<const ModelEntry> models,
                      const EvalConfig& config);

}  // namespace streamml
