#include "streamml/evaluation/evaluate.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

#include "streamml/evaluation/metrics.hpp"

namespace streamml {

void EvalConfig::validate() const {
    if (batch_size == 0) {
        throw ConfigError("batch_size must be positive");
    }
    if (sample_frequency == 0) {
        throw ConfigError("sample_frequency must be positive");
    }
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void validate_run(Stream& stream, std::span<const ModelEntry> models, const EvalConfig& config) {
    config.validate();
    if (models.empty()) {
        throw ConfigError("a run needs at least one model");
    }
    for (std::size_t i = 0; i < models.size(); ++i) {
        const ModelEntry& entry = models[i];
        if (entry.model == nullptr) {
            throw ConfigError("model '" + entry.name + "' is missing");
        }
        if (!entry.model->schema().compatible_with(stream.schema())) {
            throw SchemaError("model '" + entry.name + "' does not fit the stream schema");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (models[j].name == entry.name) {
                throw ConfigError("duplicate model name '" + entry.name + "'");
            }
        }
    }
}

std::vector<std::string> build_columns(std::span<const ModelEntry> models,
                                       const StreamSchema& schema) {
    const auto names = MetricSet(schema).metric_names();
    std::vector<std::string> columns;
    columns.reserve(models.size() * names.size());
    for (const ModelEntry& entry : models) {
        for (const std::string& metric : names) {
            columns.push_back(entry.name + "." + metric);
        }
    }
    return columns;
}

/// Trains every model on the shared batch, declaring the class layout on
/// the first call of the run.
class Trainer {
public:
    Trainer(std::span<const ModelEntry> models, const StreamSchema& schema)
        : models_(models), classes_(schema.target_cardinality) {}

    void train(std::span<const Instance> batch) {
        const std::optional<std::vector<int>> classes =
            first_call_ ? std::optional<std::vector<int>>(classes_) : std::nullopt;
        for (const ModelEntry& entry : models_) {
            entry.model->partial_fit(batch, classes);
        }
        first_call_ = false;
    }

private:
    std::span<const ModelEntry> models_;
    std::vector<int> classes_;
    bool first_call_ = true;
};

std::uint64_t run_pretrain(Stream& stream, Trainer& trainer, const EvalConfig& config) {
    if (config.pretrain_size == 0) return 0;
    const auto batch = stream.next_sample(config.pretrain_size);
    if (batch.size() < config.pretrain_size) {
        throw ConfigError("stream exhausted during pretraining");
    }
    trainer.train(batch);
    return batch.size();
}

[[noreturn]] void rethrow_with_position(const std::exception& e, std::uint64_t samples_seen) {
    throw Error(std::string(e.what()) + " [samples_seen=" + std::to_string(samples_seen) + "]");
}

}  // namespace

RunResult prequential_run(Stream& stream, std::span<const ModelEntry> models,
                          const EvalConfig& config) {
    validate_run(stream, models, config);
    const auto start = Clock::now();

    Trainer trainer(models, stream.schema());
    std::uint64_t samples_seen = run_pretrain(stream, trainer, config);

    std::vector<MetricSet> metrics;
    metrics.reserve(models.size());
    for (std::size_t i = 0; i < models.size(); ++i) {
        metrics.emplace_back(stream.schema());
    }

    RunResult result;
    result.columns = build_columns(models, stream.schema());

    std::uint64_t last_recorded = 0;
    const auto emit = [&] {
        EvaluationRecord record;
        record.samples_seen = samples_seen;
        record.wall_time_s = seconds_since(start);
        record.values.reserve(result.columns.size());
        for (const MetricSet& ms : metrics) {
            const auto values = ms.metric_values();
            record.values.insert(record.values.end(), values.begin(), values.end());
        }
        result.records.push_back(std::move(record));
        last_recorded = samples_seen;
    };

    std::uint64_t scored = 0;
    std::uint64_t next_record = config.sample_frequency;
    try {
        while (scored < config.max_samples) {
            const std::uint64_t want =
                std::min<std::uint64_t>(config.batch_size, config.max_samples - scored);
            const auto batch = stream.next_sample(static_cast<std::size_t>(want));
            if (batch.empty()) break;

            for (std::size_t m = 0; m < models.size(); ++m) {
                for (const Instance& inst : batch) {
                    metrics[m].update(inst.targets, models[m].model->predict_one(inst.features));
                }
            }
            trainer.train(batch);
            scored += batch.size();
            samples_seen += batch.size();

            if (scored >= next_record) {
                emit();
                while (next_record <= scored) next_record += config.sample_frequency;
            }
        }
    } catch (const std::exception& e) {
        rethrow_with_position(e, samples_seen);
    }

    if (scored > 0 && last_recorded != samples_seen) {
        emit();
    }
    return result;
}

RunResult holdout_run(Stream& stream, std::span<const ModelEntry> models,
                      const EvalConfig& config) {
    validate_run(stream, models, config);
    if (config.test_size == 0) {
        throw ConfigError("test_size must be positive");
    }
    if (config.test_interval == 0) {
        throw ConfigError("test_interval must be positive");
    }
    const auto start = Clock::now();

    Trainer trainer(models, stream.schema());
    std::uint64_t samples_seen = run_pretrain(stream, trainer, config);

    RunResult result;
    result.columns = build_columns(models, stream.schema());

    // Scores all models on one freshly drawn test batch and emits a
    // record; returns false when the stream could not fill the batch.
    const auto run_test = [&]() -> bool {
        const auto test_batch = stream.next_sample(static_cast<std::size_t>(config.test_size));
        if (test_batch.empty()) return false;

        EvaluationRecord record;
        record.samples_seen = samples_seen;
        record.truncated = test_batch.size() < config.test_size;
        record.values.reserve(result.columns.size());
        for (const ModelEntry& entry : models) {
            MetricSet ms(stream.schema());
            for (const Instance& inst : test_batch) {
                ms.update(inst.targets, entry.model->predict_one(inst.features));
            }
            const auto values = ms.metric_values();
            record.values.insert(record.values.end(), values.begin(), values.end());
        }
        record.wall_time_s = seconds_since(start);
        const bool filled = !record.truncated;
        result.records.push_back(std::move(record));
        return filled;
    };

    std::uint64_t trained = 0;
    std::optional<std::uint64_t> last_test_at;
    try {
        std::uint64_t next_test = config.test_interval;
        bool stream_alive = true;
        while (stream_alive && trained < config.max_samples) {
            while (trained < next_test && trained < config.max_samples) {
                const std::uint64_t want = std::min<std::uint64_t>(
                    config.batch_size, std::min(next_test, config.max_samples) - trained);
                const auto batch = stream.next_sample(static_cast<std::size_t>(want));
                if (batch.empty()) {
                    stream_alive = false;
                    break;
                }
                trainer.train(batch);
                trained += batch.size();
                samples_seen += batch.size();
            }
            if (trained == next_test) {
                if (!run_test()) break;
                last_test_at = trained;
                next_test += config.test_interval;
            }
        }
        if (!last_test_at || *last_test_at != trained) {
            run_test();
        }
    } catch (const std::exception& e) {
        rethrow_with_position(e, samples_seen);
    }
    return result;
}

}  // namespace streamml
