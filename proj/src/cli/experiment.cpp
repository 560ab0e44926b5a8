#include "streamml/cli/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <memory>

#include "param_reader.hpp"
#include "streamml/cli/registry.hpp"
#include "streamml/core/random.hpp"

namespace streamml {

namespace {

using nlohmann::json;

std::string fixed6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

std::string shortest(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

void write_run_csv(const RunResult& result, const std::string& path, bool include_timing) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write '" + path + "'");
    }
    out << "samples_seen,wall_time_s";
    for (const std::string& column : result.columns) {
        out << ',' << column;
    }
    out << '\n';
    for (const EvaluationRecord& record : result.records) {
        out << record.samples_seen << ','
            << fixed6(include_timing ? record.wall_time_s : 0.0);
        for (double value : record.values) {
            out << ',' << fixed6(value);
        }
        out << '\n';
    }
    out.flush();
    if (!out) {
        throw IoError("failed while writing '" + path + "'");
    }
}

}  // namespace

ExperimentConfig parse_experiment_config(const nlohmann::json& doc) {
    ParamReader root(doc, "config");
    ExperimentConfig config;
    config.seed = root.take_uint64("seed", 1);
    config.output_path = root.take_string("output");
    const json stream = root.take_object_required("stream");
    const json models = root.take_array_required("models");
    const json evaluator = root.take_object_required("evaluator");
    root.finish();

    {
        ParamReader reader(stream, "config.stream");
        config.stream_type = reader.take_string("type");
        config.stream_params = reader.take_object("parameters");
        reader.finish();
    }

    if (models.empty()) {
        throw ConfigError("config.models: needs at least one model");
    }
    for (std::size_t i = 0; i < models.size(); ++i) {
        ParamReader reader(models[i], "config.models[" + std::to_string(i) + "]");
        ModelSpec spec;
        spec.type = reader.take_string("type");
        spec.name = reader.take_string_or("name", spec.type);
        spec.parameters = reader.take_object("parameters");
        reader.finish();
        config.models.push_back(std::move(spec));
    }

    {
        ParamReader reader(evaluator, "config.evaluator");
        config.evaluator_type = reader.take_string("type");
        const auto known = evaluator_names();
        if (std::find(known.begin(), known.end(), config.evaluator_type) == known.end()) {
            throw ConfigError("config.evaluator: unknown type '" + config.evaluator_type + "'");
        }
        config.eval.max_samples = reader.take_uint64("max_samples", config.eval.max_samples);
        config.eval.batch_size = static_cast<std::size_t>(
            reader.take_uint64("batch_size", config.eval.batch_size));
        config.eval.sample_frequency =
            reader.take_uint64("sample_frequency", config.eval.sample_frequency);
        config.eval.pretrain_size =
            reader.take_uint64("pretrain_size", config.eval.pretrain_size);
        if (config.evaluator_type == "holdout") {
            config.eval.test_size = reader.take_uint64("test_size", config.eval.test_size);
            config.eval.test_interval =
                reader.take_uint64("test_interval", config.eval.test_interval);
        }
        reader.finish();
    }
    return config;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_experiment_config(doc);
}

RunSummary run_experiment(const ExperimentConfig& config, bool include_timing) {
    const auto stream = make_stream(config.stream_type, config.stream_params,
                                    derive_seed(config.seed, 0));
    EvalConfig eval = config.eval;
    eval.seed = derive_seed(config.seed, 1);

    std::vector<std::unique_ptr<StreamModel>> owned;
    std::vector<ModelEntry> entries;
    owned.reserve(config.models.size());
    entries.reserve(config.models.size());
    for (std::size_t i = 0; i < config.models.size(); ++i) {
        const ModelSpec& spec = config.models[i];
        owned.push_back(make_learner(spec.type, spec.parameters, stream->schema(),
                                     derive_seed(config.seed, 2 + i)));
        entries.push_back({spec.name, owned.back().get()});
    }

    const RunResult result = config.evaluator_type == "holdout"
                                 ? holdout_run(*stream, entries, eval)
                                 : prequential_run(*stream, entries, eval);
    write_run_csv(result, config.output_path, include_timing);

    RunSummary summary;
    summary.output_path = config.output_path;
    summary.n_records = result.records.size();
    if (!result.records.empty()) {
        summary.samples_seen = result.records.back().samples_seen;
        // Global accuracy is the first metric of each model's block.
        const std::size_t per_model = result.columns.size() / entries.size();
        for (std::size_t i = 0; i < entries.size(); ++i) {
            summary.final_accuracy.emplace_back(entries[i].name,
                                                result.records.back().values[i * per_model]);
        }
    }
    return summary;
}

void write_stream_csv(Stream& stream, std::uint64_t n, std::ostream& out) {
    const StreamSchema& schema = stream.schema();
    for (Eigen::Index i = 0; i < schema.n_features; ++i) {
        if (i > 0) out << ',';
        out << schema.feature_name(i);
    }
    for (Eigen::Index j = 0; j < schema.n_targets(); ++j) {
        if (schema.n_features > 0 || j > 0) out << ',';
        out << schema.target_name(j);
    }
    out << '\n';

    std::uint64_t written = 0;
    while (written < n) {
        const std::size_t want =
            static_cast<std::size_t>(std::min<std::uint64_t>(1024, n - written));
        const auto batch = stream.next_sample(want);
        if (batch.empty()) break;
        for (const Instance& inst : batch) {
            for (Eigen::Index i = 0; i < inst.features.size(); ++i) {
                if (i > 0) out << ',';
                out << shortest(inst.features[i]);
            }
            for (Eigen::Index j = 0; j < inst.targets.size(); ++j) {
                out << ',' << inst.targets[j];
            }
            out << '\n';
        }
        written += batch.size();
    }
}

}  // namespace streamml
