#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "streamml/cli/experiment.hpp"
#include "streamml/cli/registry.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

/// k=v strings from --param become typed JSON values: integer, then real,
/// then boolean, then plain string.
json parse_params(const std::vector<std::string>& pairs) {
    json params = json::object();
    for (const std::string& pair : pairs) {
        const auto eq = pair.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw streamml::ConfigError("--param expects key=value, got '" + pair + "'");
        }
        const std::string key = pair.substr(0, eq);
        const std::string value = pair.substr(eq + 1);

        std::int64_t as_int = 0;
        auto [iptr, iec] = std::from_chars(value.data(), value.data() + value.size(), as_int);
        if (iec == std::errc{} && iptr == value.data() + value.size()) {
            params[key] = as_int;
            continue;
        }
        double as_double = 0.0;
        auto [dptr, dec] = std::from_chars(value.data(), value.data() + value.size(), as_double);
        if (dec == std::errc{} && dptr == value.data() + value.size()) {
            params[key] = as_double;
            continue;
        }
        if (value == "true" || value == "false") {
            params[key] = value == "true";
            continue;
        }
        params[key] = value;
    }
    return params;
}

/// Bad config files, parameters, schemas and input files exit with 2;
/// anything failing mid-run (already tagged with samples_seen) exits 3.
bool is_config_failure(const std::exception& e) {
    return dynamic_cast<const streamml::ConfigError*>(&e) != nullptr ||
           dynamic_cast<const streamml::SchemaError*>(&e) != nullptr ||
           dynamic_cast<const streamml::ParseError*>(&e) != nullptr ||
           dynamic_cast<const streamml::IoError*>(&e) != nullptr;
}

int cmd_run(const std::string& config_path, bool no_timing) {
    try {
        const auto config = streamml::load_experiment_config(config_path);
        const streamml::RunSummary summary = streamml::run_experiment(config, !no_timing);
        std::cout << "wrote " << summary.output_path << ": " << summary.n_records
                  << " records, " << summary.samples_seen << " samples";
        if (!summary.final_accuracy.empty()) {
            std::cout << "; final accuracy:";
            for (const auto& [name, accuracy] : summary.final_accuracy) {
                std::cout << ' ' << name << '=' << accuracy;
            }
        }
        std::cout << '\n';
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_config_failure(e) ? kExitConfig : kExitRuntime;
    }
}

int cmd_generate(const std::string& name, std::uint64_t n, std::uint64_t seed,
                 const std::string& out_path, const std::vector<std::string>& pairs) {
    try {
        const auto generators = streamml::generator_names();
        if (std::find(generators.begin(), generators.end(), name) == generators.end()) {
            throw streamml::ConfigError("unknown generator '" + name + "'");
        }
        const auto stream = streamml::make_stream(name, parse_params(pairs), seed);
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            throw streamml::IoError("cannot write '" + out_path + "'");
        }
        streamml::write_stream_csv(*stream, n, out);
        out.flush();
        if (!out) {
            throw streamml::IoError("failed while writing '" + out_path + "'");
        }
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}

int cmd_list() {
    for (const auto& names : {streamml::generator_names(), streamml::learner_names(),
                              streamml::detector_names(), streamml::evaluator_names()}) {
        for (const std::string& name : names) {
            std::cout << name << '\n';
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"incremental stream learning experiments"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "execute an experiment config and write its CSV trace");
    std::string config_path;
    bool no_timing = false;
    run->add_option("config", config_path, "experiment config (JSON)")->required();
    run->add_flag("--no-timing", no_timing, "write wall_time_s as zero for byte-stable output");

    auto* generate = app.add_subcommand("generate", "sample a generator into a CSV file");
    std::string gen_name;
    std::uint64_t gen_n = 0;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    std::vector<std::string> gen_params;
    generate->add_option("name", gen_name, "generator name (see `list`)")->required();
    generate->add_option("--n", gen_n, "number of instances")->required();
    generate->add_option("--seed", gen_seed, "generator seed");
    generate->add_option("--out", gen_out, "output CSV path")->required();
    generate->add_option("--param", gen_params, "generator parameter as key=value");

    auto* list = app.add_subcommand("list", "print registered component names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    if (run->parsed()) return cmd_run(config_path, no_timing);
    if (generate->parsed()) return cmd_generate(gen_name, gen_n, gen_seed, gen_out, gen_params);
    if (list->parsed()) return cmd_list();
    return kExitConfig;
}
