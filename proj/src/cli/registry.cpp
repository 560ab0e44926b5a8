#include "streamml/cli/registry.hpp"

#include "param_reader.hpp"
#include "streamml/core/random.hpp"
#include "streamml/generators/csv_stream.hpp"
#include "streamml/generators/multilabel.hpp"
#include "streamml/generators/random_rbf.hpp"
#include "streamml/generators/sea.hpp"
#include "streamml/generators/waveform.hpp"
#include "streamml/learners/bagging.hpp"
#include "streamml/learners/hoeffding_tree.hpp"
#include "streamml/learners/knn.hpp"
#include "streamml/learners/knn_adwin.hpp"
#include "streamml/learners/majority_class.hpp"
#include "streamml/learners/multioutput.hpp"
#include "streamml/learners/naive_bayes.hpp"
#include "streamml/learners/no_change.hpp"

namespace streamml {

namespace {

using nlohmann::json;

ModelFactory make_base_factory(const json& base_spec, std::uint64_t seed,
                               const std::string& context) {
    ParamReader reader(base_spec, context);
    const std::string base_type = reader.take_string("type");
    const json base_params = reader.take_object("parameters");
    reader.finish();
    // Each factory call gets its own derived seed so seeded bases drawn
    // for different members differ deterministically.
    auto counter = std::make_shared<std::uint64_t>(0);
    return [base_type, base_params, seed, counter](const StreamSchema& schema) {
        return make_learner(base_type, base_params, schema, derive_seed(seed, (*counter)++));
    };
}

json default_base_spec() { return json{{"type", "hoeffding_tree"}}; }

}  // namespace

std::vector<std::string> generator_names() {
    return {"multilabel", "random_rbf", "random_rbf_drift", "sea", "waveform"};
}

std::vector<std::string> learner_names() {
    return {"hoeffding_tree", "knn",         "knn_adwin",  "leverage_bagging", "majority_class",
            "multioutput",    "naive_bayes", "no_change",  "oza_bagging"};
}

std::vector<std::string> detector_names() {
    return {"adwin", "ddm", "eddm", "page_hinkley"};
}

std::vector<std::string> evaluator_names() {
    return {"holdout", "prequential"};
}

std::unique_ptr<Stream> make_stream(const std::string& type, const nlohmann::json& params,
                                    std::uint64_t seed) {
    const std::string context = "stream." + type;
    if (type == "sea") {
        ParamReader reader(params, context);
        const int variant = reader.take_int("variant", 0);
        const double noise = reader.take_double("noise_fraction", 0.0);
        reader.finish();
        return std::make_unique<SeaGenerator>(variant, noise, seed);
    }
    if (type == "random_rbf" || type == "random_rbf_drift") {
        ParamReader reader(params, context);
        RbfConfig config;
        config.n_features = reader.take_int("n_features", 10);
        config.n_classes = reader.take_int("n_classes", 2);
        config.n_centroids = reader.take_int("n_centroids", 50);
        if (type == "random_rbf_drift") {
            config.drift_speed = reader.take_double("drift_speed", 0.001);
        }
        config.seed_model = derive_seed(seed, 0);
        config.seed_sample = derive_seed(seed, 1);
        reader.finish();
        return std::make_unique<RandomRbfGenerator>(config);
    }
    if (type == "waveform") {
        ParamReader reader(params, context);
        const double noise_sigma = reader.take_double("noise_sigma", 1.0);
        reader.finish();
        return std::make_unique<WaveformGenerator>(noise_sigma, seed);
    }
    if (type == "multilabel") {
        ParamReader reader(params, context);
        MultiLabelConfig config;
        config.n_features = reader.take_int("n_features", 10);
        config.n_labels = reader.take_int("n_labels", 3);
        config.label_dependence = reader.take_double("label_dependence", 0.5);
        config.seed = seed;
        reader.finish();
        return std::make_unique<MultiLabelGenerator>(config);
    }
    if (type == "csv") {
        ParamReader reader(params, context);
        CsvStreamConfig config;
        config.path = reader.take_string("path");
        config.n_target_columns = reader.take_int("n_target_columns", 1);
        config.header_present = reader.take_bool("header_present", true);
        reader.finish();
        return std::make_unique<CsvStream>(config);
    }
    throw ConfigError("unknown stream type '" + type + "'");
}

std::unique_ptr<StreamModel> make_learner(const std::string& type, const nlohmann::json& params,
                                          const StreamSchema& schema, std::uint64_t seed) {
    const std::string context = "model." + type;
    if (type == "majority_class") {
        ParamReader(params, context).finish();
        return std::make_unique<MajorityClassClassifier>(schema);
    }
    if (type == "no_change") {
        ParamReader(params, context).finish();
        return std::make_unique<NoChangeClassifier>(schema);
    }
    if (type == "naive_bayes") {
        ParamReader(params, context).finish();
        return std::make_unique<GaussianNbClassifier>(schema);
    }
    if (type == "knn") {
        ParamReader reader(params, context);
        const int k = reader.take_int("k", 5);
        const int window = reader.take_int("window_size", 1000);
        reader.finish();
        return std::make_unique<KnnClassifier>(schema, k, static_cast<std::size_t>(window));
    }
    if (type == "knn_adwin") {
        ParamReader reader(params, context);
        const int k = reader.take_int("k", 5);
        const int window = reader.take_int("window_size", 1000);
        const double delta = reader.take_double("adwin_delta", 0.002);
        reader.finish();
        return std::make_unique<KnnAdwinClassifier>(schema, k, static_cast<std::size_t>(window),
                                                    delta);
    }
    if (type == "hoeffding_tree") {
        ParamReader reader(params, context);
        const double delta = reader.take_double("delta", 1e-7);
        const double tau = reader.take_double("tau", 0.05);
        const int grace = reader.take_int("grace_period", 200);
        const bool nb_leaves = reader.take_bool("leaf_naive_bayes", false);
        reader.finish();
        return std::make_unique<HoeffdingTreeClassifier>(schema, delta, tau, grace, nb_leaves);
    }
    if (type == "oza_bagging") {
        ParamReader reader(params, context);
        const int n_members = reader.take_int("n_members", 10);
        const double lambda = reader.take_double("poisson_lambda", 1.0);
        json base = reader.take_object("base");
        reader.finish();
        if (base.empty()) base = default_base_spec();
        return std::make_unique<OzaBaggingClassifier>(
            schema, make_base_factory(base, derive_seed(seed, 1), context + ".base"), n_members,
            derive_seed(seed, 0), lambda);
    }
    if (type == "leverage_bagging") {
        ParamReader reader(params, context);
        const int n_members = reader.take_int("n_members", 10);
        const double lambda = reader.take_double("poisson_lambda", 6.0);
        const double adwin_delta = reader.take_double("adwin_delta", 0.002);
        const bool drift_reset = reader.take_bool("drift_reset", true);
        json base = reader.take_object("base");
        reader.finish();
        if (base.empty()) base = default_base_spec();
        return std::make_unique<LeverageBaggingClassifier>(
            schema, make_base_factory(base, derive_seed(seed, 1), context + ".base"), n_members,
            derive_seed(seed, 0), lambda, adwin_delta, drift_reset);
    }
    if (type == "multioutput") {
        ParamReader reader(params, context);
        json base = reader.take_object("base");
        reader.finish();
        if (base.empty()) base = default_base_spec();
        return std::make_unique<MultiOutputLearner>(
            schema, make_base_factory(base, seed, context + ".base"));
    }
    throw ConfigError("unknown model type '" + type + "'");
}

}  // namespace streamml
