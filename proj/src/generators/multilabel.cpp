#include "streamml/generators/multilabel.hpp"

namespace streamml {

namespace {

StreamSchema multilabel_schema(const MultiLabelConfig& config) {
    if (config.n_labels < 2) {
        throw ConfigError("multilabel needs at least two labels");
    }
    if (config.label_dependence < 0.0 || config.label_dependence > 1.0) {
        throw ConfigError("multilabel label_dependence must be in [0, 1]");
    }
    return StreamSchema::multi_label(config.n_features, config.n_labels);
}

}  // namespace

MultiLabelGenerator::MultiLabelGenerator(const MultiLabelConfig& config)
    : Stream(multilabel_schema(config)), config_(config), rng_(config.seed) {
    build_weights();
}

void MultiLabelGenerator::restart() {
    rng_ = Rng(config_.seed);
    build_weights();
}

void MultiLabelGenerator::build_weights() {
    weights_.clear();
    weights_.reserve(static_cast<std::size_t>(config_.n_labels));
    const FeatureVector shared = rng_.sphere_direction(config_.n_features);
    for (int l = 0; l < config_.n_labels; ++l) {
        const FeatureVector private_dir = rng_.sphere_direction(config_.n_features);
        weights_.push_back(config_.label_dependence * shared +
                           (1.0 - config_.label_dependence) * private_dir);
    }
}

bool MultiLabelGenerator::next_into(Instance& out) {
    out.features.resize(config_.n_features);
    for (int d = 0; d < config_.n_features; ++d) {
        out.features[d] = rng_.uniform(-1.0, 1.0);
    }
    out.targets.resize(config_.n_labels);
    for (int l = 0; l < config_.n_labels; ++l) {
        out.targets[l] = weights_[static_cast<std::size_t>(l)].dot(out.features) > 0.0 ? 1 : 0;
    }
    out.weight = 1.0;
    return true;
}

}  // namespace streamml
