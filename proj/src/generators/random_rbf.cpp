#include "streamml/generators/random_rbf.hpp"

namespace streamml {

RandomRbfGenerator::RandomRbfGenerator(const RbfConfig& config)
    : Stream(StreamSchema::classification(config.n_features, config.n_classes)),
      config_(config),
      sample_rng_(config.seed_sample) {
    if (config.n_centroids < 1) {
        throw ConfigError("random_rbf needs at least one centroid");
    }
    if (config.drift_speed < 0.0) {
        throw ConfigError("random_rbf drift_speed must be nonnegative");
    }
    build_centroids();
}

void RandomRbfGenerator::build_centroids() {
    Rng model_rng(config_.seed_model);
    centroids_.clear();
    centroids_.reserve(static_cast<std::size_t>(config_.n_centroids));
    for (int c = 0; c < config_.n_centroids; ++c) {
        Centroid centroid;
        centroid.center.resize(config_.n_features);
        for (int d = 0; d < config_.n_features; ++d) {
            centroid.center[d] = model_rng.uniform();
        }
        centroid.label = model_rng.uniform_int(config_.n_classes);
        centroid.stddev = model_rng.uniform() * 0.1;
        centroid.weight = 1.0 - model_rng.uniform();
        // Drawn even when drift_speed is zero so both variants share a
        // model for the same seed.
        centroid.drift_direction = model_rng.sphere_direction(config_.n_features);
        centroids_.push_back(std::move(centroid));
    }
}

void RandomRbfGenerator::restart() {
    build_centroids();
    sample_rng_ = Rng(config_.seed_sample);
}

bool RandomRbfGenerator::next_with_centroid(Instance& out, std::size_t& centroid_index) {
    double total_weight = 0.0;
    for (const Centroid& centroid : centroids_) {
        total_weight += centroid.weight;
    }
    const double pick = sample_rng_.uniform() * total_weight;
    std::size_t chosen = centroids_.size() - 1;
    double cumulative = 0.0;
    for (std::size_t i = 0; i < centroids_.size(); ++i) {
        cumulative += centroids_[i].weight;
        if (pick < cumulative) {
            chosen = i;
            break;
        }
    }
    centroid_index = chosen;

    const Centroid& centroid = centroids_[chosen];
    const FeatureVector direction = sample_rng_.sphere_direction(config_.n_features);
    const double magnitude = sample_rng_.gaussian() * centroid.stddev;
    out.features = centroid.center + direction * magnitude;
    out.targets.resize(1);
    out.targets[0] = centroid.label;
    out.weight = 1.0;

    if (config_.drift_speed > 0.0) {
        for (Centroid& moving : centroids_) {
            moving.center += moving.drift_direction * config_.drift_speed;
            for (int d = 0; d < config_.n_features; ++d) {
                if (moving.center[d] < 0.0) {
                    moving.center[d] = -moving.center[d];
                    moving.drift_direction[d] = -moving.drift_direction[d];
                } else if (moving.center[d] > 1.0) {
                    moving.center[d] = 2.0 - moving.center[d];
                    moving.drift_direction[d] = -moving.drift_direction[d];
                }
            }
        }
    }
    return true;
}

bool RandomRbfGenerator::next_into(Instance& out) {
    std::size_t index = 0;
    return next_with_centroid(out, index);
}

}  // namespace streamml
