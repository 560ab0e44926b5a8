#pragma once

#include <cstdint>
#include <vector>

#include "streamml/core/random.hpp"
#include "streamml/core/stream.hpp"

namespace streamml {

struct RbfConfig {
    int n_features = 10;
    int n_classes = 2;
    int n_centroids = 50;
    double drift_speed = 0.0;
    std::uint64_t seed_model = 1;
    std::uint64_t seed_sample = 1;
};

/// Random radial basis function stream. A fixed set of centroids is drawn
/// once from the model seed; each centroid has a centre in [0, 1)^d, a
/// class label, a standard deviation and a selection weight. Samples pick
/// a centroid with probability proportional to its weight and offset the
/// centre by a Gaussian-length step along a uniformly random direction.
/// With a nonzero drift speed every centroid translates along its own
/// direction after each sample, reflecting off the unit box walls.
class RandomRbfGenerator final : public Stream {
public:
    struct Centroid {
        FeatureVector center;
        int label = 0;
        double stddev = 0.0;
        double weight = 0.0;
        FeatureVector drift_direction;
    };

    explicit RandomRbfGenerator(const RbfConfig& config);

    void restart() override;

    const RbfConfig& config() const { return config_; }

    /// Mutable so tests can pin weights or centres directly.
    std::vector<Centroid>& centroids() { return centroids_; }
    const std::vector<Centroid>& centroids() const { return centroids_; }

    /// Generation step exposing which centroid produced the sample.
    bool next_with_centroid(Instance& out, std::size_t& centroid_index);

protected:
    bool next_into(Instance& out) override;

private:
    void build_centroids();

    RbfConfig config_;
    std::vector<Centroid> centroids_;
    Rng sample_rng_;
};

}  // namespace streamml
