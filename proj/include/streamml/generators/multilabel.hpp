#pragma once

#include <cstdint>
#include <vector>

#include "streamml/core/random.hpp"
#include "streamml/core/stream.hpp"

namespace streamml {

struct MultiLabelConfig {
    int n_features = 10;
    int n_labels = 3;
    double label_dependence = 0.5;
    std::uint64_t seed = 1;
};

/// Multi-label hyperplane stream. Features are uniform on [-1, 1]^d and
/// label l fires when w_l . x > 0. Each w_l mixes one shared direction
/// with a per-label private direction, both drawn from the unit sphere at
/// construction; label_dependence is the shared weight mass, so 1 makes
/// all labels identical and 0 makes them independent.
class MultiLabelGenerator final : public Stream {
public:
    explicit MultiLabelGenerator(const MultiLabelConfig& config);

    void restart() override;

    const MultiLabelConfig& config() const { return config_; }
    const std::vector<FeatureVector>& label_weights() const { return weights_; }

protected:
    bool next_into(Instance& out) override;

private:
    void build_weights();

    MultiLabelConfig config_;
    std::vector<FeatureVector> weights_;
    Rng rng_;
};

}  // namespace streamml
