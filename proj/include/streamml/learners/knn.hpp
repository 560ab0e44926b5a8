#pragma once

#include <cstddef>
#include <vector>

#include "streamml/core/model.hpp"
#include "streamml/learners/window_buffer.hpp"

namespace streamml {

/// k-nearest-neighbour classifier over a sliding window of the most
/// recent instances. Distances are raw Euclidean; ties in distance break
/// toward the older stored instance. Single-target only; lift to
/// multi-label with MultiOutputLearner.
class KnnClassifier : public StreamModel {
public:
    explicit KnnClassifier(StreamSchema schema, int k = 5, std::size_t window_size = 1000);

    int k() const { return k_; }
    std::size_t window_size() const { return window_.size(); }

    void reset() override { window_.clear(); }

protected:
    void learn_one(const Instance& inst) override { window_.push(inst); }

    std::vector<ClassDistribution> infer_one(const FeatureVector& x) const override;

    WindowBuffer window_;

private:
    int k_;
};

}  // namespace streamml
