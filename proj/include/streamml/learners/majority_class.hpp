#pragma once

#include <vector>

#include "streamml/core/model.hpp"

namespace streamml {

/// Baseline that ignores the features and predicts the class frequencies
/// observed so far, independently per target.
class MajorityClassClassifier final : public StreamModel {
public:
    explicit MajorityClassClassifier(StreamSchema schema) : StreamModel(std::move(schema)) {
        reset();
    }

    void reset() override {
        counts_.clear();
        for (int k : schema().target_cardinality) {
            counts_.push_back(Eigen::VectorXd::Zero(k));
        }
    }

protected:
    void learn_one(const Instance& inst) override {
        for (Eigen::Index j = 0; j < schema().n_targets(); ++j) {
            counts_[static_cast<std::size_t>(j)][inst.targets[j]] += inst.weight;
        }
    }

    std::vector<ClassDistribution> infer_one(const FeatureVector&) const override {
        std::vector<ClassDistribution> out;
        out.reserve(counts_.size());
        for (const Eigen::VectorXd& c : counts_) {
            out.push_back(ClassDistribution::from_weights(c));
        }
        return out;
    }

private:
    std::vector<Eigen::VectorXd> counts_;
};

}  // namespace streamml
