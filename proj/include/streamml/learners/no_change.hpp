#pragma once

#include <optional>
#include <vector>

#include "streamml/core/model.hpp"

namespace streamml {

/// Baseline that predicts the most recently observed target vector.
class NoChangeClassifier final : public StreamModel {
public:
    explicit NoChangeClassifier(StreamSchema schema) : StreamModel(std::move(schema)) {}

    void reset() override { last_.reset(); }

protected:
    void learn_one(const Instance& inst) override { last_ = inst.targets; }

    std::vector<ClassDistribution> infer_one(const FeatureVector&) const override {
        std::vector<ClassDistribution> out;
        out.reserve(static_cast<std::size_t>(schema().n_targets()));
        for (Eigen::Index j = 0; j < schema().n_targets(); ++j) {
            const int k = schema().target_cardinality[static_cast<std::size_t>(j)];
            if (last_.has_value()) {
                out.push_back(ClassDistribution::one_hot(k, (*last_)[j]));
            } else {
                out.push_back(ClassDistribution::uniform(k));
            }
        }
        return out;
    }

private:
    std::optional<TargetVector> last_;
};

}  // namespace streamml
