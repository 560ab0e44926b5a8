#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "streamml/core/model.hpp"
#include "streamml/learners/bagging.hpp"

namespace streamml {

/// Binary-relevance lift of any single-target learner to multi-target
/// schemas: one independent base model per target, each built from the
/// factory for that target's single-output schema. Updates route (x, y_j)
/// to model j; inference passes each model's distribution through
/// unchanged.
class MultiOutputLearner final : public StreamModel {
public:
    MultiOutputLearner(StreamSchema schema, const ModelFactory& factory);

    StreamModel& target_model(std::size_t j) { return *models_[j]; }
    const StreamModel& target_model(std::size_t j) const { return *models_[j]; }

    void reset() override;

protected:
    void learn_one(const Instance& inst) override;
    std::vector<ClassDistribution> infer_one(const FeatureVector& x) const override;

private:
    std::vector<std::unique_ptr<StreamModel>> models_;
};

}  // namespace streamml
