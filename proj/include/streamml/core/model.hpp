#pragma once

#include <optional>
#include <span>
#include <vector>

#include "streamml/core/types.hpp"

namespace streamml {

/// Base contract implemented by every incremental learner.
///
/// A model is bound to a schema at construction; the schema declares every
/// class that can ever appear, which the count-based learners need before
/// the first update. Training is strictly incremental: partial_fit uses
/// only the instances handed to it, and fit() is reset-then-partial_fit
/// over one batch, not a bridge to batch frameworks.
///
/// Untrained models fall back to the uniform distribution from
/// predict_proba, hence class 0 from predict. predict() is always the
/// lowest-index argmax of predict_proba().
class StreamModel {
public:
    explicit StreamModel(StreamSchema schema) : schema_(std::move(schema)) {
        schema_.validate();
    }
    virtual ~StreamModel() = default;

    const StreamSchema& schema() const { return schema_; }

    /// Incrementally train on a batch. `classes`, when given, re-declares
    /// the per-target class cardinalities and must match the schema.
    /// The whole batch is validated before any state changes.
    void partial_fit(std::span<const Instance> batch,
                     const std::optional<std::vector<int>>& classes = std::nullopt);

    /// Reset, then train once over the batch in its original order.
    void fit(std::span<const Instance> batch,
             const std::optional<std::vector<int>>& classes = std::nullopt);

    std::vector<TargetVector> predict(std::span<const FeatureVector> xs) const;

    /// One ClassDistribution per target, per queried instance.
    std::vector<std::vector<ClassDistribution>> predict_proba(
        std::span<const FeatureVector> xs) const;

    void partial_fit_one(const Instance& inst) { partial_fit({&inst, 1}); }
    TargetVector predict_one(const FeatureVector& x) const;
    std::vector<ClassDistribution> predict_proba_one(const FeatureVector& x) const;

    /// Forget everything learned; hyperparameters are preserved.
    virtual void reset() = 0;

protected:
    /// Consume one validated instance.
    virtual void learn_one(const Instance& inst) = 0;

    /// Distributions for one validated feature vector, one per target.
    virtual std::vector<ClassDistribution> infer_one(const FeatureVector& x) const = 0;

private:
    void check_features(const FeatureVector& x) const;

    StreamSchema schema_;
};

}  // namespace streamml
