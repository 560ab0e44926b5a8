#include "streamml/core/model.hpp"

#include "streamml/core/math.hpp"

namespace streamml {

void StreamModel::partial_fit(std::span<const Instance> batch,
                              const std::optional<std::vector<int>>& classes) {
    if (classes && *classes != schema_.target_cardinality) {
        throw SchemaError("declared classes disagree with the model's schema");
    }
    for (const Instance& inst : batch) {
        validate_instance(inst, schema_);
    }
    for (const Instance& inst : batch) {
        learn_one(inst);
    }
}

void StreamModel::fit(std::span<const Instance> batch,
                      const std::optional<std::vector<int>>& classes) {
    reset();
    partial_fit(batch, classes);
}

void StreamModel::check_features(const FeatureVector& x) const {
    if (x.size() != schema_.n_features) {
        throw SchemaError("feature vector has length " + std::to_string(x.size()) +
                          ", schema expects " + std::to_string(schema_.n_features));
    }
}

std::vector<TargetVector> StreamModel::predict(std::span<const FeatureVector> xs) const {
    std::vector<TargetVector> out;
    out.reserve(xs.size());
    for (const FeatureVector& x : xs) {
        out.push_back(predict_one(x));
    }
    return out;
}

std::vector<std::vector<ClassDistribution>> StreamModel::predict_proba(
    std::span<const FeatureVector> xs) const {
    std::vector<std::vector<ClassDistribution>> out;
    out.reserve(xs.size());
    for (const FeatureVector& x : xs) {
        out.push_back(predict_proba_one(x));
    }
    return out;
}

TargetVector StreamModel::predict_one(const FeatureVector& x) const {
    const auto dists = predict_proba_one(x);
    TargetVector y(schema_.n_targets());
    for (Eigen::Index j = 0; j < y.size(); ++j) {
        y[j] = dists[static_cast<std::size_t>(j)].argmax();
    }
    return y;
}

std::vector<ClassDistribution> StreamModel::predict_proba_one(const FeatureVector& x) const {
    check_features(x);
    return infer_one(x);
}

}  // namespace streamml
