#include "streamml/core/types.hpp"

#include <cmath>

namespace streamml {

std::string StreamSchema::feature_name(Eigen::Index i) const {
    if (i < static_cast<Eigen::Index>(feature_names.size())) {
        return feature_names[static_cast<std::size_t>(i)];
    }
    return "x" + std::to_string(i);
}

std::string StreamSchema::target_name(Eigen::Index j) const {
    if (j < static_cast<Eigen::Index>(target_names.size())) {
        return target_names[static_cast<std::size_t>(j)];
    }
    return "y" + std::to_string(j);
}

void StreamSchema::validate() const {
    if (n_features <= 0) {
        throw SchemaError("schema requires a positive feature count");
    }
    if (target_cardinality.empty()) {
        throw SchemaError("schema requires at least one target");
    }
    for (std::size_t j = 0; j < target_cardinality.size(); ++j) {
        if (target_cardinality[j] < 2) {
            throw SchemaError("target " + std::to_string(j) +
                              " needs at least two classes, got " +
                              std::to_string(target_cardinality[j]));
        }
    }
}

bool StreamSchema::compatible_with(const StreamSchema& other) const {
    return n_features == other.n_features &&
           target_cardinality == other.target_cardinality;
}

StreamSchema StreamSchema::classification(Eigen::Index n_features, int n_classes) {
    StreamSchema schema;
    schema.n_features = n_features;
    schema.target_cardinality = {n_classes};
    schema.validate();
    return schema;
}

StreamSchema StreamSchema::multi_label(Eigen::Index n_features, Eigen::Index n_labels) {
    StreamSchema schema;
    schema.n_features = n_features;
    schema.target_cardinality.assign(static_cast<std::size_t>(n_labels), 2);
    schema.validate();
    return schema;
}

StreamSchema StreamSchema::single_target(Eigen::Index j) const {
    StreamSchema schema;
    schema.n_features = n_features;
    schema.target_cardinality = {target_cardinality.at(static_cast<std::size_t>(j))};
    schema.feature_names = feature_names;
    schema.target_names = {target_name(j)};
    return schema;
}

bool operator==(const Instance& a, const Instance& b) {
    return a.weight == b.weight && a.features == b.features && a.targets == b.targets;
}

void validate_instance(const Instance& inst, const StreamSchema& schema) {
    if (inst.features.size() != schema.n_features) {
        throw SchemaError("feature vector has length " +
                          std::to_string(inst.features.size()) + ", schema expects " +
                          std::to_string(schema.n_features));
    }
    if (inst.targets.size() != schema.n_targets()) {
        throw SchemaError("target vector has length " +
                          std::to_string(inst.targets.size()) + ", schema expects " +
                          std::to_string(schema.n_targets()));
    }
    for (Eigen::Index j = 0; j < inst.targets.size(); ++j) {
        const int k = schema.target_cardinality[static_cast<std::size_t>(j)];
        if (inst.targets[j] < 0 || inst.targets[j] >= k) {
            throw UndeclaredClassError("target " + std::to_string(j) + " value " +
                                       std::to_string(inst.targets[j]) +
                                       " outside declared classes [0, " +
                                       std::to_string(k) + ")");
        }
    }
    if (!(inst.weight >= 0.0)) {
        throw DomainError("instance weight must be nonnegative");
    }
}

ClassDistribution::ClassDistribution(Eigen::VectorXd probs) : probs_(std::move(probs)) {
    if (probs_.size() == 0) {
        throw DomainError("class distribution cannot be empty");
    }
    if ((probs_.array() < 0.0).any()) {
        throw DomainError("class distribution entries must be nonnegative");
    }
    if (std::abs(probs_.sum() - 1.0) > 1e-9) {
        throw DomainError("class distribution must sum to 1 within 1e-9");
    }
}

ClassDistribution ClassDistribution::uniform(Eigen::Index n_classes) {
    ClassDistribution d;
    d.probs_ = Eigen::VectorXd::Constant(n_classes, 1.0 / static_cast<double>(n_classes));
    return d;
}

ClassDistribution ClassDistribution::one_hot(Eigen::Index n_classes, Eigen::Index cls) {
    ClassDistribution d;
    d.probs_ = Eigen::VectorXd::Zero(n_classes);
    d.probs_[cls] = 1.0;
    return d;
}

ClassDistribution ClassDistribution::from_weights(
    const Eigen::Ref<const Eigen::VectorXd>& weights) {
    const double total = weights.sum();
    if (!(total > 0.0)) {
        return uniform(weights.size());
    }
    ClassDistribution d;
    d.probs_ = weights / total;
    return d;
}

int ClassDistribution::argmax() const {
    int best = 0;
    for (Eigen::Index i = 1; i < probs_.size(); ++i) {
        if (probs_[i] > probs_[best]) {
            best = static_cast<int>(i);
        }
    }
    return best;
}

std::string to_string(DetectionStatus status) {
    switch (status) {
        case DetectionStatus::Normal: return "normal";
        case DetectionStatus::Warning: return "warning";
        case DetectionStatus::Drift: return "drift";
    }
    return "unknown";
}

}  // namespace streamml
