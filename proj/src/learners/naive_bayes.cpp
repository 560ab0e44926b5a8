#include "streamml/learners/naive_bayes.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "streamml/core/math.hpp"

namespace streamml {

GaussianNbClassifier::GaussianNbClassifier(StreamSchema schema)
    : StreamModel(std::move(schema)) {
    if (this->schema().multi_target()) {
        throw ConfigError("naive bayes is single-target; wrap it in a multi-output learner");
    }
    reset();
}

void GaussianNbClassifier::reset() {
    const int n_classes = schema().target_cardinality[0];
    class_weight_ = Eigen::VectorXd::Zero(n_classes);
    stats_.assign(static_cast<std::size_t>(n_classes),
                  std::vector<GaussianStats>(static_cast<std::size_t>(schema().n_features)));
}

void GaussianNbClassifier::learn_one(const Instance& inst) {
    const int cls = inst.targets[0];
    class_weight_[cls] += inst.weight;
    auto& per_feature = stats_[static_cast<std::size_t>(cls)];
    for (Eigen::Index f = 0; f < schema().n_features; ++f) {
        per_feature[static_cast<std::size_t>(f)].add(inst.features[f], inst.weight);
    }
}

std::vector<ClassDistribution> GaussianNbClassifier::infer_one(const FeatureVector& x) const {
    const Eigen::Index n_classes = class_weight_.size();
    const double total = class_weight_.sum();
    if (total <= 0.0) {
        return {ClassDistribution::uniform(n_classes)};
    }

    Eigen::VectorXd log_score =
        Eigen::VectorXd::Constant(n_classes, -std::numeric_limits<double>::infinity());
    for (Eigen::Index c = 0; c < n_classes; ++c) {
        if (class_weight_[c] <= 0.0) continue;
        double score = std::log(class_weight_[c] / total);
        const auto& per_feature = stats_[static_cast<std::size_t>(c)];
        for (Eigen::Index f = 0; f < schema().n_features; ++f) {
            const GaussianStats& s = per_feature[static_cast<std::size_t>(f)];
            score += log_gaussian_pdf(x[f], s.mean, s.variance() + kVarianceFloor);
        }
        log_score[c] = score;
    }

    const double peak = log_score.maxCoeff();
    Eigen::VectorXd weights(n_classes);
    for (Eigen::Index c = 0; c < n_classes; ++c) {
        weights[c] = std::isfinite(log_score[c]) ? std::exp(log_score[c] - peak) : 0.0;
    }
    return {ClassDistribution::from_weights(weights)};
}

}  // namespace streamml
