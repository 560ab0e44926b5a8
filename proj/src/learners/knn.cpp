#include "streamml/learners/knn.hpp"

#include <algorithm>
#include <utility>

namespace streamml {

KnnClassifier::KnnClassifier(StreamSchema schema, int k, std::size_t window_size)
    : StreamModel(std::move(schema)), window_(window_size), k_(k) {
    if (k < 1) {
        throw ConfigError("knn needs k >= 1");
    }
    if (this->schema().multi_target()) {
        throw ConfigError("knn is single-target; wrap it in a multi-output learner");
    }
}

std::vector<ClassDistribution> KnnClassifier::infer_one(const FeatureVector& x) const {
    const int n_classes = schema().target_cardinality[0];
    if (window_.size() == 0) {
        return {ClassDistribution::uniform(n_classes)};
    }

    // Squared distances keep the ordering; index is the insertion order,
    // so a stable sort makes older instances win distance ties.
    std::vector<std::pair<double, std::size_t>> order;
    order.reserve(window_.size());
    for (std::size_t i = 0; i < window_.size(); ++i) {
        order.emplace_back((window_[i].features - x).squaredNorm(), i);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    const std::size_t n_neighbors = std::min(static_cast<std::size_t>(k_), order.size());
    Eigen::VectorXd counts = Eigen::VectorXd::Zero(n_classes);
    for (std::size_t i = 0; i < n_neighbors; ++i) {
        const Instance& neighbor = window_[order[i].second];
        counts[neighbor.targets[0]] += neighbor.weight;
    }
    return {ClassDistribution::from_weights(counts)};
}

}  // namespace streamml
