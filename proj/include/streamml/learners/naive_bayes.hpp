#pragma once

#include <vector>

#include "streamml/core/model.hpp"
#include "streamml/learners/gaussian_stats.hpp"

namespace streamml {

/// Gaussian naive Bayes over a single target. Keeps one running Gaussian
/// per (class, feature) plus weighted class priors; the posterior is
/// computed in log space with a small variance floor. Classes never seen
/// get probability zero once any class has been seen.
class GaussianNbClassifier final : public StreamModel {
public:
    explicit GaussianNbClassifier(StreamSchema schema);

    void reset() override;

    double class_weight(int cls) const { return class_weight_[cls]; }

protected:
    void learn_one(const Instance& inst) override;
    std::vector<ClassDistribution> infer_one(const FeatureVector& x) const override;

private:
    Eigen::VectorXd class_weight_;
    // stats_[class][feature]
    std::vector<std::vector<GaussianStats>> stats_;
};

}  // namespace streamml
