#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "streamml/core/model.hpp"
#include "streamml/learners/gaussian_stats.hpp"

namespace streamml {

/// One-sided Hoeffding deviation bound sqrt(range^2 ln(1/delta) / (2n)).
/// Requires range > 0, delta in (0, 1], n > 0.
double hoeffding_bound(double range, double delta, double n);

/// Snapshot of one leaf split attempt, handed to the split observer so the
/// decision can be replayed against an independent gain computation.
struct SplitAttempt {
    Eigen::VectorXd class_weights;
    std::vector<std::vector<GaussianStats>> feature_stats;  // [feature][class]
    double total_weight = 0.0;
    double best_gain = 0.0;
    double second_gain = 0.0;
    double epsilon = 0.0;
    int chosen_feature = -1;
    double chosen_threshold = 0.0;
    bool split = false;
};

/// Incremental decision tree with Hoeffding-bounded split decisions.
///
/// Leaves keep per-class weights and one Gaussian summary per (feature,
/// class). Every grace_period of accumulated weight a leaf ranks features
/// by the best information gain over 10 evenly spaced probe thresholds
/// inside the pooled mean +- 3 stddev envelope, with left/right class
/// masses estimated from the Gaussian CDF. It splits when the best gain is
/// positive and either leads the runner-up by the Hoeffding bound or the
/// bound has shrunk below tau. Children start empty. Prediction routes to
/// a leaf and returns Laplace-smoothed counts, or a naive Bayes posterior
/// over the leaf summaries when enabled. Single-target only.
class HoeffdingTreeClassifier final : public StreamModel {
public:
    using SplitObserver = std::function<void(const SplitAttempt&)>;

    explicit HoeffdingTreeClassifier(StreamSchema schema, double delta = 1e-7,
                                     double tau = 0.05, int grace_period = 200,
                                     bool leaf_naive_bayes = false);

    void reset() override;

    std::size_t n_splits() const { return n_splits_; }
    std::size_t n_leaves() const { return n_splits_ + 1; }

    /// Called after every split attempt, whether or not it split.
    void set_split_observer(SplitObserver observer) { observer_ = std::move(observer); }

protected:
    void learn_one(const Instance& inst) override;
    std::vector<ClassDistribution> infer_one(const FeatureVector& x) const override;

private:
    struct Node {
        // Leaf payload; released when the node splits.
        Eigen::VectorXd class_weights;
        std::vector<std::vector<GaussianStats>> stats;  // [feature][class]
        double weight_since_attempt = 0.0;
        // Split payload.
        int feature = -1;
        double threshold = 0.0;
        std::unique_ptr<Node> left;
        std::unique_ptr<Node> right;

        bool is_leaf() const { return left == nullptr; }
    };

    std::unique_ptr<Node> make_leaf() const;
    Node& route_to_leaf(const FeatureVector& x);
    const Node& route_to_leaf(const FeatureVector& x) const;
    void attempt_split(Node& leaf);

    double delta_;
    double tau_;
    int grace_period_;
    bool leaf_naive_bayes_;
    std::unique_ptr<Node> root_;
    std::size_t n_splits_ = 0;
    SplitObserver observer_;
};

}  // namespace streamml
