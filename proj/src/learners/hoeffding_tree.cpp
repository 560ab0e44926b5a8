#include "streamml/learners/hoeffding_tree.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "streamml/core/math.hpp"

namespace streamml {

namespace {

constexpr int kProbesPerFeature = 10;

struct FeatureMerit {
    double gain = 0.0;
    double threshold = 0.0;
};

}  // namespace

double hoeffding_bound(double range, double delta, double n) {
    if (!(range > 0.0)) throw DomainError("hoeffding_bound requires range > 0");
    if (!(delta > 0.0) || delta > 1.0) throw DomainError("hoeffding_bound requires delta in (0, 1]");
    if (!(n > 0.0)) throw DomainError("hoeffding_bound requires n > 0");
    return std::sqrt(range * range * std::log(1.0 / delta) / (2.0 * n));
}

HoeffdingTreeClassifier::HoeffdingTreeClassifier(StreamSchema schema, double delta, double tau,
                                                 int grace_period, bool leaf_naive_bayes)
    : StreamModel(std::move(schema)),
      delta_(delta),
      tau_(tau),
      grace_period_(grace_period),
      leaf_naive_bayes_(leaf_naive_bayes) {
    if (this->schema().multi_target()) {
        throw ConfigError("hoeffding tree is single-target; wrap it in a multi-output learner");
    }
    if (!(delta > 0.0) || delta >= 1.0) {
        throw ConfigError("hoeffding tree delta must be in (0, 1)");
    }
    if (tau < 0.0) {
        throw ConfigError("hoeffding tree tau must be nonnegative");
    }
    if (grace_period < 1) {
        throw ConfigError("hoeffding tree grace_period must be positive");
    }
    root_ = make_leaf();
}

void HoeffdingTreeClassifier::reset() {
    root_ = make_leaf();
    n_splits_ = 0;
}

std::unique_ptr<HoeffdingTreeClassifier::Node> HoeffdingTreeClassifier::make_leaf() const {
    auto node = std::make_unique<Node>();
    const int n_classes = schema().target_cardinality[0];
    node->class_weights = Eigen::VectorXd::Zero(n_classes);
    node->stats.assign(static_cast<std::size_t>(schema().n_features),
                       std::vector<GaussianStats>(static_cast<std::size_t>(n_classes)));
    return node;
}

HoeffdingTreeClassifier::Node& HoeffdingTreeClassifier::route_to_leaf(const FeatureVector& x) {
    Node* node = root_.get();
    while (!node->is_leaf()) {
        node = x[node->feature] <= node->threshold ? node->left.get() : node->right.get();
    }
    return *node;
}

const HoeffdingTreeClassifier::Node& HoeffdingTreeClassifier::route_to_leaf(
    const FeatureVector& x) const {
    const Node* node = root_.get();
    while (!node->is_leaf()) {
        node = x[node->feature] <= node->threshold ? node->left.get() : node->right.get();
    }
    return *node;
}

void HoeffdingTreeClassifier::learn_one(const Instance& inst) {
    Node& leaf = route_to_leaf(inst.features);
    const int cls = inst.targets[0];
    leaf.class_weights[cls] += inst.weight;
    for (Eigen::Index f = 0; f < schema().n_features; ++f) {
        leaf.stats[static_cast<std::size_t>(f)][static_cast<std::size_t>(cls)].add(
            inst.features[f], inst.weight);
    }
    leaf.weight_since_attempt += inst.weight;
    if (leaf.weight_since_attempt >= static_cast<double>(grace_period_)) {
        leaf.weight_since_attempt = 0.0;
        attempt_split(leaf);
    }
}

void HoeffdingTreeClassifier::attempt_split(Node& leaf) {
    const Eigen::Index n_classes = leaf.class_weights.size();
    const double total = leaf.class_weights.sum();
    if (total <= 0.0) return;
    const double h0 = shannon_entropy(leaf.class_weights);

    // Best probe threshold per feature; a feature with no usable probe
    // keeps merit 0, the merit of not splitting.
    std::vector<FeatureMerit> merits(static_cast<std::size_t>(schema().n_features));
    for (Eigen::Index f = 0; f < schema().n_features; ++f) {
        const auto& per_class = leaf.stats[static_cast<std::size_t>(f)];
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (Eigen::Index c = 0; c < n_classes; ++c) {
            const GaussianStats& s = per_class[static_cast<std::size_t>(c)];
            if (s.weight <= 0.0) continue;
            const double spread = 3.0 * std::sqrt(s.variance());
            lo = std::min(lo, s.mean - spread);
            hi = std::max(hi, s.mean + spread);
        }
        if (!(hi > lo)) continue;

        FeatureMerit& merit = merits[static_cast<std::size_t>(f)];
        Eigen::VectorXd left(n_classes);
        Eigen::VectorXd right(n_classes);
        for (int i = 1; i <= kProbesPerFeature; ++i) {
            const double t = lo + (hi - lo) * i / (kProbesPerFeature + 1.0);
            for (Eigen::Index c = 0; c < n_classes; ++c) {
                const GaussianStats& s = per_class[static_cast<std::size_t>(c)];
                const double w = leaf.class_weights[c];
                if (w <= 0.0) {
                    left[c] = 0.0;
                    right[c] = 0.0;
                    continue;
                }
                const double sigma = std::sqrt(s.variance() + kVarianceFloor);
                left[c] = w * normal_cdf((t - s.mean) / sigma);
                right[c] = w - left[c];
            }
            const double w_left = left.sum();
            const double w_right = right.sum();
            const double gain = h0 - (w_left / total) * shannon_entropy(left) -
                                (w_right / total) * shannon_entropy(right);
            if (gain > merit.gain) {
                merit.gain = gain;
                merit.threshold = t;
            }
        }
    }

    std::size_t best_f = 0;
    for (std::size_t f = 1; f < merits.size(); ++f) {
        if (merits[f].gain > merits[best_f].gain) best_f = f;
    }
    double second_gain = 0.0;
    for (std::size_t f = 0; f < merits.size(); ++f) {
        if (f != best_f) second_gain = std::max(second_gain, merits[f].gain);
    }
    const double best_gain = merits[best_f].gain;
    const double epsilon =
        hoeffding_bound(std::log2(static_cast<double>(n_classes)), delta_, total);
    const bool split = best_gain > 0.0 && (best_gain - second_gain > epsilon || epsilon < tau_);

    if (observer_) {
        SplitAttempt attempt;
        attempt.class_weights = leaf.class_weights;
        attempt.feature_stats = leaf.stats;
        attempt.total_weight = total;
        attempt.best_gain = best_gain;
        attempt.second_gain = second_gain;
        attempt.epsilon = epsilon;
        attempt.chosen_feature = best_gain > 0.0 ? static_cast<int>(best_f) : -1;
        attempt.chosen_threshold = best_gain > 0.0 ? merits[best_f].threshold : 0.0;
        attempt.split = split;
        observer_(attempt);
    }

    if (!split) return;
    ++n_splits_;
    leaf.feature = static_cast<int>(best_f);
    leaf.threshold = merits[best_f].threshold;
    leaf.left = make_leaf();
    leaf.right = make_leaf();
    leaf.class_weights.resize(0);
    leaf.stats.clear();
    leaf.stats.shrink_to_fit();
}

std::vector<ClassDistribution> HoeffdingTreeClassifier::infer_one(const FeatureVector& x) const {
    const Node& leaf = route_to_leaf(x);
    const Eigen::Index n_classes = leaf.class_weights.size();
    const double total = leaf.class_weights.sum();

    if (leaf_naive_bayes_ && total > 0.0) {
        Eigen::VectorXd log_score =
            Eigen::VectorXd::Constant(n_classes, -std::numeric_limits<double>::infinity());
        for (Eigen::Index c = 0; c < n_classes; ++c) {
            const double w = leaf.class_weights[c];
            if (w <= 0.0) continue;
            double score = std::log(w / total);
            for (Eigen::Index f = 0; f < schema().n_features; ++f) {
                const GaussianStats& s =
                    leaf.stats[static_cast<std::size_t>(f)][static_cast<std::size_t>(c)];
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

    const Eigen::VectorXd smoothed = leaf.class_weights.array() + 1.0;
    return {ClassDistribution::from_weights(smoothed)};
}

}  // namespace streamml
