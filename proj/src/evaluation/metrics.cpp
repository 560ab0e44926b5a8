#include "streamml/evaluation/metrics.hpp"

#include <algorithm>
#include <utility>

namespace streamml {

double kappa_from_confusion(const Eigen::MatrixXd& confusion) {
    if (confusion.rows() == 0 || confusion.rows() != confusion.cols()) {
        throw DomainError("kappa needs a nonempty square confusion matrix");
    }
    const double total = confusion.sum();
    if (!(total > 0.0)) {
        throw DomainError("kappa needs at least one counted outcome");
    }
    const double p_o = confusion.trace() / total;
    double p_e = 0.0;
    for (Eigen::Index c = 0; c < confusion.rows(); ++c) {
        p_e += (confusion.row(c).sum() / total) * (confusion.col(c).sum() / total);
    }
    if (p_e >= 1.0) return 0.0;
    return (p_o - p_e) / (1.0 - p_e);
}

MetricSet::MetricSet(StreamSchema schema, std::size_t window_size)
    : schema_(std::move(schema)), window_size_(window_size) {
    schema_.validate();
    if (window_size_ == 0) {
        throw ConfigError("metric window size must be positive");
    }
    const int k_max = *std::max_element(schema_.target_cardinality.begin(),
                                        schema_.target_cardinality.end());
    global_.confusion = Eigen::MatrixXd::Zero(k_max, k_max);
    window_acc_.confusion = Eigen::MatrixXd::Zero(k_max, k_max);
}

void MetricSet::apply(const Outcome& outcome, int direction, Accumulators& acc) {
    const Eigen::Index n_targets = outcome.y.size();
    int disagree = 0;
    for (Eigen::Index j = 0; j < n_targets; ++j) {
        acc.confusion(outcome.y[j], outcome.y_hat[j]) += direction;
        if (outcome.y[j] != outcome.y_hat[j]) ++disagree;
    }
    acc.count += direction;
    if (disagree == 0) acc.exact += direction;
    acc.hamming_sum += direction * static_cast<double>(disagree) / static_cast<double>(n_targets);
}

void MetricSet::update(const TargetVector& y, const TargetVector& y_hat) {
    if (y.size() != schema_.n_targets() || y_hat.size() != schema_.n_targets()) {
        throw SchemaError("metric update with mismatched target arity");
    }
    for (Eigen::Index j = 0; j < y.size(); ++j) {
        const int k = schema_.target_cardinality[static_cast<std::size_t>(j)];
        if (y[j] < 0 || y[j] >= k || y_hat[j] < 0 || y_hat[j] >= k) {
            throw SchemaError("metric update with out-of-range class");
        }
    }

    const Outcome outcome{y, y_hat};
    ++n_seen_;
    apply(outcome, +1, global_);
    window_.push_back(outcome);
    apply(outcome, +1, window_acc_);
    if (window_.size() > window_size_) {
        apply(window_.front(), -1, window_acc_);
        window_.pop_front();
    }
}

namespace {

double rate(std::int64_t part, std::int64_t whole) {
    return whole == 0 ? 0.0 : static_cast<double>(part) / static_cast<double>(whole);
}

double safe_kappa(const Eigen::MatrixXd& confusion, std::int64_t count) {
    return count == 0 ? 0.0 : kappa_from_confusion(confusion);
}

}  // namespace

double MetricSet::accuracy() const { return rate(global_.exact, global_.count); }
double MetricSet::kappa() const { return safe_kappa(global_.confusion, global_.count); }
double MetricSet::hamming_loss() const {
    return global_.count == 0 ? 0.0 : global_.hamming_sum / static_cast<double>(global_.count);
}

double MetricSet::window_accuracy() const { return rate(window_acc_.exact, window_acc_.count); }
double MetricSet::window_kappa() const {
    return safe_kappa(window_acc_.confusion, window_acc_.count);
}
double MetricSet::window_hamming_loss() const {
    return window_acc_.count == 0
               ? 0.0
               : window_acc_.hamming_sum / static_cast<double>(window_acc_.count);
}

std::vector<std::string> MetricSet::metric_names() const {
    std::vector<std::string> names{"accuracy", "kappa", "window_accuracy", "window_kappa"};
    if (schema_.multi_target()) {
        names.insert(names.end(), {"hamming_loss", "exact_match", "window_hamming_loss",
                                   "window_exact_match"});
    }
    return names;
}

std::vector<double> MetricSet::metric_values() const {
    std::vector<double> values{accuracy(), kappa(), window_accuracy(), window_kappa()};
    if (schema_.multi_target()) {
        values.insert(values.end(), {hamming_loss(), exact_match(), window_hamming_loss(),
                                     window_exact_match()});
    }
    return values;
}

}  // namespace streamml
