#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "streamml/core/types.hpp"

namespace streamml {

/// Cohen's kappa of a square confusion matrix (rows = truth, columns =
/// prediction). Returns 0 when chance agreement is total (p_e = 1);
/// throws DomainError on an empty matrix or zero total count.
double kappa_from_confusion(const Eigen::MatrixXd& confusion);

/// Running classification metrics: global accumulators plus accumulators
/// over a sliding window of the most recent outcomes.
///
/// Accuracy is the exact-vector-match rate. Kappa comes from a running
/// confusion matrix, pooled over targets for multi-target schemas.
/// Multi-target schemas additionally report hamming loss (mean per-label
/// disagreement) and exact match.
class MetricSet {
public:
    explicit MetricSet(StreamSchema schema, std::size_t window_size = 200);

    /// Record one (truth, prediction) outcome. Throws SchemaError when
    /// either vector disagrees with the schema's target arity.
    void update(const TargetVector& y, const TargetVector& y_hat);

    std::uint64_t n_seen() const { return n_seen_; }

    double accuracy() const;
    double kappa() const;
    double hamming_loss() const;
    double exact_match() const { return accuracy(); }

    double window_accuracy() const;
    double window_kappa() const;
    double window_hamming_loss() const;
    double window_exact_match() const { return window_accuracy(); }

    /// Metric names in the order metric_values() reports them; fixed for
    /// a given schema.
    std::vector<std::string> metric_names() const;
    std::vector<double> metric_values() const;

private:
    struct Outcome {
        TargetVector y;
        TargetVector y_hat;
    };

    struct Accumulators {
        std::int64_t count = 0;
        std::int64_t exact = 0;
        double hamming_sum = 0.0;
        Eigen::MatrixXd confusion;
    };

    static void apply(const Outcome& outcome, int direction, Accumulators& acc);

    StreamSchema schema_;
    std::size_t window_size_;
    std::uint64_t n_seen_ = 0;
    Accumulators global_;
    Accumulators window_acc_;
    std::deque<Outcome> window_;
};

}  // namespace streamml
