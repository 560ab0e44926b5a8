#pragma once

#include <cmath>
#include <cstdint>

#include "streamml/core/detector.hpp"

namespace streamml {

/// Early drift detection method. Instead of the error rate it monitors the
/// distance (in elements) between consecutive errors: the running mean p'
/// and standard deviation s' of those distances, and the historical maximum
/// of p' + 2s'. Shrinking distances pull the ratio
/// (p' + 2s') / (p'_max + 2 s'_max) below the warning level alpha and the
/// drift level beta. Statuses are only issued after `min_errors` errors.
///
/// The first error initializes the distance origin; no distance is
/// recorded for it.
class EddmDetector final : public DriftDetector {
public:
    explicit EddmDetector(double alpha = 0.95, double beta = 0.90, int min_errors = 30)
        : alpha_(alpha), beta_(beta), min_errors_(min_errors) {
        if (!(beta > 0.0 && beta <= alpha && alpha < 1.0)) {
            throw ConfigError("eddm needs 0 < beta <= alpha < 1");
        }
        if (min_errors < 1) {
            throw ConfigError("eddm min_errors must be positive");
        }
        reset();
    }

    DetectionStatus update(double error) override {
        if (error != 0.0 && error != 1.0) {
            throw DomainError("eddm consumes binary error indicators");
        }
        ++i_;
        status_ = DetectionStatus::Normal;
        if (error != 1.0) return status_;

        ++n_errors_;
        if (last_error_at_ == 0) {
            last_error_at_ = i_;
            return status_;
        }
        const double distance = static_cast<double>(i_ - last_error_at_);
        last_error_at_ = i_;

        ++n_distances_;
        const double delta = distance - mean_;
        mean_ += delta / static_cast<double>(n_distances_);
        m2_ += delta * (distance - mean_);
        const double std_dev = std::sqrt(m2_ / static_cast<double>(n_distances_));
        const double m2s = mean_ + 2.0 * std_dev;

        if (m2s > mean_max_ + 2.0 * std_max_) {
            mean_max_ = mean_;
            std_max_ = std_dev;
        } else if (n_errors_ >= static_cast<std::uint64_t>(min_errors_)) {
            const double ratio = m2s / (mean_max_ + 2.0 * std_max_);
            if (ratio < beta_) {
                status_ = DetectionStatus::Drift;
                reset_statistics();
            } else if (ratio < alpha_) {
                status_ = DetectionStatus::Warning;
            }
        }
        return status_;
    }

    void reset() override {
        reset_statistics();
        status_ = DetectionStatus::Normal;
    }

    std::uint64_t errors_seen() const { return n_errors_; }
    double mean_distance() const { return mean_; }

private:
    void reset_statistics() {
        i_ = 0;
        n_errors_ = 0;
        n_distances_ = 0;
        last_error_at_ = 0;
        mean_ = 0.0;
        m2_ = 0.0;
        mean_max_ = 0.0;
        std_max_ = 0.0;
    }

    double alpha_;
    double beta_;
    int min_errors_;
    std::uint64_t i_ = 0;
    std::uint64_t n_errors_ = 0;
    std::uint64_t n_distances_ = 0;
    std::uint64_t last_error_at_ = 0;  // 0 = no error seen yet
    double mean_ = 0.0;
    double m2_ = 0.0;
    double mean_max_ = 0.0;
    double std_max_ = 0.0;
};

}  // namespace streamml
