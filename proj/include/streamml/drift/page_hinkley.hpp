#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "streamml/core/detector.hpp"

namespace streamml {

/// Page-Hinkley test for upward shifts of the input mean, the direction
/// that matters when the input is an error indicator. Accumulates
/// m_T = sum(x_t - mean_t - delta) together with its running minimum M_T
/// and signals Drift once m_T - M_T exceeds lambda after the warm-up;
/// the detector then resets itself. There is no warning zone.
class PageHinkleyDetector final : public DriftDetector {
public:
    explicit PageHinkleyDetector(double delta = 0.005, double lambda = 50.0,
                                 int min_instances = 30)
        : delta_(delta), lambda_(lambda), min_instances_(min_instances) {
        if (delta < 0.0) {
            throw ConfigError("page-hinkley delta must be nonnegative");
        }
        if (lambda <= 0.0) {
            throw ConfigError("page-hinkley lambda must be positive");
        }
        if (min_instances < 1) {
            throw ConfigError("page-hinkley min_instances must be positive");
        }
        reset();
    }

    DetectionStatus update(double value) override {
        if (!std::isfinite(value)) {
            throw DomainError("page-hinkley consumes finite values");
        }
        ++t_;
        mean_ += (value - mean_) / static_cast<double>(t_);
        m_sum_ += value - mean_ - delta_;
        m_min_ = std::min(m_min_, m_sum_);

        status_ = DetectionStatus::Normal;
        if (t_ >= static_cast<std::uint64_t>(min_instances_) && m_sum_ - m_min_ > lambda_) {
            status_ = DetectionStatus::Drift;
            reset_statistics();
        }
        return status_;
    }

    void reset() override {
        reset_statistics();
        status_ = DetectionStatus::Normal;
    }

    std::uint64_t samples_seen() const { return t_; }
    double mean() const { return mean_; }

private:
    void reset_statistics() {
        t_ = 0;
        mean_ = 0.0;
        m_sum_ = 0.0;
        m_min_ = 0.0;
    }

    double delta_;
    double lambda_;
    int min_instances_;
    std::uint64_t t_ = 0;
    double mean_ = 0.0;
    double m_sum_ = 0.0;
    double m_min_ = 0.0;
};

}  // namespace streamml
