#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "streamml/core/detector.hpp"

namespace streamml {

/// Drift detection method over a binary error stream. Tracks the running
/// error rate p_i with deviation s_i = sqrt(p_i (1-p_i) / i) and the best
/// (p_min, s_min) pair seen; elevated p_i + s_i relative to that pair
/// raises Warning at two deviations and Drift at three, after which the
/// detector resets itself.
///
/// The minima are only recorded once at least one error has been observed,
/// which keeps a long error-free prefix from freezing (0, 0) as the best
/// pair and alarming on the first real mistake.
class DdmDetector final : public DriftDetector {
public:
    explicit DdmDetector(int min_num_instances = 30)
        : min_num_instances_(min_num_instances) {
        if (min_num_instances < 1) {
            throw ConfigError("ddm min_num_instances must be positive");
        }
        reset();
    }

    DetectionStatus update(double error) override {
        if (error != 0.0 && error != 1.0) {
            throw DomainError("ddm consumes binary error indicators");
        }
        ++i_;
        p_ += (error - p_) / static_cast<double>(i_);
        s_ = std::sqrt(p_ * (1.0 - p_) / static_cast<double>(i_));
        if (error == 1.0) seen_error_ = true;

        status_ = DetectionStatus::Normal;
        if (i_ >= static_cast<std::uint64_t>(min_num_instances_) && seen_error_) {
            if (p_ + s_ < p_min_ + s_min_) {
                p_min_ = p_;
                s_min_ = s_;
            }
            if (p_ + s_ >= p_min_ + 3.0 * s_min_) {
                status_ = DetectionStatus::Drift;
                reset_statistics();
            } else if (p_ + s_ >= p_min_ + 2.0 * s_min_) {
                status_ = DetectionStatus::Warning;
            }
        }
        return status_;
    }

    void reset() override {
        reset_statistics();
        status_ = DetectionStatus::Normal;
    }

    std::uint64_t samples_seen() const { return i_; }
    double error_rate() const { return p_; }

private:
    void reset_statistics() {
        i_ = 0;
        p_ = 0.0;
        s_ = 0.0;
        p_min_ = std::numeric_limits<double>::infinity();
        s_min_ = std::numeric_limits<double>::infinity();
        seen_error_ = false;
    }

    int min_num_instances_;
    std::uint64_t i_ = 0;
    double p_ = 0.0;
    double s_ = 0.0;
    double p_min_ = 0.0;
    double s_min_ = 0.0;
    bool seen_error_ = false;
};

}  // namespace streamml
