#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "streamml/core/detector.hpp"

namespace streamml {

/// Adaptive-windowing change detector over values in [0, 1].
///
/// The window is kept as an exponential histogram: row r holds buckets of
/// 2^r elements, at most `max_buckets` per row; when a row overflows its
/// two oldest buckets merge into the next row. After every insertion the
/// split boundaries between buckets are examined oldest-first, and the
/// oldest bucket is dropped while the two sub-window means differ by at
/// least
///
///     eps_cut = sqrt( ln(4/delta) / (2m) ),   m = 1 / (1/n0 + 1/n1),
///
/// Drift is reported iff at least one bucket was dropped this step; there
/// is no warning zone. Counts are tracked exactly; sums are exact whenever
/// the inputs are exactly representable (in particular 0/1 indicators).
class Adwin final : public DriftDetector {
public:
    explicit Adwin(double delta = 0.002, int max_buckets = 5);

    /// `value` must lie in [0, 1].
    DetectionStatus update(double value) override;
    void reset() override;

    /// Elements currently retained.
    std::uint64_t width() const { return width_; }

    /// Mean of the retained window; 0 when empty.
    double estimation() const { return width_ > 0 ? total_sum_ / static_cast<double>(width_) : 0.0; }

    double total_sum() const { return total_sum_; }
    std::uint64_t n_detections() const { return n_detections_; }
    double delta() const { return delta_; }

    /// Stored mass equals the mass of the retained buckets.
    bool mass_consistent() const;

private:
    void insert(double value);
    void compress();
    bool detect_cut_and_shrink();
    void drop_oldest_bucket();
    double eps_cut(std::uint64_t n0, std::uint64_t n1) const;

    double delta_;
    int max_buckets_;
    // rows_[r] holds sums of buckets spanning 2^r elements; front = oldest.
    std::vector<std::deque<double>> rows_;
    std::uint64_t width_ = 0;
    double total_sum_ = 0.0;
    std::uint64_t n_detections_ = 0;
};

}  // namespace streamml
