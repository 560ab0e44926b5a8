#pragma once

namespace streamml {

/// Added to every estimated variance before it divides anything, so
/// constant features stay finite.
inline constexpr double kVarianceFloor = 1e-9;

/// One-pass weighted mean and variance accumulator.
struct GaussianStats {
    double weight = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x, double w = 1.0) {
        if (w <= 0.0) return;
        weight += w;
        const double delta = x - mean;
        mean += (w / weight) * delta;
        m2 += w * delta * (x - mean);
    }

    /// Population variance of the weighted sample; 0 before any data.
    double variance() const { return weight > 0.0 ? m2 / weight : 0.0; }
};

}  // namespace streamml
