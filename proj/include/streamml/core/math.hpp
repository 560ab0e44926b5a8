#pragma once

#include <Eigen/Core>

#include <cmath>

namespace streamml {

/// Index of the largest coefficient; ties break toward the lowest index.
template <typename Derived>
Eigen::Index argmax_lowest(const Eigen::DenseBase<Derived>& v) {
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < v.size(); ++i) {
        if (v(i) > v(best)) best = i;
    }
    return best;
}

/// Shannon entropy in bits of an unnormalized nonnegative weight vector.
/// Zero weights contribute nothing; zero total mass has zero entropy.
template <typename Derived>
double shannon_entropy(const Eigen::DenseBase<Derived>& weights) {
    const double total = weights.sum();
    if (!(total > 0.0)) return 0.0;
    double h = 0.0;
    for (Eigen::Index i = 0; i < weights.size(); ++i) {
        const double w = weights(i);
        if (w > 0.0) {
            const double p = w / total;
            h -= p * std::log2(p);
        }
    }
    return h;
}

/// Log density of N(mean, variance) at x. Variance must be positive.
inline double log_gaussian_pdf(double x, double mean, double variance) {
    static constexpr double kLogTwoPi = 1.8378770664093454836;
    const double d = x - mean;
    return -0.5 * (kLogTwoPi + std::log(variance) + d * d / variance);
}

/// Standard normal CDF.
inline double normal_cdf(double z) {
    return 0.5 * std::erfc(-z * 0.7071067811865475244);
}

}  // namespace streamml
