#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <random>

#include "streamml/core/types.hpp"

namespace streamml {

/// SplitMix64 step; used for seed derivation only.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// The (index+1)-th output of a SplitMix64 stream seeded with `master`.
/// This is the documented derivation of all component seeds from the
/// experiment master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t state = master;
    std::uint64_t out = 0;
    for (std::uint64_t i = 0; i <= index; ++i) {
        out = splitmix64(state);
    }
    return out;
}

/// Seeded random source with fixed, self-contained sampling routines so
/// that identical seeds reproduce identical streams regardless of the
/// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform on [a, b).
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Uniform integer in [0, n). Unbiased via rejection.
    int uniform_int(int n) {
        if (n <= 0) throw DomainError("uniform_int requires n > 0");
        const std::uint64_t bound = static_cast<std::uint64_t>(n);
        const std::uint64_t threshold = (0ULL - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return static_cast<int>(r % bound);
        }
    }

    /// Standard normal via the Marsaglia polar method.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u = 0.0, v = 0.0, s = 0.0;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

    double gaussian(double mean, double stddev) { return mean + stddev * gaussian(); }

    /// Poisson sample by CDF inversion; suitable for the small rates used
    /// by the online bagging schemes.
    int poisson(double lambda) {
        if (!(lambda >= 0.0)) throw DomainError("poisson requires lambda >= 0");
        if (lambda == 0.0) return 0;
        const double u = uniform();
        double p = std::exp(-lambda);
        double cdf = p;
        int k = 0;
        const int cap = static_cast<int>(10.0 * lambda) + 100;
        while (u > cdf && k < cap) {
            ++k;
            p *= lambda / static_cast<double>(k);
            cdf += p;
        }
        return k;
    }

    /// Uniform direction on the unit sphere in `dim` dimensions.
    Eigen::VectorXd sphere_direction(Eigen::Index dim) {
        Eigen::VectorXd v(dim);
        double norm = 0.0;
        do {
            for (Eigen::Index i = 0; i < dim; ++i) v[i] = gaussian();
            norm = v.norm();
        } while (norm < 1e-12);
        return v / norm;
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace streamml
