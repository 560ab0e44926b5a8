#pragma once

#include <cstdint>

#include "streamml/core/random.hpp"
#include "streamml/core/stream.hpp"

namespace streamml {

/// Waveform stream from the CART literature: 21 features, 3 classes. Each
/// class blends two of three triangular base waves with a uniform convex
/// weight and adds Gaussian noise to every feature.
class WaveformGenerator final : public Stream {
public:
    explicit WaveformGenerator(double noise_sigma, std::uint64_t seed);

    void restart() override;

    double noise_sigma() const { return noise_sigma_; }

    /// Deterministic blend for a fixed class and convex weight; noise is
    /// still drawn from the stream's generator.
    void sample_with(Instance& out, int cls, double u);

protected:
    bool next_into(Instance& out) override;

private:
    double noise_sigma_;
    std::uint64_t seed_;
    Rng rng_;
};

}  // namespace streamml
