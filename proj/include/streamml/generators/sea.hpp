#pragma once

#include <cstdint>

#include "streamml/core/random.hpp"
#include "streamml/core/stream.hpp"

namespace streamml {

/// SEA concepts stream: three features drawn uniformly from [0, 10), the
/// label is 1 when x0 + x1 <= theta and the third feature is irrelevant.
/// Each of the four variants fixes a different theta (8, 9, 7, 9.5). A
/// noise fraction flips the label with that probability.
class SeaGenerator final : public Stream {
public:
    SeaGenerator(int variant, double noise_fraction, std::uint64_t seed);

    void restart() override;

    /// Generation step exposing the pre-flip label, for noise-rate checks.
    bool next_with_clean(Instance& out, int& clean_label);

    int variant() const { return variant_; }
    double noise_fraction() const { return noise_fraction_; }
    double theta() const { return theta_; }

protected:
    bool next_into(Instance& out) override;

private:
    int variant_;
    double noise_fraction_;
    double theta_;
    std::uint64_t seed_;
    Rng rng_;
};

}  // namespace streamml
