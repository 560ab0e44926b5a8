#include "streamml/generators/sea.hpp"

#include <array>

namespace streamml {

namespace {

constexpr std::array<double, 4> kThetas{8.0, 9.0, 7.0, 9.5};

}  // namespace

SeaGenerator::SeaGenerator(int variant, double noise_fraction, std::uint64_t seed)
    : Stream(StreamSchema::classification(3, 2)),
      variant_(variant),
      noise_fraction_(noise_fraction),
      seed_(seed),
      rng_(seed) {
    if (variant < 0 || variant >= static_cast<int>(kThetas.size())) {
        throw ConfigError("sea variant must be in [0, 3]");
    }
    if (noise_fraction < 0.0 || noise_fraction >= 1.0) {
        throw ConfigError("sea noise_fraction must be in [0, 1)");
    }
    theta_ = kThetas[static_cast<std::size_t>(variant)];
}

void SeaGenerator::restart() {
    rng_ = Rng(seed_);
}

bool SeaGenerator::next_with_clean(Instance& out, int& clean_label) {
    out.features.resize(3);
    for (int i = 0; i < 3; ++i) {
        out.features[i] = rng_.uniform(0.0, 10.0);
    }
    // The noise draw happens unconditionally so the feature sequence does
    // not depend on the noise fraction.
    const double u = rng_.uniform();
    clean_label = (out.features[0] + out.features[1] <= theta_) ? 1 : 0;
    int label = clean_label;
    if (u < noise_fraction_) {
        label = 1 - label;
    }
    out.targets.resize(1);
    out.targets[0] = label;
    out.weight = 1.0;
    return true;
}

bool SeaGenerator::next_into(Instance& out) {
    int clean = 0;
    return next_with_clean(out, clean);
}

}  // namespace streamml
