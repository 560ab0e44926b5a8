#include "streamml/generators/waveform.hpp"

#include <array>

namespace streamml {

namespace {

constexpr int kFeatures = 21;

constexpr std::array<std::array<double, kFeatures>, 3> kBaseWaves{{
    {0, 1, 2, 3, 4, 5, 6, 5, 4, 3, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 2, 3, 4, 5, 6, 5, 4, 3, 2, 1, 0, 0, 0},
    {0, 0, 0, 0, 1, 2, 3, 4, 5, 6, 5, 4, 3, 2, 1, 0, 0, 0, 0, 0, 0},
}};

// Class c blends these two base waves.
constexpr std::array<std::array<int, 2>, 3> kClassWaves{{{0, 1}, {0, 2}, {1, 2}}};

}  // namespace

WaveformGenerator::WaveformGenerator(double noise_sigma, std::uint64_t seed)
    : Stream(StreamSchema::classification(kFeatures, 3)),
      noise_sigma_(noise_sigma),
      seed_(seed),
      rng_(seed) {
    if (noise_sigma < 0.0) {
        throw ConfigError("waveform noise_sigma must be nonnegative");
    }
}

void WaveformGenerator::restart() {
    rng_ = Rng(seed_);
}

void WaveformGenerator::sample_with(Instance& out, int cls, double u) {
    const auto& waves = kClassWaves[static_cast<std::size_t>(cls)];
    const auto& first = kBaseWaves[static_cast<std::size_t>(waves[0])];
    const auto& second = kBaseWaves[static_cast<std::size_t>(waves[1])];
    out.features.resize(kFeatures);
    for (int i = 0; i < kFeatures; ++i) {
        out.features[i] = u * first[static_cast<std::size_t>(i)] +
                          (1.0 - u) * second[static_cast<std::size_t>(i)] +
                          rng_.gaussian() * noise_sigma_;
    }
    out.targets.resize(1);
    out.targets[0] = cls;
    out.weight = 1.0;
}

bool WaveformGenerator::next_into(Instance& out) {
    const int cls = rng_.uniform_int(3);
    const double u = rng_.uniform();
    sample_with(out, cls, u);
    return true;
}

}  // namespace streamml
