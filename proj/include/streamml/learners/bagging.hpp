#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "streamml/core/model.hpp"
#include "streamml/core/random.hpp"
#include "streamml/drift/adwin.hpp"

namespace streamml {

/// Builds one fresh base model for a given schema.
using ModelFactory = std::function<std::unique_ptr<StreamModel>(const StreamSchema&)>;

/// Online bagging: each incoming instance trains member i a Poisson-drawn
/// number of times, sampled from member i's own seed substream so draws do
/// not depend on ensemble size. Predictions average the member
/// distributions. Single-target only.
class OzaBaggingClassifier : public StreamModel {
public:
    OzaBaggingClassifier(StreamSchema schema, ModelFactory factory, int n_members = 10,
                         std::uint64_t seed = 1, double poisson_lambda = 1.0);

    std::size_t n_members() const { return members_.size(); }
    const StreamModel& member(std::size_t i) const { return *members_[i]; }
    double poisson_lambda() const { return lambda_; }

    /// Replaces the Poisson draw with a fixed per-member weight; pass an
    /// empty function to restore sampling.
    void set_weight_override(std::function<int(std::size_t)> override_fn) {
        weight_override_ = std::move(override_fn);
    }

    void reset() override;

protected:
    void learn_one(const Instance& inst) override;
    std::vector<ClassDistribution> infer_one(const FeatureVector& x) const override;

    int draw_weight(std::size_t member_index);
    void rebuild_member(std::size_t i);

    ModelFactory factory_;
    double lambda_;
    std::uint64_t seed_;
    std::vector<std::unique_ptr<StreamModel>> members_;
    std::vector<Rng> member_rngs_;
    std::function<int(std::size_t)> weight_override_;
};

/// Leveraging bagging: online bagging with a higher resampling rate and
/// one ADWIN per member fed that member's pre-update error. When any
/// member signals drift, the member with the highest ADWIN error estimate
/// is rebuilt from scratch together with its detector.
class LeverageBaggingClassifier final : public OzaBaggingClassifier {
public:
    LeverageBaggingClassifier(StreamSchema schema, ModelFactory factory, int n_members = 10,
                              std::uint64_t seed = 1, double poisson_lambda = 6.0,
                              double adwin_delta = 0.002, bool drift_reset = true);

    const Adwin& member_detector(std::size_t i) const { return *detectors_[i]; }

    void reset() override;

protected:
    void learn_one(const Instance& inst) override;

private:
    double adwin_delta_;
    bool drift_reset_;
    std::vector<std::unique_ptr<Adwin>> detectors_;
};

}  // namespace streamml
