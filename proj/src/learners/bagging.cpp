#include "streamml/learners/bagging.hpp"

#include <utility>

namespace streamml {

OzaBaggingClassifier::OzaBaggingClassifier(StreamSchema schema, ModelFactory factory,
                                           int n_members, std::uint64_t seed,
                                           double poisson_lambda)
    : StreamModel(std::move(schema)),
      factory_(std::move(factory)),
      lambda_(poisson_lambda),
      seed_(seed) {
    if (this->schema().multi_target()) {
        throw ConfigError("bagging is single-target; wrap it in a multi-output learner");
    }
    if (n_members < 1) {
        throw ConfigError("bagging needs at least one member");
    }
    if (!factory_) {
        throw ConfigError("bagging needs a model factory");
    }
    if (!(lambda_ > 0.0)) {
        throw ConfigError("bagging needs a positive poisson lambda");
    }
    members_.resize(static_cast<std::size_t>(n_members));
    member_rngs_.reserve(static_cast<std::size_t>(n_members));
    for (std::size_t i = 0; i < members_.size(); ++i) {
        member_rngs_.emplace_back(derive_seed(seed_, i));
        rebuild_member(i);
    }
}

void OzaBaggingClassifier::rebuild_member(std::size_t i) {
    members_[i] = factory_(schema());
    if (!members_[i]) {
        throw ConfigError("model factory returned nothing");
    }
    if (!members_[i]->schema().compatible_with(schema())) {
        throw SchemaError("factory produced a model with a mismatched schema");
    }
}

void OzaBaggingClassifier::reset() {
    for (std::size_t i = 0; i < members_.size(); ++i) {
        rebuild_member(i);
        member_rngs_[i] = Rng(derive_seed(seed_, i));
    }
}

int OzaBaggingClassifier::draw_weight(std::size_t member_index) {
    if (weight_override_) {
        return weight_override_(member_index);
    }
    return member_rngs_[member_index].poisson(lambda_);
}

void OzaBaggingClassifier::learn_one(const Instance& inst) {
    for (std::size_t i = 0; i < members_.size(); ++i) {
        const int k = draw_weight(i);
        for (int r = 0; r < k; ++r) {
            members_[i]->partial_fit_one(inst);
        }
    }
}

std::vector<ClassDistribution> OzaBaggingClassifier::infer_one(const FeatureVector& x) const {
    const int n_classes = schema().target_cardinality[0];
    Eigen::VectorXd mass = Eigen::VectorXd::Zero(n_classes);
    for (const auto& member : members_) {
        mass += member->predict_proba_one(x)[0].probs();
    }
    mass /= static_cast<double>(members_.size());
    return {ClassDistribution(std::move(mass))};
}

LeverageBaggingClassifier::LeverageBaggingClassifier(StreamSchema schema, ModelFactory factory,
                                                     int n_members, std::uint64_t seed,
                                                     double poisson_lambda, double adwin_delta,
                                                     bool drift_reset)
    : OzaBaggingClassifier(std::move(schema), std::move(factory), n_members, seed,
                           poisson_lambda),
      adwin_delta_(adwin_delta),
      drift_reset_(drift_reset) {
    detectors_.reserve(members_.size());
    for (std::size_t i = 0; i < members_.size(); ++i) {
        detectors_.push_back(std::make_unique<Adwin>(adwin_delta_));
    }
}

void LeverageBaggingClassifier::reset() {
    OzaBaggingClassifier::reset();
    for (auto& detector : detectors_) {
        detector = std::make_unique<Adwin>(adwin_delta_);
    }
}

void LeverageBaggingClassifier::learn_one(const Instance& inst) {
    bool drifted = false;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        const int predicted = members_[i]->predict_one(inst.features)[0];
        const double error = predicted == inst.targets[0] ? 0.0 : 1.0;
        if (detectors_[i]->update(error) == DetectionStatus::Drift) {
            drifted = true;
        }
        const int k = draw_weight(i);
        for (int r = 0; r < k; ++r) {
            members_[i]->partial_fit_one(inst);
        }
    }
    if (!drifted || !drift_reset_) return;

    std::size_t worst = 0;
    for (std::size_t i = 1; i < detectors_.size(); ++i) {
        if (detectors_[i]->estimation() > detectors_[worst]->estimation()) {
            worst = i;
        }
    }
    rebuild_member(worst);
    detectors_[worst] = std::make_unique<Adwin>(adwin_delta_);
}

}  // namespace streamml
