#include "streamml/learners/multioutput.hpp"

#include <utility>

namespace streamml {

MultiOutputLearner::MultiOutputLearner(StreamSchema schema, const ModelFactory& factory)
    : StreamModel(std::move(schema)) {
    if (!factory) {
        throw ConfigError("multi-output learner needs a model factory");
    }
    models_.reserve(static_cast<std::size_t>(this->schema().n_targets()));
    for (Eigen::Index j = 0; j < this->schema().n_targets(); ++j) {
        auto model = factory(this->schema().single_target(j));
        if (!model) {
            throw ConfigError("model factory returned nothing");
        }
        if (model->schema().multi_target()) {
            throw SchemaError("factory produced a multi-target base model");
        }
        models_.push_back(std::move(model));
    }
}

void MultiOutputLearner::reset() {
    for (auto& model : models_) {
        model->reset();
    }
}

void MultiOutputLearner::learn_one(const Instance& inst) {
    Instance sub;
    sub.features = inst.features;
    sub.targets.resize(1);
    sub.weight = inst.weight;
    for (std::size_t j = 0; j < models_.size(); ++j) {
        sub.targets[0] = inst.targets[static_cast<Eigen::Index>(j)];
        models_[j]->partial_fit_one(sub);
    }
}

std::vector<ClassDistribution> MultiOutputLearner::infer_one(const FeatureVector& x) const {
    std::vector<ClassDistribution> out;
    out.reserve(models_.size());
    for (const auto& model : models_) {
        out.push_back(model->predict_proba_one(x)[0]);
    }
    return out;
}

}  // namespace streamml
