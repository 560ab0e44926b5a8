#pragma once

#include "streamml/drift/adwin.hpp"
#include "streamml/learners/knn.hpp"

namespace streamml {

/// kNN whose window adapts to drift: each update first feeds the error of
/// the pre-update prediction to an ADWIN detector, shrinks the window to
/// the detector's width when drift fires, then stores the instance.
class KnnAdwinClassifier final : public KnnClassifier {
public:
    explicit KnnAdwinClassifier(StreamSchema schema, int k = 5,
                                std::size_t window_size = 1000, double adwin_delta = 0.002)
        : KnnClassifier(std::move(schema), k, window_size), adwin_(adwin_delta) {}

    const Adwin& detector() const { return adwin_; }

    void reset() override {
        KnnClassifier::reset();
        adwin_.reset();
    }

protected:
    void learn_one(const Instance& inst) override {
        const int predicted = infer_one(inst.features)[0].argmax();
        const double error = predicted == inst.targets[0] ? 0.0 : 1.0;
        if (adwin_.update(error) == DetectionStatus::Drift) {
            window_.shrink_to(adwin_.width());
        }
        KnnClassifier::learn_one(inst);
    }

    Adwin adwin_;
};

}  // namespace streamml
