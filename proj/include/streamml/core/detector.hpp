#pragma once

#include "streamml/core/types.hpp"

namespace streamml {

/// A change detector consumes one scalar per time step, typically a
/// model's 0/1 error indicator, and reports its state after each update.
/// Detectors reset themselves after signalling Drift; reset() restores the
/// freshly-constructed state with parameters preserved.
class DriftDetector {
public:
    virtual ~DriftDetector() = default;

    virtual DetectionStatus update(double value) = 0;
    virtual void reset() = 0;

    DetectionStatus status() const { return status_; }

protected:
    DetectionStatus status_ = DetectionStatus::Normal;
};

}  // namespace streamml
