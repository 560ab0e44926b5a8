#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace streamml {

/// Dense real feature vector of one stream element.
using FeatureVector = Eigen::VectorXd;

/// Integer class indices, one per target.
using TargetVector = Eigen::VectorXi;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Root of the library's error hierarchy.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Feature arity or target layout disagrees with the declared schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// A target value falls outside the class set declared up front.
class UndeclaredClassError : public SchemaError {
public:
    using SchemaError::SchemaError;
};

/// An argument lies outside its mathematical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Invalid experiment or component configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// File access failure.
class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed input data; carries the 1-based data row it was found on.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t row)
        : Error(message + " (row " + std::to_string(row) + ")"), row_(row) {}

    std::size_t row() const { return row_; }

private:
    std::size_t row_;
};

// ---------------------------------------------------------------------------
// Schema
// ---------------------------------------------------------------------------

/// Shape of a stream: feature count plus the class layout of every target.
/// One entry in `target_cardinality` per target; multi-label streams carry
/// one binary target per label.
struct StreamSchema {
    Eigen::Index n_features = 0;
    std::vector<int> target_cardinality;
    std::vector<std::string> feature_names;  // auto-generated when empty
    std::vector<std::string> target_names;

    Eigen::Index n_targets() const {
        return static_cast<Eigen::Index>(target_cardinality.size());
    }
    bool multi_target() const { return n_targets() > 1; }

    std::string feature_name(Eigen::Index i) const;
    std::string target_name(Eigen::Index j) const;

    /// Throws SchemaError if the schema itself is malformed.
    void validate() const;

    /// Structural equality: same arity and cardinalities, names ignored.
    bool compatible_with(const StreamSchema& other) const;

    static StreamSchema classification(Eigen::Index n_features, int n_classes);
    static StreamSchema multi_label(Eigen::Index n_features, Eigen::Index n_labels);

    /// Schema of target j viewed as its own single-output problem.
    StreamSchema single_target(Eigen::Index j) const;
};

// ---------------------------------------------------------------------------
// Instance
// ---------------------------------------------------------------------------

/// One stream element: features, integer targets, nonnegative weight.
struct Instance {
    FeatureVector features;
    TargetVector targets;
    double weight = 1.0;
};

bool operator==(const Instance& a, const Instance& b);

/// Throws SchemaError / UndeclaredClassError / DomainError when `inst`
/// violates the schema's invariants.
void validate_instance(const Instance& inst, const StreamSchema& schema);

// ---------------------------------------------------------------------------
// ClassDistribution
// ---------------------------------------------------------------------------

/// Probability vector over the classes of one target. Entries are
/// nonnegative and sum to one within 1e-9; models that have seen no data
/// return the uniform distribution instead of an all-zero vector.
class ClassDistribution {
public:
    ClassDistribution() = default;

    /// Validates the invariants; throws DomainError on violation.
    explicit ClassDistribution(Eigen::VectorXd probs);

    static ClassDistribution uniform(Eigen::Index n_classes);
    static ClassDistribution one_hot(Eigen::Index n_classes, Eigen::Index cls);

    /// Normalizes a nonnegative weight vector. Zero total mass falls back
    /// to the uniform distribution.
    static ClassDistribution from_weights(const Eigen::Ref<const Eigen::VectorXd>& weights);

    const Eigen::VectorXd& probs() const { return probs_; }
    Eigen::Index size() const { return probs_.size(); }
    double operator[](Eigen::Index i) const { return probs_[i]; }

    /// Index of the largest probability; ties break toward the lowest index.
    int argmax() const;

private:
    Eigen::VectorXd probs_;
};

// ---------------------------------------------------------------------------
// DetectionStatus
// ---------------------------------------------------------------------------

/// Output of a change detector after one update. Warning is optional;
/// detectors without a warning zone only ever report Normal or Drift.
enum class DetectionStatus { Normal, Warning, Drift };

std::string to_string(DetectionStatus status);

}  // namespace streamml
