#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "streamml/core/model.hpp"
#include "streamml/core/stream.hpp"

namespace streamml {

/// Component names exposed by `list`, each sorted and stable.
std::vector<std::string> generator_names();
std::vector<std::string> learner_names();
std::vector<std::string> detector_names();
std::vector<std::string> evaluator_names();

/// Builds a stream from a registered generator name or "csv". Unknown
/// parameter keys are rejected; missing ones take their defaults. The two
/// RBF variants split `seed` into model and sample seeds; "csv" ignores
/// it.
std::unique_ptr<Stream> make_stream(const std::string& type, const nlohmann::json& params,
                                    std::uint64_t seed);

/// Builds a learner from a registered learner name for the given schema.
/// Ensemble and multi-output specs nest a base learner under "base":
/// {"type": ..., "parameters": {...}}; nested seeds derive from `seed`.
std::unique_ptr<StreamModel> make_learner(const std::string& type, const nlohmann::json& params,
                                          const StreamSchema& schema, std::uint64_t seed);

}  // namespace streamml
