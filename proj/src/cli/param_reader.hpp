#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <json.hpp>

#include "streamml/core/types.hpp"

namespace streamml {

/// Strict parameter extraction: every key must be consumed, leftovers are
/// configuration errors named after the offending key.
class ParamReader {
public:
    ParamReader(const nlohmann::json& params, std::string context)
        : remaining_(params), context_(std::move(context)) {
        if (!remaining_.is_object()) {
            throw ConfigError(context_ + ": must be a JSON object");
        }
    }

    int take_int(const char* key, int fallback) {
        const nlohmann::json value = take(key);
        if (value.is_null()) return fallback;
        if (!value.is_number_integer() && !value.is_number_unsigned()) {
            throw ConfigError(context_ + ": '" + key + "' must be an integer");
        }
        return value.get<int>();
    }

    std::uint64_t take_uint64(const char* key, std::uint64_t fallback) {
        const nlohmann::json value = take(key);
        if (value.is_null()) return fallback;
        if (!(value.is_number_unsigned() ||
              (value.is_number_integer() && value.get<std::int64_t>() >= 0))) {
            throw ConfigError(context_ + ": '" + key + "' must be a nonnegative integer");
        }
        return value.get<std::uint64_t>();
    }

    double take_double(const char* key, double fallback) {
        const nlohmann::json value = take(key);
        if (value.is_null()) return fallback;
        if (!value.is_number()) {
            throw ConfigError(context_ + ": '" + key + "' must be a number");
        }
        return value.get<double>();
    }

    bool take_bool(const char* key, bool fallback) {
        const nlohmann::json value = take(key);
        if (value.is_null()) return fallback;
        if (!value.is_boolean()) {
            throw ConfigError(context_ + ": '" + key + "' must be a boolean");
        }
        return value.get<bool>();
    }

    std::string take_string(const char* key) {
        const nlohmann::json value = take(key);
        if (value.is_null()) {
            throw ConfigError(context_ + ": missing required key '" + key + "'");
        }
        if (!value.is_string()) {
            throw ConfigError(context_ + ": '" + key + "' must be a string");
        }
        return value.get<std::string>();
    }

    std::string take_string_or(const char* key, std::string fallback) {
        const nlohmann::json value = take(key);
        if (value.is_null()) return fallback;
        if (!value.is_string()) {
            throw ConfigError(context_ + ": '" + key + "' must be a string");
        }
        return value.get<std::string>();
    }

    /// Optional object; an absent key yields an empty object.
    nlohmann::json take_object(const char* key) {
        const nlohmann::json value = take(key);
        if (value.is_null()) return nlohmann::json::object();
        if (!value.is_object()) {
            throw ConfigError(context_ + ": '" + key + "' must be an object");
        }
        return value;
    }

    nlohmann::json take_object_required(const char* key) {
        const nlohmann::json value = take(key);
        if (value.is_null()) {
            throw ConfigError(context_ + ": missing required key '" + key + "'");
        }
        if (!value.is_object()) {
            throw ConfigError(context_ + ": '" + key + "' must be an object");
        }
        return value;
    }

    nlohmann::json take_array_required(const char* key) {
        const nlohmann::json value = take(key);
        if (value.is_null()) {
            throw ConfigError(context_ + ": missing required key '" + key + "'");
        }
        if (!value.is_array()) {
            throw ConfigError(context_ + ": '" + key + "' must be an array");
        }
        return value;
    }

    void finish() const {
        for (const auto& item : remaining_.items()) {
            throw ConfigError(context_ + ": unknown key '" + item.key() + "'");
        }
    }

private:
    nlohmann::json take(const char* key) {
        const auto it = remaining_.find(key);
        if (it == remaining_.end()) return nlohmann::json();
        nlohmann::json value = *it;
        remaining_.erase(key);
        return value;
    }

    nlohmann::json remaining_;
    std::string context_;
};

}  // namespace streamml
