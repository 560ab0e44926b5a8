#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "streamml/core/types.hpp"

namespace streamml {

/// A source of instances delivered on request. Generators are unbounded
/// (remaining() is nullopt); file-backed streams are finite. Two streams
/// built with identical parameters and seed emit identical sequences, and
/// restart() returns a stream to its freshly-constructed state.
class Stream {
public:
    /// Validates the schema; throws SchemaError if it is malformed.
    explicit Stream(StreamSchema schema);
    virtual ~Stream() = default;

    const StreamSchema& schema() const { return schema_; }

    /// Instances left to emit; nullopt marks an unbounded source.
    virtual std::optional<std::uint64_t> remaining() const { return std::nullopt; }

    /// Rewind to the freshly-constructed state.
    virtual void restart() = 0;

    /// Draw up to `n` instances. Fewer are returned near the end of a
    /// finite stream; an empty result means the stream is exhausted.
    std::vector<Instance> next_sample(std::size_t n = 1);

    bool exhausted() const {
        const auto r = remaining();
        return r.has_value() && *r == 0;
    }

protected:
    /// Produce the next instance; false iff the stream is exhausted.
    virtual bool next_into(Instance& out) = 0;

private:
    StreamSchema schema_;
};

}  // namespace streamml
