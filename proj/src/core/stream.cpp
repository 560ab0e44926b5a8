#include "streamml/core/stream.hpp"

#include <utility>

namespace streamml {

Stream::Stream(StreamSchema schema) : schema_(std::move(schema)) {
    schema_.validate();
}

std::vector<Instance> Stream::next_sample(std::size_t n) {
    std::vector<Instance> batch;
    batch.reserve(n);
    Instance inst;
    for (std::size_t i = 0; i < n; ++i) {
        if (!next_into(inst)) break;
        batch.push_back(inst);
    }
    return batch;
}

}  // namespace streamml
