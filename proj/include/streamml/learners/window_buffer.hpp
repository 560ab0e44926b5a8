#pragma once

#include <cstddef>
#include <deque>

#include "streamml/core/types.hpp"

namespace streamml {

/// Bounded FIFO of the most recent instances, in arrival order.
class WindowBuffer {
public:
    explicit WindowBuffer(std::size_t max_size = 1000) : max_size_(max_size) {
        if (max_size == 0) {
            throw ConfigError("window buffer needs a positive max size");
        }
    }

    void push(const Instance& inst) {
        if (items_.size() == max_size_) {
            items_.pop_front();
        }
        items_.push_back(inst);
    }

    /// Keep only the `w` most recent instances.
    void shrink_to(std::size_t w) {
        while (items_.size() > w) {
            items_.pop_front();
        }
    }

    void clear() { items_.clear(); }

    std::size_t size() const { return items_.size(); }
    std::size_t max_size() const { return max_size_; }

    /// Index 0 is the oldest stored instance.
    const Instance& operator[](std::size_t i) const { return items_[i]; }

private:
    std::size_t max_size_;
    std::deque<Instance> items_;
};

}  // namespace streamml
