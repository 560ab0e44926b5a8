#include "streamml/drift/adwin.hpp"

#include <cassert>
#include <cmath>

namespace streamml {

namespace {
std::uint64_t bucket_span(std::size_t row) { return std::uint64_t{1} << row; }
}  // namespace

Adwin::Adwin(double delta, int max_buckets) : delta_(delta), max_buckets_(max_buckets) {
    if (!(delta > 0.0 && delta < 1.0)) {
        throw ConfigError("adwin delta must lie in (0, 1)");
    }
    if (max_buckets < 2) {
        throw ConfigError("adwin needs at least two buckets per row");
    }
}

DetectionStatus Adwin::update(double value) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw DomainError("adwin consumes values in [0, 1]");
    }
    insert(value);
    compress();
    const bool shrunk = detect_cut_and_shrink();
    assert(mass_consistent());
    if (shrunk) {
        ++n_detections_;
        status_ = DetectionStatus::Drift;
    } else {
        status_ = DetectionStatus::Normal;
    }
    return status_;
}

void Adwin::reset() {
    rows_.clear();
    width_ = 0;
    total_sum_ = 0.0;
    n_detections_ = 0;
    status_ = DetectionStatus::Normal;
}

void Adwin::insert(double value) {
    if (rows_.empty()) rows_.emplace_back();
    rows_[0].push_back(value);
    ++width_;
    total_sum_ += value;
}

void Adwin::compress() {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].size() <= static_cast<std::size_t>(max_buckets_)) break;
        // Merge the row's two oldest buckets into the next row; the merged
        // bucket is the youngest of that row.
        const double merged = rows_[r][0] + rows_[r][1];
        rows_[r].pop_front();
        rows_[r].pop_front();
        if (r + 1 == rows_.size()) rows_.emplace_back();
        rows_[r + 1].push_back(merged);
    }
}

bool Adwin::detect_cut_and_shrink() {
    bool any_drop = false;
    bool reduced = true;
    while (reduced && width_ >= 2) {
        reduced = false;
        std::uint64_t n0 = 0;
        double u0 = 0.0;
        // Walk buckets oldest to newest: highest row first, front to back.
        for (std::size_t ri = rows_.size(); ri-- > 0 && !reduced;) {
            const std::size_t r = ri;
            for (std::size_t b = 0; b < rows_[r].size(); ++b) {
                n0 += bucket_span(r);
                u0 += rows_[r][b];
                const std::uint64_t n1 = width_ - n0;
                if (n1 == 0) break;  // no split leaves W1 empty
                const double u1 = total_sum_ - u0;
                const double mean0 = u0 / static_cast<double>(n0);
                const double mean1 = u1 / static_cast<double>(n1);
                if (std::fabs(mean0 - mean1) >= eps_cut(n0, n1)) {
                    drop_oldest_bucket();
                    any_drop = true;
                    reduced = true;
                    break;
                }
            }
        }
    }
    return any_drop;
}

void Adwin::drop_oldest_bucket() {
    // The oldest bucket lives in the highest nonempty row.
    for (std::size_t ri = rows_.size(); ri-- > 0;) {
        if (rows_[ri].empty()) continue;
        width_ -= bucket_span(ri);
        total_sum_ -= rows_[ri].front();
        rows_[ri].pop_front();
        return;
    }
}

double Adwin::eps_cut(std::uint64_t n0, std::uint64_t n1) const {
    const double m = 1.0 / (1.0 / static_cast<double>(n0) + 1.0 / static_cast<double>(n1));
    return std::sqrt(std::log(4.0 / delta_) / (2.0 * m));
}

bool Adwin::mass_consistent() const {
    std::uint64_t count = 0;
    double sum = 0.0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        count += rows_[r].size() * bucket_span(r);
        for (const double s : rows_[r]) sum += s;
    }
    return count == width_ && sum == total_sum_;
}

}  // namespace streamml
