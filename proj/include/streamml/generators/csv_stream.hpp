#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <utility>

#include "streamml/core/stream.hpp"

namespace streamml {

struct CsvStreamConfig {
    std::string path;
    int n_target_columns = 1;
    bool header_present = true;
};

/// Bounded stream over a numeric CSV file. The rightmost n_target_columns
/// hold integer targets; everything to their left is a feature. The
/// constructor scans the file once to fix the schema (column count,
/// per-target cardinality as max value + 1, at least 2) and the row
/// count; feature cells are parsed lazily as rows are emitted. Parse
/// errors carry the 1-based data row, counted after any header.
class CsvStream final : public Stream {
public:
    explicit CsvStream(const CsvStreamConfig& config);

    void restart() override;
    std::optional<std::uint64_t> remaining() const override;

    const CsvStreamConfig& config() const { return config_; }
    std::uint64_t n_rows() const { return n_rows_; }

protected:
    bool next_into(Instance& out) override;

private:
    CsvStream(const CsvStreamConfig& config, std::pair<StreamSchema, std::uint64_t> scan);

    void open_at_data();

    CsvStreamConfig config_;
    std::uint64_t n_rows_ = 0;
    std::ifstream in_;
    std::uint64_t row_ = 0;
};

}  // namespace streamml
