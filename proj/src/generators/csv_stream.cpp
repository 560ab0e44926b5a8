#include "streamml/generators/csv_stream.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <vector>

namespace streamml {

namespace {

std::string_view trim(std::string_view cell) {
    while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) {
        cell.remove_prefix(1);
    }
    while (!cell.empty() &&
           (cell.back() == ' ' || cell.back() == '\t' || cell.back() == '\r')) {
        cell.remove_suffix(1);
    }
    return cell;
}

std::vector<std::string_view> split_row(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            cells.push_back(trim(line.substr(start)));
            break;
        }
        cells.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return cells;
}

double parse_cell(std::string_view cell, std::uint64_t row) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc{} || ptr != cell.data() + cell.size() || cell.empty()) {
        throw ParseError("cell '" + std::string(cell) + "' is not numeric", row);
    }
    return value;
}

int parse_target_cell(std::string_view cell, std::uint64_t row) {
    const double value = parse_cell(cell, row);
    const double rounded = std::nearbyint(value);
    if (value != rounded || rounded < 0.0 || rounded > 1e9) {
        throw ParseError("target cell '" + std::string(cell) +
                             "' is not a nonnegative integer",
                         row);
    }
    return static_cast<int>(rounded);
}

bool read_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (!line.empty() && !(line.size() == 1 && line[0] == '\r')) {
            return true;
        }
    }
    return false;
}

std::pair<StreamSchema, std::uint64_t> scan_file(const CsvStreamConfig& config) {
    if (config.n_target_columns < 1) {
        throw ConfigError("csv stream needs at least one target column");
    }
    std::ifstream in(config.path);
    if (!in) {
        throw IoError("cannot open '" + config.path + "'");
    }

    std::string line;
    std::vector<std::string> header;
    if (config.header_present) {
        if (!read_line(in, line)) {
            throw ParseError("file has a header but no data rows", 0);
        }
        for (std::string_view cell : split_row(line)) {
            header.emplace_back(cell);
        }
    }

    std::size_t n_columns = 0;
    std::uint64_t n_rows = 0;
    std::vector<int> max_target;
    while (read_line(in, line)) {
        const std::uint64_t row = n_rows + 1;
        const auto cells = split_row(line);
        if (n_rows == 0) {
            n_columns = cells.size();
            if (n_columns <= static_cast<std::size_t>(config.n_target_columns)) {
                throw ParseError("rows need more columns than target columns", row);
            }
            max_target.assign(static_cast<std::size_t>(config.n_target_columns), 0);
        } else if (cells.size() != n_columns) {
            throw ParseError("row has " + std::to_string(cells.size()) +
                                 " cells, expected " + std::to_string(n_columns),
                             row);
        }
        const std::size_t first_target = n_columns - static_cast<std::size_t>(config.n_target_columns);
        for (std::size_t j = 0; j < static_cast<std::size_t>(config.n_target_columns); ++j) {
            const int value = parse_target_cell(cells[first_target + j], row);
            max_target[j] = std::max(max_target[j], value);
        }
        ++n_rows;
    }
    if (n_rows == 0) {
        throw ParseError("file has no data rows", 0);
    }
    if (!header.empty() && header.size() != n_columns) {
        throw ParseError("header has " + std::to_string(header.size()) +
                             " cells, expected " + std::to_string(n_columns),
                         0);
    }

    StreamSchema schema;
    schema.n_features = static_cast<int>(n_columns) - config.n_target_columns;
    schema.target_cardinality.reserve(max_target.size());
    for (int m : max_target) {
        schema.target_cardinality.push_back(std::max(m + 1, 2));
    }
    if (!header.empty()) {
        schema.feature_names.assign(header.begin(), header.begin() + schema.n_features);
        schema.target_names.assign(header.begin() + schema.n_features, header.end());
    }
    schema.validate();
    return {std::move(schema), n_rows};
}

}  // namespace

CsvStream::CsvStream(const CsvStreamConfig& config) : CsvStream(config, scan_file(config)) {}

CsvStream::CsvStream(const CsvStreamConfig& config, std::pair<StreamSchema, std::uint64_t> scan)
    : Stream(std::move(scan.first)), config_(config), n_rows_(scan.second) {
    open_at_data();
}

void CsvStream::open_at_data() {
    in_ = std::ifstream(config_.path);
    if (!in_) {
        throw IoError("cannot open '" + config_.path + "'");
    }
    if (config_.header_present) {
        std::string line;
        read_line(in_, line);
    }
    row_ = 0;
}

void CsvStream::restart() {
    open_at_data();
}

std::optional<std::uint64_t> CsvStream::remaining() const {
    return n_rows_ - row_;
}

bool CsvStream::next_into(Instance& out) {
    std::string line;
    if (!read_line(in_, line)) {
        return false;
    }
    ++row_;
    const auto cells = split_row(line);
    const int n_features = schema().n_features;
    out.features.resize(n_features);
    for (int d = 0; d < n_features; ++d) {
        out.features[d] = parse_cell(cells[static_cast<std::size_t>(d)], row_);
    }
    out.targets.resize(schema().n_targets());
    for (int j = 0; j < schema().n_targets(); ++j) {
        out.targets[j] =
            parse_target_cell(cells[static_cast<std::size_t>(n_features + j)], row_);
    }
    out.weight = 1.0;
    return true;
}

}  // namespace streamml
