#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "segkit/errors.hpp"
#include "segkit/series.hpp"

namespace segkit {

namespace detail {

inline std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\f\v";
    const std::size_t first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    const std::size_t last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

// Locale-independent double parse; the whole token must be consumed.
inline std::optional<double> parse_double(std::string_view token) {
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

inline std::vector<std::string_view> split_cells(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            cells.push_back(trim(line.substr(start)));
            return cells;
        }
        cells.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
}

}  // namespace detail

// Reads a CSV file into a Series.
//
// With an empty column selector the file must carry one value per row.  A
// non-empty selector picks a column either by 0-based index or by name; a
// name requires a header row.  A non-numeric first row is treated as a
// header and skipped.  Blank lines are ignored; row numbers in error
// messages are 1-based physical line numbers.
inline Series ingest(const std::string& path, const std::string& column = "") {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "' for reading");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    // Column selector: integer -> index, otherwise a header name.
    std::optional<std::size_t> sel_index;
    std::optional<std::string> sel_name;
    if (!column.empty()) {
        std::size_t idx = 0;
        const auto [ptr, ec] =
            std::from_chars(column.data(), column.data() + column.size(), idx);
        if (ec == std::errc{} && ptr == column.data() + column.size()) {
            sel_index = idx;
        } else {
            sel_name = column;
        }
    }

    std::vector<double> values;
    bool saw_first_row = false;
    std::size_t row = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        const std::string_view line(text.data() + start,
                                    (nl == std::string::npos ? text.size() : nl) - start);
        start = (nl == std::string::npos) ? text.size() + 1 : nl + 1;
        ++row;
        if (detail::trim(line).empty()) continue;
        const std::vector<std::string_view> cells = detail::split_cells(line);

        if (!saw_first_row) {
            saw_first_row = true;
            if (sel_name) {
                // First row must be the header naming the column.
                bool found = false;
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    if (cells[c] == *sel_name) {
                        sel_index = c;
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    std::string have;
                    for (std::size_t c = 0; c < cells.size(); ++c) {
                        have += (c ? ", " : "") + std::string(cells[c]);
                    }
                    throw InputError("column '" + *sel_name + "' not found in header (row " +
                                     std::to_string(row) + " has: " + have + ")");
                }
                continue;  // header row carries no data
            }
            const std::size_t use = sel_index.value_or(0);
            if (use < cells.size() && !detail::parse_double(cells[use])) {
                continue;  // non-numeric first row acts as a header
            }
        }

        const std::size_t use = sel_index.value_or(0);
        if (!sel_index && cells.size() > 1) {
            throw InputError("row " + std::to_string(row) + " has " +
                             std::to_string(cells.size()) +
                             " columns; pass --column to choose one");
        }
        if (use >= cells.size()) {
            throw InputError("row " + std::to_string(row) + " has only " +
                             std::to_string(cells.size()) + " column(s), need index " +
                             std::to_string(use));
        }
        const std::optional<double> value = detail::parse_double(cells[use]);
        if (!value) {
            throw InputError("row " + std::to_string(row) + ": cannot parse '" +
                             std::string(cells[use]) + "' as a number");
        }
        if (!std::isfinite(*value)) {
            throw InputError("row " + std::to_string(row) + ": non-finite value '" +
                             std::string(cells[use]) + "'");
        }
        values.push_back(*value);
    }
    if (values.empty()) {
        throw InputError("no data rows in '" + path + "'");
    }
    return Series(std::move(values));
}

}  // namespace segkit
