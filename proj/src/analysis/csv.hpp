#pragma once

// Minimal comma-separated parsing for the files this tool reads and writes.
// None of the fields carry commas or quotes, so no quoting is supported.

#include "ffibench/analysis/errors.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace ffibench::analysis::csv {

[[nodiscard]] inline std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

/// getline that tolerates CRLF (Python's csv module writes \r\n).
inline bool read_line(std::istream &in, std::string &line) {
    if (!std::getline(in, line)) {
        return false;
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    return true;
}

template <typename T>
[[nodiscard]] T parse_number(std::string_view text, std::string_view column, std::size_t line_no) {
    T value{};
    const auto *first = text.data();
    const auto *last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        throw FormatError(fmt::format("line {}: invalid {} '{}'", line_no, column, text));
    }
    if constexpr (std::is_floating_point_v<T>) {
        if (!std::isfinite(value)) {
            throw FormatError(fmt::format("line {}: non-finite {} '{}'", line_no, column, text));
        }
    }
    return value;
}

inline void expect_header(std::istream &in, std::string_view expected, std::string_view what) {
    std::string line;
    if (!read_line(in, line)) {
        throw FormatError(fmt::format("{}: missing header", what));
    }
    if (line != expected) {
        throw FormatError(fmt::format("{}: unexpected header '{}', expected '{}'", what, line, expected));
    }
}

inline void expect_columns(const std::vector<std::string_view> &fields, std::size_t count,
                           std::size_t line_no) {
    if (fields.size() != count) {
        throw FormatError(fmt::format("line {}: expected {} columns, got {}", line_no, count, fields.size()));
    }
}

/// Identifiers land in CSV cells unquoted.
[[nodiscard]] inline bool is_plain_field(std::string_view text) noexcept {
    return text.find_first_of(",\r\n\"") == std::string_view::npos;
}

}  // namespace ffibench::analysis::csv
