#include "ffibench/analysis/records.hpp"

#include "csv.hpp"
#include "ffibench/analysis/errors.hpp"

#include <fmt/format.h>

#include <fstream>
#include <ostream>
#include <set>
#include <tuple>

namespace ffibench::analysis {

std::string_view to_string(Strategy s) noexcept {
    return s == Strategy::InSitu ? "in_situ" : "preconverted";
}

std::string_view to_string(Function f) noexcept { return f == Function::Mean ? "mean" : "stddev"; }

std::optional<Strategy> parse_strategy(std::string_view text) noexcept {
    if (text == "in_situ") return Strategy::InSitu;
    if (text == "preconverted") return Strategy::Preconverted;
    return std::nullopt;
}

std::optional<Function> parse_function(std::string_view text) noexcept {
    if (text == "mean") return Function::Mean;
    if (text == "stddev") return Function::Stddev;
    return std::nullopt;
}

std::vector<TimingRecord> read_records(std::istream &in, std::vector<std::string> *warnings) {
    csv::expect_header(in, kRecordsHeader, "records");

    std::vector<TimingRecord> records;
    using Identity = std::tuple<std::string, Strategy, Function, std::string, std::int64_t, std::optional<double>>;
    std::set<Identity> seen;

    std::string line;
    std::size_t line_no = 1;
    while (csv::read_line(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto fields = csv::split(line);
        csv::expect_columns(fields, 8, line_no);

        TimingRecord rec;
        rec.adapter = std::string(fields[0]);
        if (rec.adapter.empty()) {
            throw FormatError(fmt::format("line {}: empty adapter", line_no));
        }
        const auto strategy = parse_strategy(fields[1]);
        if (!strategy) {
            throw FormatError(fmt::format("line {}: unknown strategy '{}'", line_no, fields[1]));
        }
        rec.strategy = *strategy;
        const auto function = parse_function(fields[2]);
        if (!function) {
            throw FormatError(fmt::format("line {}: unknown function '{}'", line_no, fields[2]));
        }
        rec.function = *function;
        rec.sample_id = std::string(fields[3]);
        rec.run_id = csv::parse_number<std::int64_t>(fields[4], "run_id", line_no);
        if (!fields[5].empty()) {
            rec.chunk_exponent = csv::parse_number<double>(fields[5], "chunk_exponent", line_no);
        }
        rec.n_calls = csv::parse_number<std::uint64_t>(fields[6], "n_calls", line_no);
        if (rec.n_calls < 1) {
            throw FormatError(fmt::format("line {}: n_calls must be at least 1", line_no));
        }
        rec.total_ns = csv::parse_number<std::uint64_t>(fields[7], "total_ns", line_no);

        if (!seen.emplace(rec.adapter, rec.strategy, rec.function, rec.sample_id, rec.run_id,
                          rec.chunk_exponent)
                 .second &&
            warnings != nullptr) {
            warnings->push_back(fmt::format("line {}: duplicate record for {}/{}/{} sample {} run {}", line_no,
                                            rec.adapter, to_string(rec.strategy), to_string(rec.function),
                                            rec.sample_id, rec.run_id));
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<TimingRecord> read_records_file(const std::string &path, std::vector<std::string> *warnings) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError(fmt::format("cannot open records file '{}'", path));
    }
    return read_records(in, warnings);
}

void write_records(std::ostream &out, std::span<const TimingRecord> records) {
    out << kRecordsHeader << '\n';
    for (const auto &r : records) {
        if (!csv::is_plain_field(r.adapter) || !csv::is_plain_field(r.sample_id)) {
            throw FormatError(fmt::format("record identifiers may not contain commas, quotes or newlines"));
        }
        out << fmt::format("{},{},{},{},{},{},{},{}\n", r.adapter, to_string(r.strategy), to_string(r.function),
                           r.sample_id, r.run_id, r.chunk_exponent ? fmt::format("{}", *r.chunk_exponent) : "",
                           r.n_calls, r.total_ns);
    }
}

}  // namespace ffibench::analysis
