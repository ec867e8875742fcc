#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ffibench::analysis {

enum class Strategy { InSitu, Preconverted };
enum class Function { Mean, Stddev };

[[nodiscard]] std::string_view to_string(Strategy s) noexcept;
[[nodiscard]] std::string_view to_string(Function f) noexcept;
[[nodiscard]] std::optional<Strategy> parse_strategy(std::string_view text) noexcept;
[[nodiscard]] std::optional<Function> parse_function(std::string_view text) noexcept;

/// One timed benchmark unit as emitted by the driver.
struct TimingRecord {
    std::string adapter;
    Strategy strategy = Strategy::InSitu;
    Function function = Function::Mean;
    std::string sample_id;
    std::int64_t run_id = 0;
    std::optional<double> chunk_exponent;  // empty for serial runs
    std::uint64_t n_calls = 1;
    std::uint64_t total_ns = 0;

    friend bool operator==(const TimingRecord &, const TimingRecord &) = default;
};

/// Column order of the records CSV. The header line must match exactly.
inline constexpr std::string_view kRecordsHeader =
    "adapter,strategy,function,sample_id,run_id,chunk_exponent,n_calls,total_ns";

/// Parses the driver's records CSV. Malformed rows throw FormatError with the
/// offending line number. Suspicious but usable rows (duplicates) append to
/// `warnings` when given.
[[nodiscard]] std::vector<TimingRecord> read_records(std::istream &in,
                                                     std::vector<std::string> *warnings = nullptr);
[[nodiscard]] std::vector<TimingRecord> read_records_file(const std::string &path,
                                                          std::vector<std::string> *warnings = nullptr);

void write_records(std::ostream &out, std::span<const TimingRecord> records);

}  // namespace ffibench::analysis
