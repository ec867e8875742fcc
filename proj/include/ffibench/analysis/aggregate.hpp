#pragma once

#include "ffibench/analysis/records.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ffibench::analysis {

struct GroupKey {
    std::string adapter;
    Strategy strategy = Strategy::InSitu;
    Function function = Function::Mean;
    std::optional<double> chunk_exponent;

    friend auto operator<=>(const GroupKey &, const GroupKey &) = default;
    friend bool operator==(const GroupKey &, const GroupKey &) = default;
};

/// Per-group mean and sample standard deviation of total_ns.
struct AggregateStat {
    GroupKey key;
    double mean_ns = 0.0;
    double stddev_ns = 0.0;
    std::uint64_t n = 0;
};

/**
 * Groups records by (adapter, strategy, function, chunk_exponent) and
 * reduces total_ns. Output is sorted by key, and each group's values are
 * reduced in sorted order, so the result does not depend on record order.
 *
 * A group of one record gets stddev 0 and a warning.
 */
[[nodiscard]] std::vector<AggregateStat> aggregate(std::span<const TimingRecord> records,
                                                   std::vector<std::string> *warnings = nullptr);

/// round(2^exponent), half-exponents included.
[[nodiscard]] std::uint64_t chunk_size_for(double exponent);

/// ceil(sample_length / chunk_size); the trailing partial chunk counts as a call.
[[nodiscard]] std::uint64_t calls_for(std::uint64_t sample_length, std::uint64_t chunk_size);

struct FloorRule {
    std::string baseline_adapter = "reference_baseline";
};

struct Floor {
    Function function = Function::Mean;
    double floor_ns = 0.0;
    double chunk_exponent = 0.0;  // where the minimum was attained
};

struct OverheadPoint {
    double chunk_exponent = 0.0;
    std::uint64_t n_calls = 1;
    double overhead_ns = 0.0;
    double stddev_ns = 0.0;
};

struct OverheadSeries {
    std::string adapter;
    Strategy strategy = Strategy::InSitu;
    Function function = Function::Mean;
    std::vector<OverheadPoint> points;  // ascending chunk exponent
};

struct OverheadAnalysis {
    std::vector<Floor> floors;
    std::vector<OverheadSeries> series;
};

/**
 * Subtracts the baseline floor from every chunked aggregate.
 *
 * For each function, the floor is the smallest mean_ns among the baseline
 * adapter's chunked aggregates (any strategy). Every chunked group of that
 * function, baseline included, becomes a point (n_calls, mean_ns - floor)
 * with n_calls = ceil(sample_length / round(2^e)).
 *
 * Serial aggregates are ignored. Throws AnalysisError when a function has
 * chunked data but no baseline aggregates.
 */
[[nodiscard]] OverheadAnalysis overhead_series(std::span<const AggregateStat> aggregates,
                                               std::uint64_t sample_length,
                                               const FloorRule &rule = {});

}  // namespace ffibench::analysis
