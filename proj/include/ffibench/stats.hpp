#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ffibench::stats {

/// Owned, contiguous float64 sample. The kernels below only borrow it as a
/// span, so any contiguous double storage works.
using Float64Buffer = std::vector<double>;

/// Left-to-right sequential accumulation. Empty input sums to 0.0 and NaN
/// elements propagate.
[[nodiscard]] double sum(std::span<const double> values) noexcept;

/**
 * Arithmetic mean, computed as sum(values) / size with the same plain
 * accumulation as sum().
 *
 * Throws std::domain_error on an empty input. The C-ABI layer handles the
 * empty case itself and reports NaN instead.
 */
[[nodiscard]] double mean(std::span<const double> values);

/**
 * Population standard deviation: sqrt(sum((x - mean)^2) / size), two passes,
 * no denominator offset.
 *
 * Throws std::domain_error on an empty input.
 */
[[nodiscard]] double stddev(std::span<const double> values);

}  // namespace ffibench::stats
