#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace ffibench::analysis {

/// n values uniform on [0, 1) from a seeded mt19937_64, using the top 53 bits
/// of each draw. Identical across platforms for the same (n, seed).
[[nodiscard]] std::vector<double> generate_sample(std::uint64_t n, std::uint64_t seed);

/// Raw little-endian binary64, no header.
void write_sample(const std::filesystem::path &path, std::span<const double> values);

/// Inverse of write_sample. Throws FormatError if the size is not a multiple
/// of 8 or any value is NaN.
[[nodiscard]] std::vector<double> read_sample(const std::filesystem::path &path);

}  // namespace ffibench::analysis
