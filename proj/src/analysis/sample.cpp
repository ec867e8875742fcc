#include "ffibench/analysis/sample.hpp"

#include "ffibench/analysis/errors.hpp"

#include <fmt/format.h>

#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <random>

namespace ffibench::analysis {

namespace {

constexpr double kTwoPowMinus53 = 0x1.0p-53;

std::array<char, 8> to_le_bytes(double v) {
    auto bits = std::bit_cast<std::uint64_t>(v);
    std::array<char, 8> out{};
    for (auto &byte : out) {
        byte = static_cast<char>(bits & 0xffU);
        bits >>= 8;
    }
    return out;
}

double from_le_bytes(const unsigned char *bytes) {
    std::uint64_t bits = 0;
    for (int i = 7; i >= 0; --i) {
        bits = (bits << 8) | bytes[i];
    }
    return std::bit_cast<double>(bits);
}

}  // namespace

std::vector<double> generate_sample(std::uint64_t n, std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    std::vector<double> values(n);
    for (auto &v : values) {
        v = static_cast<double>(engine() >> 11) * kTwoPowMinus53;
    }
    return values;
}

void write_sample(const std::filesystem::path &path, std::span<const double> values) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw FormatError(fmt::format("cannot open '{}' for writing", path.string()));
    }
    for (const double v : values) {
        const auto bytes = to_le_bytes(v);
        out.write(bytes.data(), bytes.size());
    }
    if (!out) {
        throw FormatError(fmt::format("write to '{}' failed", path.string()));
    }
}

std::vector<double> read_sample(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError(fmt::format("cannot open sample '{}'", path.string()));
    }
    std::vector<unsigned char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (raw.size() % 8 != 0) {
        throw FormatError(
            fmt::format("sample '{}' has {} bytes, not a multiple of 8", path.string(), raw.size()));
    }
    std::vector<double> values(raw.size() / 8);
    for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] = from_le_bytes(raw.data() + 8 * i);
        if (std::isnan(values[i])) {
            throw FormatError(fmt::format("sample '{}' contains NaN at index {}", path.string(), i));
        }
    }
    return values;
}

}  // namespace ffibench::analysis
