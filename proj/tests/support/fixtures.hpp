#pragma once

// Deterministic timing-record fixtures.

#include "ffibench/analysis/aggregate.hpp"
#include "ffibench/analysis/records.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace ffibench::testing {

using analysis::Function;
using analysis::Strategy;
using analysis::TimingRecord;

/// 2 adapters x 2 strategies x 2 functions x 1 sample x 3 runs, serial.
inline std::vector<TimingRecord> serial_fixture_records() {
    std::vector<TimingRecord> out;
    std::uint64_t t = 1'000'000;
    for (const char *adapter : {"native_extension", "reference_baseline"}) {
        for (const auto strategy : {Strategy::InSitu, Strategy::Preconverted}) {
            for (const auto function : {Function::Mean, Function::Stddev}) {
                for (int run = 0; run < 3; ++run) {
                    out.push_back(TimingRecord{adapter, strategy, function, "sample0", run, std::nullopt, 1, t});
                    t += 37'011;
                }
            }
        }
    }
    return out;
}

/// Half-step exponents from `lo` to `hi` inclusive.
inline std::vector<double> exponent_grid(double lo = 10.0, double hi = 18.5) {
    std::vector<double> out;
    for (double e = lo; e <= hi + 1e-9; e += 0.5) {
        out.push_back(e);
    }
    return out;
}

struct LinearModel {
    std::uint64_t sample_length = 1'000'000;
    std::uint64_t floor_ns = 600'000'000;  // baseline minimum
    std::uint64_t base_ns = 40'000'000;    // B
    std::uint64_t per_call_ns = 150'000;   // C
};

/**
 * Noise-free chunked records. The baseline is flat at floor_ns except for
 * one slower exponent; the candidate follows
 *     total = floor_ns + base_ns + per_call_ns * n_calls,
 * so after floor subtraction its overhead is exactly base + C * calls.
 */
inline std::vector<TimingRecord> linear_model_records(const LinearModel &m, int samples = 3, int runs = 10) {
    std::vector<TimingRecord> out;
    for (const auto function : {Function::Mean, Function::Stddev}) {
        for (const double e : exponent_grid()) {
            const auto calls = analysis::calls_for(m.sample_length, analysis::chunk_size_for(e));
            for (int s = 0; s < samples; ++s) {
                for (int r = 0; r < runs; ++r) {
                    const std::string sample = "s" + std::to_string(s);
                    const std::uint64_t baseline = m.floor_ns + (e == 10.0 ? 5'000'000 : 0);
                    out.push_back(TimingRecord{"reference_baseline", Strategy::InSitu, function, sample, r, e, calls,
                                               baseline});
                    out.push_back(TimingRecord{"native_extension", Strategy::InSitu, function, sample, r, e, calls,
                                               m.floor_ns + m.base_ns + m.per_call_ns * calls});
                }
            }
        }
    }
    return out;
}

/// Small mixed fixture (serial + chunked, two adapters) with seeded jitter,
/// used for the golden report files.
inline std::vector<TimingRecord> report_fixture_records() {
    std::mt19937_64 engine(20240601);
    const auto jitter = [&engine](std::uint64_t spread) { return engine() % spread; };
    std::vector<TimingRecord> out = serial_fixture_records();
    constexpr std::uint64_t kLength = 1 << 14;
    for (const auto function : {Function::Mean, Function::Stddev}) {
        for (const double e : exponent_grid(10.0, 12.0)) {
            const auto calls = analysis::calls_for(kLength, analysis::chunk_size_for(e));
            for (int run = 0; run < 3; ++run) {
                out.push_back(TimingRecord{"reference_baseline", Strategy::InSitu, function, "sample0", run, e, calls,
                                           2'000'000 + 3'000 * calls + jitter(20'000)});
                out.push_back(TimingRecord{"native_extension", Strategy::InSitu, function, "sample0", run, e, calls,
                                           2'500'000 + 200 * calls + jitter(20'000)});
            }
        }
    }
    return out;
}

}  // namespace ffibench::testing
