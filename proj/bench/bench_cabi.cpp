// Chunk sweep over the C-ABI surface, without any interpreter in the way.
//
// For each chunk size the whole 10^6-element sample is processed chunk by
// chunk, so every benchmark iteration does the same arithmetic and only the
// number of calls (and, for the flat exports, the number of copies) changes:
//
//   BM_Kernel        stats kernels on a borrowed span, no copy
//   BM_FlatExport    `mean` / `stddev`: copy-on-entry on every call
//   BM_HandleMethod  `array_mean` / `array_stddev` on handles built up front
//
// The argument is twice the chunk exponent, so 20..37 covers 2^10..2^18.5.

#include "ffibench/analysis/aggregate.hpp"
#include "ffibench/analysis/sample.hpp"
#include "ffibench/c/array.h"
#include "ffibench/c/stats.h"
#include "ffibench/stats.hpp"

#include <benchmark/benchmark.h>

#include <algorithm>
#include <span>
#include <vector>

namespace {

constexpr std::uint64_t kSampleLength = 1'000'000;

const std::vector<double> &sample() {
    static const auto values = ffibench::analysis::generate_sample(kSampleLength, 42);
    return values;
}

std::vector<std::span<const double>> chunks_for(const benchmark::State &state) {
    const auto size = ffibench::analysis::chunk_size_for(static_cast<double>(state.range(0)) / 2.0);
    const auto &values = sample();
    std::vector<std::span<const double>> out;
    for (std::size_t start = 0; start < values.size(); start += size) {
        out.emplace_back(values.data() + start, std::min<std::size_t>(size, values.size() - start));
    }
    return out;
}

void set_counters(benchmark::State &state, std::size_t calls) {
    state.counters["calls"] = static_cast<double>(calls);
    state.counters["per_call"] =
        benchmark::Counter(static_cast<double>(calls), benchmark::Counter::kIsIterationInvariantRate |
                                                           benchmark::Counter::kInvert);
}

void BM_Kernel(benchmark::State &state, bool use_stddev) {
    const auto chunks = chunks_for(state);
    for (auto _ : state) {
        double acc = 0.0;
        for (const auto c : chunks) {
            acc += use_stddev ? ffibench::stats::stddev(c) : ffibench::stats::mean(c);
        }
        benchmark::DoNotOptimize(acc);
    }
    set_counters(state, chunks.size());
}

void BM_FlatExport(benchmark::State &state, bool use_stddev) {
    const auto chunks = chunks_for(state);
    for (auto _ : state) {
        double acc = 0.0;
        for (const auto c : chunks) {
            auto *p = const_cast<double *>(c.data());
            acc += use_stddev ? stddev(p, c.size()) : mean(p, c.size());
        }
        benchmark::DoNotOptimize(acc);
    }
    set_counters(state, chunks.size());
}

void BM_HandleMethod(benchmark::State &state, bool use_stddev) {
    const auto chunks = chunks_for(state);
    std::vector<Array *> handles;
    for (const auto c : chunks) {
        handles.push_back(array_init(const_cast<double *>(c.data()), c.size()));
    }
    for (auto _ : state) {
        double acc = 0.0;
        for (auto *h : handles) {
            acc += use_stddev ? array_stddev(h) : array_mean(h);
        }
        benchmark::DoNotOptimize(acc);
    }
    for (auto *h : handles) {
        array_free(h);
    }
    set_counters(state, chunks.size());
}

void sweep(benchmark::internal::Benchmark *b) {
    for (int twice_exponent = 20; twice_exponent <= 37; ++twice_exponent) {
        b->Arg(twice_exponent);
    }
    b->Unit(benchmark::kMicrosecond);
}

}  // namespace

BENCHMARK_CAPTURE(BM_Kernel, mean, false)->Apply(sweep);
BENCHMARK_CAPTURE(BM_FlatExport, mean, false)->Apply(sweep);
BENCHMARK_CAPTURE(BM_HandleMethod, mean, false)->Apply(sweep);
BENCHMARK_CAPTURE(BM_Kernel, stddev, true)->Apply(sweep);
BENCHMARK_CAPTURE(BM_FlatExport, stddev, true)->Apply(sweep);
BENCHMARK_CAPTURE(BM_HandleMethod, stddev, true)->Apply(sweep);

BENCHMARK_MAIN();
