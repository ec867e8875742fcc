#include "ffibench/analysis/aggregate.hpp"

#include "ffibench/analysis/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace ffibench::analysis {

namespace {

std::string describe(const GroupKey &key) {
    return fmt::format("{}/{}/{}{}", key.adapter, to_string(key.strategy), to_string(key.function),
                       key.chunk_exponent ? fmt::format(" @2^{}", *key.chunk_exponent) : std::string{});
}

}  // namespace

std::vector<AggregateStat> aggregate(std::span<const TimingRecord> records, std::vector<std::string> *warnings) {
    std::map<GroupKey, std::vector<std::uint64_t>> groups;
    for (const auto &r : records) {
        groups[GroupKey{r.adapter, r.strategy, r.function, r.chunk_exponent}].push_back(r.total_ns);
    }

    std::vector<AggregateStat> out;
    out.reserve(groups.size());
    for (auto &[key, totals] : groups) {
        std::sort(totals.begin(), totals.end());
        unsigned __int128 exact_sum = 0;
        for (const auto t : totals) {
            exact_sum += t;
        }
        const auto n = static_cast<double>(totals.size());
        const double mean = static_cast<double>(exact_sum) / n;

        double sd = 0.0;
        if (totals.size() > 1) {
            double squared = 0.0;
            for (const auto t : totals) {
                const double d = static_cast<double>(t) - mean;
                squared += d * d;
            }
            sd = std::sqrt(squared / (n - 1.0));
        } else if (warnings != nullptr) {
            warnings->push_back(fmt::format("group {} has a single record; stddev reported as 0", describe(key)));
        }
        out.push_back(AggregateStat{key, mean, sd, totals.size()});
    }
    return out;
}

std::uint64_t chunk_size_for(double exponent) {
    if (!std::isfinite(exponent) || exponent < 0.0 || exponent >= 63.0) {
        throw std::invalid_argument(fmt::format("chunk exponent {} out of range", exponent));
    }
    return static_cast<std::uint64_t>(std::llround(std::exp2(exponent)));
}

std::uint64_t calls_for(std::uint64_t sample_length, std::uint64_t chunk_size) {
    if (chunk_size == 0) {
        throw std::invalid_argument("chunk size must be positive");
    }
    return sample_length / chunk_size + (sample_length % chunk_size != 0 ? 1 : 0);
}

OverheadAnalysis overhead_series(std::span<const AggregateStat> aggregates, std::uint64_t sample_length,
                                 const FloorRule &rule) {
    if (sample_length == 0) {
        throw AnalysisError("sample length must be positive");
    }

    std::map<Function, Floor> floors;
    std::map<Function, bool> has_chunked;
    for (const auto &agg : aggregates) {
        if (!agg.key.chunk_exponent) {
            continue;
        }
        has_chunked[agg.key.function] = true;
        if (agg.key.adapter != rule.baseline_adapter) {
            continue;
        }
        auto [it, inserted] = floors.try_emplace(agg.key.function,
                                                 Floor{agg.key.function, agg.mean_ns, *agg.key.chunk_exponent});
        if (!inserted && agg.mean_ns < it->second.floor_ns) {
            it->second = Floor{agg.key.function, agg.mean_ns, *agg.key.chunk_exponent};
        }
    }
    for (const auto &[function, present] : has_chunked) {
        if (!floors.contains(function)) {
            throw AnalysisError(fmt::format("no chunked '{}' aggregates for function '{}' to derive the floor from",
                                            rule.baseline_adapter, to_string(function)));
        }
    }

    // Aggregates arrive sorted by key, so each series' points come out in
    // ascending exponent order.
    std::map<std::tuple<std::string, Strategy, Function>, OverheadSeries> series;
    for (const auto &agg : aggregates) {
        if (!agg.key.chunk_exponent) {
            continue;
        }
        const double e = *agg.key.chunk_exponent;
        const auto calls = calls_for(sample_length, chunk_size_for(e));
        auto &s = series[{agg.key.adapter, agg.key.strategy, agg.key.function}];
        s.adapter = agg.key.adapter;
        s.strategy = agg.key.strategy;
        s.function = agg.key.function;
        s.points.push_back(OverheadPoint{e, calls, agg.mean_ns - floors.at(agg.key.function).floor_ns, agg.stddev_ns});
    }

    OverheadAnalysis out;
    for (auto &[function, floor] : floors) {
        out.floors.push_back(floor);
    }
    for (auto &[key, s] : series) {
        std::sort(s.points.begin(), s.points.end(),
                  [](const OverheadPoint &a, const OverheadPoint &b) { return a.chunk_exponent < b.chunk_exponent; });
        out.series.push_back(std::move(s));
    }
    return out;
}

}  // namespace ffibench::analysis
