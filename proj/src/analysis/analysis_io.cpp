#include "ffibench/analysis/analysis_io.hpp"

#include "csv.hpp"
#include "ffibench/analysis/errors.hpp"

#include <fmt/format.h>

#include <fstream>
#include <map>
#include <tuple>

namespace ffibench::analysis {

namespace {

constexpr std::string_view kAggregatesHeader = "adapter,strategy,function,chunk_exponent,mean_ns,stddev_ns,n";
constexpr std::string_view kFloorsHeader = "function,floor_ns,chunk_exponent";
constexpr std::string_view kOverheadHeader = "adapter,strategy,function,chunk_exponent,n_calls,overhead_ns,stddev_ns";
constexpr std::string_view kRegressionHeader =
    "adapter,strategy,function,slope,intercept,slope_se,intercept_se,n_points";

std::ofstream open_out(const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw FormatError(fmt::format("cannot open '{}' for writing", path.string()));
    }
    return out;
}

std::ifstream open_in(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError(fmt::format("missing analysis file '{}'", path.string()));
    }
    return in;
}

Strategy strategy_field(std::string_view text, std::size_t line_no) {
    const auto s = parse_strategy(text);
    if (!s) {
        throw FormatError(fmt::format("line {}: unknown strategy '{}'", line_no, text));
    }
    return *s;
}

Function function_field(std::string_view text, std::size_t line_no) {
    const auto f = parse_function(text);
    if (!f) {
        throw FormatError(fmt::format("line {}: unknown function '{}'", line_no, text));
    }
    return *f;
}

// Calls `row` for each non-empty data line; rethrows FormatError prefixed
// with the file name.
template <typename RowFn>
void for_each_row(const std::filesystem::path &path, std::string_view header, std::size_t columns, RowFn row) {
    auto in = open_in(path);
    try {
        csv::expect_header(in, header, path.filename().string());
        std::string line;
        std::size_t line_no = 1;
        while (csv::read_line(in, line)) {
            ++line_no;
            if (line.empty()) {
                continue;
            }
            const auto fields = csv::split(line);
            csv::expect_columns(fields, columns, line_no);
            row(fields, line_no);
        }
    } catch (const FormatError &e) {
        throw FormatError(fmt::format("{}: {}", path.filename().string(), e.what()));
    }
}

}  // namespace

void write_analysis(const std::filesystem::path &dir, const AnalysisBundle &bundle) {
    std::filesystem::create_directories(dir);

    auto agg = open_out(dir / "aggregates.csv");
    agg << kAggregatesHeader << '\n';
    for (const auto &a : bundle.aggregates) {
        agg << fmt::format("{},{},{},{},{},{},{}\n", a.key.adapter, to_string(a.key.strategy),
                           to_string(a.key.function),
                           a.key.chunk_exponent ? fmt::format("{}", *a.key.chunk_exponent) : "", a.mean_ns,
                           a.stddev_ns, a.n);
    }

    auto floors = open_out(dir / "floors.csv");
    floors << kFloorsHeader << '\n';
    for (const auto &f : bundle.floors) {
        floors << fmt::format("{},{},{}\n", to_string(f.function), f.floor_ns, f.chunk_exponent);
    }

    auto overhead = open_out(dir / "overhead.csv");
    overhead << kOverheadHeader << '\n';
    for (const auto &s : bundle.overhead) {
        for (const auto &p : s.points) {
            overhead << fmt::format("{},{},{},{},{},{},{}\n", s.adapter, to_string(s.strategy), to_string(s.function),
                                    p.chunk_exponent, p.n_calls, p.overhead_ns, p.stddev_ns);
        }
    }

    auto regression = open_out(dir / "regression.csv");
    regression << kRegressionHeader << '\n';
    for (const auto &f : bundle.fits) {
        regression << fmt::format("{},{},{},{},{},{},{},{}\n", f.adapter, to_string(f.strategy),
                                  to_string(f.function), f.fit.slope, f.fit.intercept, f.fit.slope_se,
                                  f.fit.intercept_se, f.fit.n_points);
    }

    for (auto *stream : {&agg, &floors, &overhead, &regression}) {
        stream->flush();
        if (!*stream) {
            throw FormatError(fmt::format("writing analysis files into '{}' failed", dir.string()));
        }
    }
}

AnalysisBundle read_analysis(const std::filesystem::path &dir) {
    AnalysisBundle bundle;

    for_each_row(dir / "aggregates.csv", kAggregatesHeader, 7, [&](const auto &f, std::size_t ln) {
        AggregateStat a;
        a.key.adapter = std::string(f[0]);
        a.key.strategy = strategy_field(f[1], ln);
        a.key.function = function_field(f[2], ln);
        if (!f[3].empty()) {
            a.key.chunk_exponent = csv::parse_number<double>(f[3], "chunk_exponent", ln);
        }
        a.mean_ns = csv::parse_number<double>(f[4], "mean_ns", ln);
        a.stddev_ns = csv::parse_number<double>(f[5], "stddev_ns", ln);
        a.n = csv::parse_number<std::uint64_t>(f[6], "n", ln);
        bundle.aggregates.push_back(std::move(a));
    });

    for_each_row(dir / "floors.csv", kFloorsHeader, 3, [&](const auto &f, std::size_t ln) {
        bundle.floors.push_back(Floor{function_field(f[0], ln), csv::parse_number<double>(f[1], "floor_ns", ln),
                                      csv::parse_number<double>(f[2], "chunk_exponent", ln)});
    });

    std::map<std::tuple<std::string, Strategy, Function>, std::size_t> series_index;
    for_each_row(dir / "overhead.csv", kOverheadHeader, 7, [&](const auto &f, std::size_t ln) {
        const std::string adapter(f[0]);
        const auto strategy = strategy_field(f[1], ln);
        const auto function = function_field(f[2], ln);
        auto [it, inserted] = series_index.try_emplace({adapter, strategy, function}, bundle.overhead.size());
        if (inserted) {
            bundle.overhead.push_back(OverheadSeries{adapter, strategy, function, {}});
        }
        bundle.overhead[it->second].points.push_back(
            OverheadPoint{csv::parse_number<double>(f[3], "chunk_exponent", ln),
                          csv::parse_number<std::uint64_t>(f[4], "n_calls", ln),
                          csv::parse_number<double>(f[5], "overhead_ns", ln),
                          csv::parse_number<double>(f[6], "stddev_ns", ln)});
    });

    for_each_row(dir / "regression.csv", kRegressionHeader, 8, [&](const auto &f, std::size_t ln) {
        SeriesFit fit;
        fit.adapter = std::string(f[0]);
        fit.strategy = strategy_field(f[1], ln);
        fit.function = function_field(f[2], ln);
        fit.fit.slope = csv::parse_number<double>(f[3], "slope", ln);
        fit.fit.intercept = csv::parse_number<double>(f[4], "intercept", ln);
        fit.fit.slope_se = csv::parse_number<double>(f[5], "slope_se", ln);
        fit.fit.intercept_se = csv::parse_number<double>(f[6], "intercept_se", ln);
        fit.fit.n_points = csv::parse_number<std::size_t>(f[7], "n_points", ln);
        bundle.fits.push_back(std::move(fit));
    });

    return bundle;
}

}  // namespace ffibench::analysis
