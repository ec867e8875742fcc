#include "ffibench/analysis/pipeline.hpp"

#include "ffibench/analysis/errors.hpp"

#include <fmt/format.h>

#include <fstream>
#include <map>

namespace ffibench::analysis {

namespace {

constexpr double kNsPerMs = 1e6;

std::string label(const std::string &adapter, Strategy strategy) {
    return fmt::format("{} ({})", adapter, to_string(strategy));
}

void write_text(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) {
        throw FormatError(fmt::format("cannot write '{}'", path.string()));
    }
}

}  // namespace

AnalysisBundle analyze(std::span<const TimingRecord> records, std::uint64_t sample_length, const FloorRule &rule,
                       std::vector<std::string> *warnings) {
    if (warnings != nullptr) {
        for (const auto &r : records) {
            if (!r.chunk_exponent) {
                continue;
            }
            const auto expected = calls_for(sample_length, chunk_size_for(*r.chunk_exponent));
            if (r.n_calls != expected) {
                warnings->push_back(fmt::format(
                    "{}/{}/{} sample {} run {} at 2^{}: n_calls {} but sample length {} implies {}", r.adapter,
                    to_string(r.strategy), to_string(r.function), r.sample_id, r.run_id, *r.chunk_exponent,
                    r.n_calls, sample_length, expected));
            }
        }
    }

    AnalysisBundle bundle;
    bundle.aggregates = aggregate(records, warnings);
    auto overhead = overhead_series(bundle.aggregates, sample_length, rule);
    bundle.floors = std::move(overhead.floors);
    bundle.overhead = std::move(overhead.series);
    bundle.fits = fit_series(bundle.overhead, warnings);
    return bundle;
}

PlotSpec chunked_plot(const AnalysisBundle &bundle, Function function) {
    PlotSpec spec;
    spec.title = fmt::format("Chunked execution time: {}()", to_string(function));
    spec.x_label = "chunk size (elements)";
    spec.y_label = "total time (ms)";

    std::map<std::pair<std::string, Strategy>, PlotSeries> series;
    for (const auto &agg : bundle.aggregates) {
        if (!agg.key.chunk_exponent || agg.key.function != function) {
            continue;
        }
        auto &s = series[{agg.key.adapter, agg.key.strategy}];
        s.label = label(agg.key.adapter, agg.key.strategy);
        s.points.push_back(PlotPoint{static_cast<double>(chunk_size_for(*agg.key.chunk_exponent)),
                                     agg.mean_ns / kNsPerMs, agg.stddev_ns / kNsPerMs});
    }
    for (auto &[key, s] : series) {
        spec.series.push_back(std::move(s));
    }
    for (const auto &f : bundle.floors) {
        if (f.function == function) {
            spec.floor = f.floor_ns / kNsPerMs;
        }
    }
    return spec;
}

PlotSpec overhead_plot(const AnalysisBundle &bundle, Function function) {
    PlotSpec spec;
    spec.title = fmt::format("Call overhead above baseline floor: {}()", to_string(function));
    spec.x_label = "number of calls";
    spec.y_label = "overhead (ms)";
    for (const auto &s : bundle.overhead) {
        if (s.function != function) {
            continue;
        }
        PlotSeries ps{label(s.adapter, s.strategy), {}};
        for (const auto &p : s.points) {
            ps.points.push_back(
                PlotPoint{static_cast<double>(p.n_calls), p.overhead_ns / kNsPerMs, p.stddev_ns / kNsPerMs});
        }
        spec.series.push_back(std::move(ps));
    }
    return spec;
}

std::vector<std::filesystem::path> write_report(const AnalysisBundle &bundle, const std::filesystem::path &out_dir,
                                                const ReportOptions &options) {
    std::filesystem::create_directories(out_dir);
    std::vector<std::filesystem::path> written;

    const auto emit_table = [&](const Table &table, const std::string &stem) {
        for (const auto &[format, ext] : {std::pair{TableFormat::Text, ".txt"}, std::pair{TableFormat::Csv, ".csv"}}) {
            const auto path = out_dir / (stem + ext);
            write_text(path, render_table(table, format));
            written.push_back(path);
        }
    };

    if (options.tables) {
        emit_table(serial_table(bundle.aggregates), "table_serial");
        for (const auto f : {Function::Mean, Function::Stddev}) {
            const auto table = chunked_table(bundle.aggregates, f);
            if (!table.rows.empty()) {
                emit_table(table, fmt::format("table_chunked_{}", to_string(f)));
            }
        }
        emit_table(regression_table(bundle.fits), "table_regression");
    }

    if (options.plots) {
        for (const auto f : {Function::Mean, Function::Stddev}) {
            const auto chunked = chunked_plot(bundle, f);
            if (!chunked.series.empty()) {
                const auto path = out_dir / fmt::format("plot_chunked_{}.svg", to_string(f));
                render_plot(chunked, path);
                written.push_back(path);
            }
            const auto overhead = overhead_plot(bundle, f);
            if (!overhead.series.empty()) {
                const auto path = out_dir / fmt::format("plot_overhead_{}.svg", to_string(f));
                render_plot(overhead, path);
                written.push_back(path);
            }
        }
    }
    return written;
}

}  // namespace ffibench::analysis
