#pragma once

#include "ffibench/analysis/aggregate.hpp"
#include "ffibench/analysis/regression.hpp"

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ffibench::analysis {

enum class TableFormat { Csv, Text };

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// "value ± uncertainty" in milliseconds, 4 significant digits each.
[[nodiscard]] std::string format_ms(double value_ns, double uncertainty_ns);

/// Serial aggregates: one row per (adapter, strategy), mean/stddev columns.
[[nodiscard]] Table serial_table(std::span<const AggregateStat> aggregates);

/// Chunked aggregates of one function: one row per exponent, one column per
/// (adapter, strategy).
[[nodiscard]] Table chunked_table(std::span<const AggregateStat> aggregates, Function function);

/// Per-call and base overhead per (adapter, strategy), both functions.
[[nodiscard]] Table regression_table(std::span<const SeriesFit> fits);

[[nodiscard]] std::string render_table(const Table &table, TableFormat format);

struct PlotPoint {
    double x = 0.0;
    double y = 0.0;
    double err = 0.0;
};

struct PlotSeries {
    std::string label;
    std::vector<PlotPoint> points;
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<PlotSeries> series;
    std::optional<double> floor;  // dashed horizontal line
};

/// Standalone SVG with a log10 x-axis, one polyline per series and error
/// bars. Needs at least one series and strictly positive x values
/// (std::invalid_argument otherwise). Output is a pure function of the spec.
[[nodiscard]] std::string render_svg(const PlotSpec &spec);

void render_plot(const PlotSpec &spec, const std::filesystem::path &path);

}  // namespace ffibench::analysis
