#include "ffibench/analysis/render.hpp"

#include "ffibench/analysis/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace ffibench::analysis {

namespace {

constexpr double kNsPerMs = 1e6;
constexpr std::string_view kMissing = "-";

std::string method_label(const std::string &adapter, Strategy strategy) {
    return fmt::format("{} ({})", adapter, to_string(strategy));
}

// Columns are aligned by code points; "±" is two bytes in UTF-8.
std::size_t display_width(std::string_view text) {
    return static_cast<std::size_t>(
        std::count_if(text.begin(), text.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0U) != 0x80U; }));
}

std::string xml_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (const char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

double nice_step(double range) {
    const double raw = range / 5.0;
    const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
    const double fraction = raw / magnitude;
    double nice = 10.0;
    if (fraction <= 1.0) {
        nice = 1.0;
    } else if (fraction <= 2.0) {
        nice = 2.0;
    } else if (fraction <= 5.0) {
        nice = 5.0;
    }
    return nice * magnitude;
}

constexpr std::array<std::string_view, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                      "#9467bd", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string format_ms(double value_ns, double uncertainty_ns) {
    return fmt::format("{:.4g} ± {:.4g}", value_ns / kNsPerMs, uncertainty_ns / kNsPerMs);
}

Table serial_table(std::span<const AggregateStat> aggregates) {
    Table table{{"Method", "Strategy", "mean (ms)", "stddev (ms)"}, {}};
    std::map<std::pair<std::string, Strategy>, std::array<std::string, 2>> rows;
    for (const auto &agg : aggregates) {
        if (agg.key.chunk_exponent) {
            continue;
        }
        auto [it, inserted] = rows.try_emplace({agg.key.adapter, agg.key.strategy},
                                               std::array<std::string, 2>{std::string(kMissing), std::string(kMissing)});
        it->second[agg.key.function == Function::Mean ? 0 : 1] = format_ms(agg.mean_ns, agg.stddev_ns);
    }
    for (const auto &[key, cells] : rows) {
        table.rows.push_back({key.first, std::string(to_string(key.second)), cells[0], cells[1]});
    }
    return table;
}

Table chunked_table(std::span<const AggregateStat> aggregates, Function function) {
    std::set<std::pair<std::string, Strategy>> methods;
    std::map<double, std::map<std::pair<std::string, Strategy>, std::string>> cells;
    for (const auto &agg : aggregates) {
        if (!agg.key.chunk_exponent || agg.key.function != function) {
            continue;
        }
        methods.emplace(agg.key.adapter, agg.key.strategy);
        cells[*agg.key.chunk_exponent][{agg.key.adapter, agg.key.strategy}] = format_ms(agg.mean_ns, agg.stddev_ns);
    }

    Table table;
    table.header.emplace_back("Chunk size (2^n)");
    for (const auto &[adapter, strategy] : methods) {
        table.header.push_back(method_label(adapter, strategy));
    }
    for (const auto &[exponent, by_method] : cells) {
        std::vector<std::string> row{fmt::format("{:.1f}", exponent)};
        for (const auto &m : methods) {
            const auto it = by_method.find(m);
            row.push_back(it == by_method.end() ? std::string(kMissing) : it->second);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table regression_table(std::span<const SeriesFit> fits) {
    Table table{{"Method", "Strategy", "mean per-call (ms)", "mean base (ms)", "stddev per-call (ms)",
                 "stddev base (ms)"},
                {}};
    std::map<std::pair<std::string, Strategy>, std::array<std::string, 4>> rows;
    for (const auto &f : fits) {
        auto [it, inserted] = rows.try_emplace(
            {f.adapter, f.strategy}, std::array<std::string, 4>{std::string(kMissing), std::string(kMissing),
                                                                std::string(kMissing), std::string(kMissing)});
        const std::size_t offset = f.function == Function::Mean ? 0 : 2;
        it->second[offset] = format_ms(f.fit.slope, f.fit.slope_se);
        it->second[offset + 1] = format_ms(f.fit.intercept, f.fit.intercept_se);
    }
    for (const auto &[key, c] : rows) {
        table.rows.push_back({key.first, std::string(to_string(key.second)), c[0], c[1], c[2], c[3]});
    }
    return table;
}

std::string render_table(const Table &table, TableFormat format) {
    std::string out;
    if (format == TableFormat::Csv) {
        const auto emit = [&out](const std::vector<std::string> &row) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out += (i == 0 ? "" : ",");
                out += row[i];
            }
            out += '\n';
        };
        emit(table.header);
        for (const auto &row : table.rows) {
            emit(row);
        }
        return out;
    }

    std::vector<std::size_t> widths(table.header.size(), 0);
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        widths[i] = display_width(table.header[i]);
    }
    for (const auto &row : table.rows) {
        for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i) {
            widths[i] = std::max(widths[i], display_width(row[i]));
        }
    }
    const auto emit = [&](const std::vector<std::string> &row) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) {
                line += "  ";
            }
            line += row[i];
            if (i + 1 < row.size()) {
                line.append(widths[i] - display_width(row[i]), ' ');
            }
        }
        out += line;
        out += '\n';
    };
    emit(table.header);
    std::size_t rule = 0;
    for (std::size_t i = 0; i < widths.size(); ++i) {
        rule += widths[i] + (i > 0 ? 2 : 0);
    }
    out.append(rule, '-');
    out += '\n';
    for (const auto &row : table.rows) {
        emit(row);
    }
    return out;
}

std::string render_svg(const PlotSpec &spec) {
    if (spec.series.empty()) {
        throw std::invalid_argument("render_svg needs at least one series");
    }

    constexpr double kWidth = 760.0;
    constexpr double kHeight = 480.0;
    constexpr double kLeft = 90.0;
    constexpr double kRight = 230.0;
    constexpr double kTop = 40.0;
    constexpr double kBottom = 60.0;
    constexpr double kPlotW = kWidth - kLeft - kRight;
    constexpr double kPlotH = kHeight - kTop - kBottom;

    double lx_min = std::numeric_limits<double>::infinity();
    double lx_max = -lx_min;
    double y_min = std::numeric_limits<double>::infinity();
    double y_max = -y_min;
    for (const auto &s : spec.series) {
        for (const auto &p : s.points) {
            if (!(p.x > 0.0) || !std::isfinite(p.x) || !std::isfinite(p.y)) {
                throw std::invalid_argument("plot points need finite y and positive x");
            }
            lx_min = std::min(lx_min, std::log10(p.x));
            lx_max = std::max(lx_max, std::log10(p.x));
            y_min = std::min(y_min, p.y - p.err);
            y_max = std::max(y_max, p.y + p.err);
        }
    }
    if (spec.floor) {
        y_min = std::min(y_min, *spec.floor);
        y_max = std::max(y_max, *spec.floor);
    }
    if (!std::isfinite(lx_min)) {
        lx_min = 0.0;
        lx_max = 1.0;
    }
    if (!std::isfinite(y_min)) {
        y_min = 0.0;
        y_max = 1.0;
    }

    const double decade_lo = std::floor(lx_min);
    double decade_hi = std::ceil(lx_max);
    if (decade_hi <= decade_lo) {
        decade_hi = decade_lo + 1.0;
    }
    if (y_max <= y_min) {
        const double pad = std::max(1.0, std::abs(y_min) * 0.1);
        y_min -= pad;
        y_max += pad;
    }
    const double step = nice_step(y_max - y_min);
    const double y_lo = std::floor(y_min / step) * step;
    const double y_hi = std::ceil(y_max / step) * step;

    const auto px = [&](double x) { return kLeft + (std::log10(x) - decade_lo) / (decade_hi - decade_lo) * kPlotW; };
    const auto py = [&](double y) { return kTop + (y_hi - y) / (y_hi - y_lo) * kPlotH; };

    std::string svg;
    auto out = std::back_inserter(svg);
    fmt::format_to(out,
                   "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                   "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.0f}\" height=\"{1:.0f}\" "
                   "viewBox=\"0 0 {0:.0f} {1:.0f}\" font-family=\"sans-serif\" font-size=\"12\">\n",
                   kWidth, kHeight);
    fmt::format_to(out, "<rect x=\"0\" y=\"0\" width=\"{:.0f}\" height=\"{:.0f}\" fill=\"white\"/>\n", kWidth,
                   kHeight);
    fmt::format_to(out, "<text x=\"{:.2f}\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">{}</text>\n",
                   kLeft + kPlotW / 2.0, xml_escape(spec.title));

    // axes frame
    fmt::format_to(out,
                   "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"none\" "
                   "stroke=\"black\"/>\n",
                   kLeft, kTop, kPlotW, kPlotH);

    for (double d = decade_lo; d <= decade_hi; d += 1.0) {
        const double x = kLeft + (d - decade_lo) / (decade_hi - decade_lo) * kPlotW;
        fmt::format_to(out, "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" stroke=\"#dddddd\"/>\n",
                       x, kTop, kTop + kPlotH);
        fmt::format_to(out,
                       "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">10<tspan dy=\"-5\" "
                       "font-size=\"9\">{:.0f}</tspan></text>\n",
                       x, kTop + kPlotH + 18.0, d);
    }
    const auto y_ticks = static_cast<int>(std::lround((y_hi - y_lo) / step));
    for (int i = 0; i <= y_ticks; ++i) {
        const double v = y_lo + step * i;
        const double y = py(v);
        fmt::format_to(out, "<line x1=\"{0:.2f}\" y1=\"{2:.2f}\" x2=\"{1:.2f}\" y2=\"{2:.2f}\" stroke=\"#dddddd\"/>\n",
                       kLeft, kLeft + kPlotW, y);
        fmt::format_to(out, "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">{:.4g}</text>\n", kLeft - 6.0,
                       y + 4.0, std::abs(v) < step * 1e-9 ? 0.0 : v);
    }
    fmt::format_to(out, "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n", kLeft + kPlotW / 2.0,
                   kHeight - 16.0, xml_escape(spec.x_label));
    fmt::format_to(out,
                   "<text x=\"20\" y=\"{0:.2f}\" text-anchor=\"middle\" transform=\"rotate(-90 20 {0:.2f})\">{1}</text>\n",
                   kTop + kPlotH / 2.0, xml_escape(spec.y_label));

    if (spec.floor) {
        const double y = py(*spec.floor);
        fmt::format_to(out,
                       "<line class=\"floor\" x1=\"{0:.2f}\" y1=\"{2:.2f}\" x2=\"{1:.2f}\" y2=\"{2:.2f}\" "
                       "stroke=\"black\" stroke-dasharray=\"6 4\"/>\n",
                       kLeft, kLeft + kPlotW, y);
    }

    for (std::size_t si = 0; si < spec.series.size(); ++si) {
        const auto &s = spec.series[si];
        const auto colour = kPalette[si % kPalette.size()];
        auto points = s.points;
        std::sort(points.begin(), points.end(), [](const PlotPoint &a, const PlotPoint &b) { return a.x < b.x; });

        fmt::format_to(out, "<g class=\"series\" stroke=\"{}\" fill=\"{}\">\n", colour, colour);
        std::string coords;
        for (const auto &p : points) {
            coords += fmt::format("{}{:.2f},{:.2f}", coords.empty() ? "" : " ", px(p.x), py(p.y));
        }
        fmt::format_to(out, "<polyline fill=\"none\" stroke-width=\"1.5\" points=\"{}\"/>\n", coords);
        for (const auto &p : points) {
            if (p.err > 0.0) {
                fmt::format_to(out, "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\"/>\n", px(p.x),
                               py(p.y - p.err), py(p.y + p.err));
            }
            fmt::format_to(out, "<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"2.5\"/>\n", px(p.x), py(p.y));
        }
        fmt::format_to(out, "</g>\n");

        const double ly = kTop + 10.0 + 18.0 * static_cast<double>(si);
        const double lx = kLeft + kPlotW + 14.0;
        fmt::format_to(out, "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"14\" height=\"4\" fill=\"{}\"/>\n", lx, ly - 4.0,
                       colour);
        fmt::format_to(out, "<text x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n", lx + 20.0, ly + 2.0, xml_escape(s.label));
    }
    if (spec.floor) {
        const double ly = kTop + 10.0 + 18.0 * static_cast<double>(spec.series.size());
        const double lx = kLeft + kPlotW + 14.0;
        fmt::format_to(out, "<text x=\"{:.2f}\" y=\"{:.2f}\">- - floor ({:.4g})</text>\n", lx, ly + 2.0, *spec.floor);
    }
    svg += "</svg>\n";
    return svg;
}

void render_plot(const PlotSpec &spec, const std::filesystem::path &path) {
    const auto svg = render_svg(spec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw FormatError(fmt::format("cannot open '{}' for writing", path.string()));
    }
    out << svg;
    if (!out) {
        throw FormatError(fmt::format("write to '{}' failed", path.string()));
    }
}

}  // namespace ffibench::analysis
