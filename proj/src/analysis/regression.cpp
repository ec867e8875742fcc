#include "ffibench/analysis/regression.hpp"

#include "ffibench/analysis/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ffibench::analysis {

RegressionResult ols_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("x and y must have the same length");
    }
    const std::size_t n = x.size();
    if (n < 3) {
        throw std::invalid_argument(fmt::format("ols_fit needs at least 3 points, got {}", n));
    }
    const auto nd = static_cast<double>(n);

    double x_sum = 0.0;
    double y_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        x_sum += x[i];
        y_sum += y[i];
    }
    const double x_bar = x_sum / nd;
    const double y_bar = y_sum / nd;

    // Centered sums keep the normal equations well conditioned.
    double sxx = 0.0;
    double sxy = 0.0;
    double x_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - x_bar;
        sxx += dx * dx;
        sxy += dx * (y[i] - y_bar);
        x_sq += x[i] * x[i];
    }
    if (sxx == 0.0) {
        throw DegenerateDesignError("all x values are identical; slope is undetermined");
    }

    RegressionResult r;
    r.n_points = n;
    r.slope = sxy / sxx;
    r.intercept = y_bar - r.slope * x_bar;

    double ssr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double residual = y[i] - (r.intercept + r.slope * x[i]);
        ssr += residual * residual;
    }
    const double s2 = ssr / (nd - 2.0);
    r.slope_se = std::sqrt(s2 / sxx);
    r.intercept_se = r.slope_se * std::sqrt(x_sq / nd);
    return r;
}

RegressionResult ols_fit(std::span<const OverheadPoint> points) {
    std::vector<double> x;
    std::vector<double> y;
    x.reserve(points.size());
    y.reserve(points.size());
    for (const auto &p : points) {
        x.push_back(static_cast<double>(p.n_calls));
        y.push_back(p.overhead_ns);
    }
    return ols_fit(x, y);
}

std::vector<SeriesFit> fit_series(std::span<const OverheadSeries> series, std::vector<std::string> *warnings) {
    std::vector<SeriesFit> fits;
    for (const auto &s : series) {
        try {
            fits.push_back(SeriesFit{s.adapter, s.strategy, s.function, ols_fit(s.points)});
        } catch (const std::logic_error &e) {
            // too few points or degenerate design
            if (warnings != nullptr) {
                warnings->push_back(fmt::format("skipping fit for {}/{}/{}: {}", s.adapter, to_string(s.strategy),
                                                to_string(s.function), e.what()));
            }
        }
    }
    return fits;
}

}  // namespace ffibench::analysis
