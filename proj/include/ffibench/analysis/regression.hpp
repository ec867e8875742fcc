#pragma once

#include "ffibench/analysis/aggregate.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ffibench::analysis {

/// Straight-line least-squares fit y = intercept + slope * x with the usual
/// coefficient standard errors (residual variance on n - 2 degrees of
/// freedom).
struct RegressionResult {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_se = 0.0;
    double intercept_se = 0.0;
    std::size_t n_points = 0;
};

/// Requires at least 3 points and matching spans (std::invalid_argument
/// otherwise); all-identical x throws DegenerateDesignError.
[[nodiscard]] RegressionResult ols_fit(std::span<const double> x, std::span<const double> y);

/// Fits overhead_ns against n_calls.
[[nodiscard]] RegressionResult ols_fit(std::span<const OverheadPoint> points);

struct SeriesFit {
    std::string adapter;
    Strategy strategy = Strategy::InSitu;
    Function function = Function::Mean;
    RegressionResult fit;
};

/// Fits every series with enough distinct points; the rest are reported
/// through `warnings` and skipped.
[[nodiscard]] std::vector<SeriesFit> fit_series(std::span<const OverheadSeries> series,
                                                std::vector<std::string> *warnings = nullptr);

}  // namespace ffibench::analysis
