#pragma once

#include "ffibench/analysis/aggregate.hpp"
#include "ffibench/analysis/regression.hpp"

#include <filesystem>
#include <vector>

namespace ffibench::analysis {

/// Everything `analyze` produces. Persisted as four CSV files in one
/// directory (aggregates.csv, floors.csv, overhead.csv, regression.csv).
struct AnalysisBundle {
    std::vector<AggregateStat> aggregates;
    std::vector<Floor> floors;
    std::vector<OverheadSeries> overhead;
    std::vector<SeriesFit> fits;
};

void write_analysis(const std::filesystem::path &dir, const AnalysisBundle &bundle);

/// Throws FormatError on malformed or missing files.
[[nodiscard]] AnalysisBundle read_analysis(const std::filesystem::path &dir);

}  // namespace ffibench::analysis
