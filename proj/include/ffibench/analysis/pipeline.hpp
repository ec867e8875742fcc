#pragma once

#include "ffibench/analysis/analysis_io.hpp"
#include "ffibench/analysis/records.hpp"
#include "ffibench/analysis/render.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace ffibench::analysis {

/// aggregate -> overhead_series -> fit_series. Also warns when a chunked
/// record's n_calls disagrees with ceil(sample_length / chunk_size).
[[nodiscard]] AnalysisBundle analyze(std::span<const TimingRecord> records, std::uint64_t sample_length,
                                     const FloorRule &rule = {}, std::vector<std::string> *warnings = nullptr);

/// Chunked execution time against chunk size for one function, with the
/// baseline floor dashed. Times in ms.
[[nodiscard]] PlotSpec chunked_plot(const AnalysisBundle &bundle, Function function);

/// Overhead above the floor against number of calls for one function.
[[nodiscard]] PlotSpec overhead_plot(const AnalysisBundle &bundle, Function function);

struct ReportOptions {
    bool tables = true;
    bool plots = true;
};

/// Writes tables (.txt aligned text and .csv) and SVG plots into `out_dir`.
/// Tables and plots with no underlying data are skipped. Returns the paths
/// written, in a fixed order.
std::vector<std::filesystem::path> write_report(const AnalysisBundle &bundle, const std::filesystem::path &out_dir,
                                                const ReportOptions &options = {});

}  // namespace ffibench::analysis
