#pragma once

// Golden-file comparison for the analyzer report. Set FFIBENCH_UPDATE_GOLDEN=1
// to rewrite the stored files instead of comparing.

#include "ffibench/analysis/pipeline.hpp"
#include "fixtures.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

namespace ffibench::testing {

constexpr std::uint64_t kReportSampleLength = 1 << 14;

inline std::string read_file(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline analysis::AnalysisBundle report_fixture_bundle() {
    const auto records = report_fixture_records();
    return analysis::analyze(records, kReportSampleLength);
}

struct GoldenResult {
    std::size_t files = 0;
    std::vector<std::string> mismatches;
    bool updated = false;

    [[nodiscard]] bool ok() const noexcept { return files > 0 && mismatches.empty(); }
};

/// Renders the fixture report into `scratch` and compares each file with
/// its counterpart in `golden_dir`.
inline GoldenResult compare_report_with_golden(const std::filesystem::path &golden_dir,
                                               const std::filesystem::path &scratch) {
    GoldenResult result;
    std::filesystem::remove_all(scratch);
    const auto written = analysis::write_report(report_fixture_bundle(), scratch);
    result.files = written.size();

    const char *update = std::getenv("FFIBENCH_UPDATE_GOLDEN");
    if (update != nullptr && std::string(update) == "1") {
        std::filesystem::create_directories(golden_dir);
        for (const auto &p : written) {
            std::filesystem::copy_file(p, golden_dir / p.filename(),
                                       std::filesystem::copy_options::overwrite_existing);
        }
        result.updated = true;
        return result;
    }

    for (const auto &p : written) {
        const auto golden = golden_dir / p.filename();
        if (!std::filesystem::exists(golden)) {
            result.mismatches.push_back(p.filename().string() + " (no golden file)");
        } else if (read_file(golden) != read_file(p)) {
            result.mismatches.push_back(p.filename().string());
        }
    }
    // a golden file with no counterpart means the report lost an output
    for (const auto &entry : std::filesystem::directory_iterator(golden_dir)) {
        if (!std::filesystem::exists(scratch / entry.path().filename())) {
            result.mismatches.push_back(entry.path().filename().string() + " (not produced)");
        }
    }
    return result;
}

}  // namespace ffibench::testing
