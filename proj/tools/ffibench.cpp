// ffibench: sample generation and timing-record analysis.
//
//   ffibench gen --n 1000000 --seed 42 --out sample.bin
//   ffibench analyze --records records.csv --sample-length 1000000 --out analysis/
//   ffibench report --analysis analysis/ --tables --plots

#include "ffibench/analysis/errors.hpp"
#include "ffibench/analysis/pipeline.hpp"
#include "ffibench/analysis/sample.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdint>
#include <cstdio>
#include <exception>
#include <string>

namespace fa = ffibench::analysis;

namespace {

void print_warnings(const std::vector<std::string> &warnings) {
    for (const auto &w : warnings) {
        fmt::print(stderr, "warning: {}\n", w);
    }
}

int run_gen(std::uint64_t n, std::uint64_t seed, const std::string &out) {
    const auto values = fa::generate_sample(n, seed);
    fa::write_sample(out, values);
    fmt::print("wrote {} values ({} bytes) to {}\n", n, 8 * n, out);
    return 0;
}

int run_analyze(const std::string &records_path, std::uint64_t sample_length, const std::string &out_dir,
                const std::string &baseline) {
    std::vector<std::string> warnings;
    const auto records = fa::read_records_file(records_path, &warnings);
    const auto bundle = fa::analyze(records, sample_length, fa::FloorRule{baseline}, &warnings);
    fa::write_analysis(out_dir, bundle);
    print_warnings(warnings);
    fmt::print("{} records, {} groups, {} overhead series, {} fits -> {}\n", records.size(),
               bundle.aggregates.size(), bundle.overhead.size(), bundle.fits.size(), out_dir);
    return 0;
}

int run_report(const std::string &analysis_dir, bool tables, bool plots, const std::string &out_dir) {
    if (!tables && !plots) {
        tables = plots = true;
    }
    const auto bundle = fa::read_analysis(analysis_dir);
    const auto written = fa::write_report(bundle, out_dir.empty() ? analysis_dir : out_dir, {tables, plots});
    if (tables) {
        fmt::print("{}\n", fa::render_table(fa::serial_table(bundle.aggregates), fa::TableFormat::Text));
        fmt::print("{}", fa::render_table(fa::regression_table(bundle.fits), fa::TableFormat::Text));
    }
    for (const auto &p : written) {
        fmt::print("wrote {}\n", p.string());
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"FFI binding benchmark toolkit: sample generation and overhead analysis"};
    app.require_subcommand(1);

    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    std::string gen_out;
    auto *gen = app.add_subcommand("gen", "Write a uniform [0,1) float64 sample file");
    gen->add_option("--n", n, "Number of values")->required()->check(CLI::Range(std::uint64_t{1}, UINT64_MAX / 8));
    gen->add_option("--seed", seed, "Generator seed")->required();
    gen->add_option("--out", gen_out, "Output path")->required();

    std::string records_path;
    std::uint64_t sample_length = 0;
    std::string analyze_out;
    std::string baseline = "reference_baseline";
    auto *analyze = app.add_subcommand("analyze", "Aggregate timing records and fit per-call overhead");
    analyze->add_option("--records", records_path, "Driver records CSV")->required()->check(CLI::ExistingFile);
    analyze->add_option("--sample-length", sample_length, "Elements per sample in the chunked runs")
        ->required()
        ->check(CLI::PositiveNumber);
    analyze->add_option("--out", analyze_out, "Analysis output directory")->required();
    analyze->add_option("--baseline", baseline, "Adapter whose minimum chunked time is the floor")
        ->capture_default_str();

    std::string analysis_dir;
    std::string report_out;
    bool tables = false;
    bool plots = false;
    auto *report = app.add_subcommand("report", "Render tables and plots from an analysis directory");
    report->add_option("--analysis", analysis_dir, "Directory written by analyze")
        ->required()
        ->check(CLI::ExistingDirectory);
    report->add_flag("--tables", tables, "Write tables (.txt and .csv)");
    report->add_flag("--plots", plots, "Write SVG plots");
    report->add_option("--out", report_out, "Output directory (defaults to the analysis directory)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            return run_gen(n, seed, gen_out);
        }
        if (*analyze) {
            return run_analyze(records_path, sample_length, analyze_out, baseline);
        }
        return run_report(analysis_dir, tables, plots, report_out);
    } catch (const std::exception &e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 1;
    }
}
