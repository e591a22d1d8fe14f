// Runs the sparse system identification study and writes MSD traces.
//
//   sparse_lms_cli --out results --runs 50 --sr 1/16,4/16 --plot --summary

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "sparse_lms/config.hpp"
#include "sparse_lms/errors.hpp"
#include "sparse_lms/experiment.hpp"
#include "sparse_lms/report.hpp"

namespace {

struct RunSpec {
    std::string config_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> runs;
    std::optional<std::size_t> iterations;
    std::optional<std::string> algorithms;
    std::optional<std::string> sparsity;
    unsigned threads = 1;
    bool plot = false;
    bool db = false;
    bool summary = false;
};

int run(const RunSpec& spec) {
    using namespace sparse_lms;

    ExperimentConfig cfg = spec.config_path.empty() ? parse_config("") : load_config(spec.config_path);
    if (spec.seed) cfg.master_seed = *spec.seed;
    if (spec.runs) cfg.runs = *spec.runs;
    if (spec.iterations) {
        cfg.iterations = *spec.iterations;
        cfg.steady_state_window = std::min(cfg.steady_state_window, cfg.iterations);
    }
    if (spec.sparsity) cfg.sparsity_levels = parse_sparsity_list(*spec.sparsity, cfg.n_taps);

    std::vector<Variant> variants(std::begin(kAllVariants), std::end(kAllVariants));
    if (spec.algorithms) variants = parse_variant_list(*spec.algorithms);
    validate(cfg, variants);

    const std::filesystem::path out_dir(spec.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir.string() + ": " + ec.message());

    const std::vector<MsdCurve> curves =
        run_experiment(cfg, variants, cfg.sparsity_levels, spec.threads);

    emit_csv(curves, out_dir / "msd.csv");
    if (spec.plot || spec.db) emit_plot(curves, out_dir / "msd.svg", spec.db);

    if (spec.summary) {
        std::vector<SteadyStateSummary> rows;
        rows.reserve(curves.size());
        for (const MsdCurve& c : curves) rows.push_back(steady_state(c, cfg.steady_state_window));
        write_summary(rows, std::cout);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MSD study of LMS, leaky LMS and p-norm-like constrained variants"};
    RunSpec spec;
    app.add_option("--config", spec.config_path, "Run configuration file")->check(CLI::ExistingFile);
    app.add_option("--out", spec.out_dir, "Output directory (created if absent)");
    app.add_option("--seed", spec.seed, "Master seed");
    app.add_option("--runs", spec.runs, "Independent runs per cell");
    app.add_option("--iterations", spec.iterations, "Updates per run");
    app.add_option("--algorithms", spec.algorithms,
                   "Comma list of lms, llms, lp_like_lms, lp_like_llms");
    app.add_option("--sr", spec.sparsity, "Comma list of sparsity ratios such as 1/16,4/16");
    app.add_option("--threads", spec.threads, "Worker threads (output does not depend on it)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--plot", spec.plot, "Write msd.svg");
    app.add_flag("--db", spec.db, "Plot MSD in dB (implies --plot)");
    app.add_flag("--summary", spec.summary, "Print steady-state means and standard errors");

    CLI11_PARSE(app, argc, argv);

    try {
        return run(spec);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
