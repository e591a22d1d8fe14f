#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "sparse_lms/filter_core.hpp"
#include "sparse_lms/signal_gen.hpp"

namespace sparse_lms {

/// One cell of the study: an update rule at a given number of nonzero taps.
struct CellKey {
    Variant variant;
    std::size_t sparsity_level;

    auto operator<=>(const CellKey&) const = default;
};

using Schedule = std::map<CellKey, AlgorithmConfig>;

/// Baseline hyperparameters for a variant at a sparsity level without a tabulated entry.
AlgorithmConfig base_config(Variant v);

/// Tabulated hyperparameters for 16-tap systems with 1, 4, 8 and 16 nonzero taps.
Schedule default_schedule();

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'1e55'0f1a'2014ULL;

struct ExperimentConfig {
    std::size_t n_taps = 16;
    std::vector<std::size_t> sparsity_levels{1, 4, 8, 16};
    std::size_t iterations = 8000;
    std::size_t runs = 200;
    double ar_coeff = 0.8;
    double drive_variance = 1e-3;
    double noise_variance = 1e-2;
    std::uint64_t master_seed = kDefaultSeed;
    Schedule schedule = default_schedule();
    std::size_t steady_state_window = 500;

    /// Input and noise realizations carry this many extra samples beyond `iterations`.
    std::size_t signal_length() const { return iterations + n_taps; }
};

/// Throws ParameterError naming the violated constraint. Checks that every
/// (variant, level) pair for the requested levels has a schedule entry.
void validate(const ExperimentConfig& cfg, std::span<const Variant> variants = kAllVariants);

struct MsdCurve {
    Variant variant = Variant::Lms;
    std::size_t sparsity_level = 0;
    std::size_t n_taps = 0;
    std::size_t runs = 0;
    std::vector<double> values;  // MSD after update k, averaged over runs

    /// Trailing steady_state_window samples of each run's own trace, for the standard
    /// error of steady-state estimates. Empty when not recorded.
    std::vector<std::vector<double>> run_tails;
};

struct SteadyStateSummary {
    Variant variant = Variant::Lms;
    std::size_t sparsity_level = 0;
    std::size_t n_taps = 0;
    double mean = 0.0;
    double std_error = 0.0;  // across runs' trailing means; 0 with fewer than two runs
};

/// Trial ingredients shared by every variant at a given (level, run).
struct TrialRealization {
    WeightVector system;
    Signal input;
    Signal noise;
};

TrialRealization draw_realization(const ExperimentConfig& cfg, std::size_t sparsity_level,
                                  std::size_t run);

/// sum_i (w_i - est_i)^2
double msd(std::span<const double> true_w, std::span<const double> est_w);

/// Any squared deviation above this aborts the cell as diverged.
inline constexpr double kDivergenceCeiling = 1e6;

/// Runs one filter from zero weights against the true system. Element k of the result is
/// the squared deviation after the (k+1)-th update.
std::vector<double> run_trial(const WeightVector& system, const Signal& input,
                              const Signal& noise, const AlgorithmConfig& cfg,
                              std::size_t iterations);

/// Averages run_trial traces over cfg.runs independent runs, summing in run order so the
/// result does not depend on `workers`.
MsdCurve run_cell(Variant variant, std::size_t sparsity_level, const ExperimentConfig& cfg,
                  unsigned workers = 1);

/// All requested cells, ordered by (variant, sparsity level).
std::vector<MsdCurve> run_experiment(const ExperimentConfig& cfg,
                                     std::span<const Variant> variants,
                                     std::span<const std::size_t> levels, unsigned workers = 1);

SteadyStateSummary steady_state(const MsdCurve& curve, std::size_t window);

}  // namespace sparse_lms
