#include "sparse_lms/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include "sparse_lms/errors.hpp"

namespace sparse_lms {

namespace {

// Lanes within one trial's stream.
constexpr std::uint32_t kSystemLane = 1;
constexpr std::uint32_t kInputLane = 2;
constexpr std::uint32_t kNoiseLane = 3;

std::string cell_name(Variant v, std::size_t level, std::size_t n_taps) {
    return std::string(to_string(v)) + " at SR " + std::to_string(level) + "/" +
           std::to_string(n_taps);
}

}  // namespace

AlgorithmConfig base_config(Variant v) {
    AlgorithmConfig c;
    c.variant = v;
    c.mu = 0.015;
    c.p = 0.5;
    c.epsilon_pl = 10.0;
    c.leak_sign = default_leak_sign(v);
    if (v == Variant::Llms || v == Variant::LpLikeLlms) c.gamma = 0.005;
    if (v == Variant::LpLikeLms || v == Variant::LpLikeLlms) c.rho_pl = 0.003;
    return c;
}

Schedule default_schedule() {
    struct Row {
        std::size_t level;
        double rho_pl;
        double gamma;
    };
    constexpr Row rows[] = {
        {1, 0.003, 0.005},
        {4, 0.002, 0.005},
        {8, 0.0015, 0.005},
        {16, 0.0001, 0.0005},
    };
    Schedule s;
    for (const Row& row : rows) {
        for (Variant v : kAllVariants) {
            AlgorithmConfig c = base_config(v);
            if (v == Variant::Llms || v == Variant::LpLikeLlms) c.gamma = row.gamma;
            if (v == Variant::LpLikeLms || v == Variant::LpLikeLlms) c.rho_pl = row.rho_pl;
            s.emplace(CellKey{v, row.level}, c);
        }
    }
    return s;
}

void validate(const ExperimentConfig& cfg, std::span<const Variant> variants) {
    auto fail = [](const std::string& msg) { throw ParameterError(msg); };
    if (cfg.n_taps == 0) fail("n_taps must be >= 1");
    if (cfg.iterations == 0) fail("iterations must be >= 1");
    if (cfg.runs == 0) fail("runs must be >= 1");
    if (cfg.sparsity_levels.empty()) fail("sparsity_levels must not be empty");
    if (cfg.steady_state_window == 0 || cfg.steady_state_window > cfg.iterations) {
        fail("steady_state_window must satisfy 1 <= steady_state_window <= iterations");
    }
    if (!(std::abs(cfg.ar_coeff) < 1.0)) fail("ar_coeff must satisfy |ar_coeff| < 1");
    if (!(cfg.drive_variance > 0.0)) fail("drive_variance must be > 0");
    if (!(cfg.noise_variance >= 0.0)) fail("noise_variance must be >= 0");
    for (std::size_t level : cfg.sparsity_levels) {
        if (level == 0 || level > cfg.n_taps) {
            fail("sparsity level " + std::to_string(level) + " must satisfy 1 <= level <= n_taps (" +
                 std::to_string(cfg.n_taps) + ")");
        }
        for (Variant v : variants) {
            auto it = cfg.schedule.find(CellKey{v, level});
            if (it == cfg.schedule.end()) {
                fail("no schedule entry for " + cell_name(v, level, cfg.n_taps));
            }
            if (it->second.variant != v) {
                fail("schedule entry for " + cell_name(v, level, cfg.n_taps) +
                     " carries a different variant");
            }
            validate(it->second);
        }
    }
}

TrialRealization draw_realization(const ExperimentConfig& cfg, std::size_t sparsity_level,
                                  std::size_t run) {
    const RngStream trial(cfg.master_seed, run);
    RngStream system_rng = trial.lane(kSystemLane);
    RngStream input_rng = trial.lane(kInputLane);
    RngStream noise_rng = trial.lane(kNoiseLane);
    TrialRealization r;
    r.system = gen_sparse_system(cfg.n_taps, sparsity_level, system_rng);
    r.input = gen_ar1_input(cfg.signal_length(), cfg.ar_coeff, cfg.drive_variance, input_rng);
    r.noise = gen_gaussian_noise(cfg.signal_length(), cfg.noise_variance, noise_rng);
    return r;
}

double msd(std::span<const double> true_w, std::span<const double> est_w) {
    if (true_w.size() != est_w.size()) {
        throw DimensionError("msd of vectors with lengths " + std::to_string(true_w.size()) +
                             " and " + std::to_string(est_w.size()));
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < true_w.size(); ++i) {
        const double d = true_w[i] - est_w[i];
        acc += d * d;
    }
    return acc;
}

std::vector<double> run_trial(const WeightVector& system, const Signal& input,
                              const Signal& noise, const AlgorithmConfig& cfg,
                              std::size_t iterations) {
    if (input.size() < iterations || noise.size() < iterations) {
        throw DimensionError("input and noise must hold at least " + std::to_string(iterations) +
                             " samples");
    }
    validate(cfg);
    const std::size_t n = system.size();
    const FilterState truth(system);
    FilterState state(n);
    std::vector<double> regressor(n);
    std::vector<double> trace(iterations);
    for (std::size_t k = 0; k < iterations; ++k) {
        regressor_into(input, k, regressor);
        const double desired = predict(truth, regressor) + noise[k];
        advance(state, regressor, desired, cfg);
        trace[k] = msd(system, state.weights);
        if (!(trace[k] <= kDivergenceCeiling)) {
            throw NumericDivergence(k, std::string(to_string(cfg.variant)) +
                                           " squared deviation exceeded 1e6 at iteration " +
                                           std::to_string(k));
        }
    }
    return trace;
}

MsdCurve run_cell(Variant variant, std::size_t sparsity_level, const ExperimentConfig& cfg,
                  unsigned workers) {
    ExperimentConfig local = cfg;
    local.sparsity_levels = {sparsity_level};
    const Variant only[] = {variant};
    validate(local, only);
    const AlgorithmConfig& algo = cfg.schedule.at(CellKey{variant, sparsity_level});

    std::vector<std::vector<double>> traces(cfg.runs);
    std::vector<std::exception_ptr> failures(cfg.runs);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t r = next++; r < cfg.runs; r = next++) {
            try {
                const TrialRealization trial = draw_realization(cfg, sparsity_level, r);
                traces[r] = run_trial(trial.system, trial.input, trial.noise, algo, cfg.iterations);
            } catch (...) {
                failures[r] = std::current_exception();
            }
        }
    };
    const unsigned n_threads =
        static_cast<unsigned>(std::clamp<std::size_t>(workers, 1, cfg.runs));
    if (n_threads == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(work);
    }

    for (std::size_t r = 0; r < cfg.runs; ++r) {
        if (!failures[r]) continue;
        const std::string where = cell_name(variant, sparsity_level, cfg.n_taps) + ", run " +
                                  std::to_string(r) + ": ";
        try {
            std::rethrow_exception(failures[r]);
        } catch (const NumericDivergence& e) {
            throw NumericDivergence(e.iteration(), where + e.what());
        }
    }

    MsdCurve curve;
    curve.variant = variant;
    curve.sparsity_level = sparsity_level;
    curve.n_taps = cfg.n_taps;
    curve.runs = cfg.runs;
    curve.values.assign(cfg.iterations, 0.0);
    for (const auto& trace : traces) {
        for (std::size_t k = 0; k < cfg.iterations; ++k) curve.values[k] += trace[k];
    }
    const double n_runs = static_cast<double>(cfg.runs);
    for (double& v : curve.values) v /= n_runs;

    const std::size_t tail = cfg.steady_state_window;
    curve.run_tails.reserve(cfg.runs);
    for (const auto& trace : traces) {
        curve.run_tails.emplace_back(trace.end() - static_cast<std::ptrdiff_t>(tail), trace.end());
    }
    return curve;
}

std::vector<MsdCurve> run_experiment(const ExperimentConfig& cfg,
                                     std::span<const Variant> variants,
                                     std::span<const std::size_t> levels, unsigned workers) {
    std::vector<Variant> vs(variants.begin(), variants.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::vector<std::size_t> ls(levels.begin(), levels.end());
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());

    ExperimentConfig local = cfg;
    local.sparsity_levels = ls;
    validate(local, vs);

    std::vector<MsdCurve> curves;
    curves.reserve(vs.size() * ls.size());
    for (Variant v : vs) {
        for (std::size_t level : ls) curves.push_back(run_cell(v, level, cfg, workers));
    }
    return curves;
}

SteadyStateSummary steady_state(const MsdCurve& curve, std::size_t window) {
    if (window == 0) throw ParameterError("steady-state window must be >= 1");
    if (window > curve.values.size()) {
        throw ParameterError("steady-state window " + std::to_string(window) +
                             " exceeds curve length " + std::to_string(curve.values.size()));
    }
    SteadyStateSummary s;
    s.variant = curve.variant;
    s.sparsity_level = curve.sparsity_level;
    s.n_taps = curve.n_taps;

    const auto tail_begin = curve.values.end() - static_cast<std::ptrdiff_t>(window);
    double acc = 0.0;
    for (auto it = tail_begin; it != curve.values.end(); ++it) acc += *it;
    s.mean = acc / static_cast<double>(window);

    const std::size_t n_runs = curve.run_tails.size();
    if (n_runs >= 2) {
        std::vector<double> run_means;
        run_means.reserve(n_runs);
        for (const auto& tail : curve.run_tails) {
            if (window > tail.size()) {
                throw ParameterError("steady-state window " + std::to_string(window) +
                                     " exceeds the recorded per-run tail of " +
                                     std::to_string(tail.size()));
            }
            double run_acc = 0.0;
            for (auto it = tail.end() - static_cast<std::ptrdiff_t>(window); it != tail.end(); ++it) {
                run_acc += *it;
            }
            run_means.push_back(run_acc / static_cast<double>(window));
        }
        double mean = 0.0;
        for (double m : run_means) mean += m;
        mean /= static_cast<double>(n_runs);
        double ss = 0.0;
        for (double m : run_means) ss += (m - mean) * (m - mean);
        const double sd = std::sqrt(ss / static_cast<double>(n_runs - 1));
        s.std_error = sd / std::sqrt(static_cast<double>(n_runs));
    }
    return s;
}

}  // namespace sparse_lms
