#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace sparse_lms {

/// Dense tap vector. Holds both the true impulse response and filter estimates.
using WeightVector = std::vector<double>;

/// Regressor window [x_k, x_{k-1}, ..., x_{k-N+1}], most recent sample first.
using RegressorView = std::span<const double>;

enum class Variant { Lms, Llms, LpLikeLms, LpLikeLlms };

inline constexpr Variant kAllVariants[] = {Variant::Lms, Variant::Llms, Variant::LpLikeLms,
                                           Variant::LpLikeLlms};

/// Sign of the leak multiplier: Plus gives (1 + mu*gamma), Minus gives (1 - mu*gamma).
enum class LeakSign { Plus, Minus };

std::string_view to_string(Variant v);
std::optional<Variant> variant_from_string(std::string_view name);
std::string_view to_string(LeakSign s);
std::optional<LeakSign> leak_sign_from_string(std::string_view name);

/// Plus for the l_p-like leaky variant, Minus everywhere else.
LeakSign default_leak_sign(Variant v);

struct AlgorithmConfig {
    Variant variant = Variant::Lms;
    double mu = 0.015;
    double gamma = 0.0;       // leakage factor
    double rho_pl = 0.0;      // mu * gamma_pl, weight of the sparsity constraint
    double epsilon_pl = 10.0; // keeps the constraint denominator away from zero
    double p = 0.5;
    LeakSign leak_sign = LeakSign::Minus;

    bool operator==(const AlgorithmConfig&) const = default;
};

/// Checks only the fields the variant actually reads. Throws ParameterError.
void validate(const AlgorithmConfig& cfg);

struct FilterState {
    WeightVector weights;
    std::uint64_t iteration = 0;

    FilterState() = default;
    explicit FilterState(std::size_t n_taps) : weights(n_taps, 0.0) {}
    explicit FilterState(WeightVector w, std::uint64_t k = 0) : weights(std::move(w)), iteration(k) {}

    std::size_t size() const noexcept { return weights.size(); }
    bool operator==(const FilterState&) const = default;
};

double predict(const FilterState& state, RegressorView x);

inline double instantaneous_error(double desired, double predicted) { return desired - predicted; }

/// sum_i |w_i|^p for 0 < p < 1, with 0^p taken as 0.
double pnorm_like(std::span<const double> w, double p);

/// Elementwise p * sgn(w_i) / (epsilon_pl + |w_i|^(1-p)), with sgn(0) = 0.
WeightVector pnorm_like_gradient_term(std::span<const double> w, double p, double epsilon_pl);

// Variant-specific updates. Each returns the advanced state and leaves the input untouched.
// They throw ParameterError when cfg.variant does not match, DimensionError on a length
// mismatch, and NumericDivergence if any updated tap is non-finite.

/// w + mu*e*x
FilterState lms_step(const FilterState& state, RegressorView x, double desired,
                     const AlgorithmConfig& cfg);

/// (1 - mu*gamma)*w + mu*e*x
FilterState llms_step(const FilterState& state, RegressorView x, double desired,
                      const AlgorithmConfig& cfg);

/// w + mu*e*x - rho_pl*g(w)
FilterState lp_like_lms_step(const FilterState& state, RegressorView x, double desired,
                             const AlgorithmConfig& cfg);

/// (1 +/- mu*gamma)*w + mu*e*x - rho_pl*g(w), sign from cfg.leak_sign.
FilterState lp_like_llms_step(const FilterState& state, RegressorView x, double desired,
                              const AlgorithmConfig& cfg);

struct StepResult {
    FilterState state;
    double error;  // e_k, computed before the update
};

StepResult step(const FilterState& state, RegressorView x, double desired,
                const AlgorithmConfig& cfg);

/// In-place form of `step` used by the simulation loop; returns e_k.
/// On NumericDivergence the weights are left in the diverged state.
double advance(FilterState& state, RegressorView x, double desired, const AlgorithmConfig& cfg);

}  // namespace sparse_lms
