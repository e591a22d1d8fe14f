#include "sparse_lms/filter_core.hpp"

#include <cmath>
#include <string>

#include "sparse_lms/errors.hpp"

namespace sparse_lms {

namespace {

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

void require_p(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw ParameterError("p = " + std::to_string(p) + " violates 0 < p < 1");
    }
}

void require_variant(const AlgorithmConfig& cfg, Variant expected) {
    if (cfg.variant != expected) {
        throw ParameterError(std::string(to_string(expected)) + " update called with variant " +
                             std::string(to_string(cfg.variant)));
    }
}

void require_same_length(std::size_t weights, std::size_t regressor) {
    if (weights != regressor) {
        throw DimensionError("regressor length " + std::to_string(regressor) +
                             " does not match filter length " + std::to_string(weights));
    }
}

double leak_multiplier(const AlgorithmConfig& cfg) {
    switch (cfg.variant) {
        case Variant::Lms:
        case Variant::LpLikeLms:
            return 1.0;
        case Variant::Llms:
            return 1.0 - cfg.mu * cfg.gamma;
        case Variant::LpLikeLlms:
            return cfg.leak_sign == LeakSign::Plus ? 1.0 + cfg.mu * cfg.gamma
                                                   : 1.0 - cfg.mu * cfg.gamma;
    }
    return 1.0;
}

bool has_constraint(Variant v) { return v == Variant::LpLikeLms || v == Variant::LpLikeLlms; }

}  // namespace

std::string_view to_string(Variant v) {
    switch (v) {
        case Variant::Lms: return "lms";
        case Variant::Llms: return "llms";
        case Variant::LpLikeLms: return "lp_like_lms";
        case Variant::LpLikeLlms: return "lp_like_llms";
    }
    return "unknown";
}

std::optional<Variant> variant_from_string(std::string_view name) {
    for (Variant v : kAllVariants) {
        if (to_string(v) == name) return v;
    }
    return std::nullopt;
}

std::string_view to_string(LeakSign s) { return s == LeakSign::Plus ? "plus" : "minus"; }

std::optional<LeakSign> leak_sign_from_string(std::string_view name) {
    if (name == "plus") return LeakSign::Plus;
    if (name == "minus") return LeakSign::Minus;
    return std::nullopt;
}

LeakSign default_leak_sign(Variant v) {
    return v == Variant::LpLikeLlms ? LeakSign::Plus : LeakSign::Minus;
}

void validate(const AlgorithmConfig& cfg) {
    // mu = 0 and gamma = 0 are accepted: they are the degenerate limits used to
    // freeze a filter or collapse a leaky rule onto plain LMS.
    if (!std::isfinite(cfg.mu) || cfg.mu < 0.0) {
        throw ParameterError("mu = " + std::to_string(cfg.mu) + " violates mu >= 0");
    }
    if (cfg.variant == Variant::Llms || cfg.variant == Variant::LpLikeLlms) {
        if (!(cfg.gamma >= 0.0 && cfg.gamma < 1.0)) {
            throw ParameterError("gamma = " + std::to_string(cfg.gamma) +
                                 " violates 0 <= gamma < 1");
        }
    }
    if (has_constraint(cfg.variant)) {
        require_p(cfg.p);
        if (!std::isfinite(cfg.rho_pl) || cfg.rho_pl < 0.0) {
            throw ParameterError("rho_pl = " + std::to_string(cfg.rho_pl) +
                                 " violates rho_pl >= 0");
        }
        if (!std::isfinite(cfg.epsilon_pl) || cfg.epsilon_pl <= 0.0) {
            throw ParameterError("epsilon_pl = " + std::to_string(cfg.epsilon_pl) +
                                 " violates epsilon_pl > 0");
        }
    }
}

double predict(const FilterState& state, RegressorView x) {
    require_same_length(state.size(), x.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += state.weights[i] * x[i];
    return acc;
}

double pnorm_like(std::span<const double> w, double p) {
    require_p(p);
    double acc = 0.0;
    for (double wi : w) {
        if (wi != 0.0) acc += std::pow(std::abs(wi), p);
    }
    return acc;
}

WeightVector pnorm_like_gradient_term(std::span<const double> w, double p, double epsilon_pl) {
    require_p(p);
    if (!(epsilon_pl >= 0.0)) {
        throw ParameterError("epsilon_pl = " + std::to_string(epsilon_pl) +
                             " violates epsilon_pl >= 0");
    }
    WeightVector g(w.size(), 0.0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0.0) continue;  // sgn(0) = 0 wins even when the denominator is 0
        g[i] = p * sgn(w[i]) / (epsilon_pl + std::pow(std::abs(w[i]), 1.0 - p));
    }
    return g;
}

double advance(FilterState& state, RegressorView x, double desired, const AlgorithmConfig& cfg) {
    validate(cfg);
    const double e = instantaneous_error(desired, predict(state, x));
    const double leak = leak_multiplier(cfg);
    const double gain = cfg.mu * e;

    bool finite = true;
    if (has_constraint(cfg.variant)) {
        const double decay = 1.0 - cfg.p;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double wi = state.weights[i];
            double shrink = 0.0;
            if (wi != 0.0) {
                shrink = cfg.p * sgn(wi) / (cfg.epsilon_pl + std::pow(std::abs(wi), decay));
            }
            const double next = leak * wi + gain * x[i] - cfg.rho_pl * shrink;
            finite = finite && std::isfinite(next);
            state.weights[i] = next;
        }
    } else {
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double next = leak * state.weights[i] + gain * x[i];
            finite = finite && std::isfinite(next);
            state.weights[i] = next;
        }
    }
    if (!finite) {
        throw NumericDivergence(state.iteration,
                                std::string(to_string(cfg.variant)) +
                                    " weights became non-finite at iteration " +
                                    std::to_string(state.iteration));
    }
    ++state.iteration;
    return e;
}

StepResult step(const FilterState& state, RegressorView x, double desired,
                const AlgorithmConfig& cfg) {
    StepResult out{state, 0.0};
    out.error = advance(out.state, x, desired, cfg);
    return out;
}

FilterState lms_step(const FilterState& state, RegressorView x, double desired,
                     const AlgorithmConfig& cfg) {
    require_variant(cfg, Variant::Lms);
    return step(state, x, desired, cfg).state;
}

FilterState llms_step(const FilterState& state, RegressorView x, double desired,
                      const AlgorithmConfig& cfg) {
    require_variant(cfg, Variant::Llms);
    return step(state, x, desired, cfg).state;
}

FilterState lp_like_lms_step(const FilterState& state, RegressorView x, double desired,
                             const AlgorithmConfig& cfg) {
    require_variant(cfg, Variant::LpLikeLms);
    return step(state, x, desired, cfg).state;
}

FilterState lp_like_llms_step(const FilterState& state, RegressorView x, double desired,
                              const AlgorithmConfig& cfg) {
    require_variant(cfg, Variant::LpLikeLlms);
    return step(state, x, desired, cfg).state;
}

}  // namespace sparse_lms
