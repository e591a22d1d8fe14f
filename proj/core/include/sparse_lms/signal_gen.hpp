#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sparse_lms/filter_core.hpp"

namespace sparse_lms {

using Signal = std::vector<double>;

/// Seeded random stream. (seed, stream_id, lane) fully determines the sample sequence.
///
/// The simulation gives each trial its own stream_id and splits the trial's draws
/// into lanes (system, input, noise) so that changing one ingredient never shifts
/// the samples of another.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id, std::uint32_t lane = 0);

    RngStream lane(std::uint32_t lane) const { return RngStream(seed_, stream_id_, lane); }

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
};

/// n_taps-long vector with exactly n_nonzero entries of +1 or -1 at uniformly drawn
/// positions, zeros elsewhere.
WeightVector gen_sparse_system(std::size_t n_taps, std::size_t n_nonzero, RngStream& rng);

/// x_1 = u_1, x_{k+1} = coeff*x_k + u_k with u ~ N(0, drive_variance), then rescaled so the
/// realization's sample variance (denominator L) is exactly 1. The mean is not removed.
Signal gen_ar1_input(std::size_t length, double coeff, double drive_variance, RngStream& rng);

/// i.i.d. N(0, variance). variance == 0 yields exact zeros.
Signal gen_gaussian_noise(std::size_t length, double variance, RngStream& rng);

/// [x_k, x_{k-1}, ..., x_{k-N+1}] with zeros before the start of the signal.
std::vector<double> regressor_at(const Signal& x, std::size_t k, std::size_t n_taps);

/// Same as regressor_at, written into `out` (whose size is the tap count).
void regressor_into(const Signal& x, std::size_t k, std::span<double> out);

}  // namespace sparse_lms
