#include "sparse_lms/signal_gen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sparse_lms/errors.hpp"

namespace sparse_lms {

namespace {

std::uint32_t lo32(std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); }
std::uint32_t hi32(std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); }

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream_id, std::uint32_t lane) {
    std::seed_seq seq{lo32(seed), hi32(seed), lo32(stream_id), hi32(stream_id), lane};
    return std::mt19937_64(seq);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id, std::uint32_t lane)
    : seed_(seed), stream_id_(stream_id), engine_(make_engine(seed, stream_id, lane)) {}

WeightVector gen_sparse_system(std::size_t n_taps, std::size_t n_nonzero, RngStream& rng) {
    if (n_taps == 0 || n_nonzero == 0 || n_nonzero > n_taps) {
        throw ParameterError("sparse system needs 1 <= n_nonzero <= n_taps, got " +
                             std::to_string(n_nonzero) + " of " + std::to_string(n_taps));
    }
    auto& eng = rng.engine();
    std::vector<std::size_t> positions(n_taps);
    std::iota(positions.begin(), positions.end(), std::size_t{0});
    // partial Fisher-Yates: the first n_nonzero slots become a uniform sample
    for (std::size_t i = 0; i < n_nonzero; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n_taps - 1);
        std::swap(positions[i], positions[pick(eng)]);
    }
    WeightVector w(n_taps, 0.0);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < n_nonzero; ++i) w[positions[i]] = coin(eng) ? 1.0 : -1.0;
    return w;
}

Signal gen_ar1_input(std::size_t length, double coeff, double drive_variance, RngStream& rng) {
    if (!(std::abs(coeff) < 1.0)) {
        throw ParameterError("AR(1) coefficient " + std::to_string(coeff) +
                             " violates |coeff| < 1");
    }
    if (!(drive_variance > 0.0)) {
        throw ParameterError("drive variance must be > 0");
    }
    if (length == 0) throw ParameterError("signal length must be positive");

    std::normal_distribution<double> drive(0.0, std::sqrt(drive_variance));
    auto& eng = rng.engine();
    Signal x(length);
    x[0] = drive(eng);
    for (std::size_t k = 1; k < length; ++k) x[k] = coeff * x[k - 1] + drive(eng);

    const double n = static_cast<double>(length);
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / n);
    if (!(sd > 0.0)) throw ParameterError("AR(1) realization has zero variance");
    for (double& v : x) v /= sd;
    return x;
}

Signal gen_gaussian_noise(std::size_t length, double variance, RngStream& rng) {
    if (!(variance >= 0.0)) throw ParameterError("noise variance must be >= 0");
    Signal n(length, 0.0);
    if (variance == 0.0) return n;
    std::normal_distribution<double> dist(0.0, std::sqrt(variance));
    auto& eng = rng.engine();
    for (double& v : n) v = dist(eng);
    return n;
}

void regressor_into(const Signal& x, std::size_t k, std::span<double> out) {
    if (k >= x.size()) {
        throw IndexError("regressor index " + std::to_string(k) + " outside signal of length " +
                         std::to_string(x.size()));
    }
    const std::size_t filled = std::min(out.size(), k + 1);
    for (std::size_t i = 0; i < filled; ++i) out[i] = x[k - i];
    std::fill(out.begin() + static_cast<std::ptrdiff_t>(filled), out.end(), 0.0);
}

std::vector<double> regressor_at(const Signal& x, std::size_t k, std::size_t n_taps) {
    std::vector<double> out(n_taps);
    regressor_into(x, k, out);
    return out;
}

}  // namespace sparse_lms
