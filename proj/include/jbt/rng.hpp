#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace jbt {

/// Seeded random generator with value semantics.
///
/// All stochastic routines in the library take an Rng (or a bare seed) so that
/// every run is reproducible.  Gaussian variates are produced by an explicit
/// Box-Muller step instead of std::normal_distribution, which keeps the draw
/// sequence independent of the standard library implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in (0, 1].
    double uniform_positive() { return 1.0 - uniform(); }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal.
    double gaussian() {
        const double r = std::sqrt(-2.0 * std::log(uniform_positive()));
        return r * std::cos(2.0 * std::numbers::pi * uniform());
    }

    std::complex<double> gaussian_complex() {
        const double r = std::sqrt(-2.0 * std::log(uniform_positive()));
        const double t = 2.0 * std::numbers::pi * uniform();
        return {r * std::cos(t), r * std::sin(t)};
    }

    /// Uniform point on the unit circle.
    std::complex<double> unit_phase() {
        const double t = 2.0 * std::numbers::pi * uniform();
        return {std::cos(t), std::sin(t)};
    }

    /// Uniform point of the closed unit disc.
    std::complex<double> unit_disc() {
        const double r = std::sqrt(uniform());
        return r * unit_phase();
    }

    /// Integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

private:
    std::mt19937_64 engine_;
};

/// Generator for trial `k` of a suite seeded with `seed`.  Trials drawn this
/// way are independent of execution order, so reports stay byte-identical
/// however the trial loop is scheduled.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t k) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
}

} // namespace jbt
