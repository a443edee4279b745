#pragma once

// Shared helpers for the unit tests.

#include <cmath>
#include <numbers>
#include <random>

#include "minphase/core.hpp"
#include "minphase/types.hpp"

namespace test_util {

using minphase::ComplexSignal;
using minphase::cplx;
using minphase::TimeGrid;

inline constexpr double pi = std::numbers::pi;

/// Samples of sum_k amps[k] * e^{-i k Omega t} on a grid (Omega = 2 pi / t_w);
/// negative k allowed via the conjugate tone helper below.
inline ComplexSignal tone_sum(const TimeGrid& g, const std::vector<std::pair<long, cplx>>& tones) {
    std::vector<cplx> s(g.n_samples(), cplx{0.0, 0.0});
    for (std::size_t j = 0; j < g.n_samples(); ++j) {
        for (const auto& [k, a] : tones) {
            s[j] += a * std::polar(1.0, -g.omega(k) * g.t(j));
        }
    }
    return ComplexSignal(g, std::move(s));
}

inline ComplexSignal random_signal(const TimeGrid& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::vector<cplx> s(g.n_samples());
    for (auto& v : s) v = cplx{gauss(rng), gauss(rng)};
    return ComplexSignal(g, std::move(s));
}

inline double rel_rms_diff(const ComplexSignal& a, const ComplexSignal& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        num += std::norm(a[j] - b[j]);
        den += std::norm(a[j]);
    }
    return std::sqrt(num / den);
}

inline double max_abs_diff(const ComplexSignal& a, const ComplexSignal& b) {
    double m = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
    return m;
}

}  // namespace test_util
