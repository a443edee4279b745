#include "minphase/pulse.hpp"

#include <cmath>
#include <numbers>

namespace minphase {

namespace {

constexpr double kSingularWindow = 1e-6;  // in units of t/T
constexpr double pi = std::numbers::pi;

double sinc(double x) {
    if (std::abs(x) < 1e-8) {
        return 1.0 - x * x / 6.0;
    }
    return std::sin(x) / x;
}

}  // namespace

double PulseConfig::carrier_omega() const { return (1.0 + beta) * pi / t_sym; }

double PulseConfig::peak() const { return rrc_pulse(0.0, t_sym, beta); }

double rrc_pulse(double t, double t_sym, double beta) {
    const double u = t / t_sym;  // H is even in u
    const double norm = 1.0 / std::sqrt(t_sym);

    if (beta == 0.0) {
        return norm * sinc(pi * u);
    }

    if (std::abs(u) < kSingularWindow) {
        return norm * ((1.0 - beta) + 4.0 * beta / pi);
    }
    if (std::abs(std::abs(u) - 1.0 / (4.0 * beta)) < kSingularWindow) {
        const double a = pi / (4.0 * beta);
        return norm * (beta / std::sqrt(2.0)) *
               ((1.0 + 2.0 / pi) * std::sin(a) + (1.0 - 2.0 / pi) * std::cos(a));
    }

    const double num = std::sin(pi * u * (1.0 - beta)) + 4.0 * beta * u * std::cos(pi * u * (1.0 + beta));
    const double den = pi * u * (1.0 - 16.0 * beta * beta * u * u);
    return norm * num / den;
}

double rrc_pulse(double t, const PulseConfig& cfg) { return rrc_pulse(t, cfg.t_sym, cfg.beta); }

double rrc_spectrum(double x, double beta) {
    const double ax = std::abs(x);
    if (beta == 0.0) {
        if (ax < 0.5) return 1.0;
        if (ax == 0.5) return 1.0 / std::sqrt(2.0);
        return 0.0;
    }
    const double inner = (1.0 - beta) / 2.0;
    const double outer = (1.0 + beta) / 2.0;
    if (ax <= inner) return 1.0;
    if (ax <= outer) return std::cos(pi / (2.0 * beta) * (ax - inner));
    return 0.0;
}

}  // namespace minphase
