#pragma once

// Square-root raised cosine pulses H_beta and their spectrum profile C_beta.

#include "minphase/types.hpp"

namespace minphase {

/// Roll-off and symbol period of the pulse family. The occupied band of the
/// modulated signal is (0, 2*pi*b_limit) with b_limit = (1+beta)/t_sym.
struct PulseConfig {
    double beta;
    double t_sym;

    PulseConfig(double beta_, double t_sym_) : beta(beta_), t_sym(t_sym_) {
        if (!(beta > 0.0) || beta > 1.0) {
            throw std::invalid_argument("PulseConfig: beta must lie in (0, 1]");
        }
        if (!(t_sym > 0.0)) {
            throw std::invalid_argument("PulseConfig: t_sym must be positive");
        }
    }

    double b_limit() const { return (1.0 + beta) / t_sym; }
    /// Carrier that centers the pulse spectrum on (0, 2*pi*b_limit).
    double carrier_omega() const;
    /// Pulse peak H_beta(0) = (1/sqrt(T)) * ((1-beta) + 4*beta/pi).
    double peak() const;
};

/// H_beta(t): unit-energy square-root raised cosine impulse response.
/// beta == 0 is accepted as the limit object (1/sqrt(T)) * sinc(pi t / T).
/// The two removable singularities (t = 0 and 4*beta*|t| = T) evaluate to
/// their limits inside a 1e-6 window in t/T.
double rrc_pulse(double t, double t_sym, double beta);
double rrc_pulse(double t, const PulseConfig& cfg);

/// C_beta(x): the square-root raised cosine spectral profile in normalized
/// frequency x = omega*T/(2*pi); three-branch piecewise cosine taper.
/// beta == 0 gives the ideal brick wall with value 1/sqrt(2) at |x| = 1/2.
double rrc_spectrum(double x, double beta);

}  // namespace minphase
