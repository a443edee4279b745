#pragma once

// Signal synthesis for the single-sideband class: symbols ride carrier-bearing
// root-raised-cosine pulses
//
//   W(u) = exp(-i*(1+beta)*pi*u/T) * H_beta(u),
//
// whose spectrum occupies exactly (0, 2*pi*B) with B = (1+beta)/T. Two paths:
// a time-domain one with periodically wrapped pulse tails, and a spectral one
// that is exactly band-limited on the discrete grid. The two agree up to the
// wrap truncation of the time path.

#include "minphase/constellation.hpp"
#include "minphase/pulse.hpp"
#include "minphase/types.hpp"

namespace minphase {

/// Samples per symbol implied by grid and pulse; throws unless the grid spans
/// the symbol block exactly (t_w == n_sym * t_sym) with an integer M >= 4.
std::size_t oversampling_factor(const PulseConfig& cfg, const TimeGrid& grid,
                                std::size_t n_sym);

/// One period of the carrier-bearing pulse wrapped onto the grid,
/// W_per[m] = sum_r W((m + r*n)*dt).
std::vector<cplx> periodic_pulse(const PulseConfig& cfg, const TimeGrid& grid);

/// Time-domain synthesis: E(t) = sum_n a_n W(t - n*T) (wrapped) + bias_field.
ComplexSignal synthesize(const SymbolSequence& seq, const PulseConfig& cfg, const TimeGrid& grid);

/// Spectral synthesis on the grid bins (exactly band-limited):
/// coeff(k) = sqrt(T) * C_beta(k/n_sym - (1+beta)/2) * sum_n a_n e^{+2*pi*i*n*k/n_sym},
/// plus bias_field * t_w at k = 0.
ComplexSignal synthesize_spectral(const SymbolSequence& seq, const PulseConfig& cfg,
                                  const TimeGrid& grid);

/// DC field equivalent of a constellation's nominal center at the paper's
/// operating points: center * H_beta(0) (times sqrt(2) for Shifted8AM, which
/// matches the bias magnitude of the quadrature grids at equal shift).
cplx nominal_bias_field(const Constellation& c, const PulseConfig& cfg);

}  // namespace minphase
