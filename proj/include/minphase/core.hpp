#pragma once

// Core transforms under the e^{+i*omega*t} forward convention:
//
//   F(omega) = integral e^{+i*omega*t} f(t) dt        (forward)
//   f(t)     = (1/t_w) * sum_k F(omega_k) e^{-i*omega_k*t}   (periodic inverse)
//
// so a tone e^{-i*Omega*t} with Omega = 2*pi/t_w lands on bin k = +1. The
// Hilbert transform is the spectral multiplier -i*sgn(omega_k) with sgn(0)=0
// (the periodic principal-value kernel (pi/t_w)*cot(pi*t/t_w)); for a
// single-sideband signal it maps the real part onto the imaginary part, and
// hilbert(cos) = -sin.

#include "minphase/types.hpp"

namespace minphase {

/// Periodic forward transform; coeff(k) approximates the transform at
/// omega_k = 2*pi*k/t_w over one period.
Spectrum forward_transform(const ComplexSignal& sig);

/// Exact inverse of forward_transform on the grid.
ComplexSignal inverse_transform(const Spectrum& spec);

/// Zeroes every strictly negative frequency bin (including the Nyquist bin
/// k = -n/2); nonnegative bins pass through unchanged.
ComplexSignal analytic_projection(const ComplexSignal& sig);

/// Periodic Hilbert transform (see convention note above). DC maps to zero.
ComplexSignal hilbert(const ComplexSignal& sig);
std::vector<double> hilbert(const std::vector<double>& samples);

/// (1/t_w) * sum samples * dt — the discrete stand-in for the field bias.
cplx time_average(const ComplexSignal& sig);

/// Band-limited refinement: same period, factor-times finer sampling, via
/// spectral zero-padding. factor must be a power of two; factor==1 is a copy.
ComplexSignal spectral_upsample(const ComplexSignal& sig, std::size_t factor);

/// Total energy over one period, sum |samples|^2 * dt.
double signal_energy(const ComplexSignal& sig);

}  // namespace minphase
