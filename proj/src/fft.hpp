#pragma once

// Thin wrapper over FFTW's complex 1-d transforms. Unnormalized:
//   sign=+1: X[m] = sum_j x[j] e^{+2*pi*i*m*j/n}
//   sign=-1: X[m] = sum_j x[j] e^{-2*pi*i*m*j/n}
// Plan creation is serialized internally; calls are otherwise thread-safe.

#include <complex>
#include <vector>

namespace minphase::detail {

void fft_inplace(std::vector<std::complex<double>>& data, int sign);

}  // namespace minphase::detail
