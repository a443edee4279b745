#pragma once

// Lower-half-plane zero analysis. On the periodic grid the analytic
// continuation of a single-sideband field is a polynomial in
// w = e^{-i*2*pi*z/t_w}; the open lower half plane maps to 0 < |w| < 1. The
// oracle finds all roots via companion-matrix eigenvalues and reports the
// interior ones as (t_k, |tau_k|). The Blaschke ratio E/E0 localizes the same
// zeros as Lorentzian dips measurable on the real axis, and flip_zero removes
// one zero with the exact periodic all-pass (w - w0)/(1 - conj(w0) w), the
// closed form behind the periodized Lorentzian factor
// 1 - (2*pi*i*|tau|/t_w) cot(pi (t - t_k + i|tau|)/t_w).

#include "minphase/types.hpp"

namespace minphase {

enum class ZeroMethod { oracle, lorentzian_fit };

struct ZeroEstimate {
    double t_k = 0.0;      // seconds, in [0, t_w)
    double tau_abs = 0.0;  // |tau_k| > 0, depth below the real axis
    ZeroMethod method = ZeroMethod::oracle;
    double residual = 0.0;  // fit quality; 0 for the oracle
};

struct OracleDiagnostics {
    std::size_t degree = 0;         // polynomial degree after trimming
    std::size_t on_axis_count = 0;  // roots within 1e-9 of |w| = 1, not classified
    std::size_t outside_count = 0;  // |w| > 1 (upper half plane)
};

/// Ground-truth zeros of the analytic continuation in the open lower half
/// plane, sorted by t_k. Requires a single-sideband input (negative-frequency
/// coefficients below 1e-10 of the peak).
std::vector<ZeroEstimate> zeros_oracle(const ComplexSignal& sig,
                                       OracleDiagnostics* diag = nullptr);

/// H_N(t) = E(t) / E0(t) with E0 the minimum-phase projection of |E|^2 at the
/// given phase bias. Unimodular up to retrieval accuracy.
ComplexSignal blaschke_ratio(const ComplexSignal& sig, double bias_phase);

struct FitOptions {
    double peak_threshold = 0.5;   // |H-1| level that counts as a peak
    double window_tau = 20.0;      // fit window half-width in units of tau_k
    std::size_t max_iter = 60;
};

/// Least-squares localization of the zeros from the Blaschke ratio: detects
/// |H-1| peaks, initializes tau from the sqrt(2) half-width, then jointly
/// refines all (t_k, tau_k) plus a global phase on the complex ratio against
/// the periodized Lorentzian product model. The expected count gates the fit.
std::vector<ZeroEstimate> fit_lorentzians(const ComplexSignal& ratio, std::size_t n_expected,
                                          const FitOptions& opts = {});

/// Model evaluation H_N(t) for a zero set (the fit's model, usable for
/// reproducing |H_N - 1| profiles).
cplx lorentzian_model(double t, const std::vector<ZeroEstimate>& zeros, double t_w,
                      double global_phase = 0.0);

/// Removes one lower-half-plane zero by the exact periodic all-pass factor;
/// the modulus, band support and single-sideband property are preserved and
/// the oracle count drops by exactly one. Throws std::invalid_argument if the
/// given location is not a zero of the field.
ComplexSignal flip_zero(const ComplexSignal& sig, const ZeroEstimate& zero);

}  // namespace minphase
