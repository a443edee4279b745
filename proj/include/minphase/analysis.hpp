#pragma once

// Minimum-phase analysis: the winding-number test, the sufficiency
// predicates, and phase retrieval from intensity by the logarithmic Hilbert
// transform.
//
// Sign convention: winding numbers are counter-clockwise positive. Fields of
// the modulated class (data on the e^{-i*omega*t} side) wind clockwise around
// lower-half-plane zeros, so their winding equals minus the zero count; the
// tone 1 + 2 e^{-i*Omega*t} has winding -1. The unsigned count is what all
// zero-counting logic consumes.

#include <optional>

#include "minphase/types.hpp"

namespace minphase {

struct WindingOptions {
    double zero_floor_rel = 1e-14;      // ZeroCrossing below this * max|E|
    double max_step = 0.9 * 3.14159265358979323846;
    std::size_t max_samples = std::size_t{1} << 22;
};

struct WindingScan {
    int winding = 0;
    double residue = 0.0;   // |sum/2pi - winding| after refinement
    double max_step = 0.0;  // largest per-step phase increment accepted
    double min_abs = 0.0;   // min |E| over the refined trajectory
    std::size_t n_eff = 0;  // samples the accepted pass used
};

/// Winding of the closed trajectory E(t) around the origin over one period.
/// Internally refines the (band-limited) trajectory until every step is
/// below max_step; throws UndersampledError if the cap is reached or the
/// rounding residue exceeds 0.25, ZeroCrossingError when |E| touches the
/// floor.
WindingScan winding_scan(const ComplexSignal& sig, const WindingOptions& opts = {});
int winding_number(const ComplexSignal& sig, const WindingOptions& opts = {});

struct ConditionFlags {
    bool half_plane = false;            // exists phi0 with real(E e^{i phi0}) > 0 everywhere
    std::optional<double> phi0;         // witness rotation when half_plane holds
    bool envelope = false;              // max|E - bias|^2 < |bias|^2
    bool spectral_energy = false;       // |bias|^2 > sum |Es(omega)|^2 d omega / 2 pi
};

/// Sufficiency predicates for E = bias + Es. Each true flag implies the
/// field is minimum phase (the implications are strict, not equivalences).
ConditionFlags check_conditions(const ComplexSignal& sig, cplx bias);
/// Same, with bias = time_average(sig).
ConditionFlags check_conditions(const ComplexSignal& sig);

/// G(t) = log(E(t)/bias) with the branch fixed by phase continuity and the
/// grid mean of Im G reduced to its principal window (the periodic analogue
/// of the G -> 0 anchor at infinity).
struct LogField {
    ComplexSignal g;
    cplx bias;
};
LogField log_field(const ComplexSignal& sig, cplx bias);

struct RetrievalOptions {
    double refine_tol = 1e-9;                        // stop when phase stabilizes to this
    std::size_t max_samples = std::size_t{1} << 22;  // refinement cap
    std::size_t fixed_factor = 0;                    // nonzero: single pass at this factor
};

/// Logarithmic-Hilbert phase retrieval: phi = phase_bias + H[log I / 2],
/// with the grid mean of (phi - phase_bias) exactly zero. The intensity is
/// refined internally (spectrally, exact for band-limited intensities) until
/// the retrieved phase stabilizes.
RealSignal retrieve_phase(const RealSignal& intensity, double phase_bias,
                          const RetrievalOptions& opts = {});

/// Minimum-phase field sqrt(I) * e^{i phi} with phi from retrieve_phase.
ComplexSignal minphase_signal(const RealSignal& intensity, double phase_bias,
                              const RetrievalOptions& opts = {});

/// Relative RMS distance min over theta of rms(a - b e^{i theta}) / rms(a);
/// the optimal rotation is arg(sum a conj(b)).
double reconstruction_error(const ComplexSignal& a, const ComplexSignal& b);

struct AnalysisReport {
    int winding = 0;
    unsigned winding_count = 0;
    bool min_phase = false;
    ConditionFlags conditions;
    double phase_bias = 0.0;  // arg(bias) used for retrieval
    double min_abs = 0.0;
    cplx bias{0.0, 0.0};
    double retrieval_error = 0.0;  // reconstruction_error vs the min-phase projection
};

/// Full report: winding, condition flags, and the retrieval round-trip error.
AnalysisReport analyze(const ComplexSignal& sig, std::optional<cplx> bias = std::nullopt);

}  // namespace minphase
