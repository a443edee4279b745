#pragma once

// End-to-end transmission experiment: biased-constellation transmitter,
// square-law detector, log-Hilbert receiver, band-limited noise loading and
// error-rate measurement.
//
// The transmitter realizes the biased operating point as E = bias + Es: the
// constellation's nominal center becomes a DC bias field and only the
// centered symbol fluctuations ride the carrier pulses. The matched filter
// rejects the bias exactly (the pulse spectrum vanishes at DC), so decisions
// act on fluctuations plus the known center.

#include "minphase/analysis.hpp"
#include "minphase/synthesis.hpp"

namespace minphase {

struct LinkConfig {
    PulseConfig pulse{0.1, 1.0};
    Constellation constellation{};
    std::size_t n_sym = 512;
    std::size_t oversample = 16;
    double noise_snr_db = std::numeric_limits<double>::infinity();
    std::uint64_t seed = 0;

    TimeGrid grid() const;
};

struct Transmission {
    ComplexSignal field;
    SymbolSequence symbols;  // literal constellation draw; bias_field records the DC term
};

/// Spectral-path synthesis of the biased constellation (deterministic per seed).
Transmission transmit(const LinkConfig& cfg);

/// Square-law detector, I(t) = |E(t)|^2.
RealSignal detect_intensity(const ComplexSignal& sig);

/// Adds circular complex Gaussian noise confined to the occupied band
/// (DC excluded, so the noisy field stays single-sideband with the same
/// bias). snr_db is data energy over noise energy; +inf returns the input.
ComplexSignal add_noise(const ComplexSignal& sig, double snr_db, std::uint64_t seed);

struct Reception {
    ComplexSignal field;         // retrieved min-phase field
    SymbolSequence decided;      // nearest-neighbor decisions
    std::size_t clamped = 0;     // intensity samples clamped at the floor
};

/// Intensity-only receiver: log-Hilbert retrieval, carrier-matched filter,
/// symbol-rate sampling, nearest-neighbor decision on the constellation grid.
Reception kk_receive(const RealSignal& intensity, const LinkConfig& cfg, double phase_bias);

struct TrialReport {
    std::uint64_t seed = 0;
    std::size_t symbol_errors = 0;
    double field_error = 0.0;
    int winding = 0;
    bool winding_defined = true;
};

struct LinkResult {
    double ser = 0.0;
    double field_rms_error = 0.0;        // mean over trials
    std::size_t winding_violations = 0;  // trials whose noisy field winds (or is untestable)
    std::vector<TrialReport> trials;
};

/// Monte Carlo over trial seeds cfg.seed, cfg.seed+1, ...
LinkResult run_experiment(const LinkConfig& cfg, std::size_t n_trials);

}  // namespace minphase
