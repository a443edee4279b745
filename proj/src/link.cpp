#include "minphase/link.hpp"

#include <cmath>
#include <numbers>

#include <random>

#include "fft.hpp"
#include "minphase/core.hpp"
#include "parallel.hpp"

namespace minphase {

namespace {

// Box-Muller on explicit 53-bit uniforms; mt19937_64 keeps noise draws
// identical across platforms.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

    cplx circular() {
        const double u1 = unit_open();
        const double u2 = unit_open();
        const double r = std::sqrt(-std::log(u1));  // variance 1/2 per quadrature
        const double a = 2.0 * std::numbers::pi * u2;
        return cplx{r * std::cos(a), r * std::sin(a)};
    }

private:
    double unit_open() { return static_cast<double>((rng_() >> 11) + 1) * 0x1.0p-53; }

    std::mt19937_64 rng_;
};

}  // namespace

TimeGrid LinkConfig::grid() const {
    if (oversample < 8) {
        throw std::invalid_argument("LinkConfig: oversample must be >= 8");
    }
    return TimeGrid(n_sym * oversample, pulse.t_sym / static_cast<double>(oversample));
}

Transmission transmit(const LinkConfig& cfg) {
    const TimeGrid grid = cfg.grid();
    SymbolSequence seq = make_constellation(cfg.constellation, cfg.n_sym, cfg.seed, cfg.pulse.t_sym);
    const cplx center = constellation_center(cfg.constellation, cfg.pulse.t_sym);
    const cplx bias = nominal_bias_field(cfg.constellation, cfg.pulse);

    SymbolSequence centered = seq;
    for (cplx& a : centered.symbols) a -= center;
    centered.bias_field = bias;

    ComplexSignal field = synthesize_spectral(centered, cfg.pulse, grid);
    seq.bias_field = bias;
    return Transmission{std::move(field), std::move(seq)};
}

RealSignal detect_intensity(const ComplexSignal& sig) {
    std::vector<double> intensity(sig.size());
    for (std::size_t j = 0; j < sig.size(); ++j) intensity[j] = std::norm(sig[j]);
    return RealSignal(sig.grid(), std::move(intensity), "intensity");
}

ComplexSignal add_noise(const ComplexSignal& sig, double snr_db, std::uint64_t seed) {
    if (std::isinf(snr_db)) {
        return sig;
    }
    if (!std::isfinite(snr_db)) {
        throw std::invalid_argument("add_noise: snr_db must be finite or +inf");
    }
    const Spectrum spec = forward_transform(sig);
    double cmax = 0.0;
    for (const cplx& v : spec.coeffs()) cmax = std::max(cmax, std::abs(v));
    long k_top = 0;
    for (long k = spec.k_max(); k > 0; --k) {
        if (std::abs(spec.coeff(k)) > 1e-12 * cmax) {
            k_top = k;
            break;
        }
    }
    if (k_top == 0) {
        throw std::invalid_argument("add_noise: signal occupies no positive-frequency band");
    }

    // data energy excludes the DC bias
    const cplx bias = time_average(sig);
    double es_energy = 0.0;
    for (const cplx& v : sig.samples()) es_energy += std::norm(v - bias);
    es_energy *= sig.grid().dt();

    GaussianSource noise_src(seed);
    Spectrum noise_spec(sig.grid());
    for (long k = 1; k <= k_top; ++k) {
        noise_spec.set_coeff(k, noise_src.circular());
    }
    ComplexSignal noise = inverse_transform(noise_spec);
    double n_energy = signal_energy(noise);
    const double target = es_energy * std::pow(10.0, -snr_db / 10.0);
    const double scale = std::sqrt(target / n_energy);

    std::vector<cplx> out(sig.size());
    for (std::size_t j = 0; j < sig.size(); ++j) out[j] = sig[j] + scale * noise[j];
    return ComplexSignal(sig.grid(), std::move(out), sig.label());
}

Reception kk_receive(const RealSignal& intensity, const LinkConfig& cfg, double phase_bias) {
    const std::size_t n = intensity.size();
    double max_i = 0.0;
    for (double v : intensity.samples()) max_i = std::max(max_i, v);
    if (!(max_i > 0.0)) {
        throw NonPositiveIntensityError("kk_receive: dark input");
    }
    const double floor = 1e-12 * max_i;
    std::size_t clamped = 0;
    std::vector<double> clean(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (intensity[j] < floor) {
            clean[j] = floor;
            ++clamped;
        } else {
            clean[j] = intensity[j];
        }
    }
    if (clamped > n / 1000) {
        throw NonPositiveIntensityError("kk_receive: " + std::to_string(clamped) +
                                        " samples below the intensity floor");
    }

    const ComplexSignal e0 =
        minphase_signal(RealSignal(intensity.grid(), std::move(clean)), phase_bias);

    // matched filter with the carrier-bearing pulse: circular correlation via
    // the spectra, y[j] = (1/n) sum_k X+[k] conj(W+[k]) e^{-2 pi i k j / n}
    std::vector<cplx> x = e0.samples();
    std::vector<cplx> w = periodic_pulse(cfg.pulse, intensity.grid());
    detail::fft_inplace(x, +1);
    detail::fft_inplace(w, +1);
    for (std::size_t m = 0; m < n; ++m) x[m] *= std::conj(w[m]);
    detail::fft_inplace(x, -1);
    const double scale = intensity.grid().dt() / static_cast<double>(n);

    const cplx center = constellation_center(cfg.constellation, cfg.pulse.t_sym);
    SymbolSequence decided;
    decided.constellation = cfg.constellation;
    decided.seed = cfg.seed;
    decided.symbols.resize(cfg.n_sym);
    const std::size_t m_over = n / cfg.n_sym;
    for (std::size_t s = 0; s < cfg.n_sym; ++s) {
        const cplx estimate = x[s * m_over] * scale + center;
        decided.symbols[s] = nearest_symbol(estimate, cfg.constellation, cfg.pulse.t_sym);
    }
    return Reception{e0, std::move(decided), clamped};
}

LinkResult run_experiment(const LinkConfig& cfg, std::size_t n_trials) {
    LinkResult result;
    result.trials.resize(n_trials);

    detail::parallel_for_index(n_trials, [&](std::size_t i) {
        LinkConfig trial_cfg = cfg;
        trial_cfg.seed = cfg.seed + i;
        const Transmission tx = transmit(trial_cfg);
        const ComplexSignal noisy =
            add_noise(tx.field, cfg.noise_snr_db, trial_cfg.seed ^ 0x9e3779b97f4a7c15ull);
        const double phase_bias = std::arg(*tx.symbols.bias_field);

        TrialReport rep;
        rep.seed = trial_cfg.seed;
        try {
            rep.winding = winding_number(noisy);
        } catch (const Error&) {
            rep.winding_defined = false;
        }
        const Reception rx = kk_receive(detect_intensity(noisy), trial_cfg, phase_bias);
        for (std::size_t s = 0; s < cfg.n_sym; ++s) {
            if (std::abs(rx.decided.symbols[s] - tx.symbols.symbols[s]) > 1e-9) {
                ++rep.symbol_errors;
            }
        }
        rep.field_error = reconstruction_error(tx.field, rx.field);
        result.trials[i] = rep;
    });

    std::size_t errors = 0;
    double field_acc = 0.0;
    for (const TrialReport& rep : result.trials) {
        errors += rep.symbol_errors;
        field_acc += rep.field_error;
        if (!rep.winding_defined || rep.winding != 0) ++result.winding_violations;
    }
    result.ser = static_cast<double>(errors) / static_cast<double>(n_trials * cfg.n_sym);
    result.field_rms_error = n_trials > 0 ? field_acc / static_cast<double>(n_trials) : 0.0;
    return result;
}

}  // namespace minphase
