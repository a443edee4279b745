#include "minphase/synthesis.hpp"

#include <cmath>
#include <numbers>

#include "fft.hpp"
#include "minphase/core.hpp"

namespace minphase {

namespace {

// The pulse tail decays like 1/u^2, so the wrap residue scales with
// 1/(beta * t_w^2 * kWrapReplicas); 16 replicas keep it well under the
// spectral path's 1e-3 agreement contract at the smallest test windows.
constexpr int kWrapReplicas = 16;

}  // namespace

std::size_t oversampling_factor(const PulseConfig& cfg, const TimeGrid& grid,
                                std::size_t n_sym) {
    const double m_real = cfg.t_sym / grid.dt();
    const auto m = static_cast<std::size_t>(std::llround(m_real));
    if (m == 0 || std::abs(m_real - static_cast<double>(m)) > 1e-9) {
        throw std::invalid_argument("synthesis: t_sym must be an integer multiple of dt");
    }
    if (m < 4) {
        throw std::invalid_argument("synthesis: oversampling M >= 4 required (aliasing)");
    }
    if (grid.n_samples() != n_sym * m) {
        throw std::invalid_argument("synthesis: grid must span the symbol block, t_w == n_sym*t_sym");
    }
    return m;
}

std::vector<cplx> periodic_pulse(const PulseConfig& cfg, const TimeGrid& grid) {
    const std::size_t n = grid.n_samples();
    const double wc = cfg.carrier_omega();
    std::vector<cplx> w(n, cplx{0.0, 0.0});
    for (std::size_t m = 0; m < n; ++m) {
        for (int r = -kWrapReplicas; r <= kWrapReplicas; ++r) {
            const double u = (static_cast<double>(m) + static_cast<double>(r) * static_cast<double>(n)) * grid.dt();
            w[m] += std::polar(rrc_pulse(u, cfg), -wc * u);
        }
    }
    return w;
}

ComplexSignal synthesize(const SymbolSequence& seq, const PulseConfig& cfg, const TimeGrid& grid) {
    const std::size_t n_sym = seq.symbols.size();
    const std::size_t m = oversampling_factor(cfg, grid, n_sym);
    const std::size_t n = grid.n_samples();
    const std::vector<cplx> wper = periodic_pulse(cfg, grid);

    std::vector<cplx> out(n, seq.bias_field.value_or(cplx{0.0, 0.0}));
    for (std::size_t sym = 0; sym < n_sym; ++sym) {
        const cplx a = seq.symbols[sym];
        if (a == cplx{0.0, 0.0}) continue;
        const std::size_t shift = sym * m;
        for (std::size_t j = 0; j < n; ++j) {
            out[j] += a * wper[(j + n - shift) % n];
        }
    }
    return ComplexSignal(grid, std::move(out), "synth");
}

ComplexSignal synthesize_spectral(const SymbolSequence& seq, const PulseConfig& cfg,
                                  const TimeGrid& grid) {
    const std::size_t n_sym = seq.symbols.size();
    oversampling_factor(cfg, grid, n_sym);

    // A[m] = sum_n a_n e^{+2*pi*i*n*m/n_sym}, periodic with period n_sym in k
    std::vector<cplx> a_dft = seq.symbols;
    detail::fft_inplace(a_dft, +1);

    const double rt = std::sqrt(cfg.t_sym);
    Spectrum spec(grid);
    const long k_top = static_cast<long>(std::ceil((1.0 + cfg.beta) * static_cast<double>(n_sym)));
    for (long k = 0; k <= k_top && k <= spec.k_max(); ++k) {
        const double x = static_cast<double>(k) / static_cast<double>(n_sym) - (1.0 + cfg.beta) / 2.0;
        const double profile = rrc_spectrum(x, cfg.beta);
        if (profile == 0.0) continue;
        spec.set_coeff(k, rt * profile * a_dft[static_cast<std::size_t>(k) % n_sym]);
    }
    if (seq.bias_field) {
        spec.set_coeff(0, spec.coeff(0) + *seq.bias_field * grid.t_w());
    }
    ComplexSignal out = inverse_transform(spec);
    return ComplexSignal(grid, out.samples(), "synth");
}

cplx nominal_bias_field(const Constellation& c, const PulseConfig& cfg) {
    cplx bias = constellation_center(c, cfg.t_sym) * cfg.peak();
    if (c.kind == ConstellationKind::Shifted8AM) {
        bias *= std::sqrt(2.0);
    }
    return bias;
}

}  // namespace minphase
