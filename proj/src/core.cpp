#include "minphase/core.hpp"

#include <cmath>
#include <numbers>

#include "fft.hpp"

namespace minphase {

namespace {

// e^{+i*omega_k*t0} factors are only needed for grids with a shifted origin.
bool has_origin_shift(const TimeGrid& g) { return g.t0() != 0.0; }

}  // namespace

Spectrum forward_transform(const ComplexSignal& sig) {
    const TimeGrid& g = sig.grid();
    const std::size_t n = g.n_samples();
    std::vector<cplx> work = sig.samples();
    detail::fft_inplace(work, +1);  // sum_j x_j e^{+2*pi*i*k*j/n}

    std::vector<cplx> coeffs(n);
    const long half = static_cast<long>(n / 2);
    for (long k = -half; k < half; ++k) {
        const std::size_t m = static_cast<std::size_t>((k + static_cast<long>(n)) % static_cast<long>(n));
        cplx v = work[m] * g.dt();
        if (has_origin_shift(g)) {
            v *= std::polar(1.0, g.omega(k) * g.t0());
        }
        coeffs[static_cast<std::size_t>(k + half)] = v;
    }
    return Spectrum(g, std::move(coeffs));
}

ComplexSignal inverse_transform(const Spectrum& spec) {
    const TimeGrid& g = spec.grid();
    const std::size_t n = g.n_samples();
    const long half = static_cast<long>(n / 2);
    std::vector<cplx> work(n);
    for (long k = -half; k < half; ++k) {
        const std::size_t m = static_cast<std::size_t>((k + static_cast<long>(n)) % static_cast<long>(n));
        cplx v = spec.coeff(k);
        if (has_origin_shift(g)) {
            v *= std::polar(1.0, -g.omega(k) * g.t0());
        }
        work[m] = v;
    }
    detail::fft_inplace(work, -1);  // sum_k y_k e^{-2*pi*i*k*j/n}
    const double scale = 1.0 / g.t_w();
    for (cplx& v : work) v *= scale;
    return ComplexSignal(g, std::move(work));
}

ComplexSignal analytic_projection(const ComplexSignal& sig) {
    Spectrum spec = forward_transform(sig);
    for (long k = spec.k_min(); k < 0; ++k) {
        spec.set_coeff(k, cplx{0.0, 0.0});
    }
    return inverse_transform(spec);
}

ComplexSignal hilbert(const ComplexSignal& sig) {
    const std::size_t n = sig.size();
    std::vector<cplx> work = sig.samples();
    detail::fft_inplace(work, +1);
    // bin m maps to k = m for m < n/2, k = m-n otherwise; multiplier -i*sgn(k)
    const std::size_t half = n / 2;
    work[0] = cplx{0.0, 0.0};
    for (std::size_t m = 1; m < n; ++m) {
        const bool positive = m < half;
        work[m] *= positive ? cplx{0.0, -1.0} : cplx{0.0, 1.0};
    }
    detail::fft_inplace(work, -1);
    const double scale = 1.0 / static_cast<double>(n);
    for (cplx& v : work) v *= scale;
    return ComplexSignal(sig.grid(), std::move(work), sig.label());
}

std::vector<double> hilbert(const std::vector<double>& samples) {
    const std::size_t n = samples.size();
    std::vector<cplx> work(n);
    for (std::size_t j = 0; j < n; ++j) work[j] = cplx{samples[j], 0.0};
    detail::fft_inplace(work, +1);
    const std::size_t half = n / 2;
    work[0] = cplx{0.0, 0.0};
    for (std::size_t m = 1; m < n; ++m) {
        work[m] *= (m < half) ? cplx{0.0, -1.0} : cplx{0.0, 1.0};
    }
    detail::fft_inplace(work, -1);
    std::vector<double> out(n);
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = work[j].real() * scale;
    return out;
}

cplx time_average(const ComplexSignal& sig) {
    cplx acc{0.0, 0.0};
    for (const cplx& v : sig.samples()) acc += v;
    return acc / static_cast<double>(sig.size());
}

ComplexSignal spectral_upsample(const ComplexSignal& sig, std::size_t factor) {
    if (factor == 0 || (factor & (factor - 1)) != 0) {
        throw std::invalid_argument("spectral_upsample: factor must be a power of two");
    }
    if (factor == 1) return sig;
    const TimeGrid& g = sig.grid();
    Spectrum spec = forward_transform(sig);
    TimeGrid fine(g.n_samples() * factor, g.dt() / static_cast<double>(factor), g.t0());
    Spectrum padded(fine);
    for (long k = spec.k_min(); k <= spec.k_max(); ++k) {
        padded.set_coeff(k, spec.coeff(k));
    }
    ComplexSignal out = inverse_transform(padded);
    return ComplexSignal(fine, out.samples(), sig.label());
}

double signal_energy(const ComplexSignal& sig) {
    double acc = 0.0;
    for (const cplx& v : sig.samples()) acc += std::norm(v);
    return acc * sig.grid().dt();
}

}  // namespace minphase
