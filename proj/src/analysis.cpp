#include "minphase/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "minphase/core.hpp"

namespace minphase {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

double max_abs(const std::vector<cplx>& v) {
    double m = 0.0;
    for (const cplx& z : v) m = std::max(m, std::abs(z));
    return m;
}

double min_abs(const std::vector<cplx>& v) {
    double m = std::numeric_limits<double>::infinity();
    for (const cplx& z : v) m = std::min(m, std::abs(z));
    return m;
}

double principal(double x) {
    while (x > pi) x -= two_pi;
    while (x <= -pi) x += two_pi;
    return x;
}

struct StepStats {
    double sum = 0.0;
    double max_step = 0.0;
};

StepStats trajectory_steps(const std::vector<cplx>& e) {
    StepStats s;
    const std::size_t n = e.size();
    for (std::size_t j = 0; j < n; ++j) {
        const cplx cur = e[j];
        const cplx nxt = e[(j + 1) % n];
        const double d = std::arg(nxt * std::conj(cur));
        s.sum += d;
        s.max_step = std::max(s.max_step, std::abs(d));
    }
    return s;
}

}  // namespace

WindingScan winding_scan(const ComplexSignal& sig, const WindingOptions& opts) {
    const double floor = opts.zero_floor_rel * max_abs(sig.samples());
    if (floor == 0.0) {
        throw ZeroCrossingError("winding: zero signal");
    }

    std::size_t factor = 1;
    for (;;) {
        const ComplexSignal fine = spectral_upsample(sig, factor);
        const double lo = min_abs(fine.samples());
        if (lo <= floor) {
            throw ZeroCrossingError("winding: |E| touches zero (min " + std::to_string(lo) + ")");
        }
        const StepStats s = trajectory_steps(fine.samples());
        if (s.max_step < opts.max_step) {
            const double w = s.sum / two_pi;
            const auto rounded = static_cast<int>(std::llround(w));
            const double residue = std::abs(w - static_cast<double>(rounded));
            if (residue >= 0.25) {
                throw UndersampledError("winding: rounding residue " + std::to_string(residue));
            }
            return WindingScan{rounded, residue, s.max_step, lo, fine.size()};
        }
        if (fine.size() * 2 > opts.max_samples) {
            throw UndersampledError("winding: trajectory not resolved at " +
                                    std::to_string(fine.size()) + " samples");
        }
        factor *= 2;
    }
}

int winding_number(const ComplexSignal& sig, const WindingOptions& opts) {
    return winding_scan(sig, opts).winding;
}

ConditionFlags check_conditions(const ComplexSignal& sig, cplx bias) {
    ConditionFlags flags;
    const std::size_t n = sig.size();

    // envelope: max |E - bias|^2 < |bias|^2
    double max_es2 = 0.0;
    for (const cplx& v : sig.samples()) {
        max_es2 = std::max(max_es2, std::norm(v - bias));
    }
    flags.envelope = max_es2 < std::norm(bias);

    // spectral energy: |bias|^2 > sum |Es~|^2 domega/2pi = sum |c_k|^2 / t_w
    {
        std::vector<cplx> es(n);
        for (std::size_t j = 0; j < n; ++j) es[j] = sig[j] - bias;
        const Spectrum s = forward_transform(ComplexSignal(sig.grid(), std::move(es)));
        double acc = 0.0;
        for (const cplx& c : s.coeffs()) acc += std::norm(c);
        flags.spectral_energy = std::norm(bias) > acc / sig.grid().t_w();
    }

    // half plane: all trajectory directions fit in an open half plane, i.e.
    // the largest angular gap between occupied directions exceeds pi
    bool any_zero = false;
    std::vector<double> angles;
    angles.reserve(n);
    for (const cplx& v : sig.samples()) {
        if (v == cplx{0.0, 0.0}) {
            any_zero = true;
            break;
        }
        angles.push_back(std::arg(v));
    }
    if (!any_zero) {
        std::sort(angles.begin(), angles.end());
        double best_gap = angles.front() + two_pi - angles.back();
        double gap_start = angles.back();
        for (std::size_t i = 1; i < angles.size(); ++i) {
            const double gap = angles[i] - angles[i - 1];
            if (gap > best_gap) {
                best_gap = gap;
                gap_start = angles[i - 1];
            }
        }
        if (best_gap > pi) {
            flags.half_plane = true;
            // center of the occupied arc, walked from the end of the gap
            const double occupied_mid = gap_start + best_gap + (two_pi - best_gap) / 2.0;
            double phi0 = -occupied_mid;
            while (phi0 < 0.0) phi0 += two_pi;
            while (phi0 >= two_pi) phi0 -= two_pi;
            flags.phi0 = phi0;
        }
    }
    return flags;
}

ConditionFlags check_conditions(const ComplexSignal& sig) {
    return check_conditions(sig, time_average(sig));
}

LogField log_field(const ComplexSignal& sig, cplx bias) {
    if (bias == cplx{0.0, 0.0}) {
        throw std::invalid_argument("log_field: bias must be nonzero");
    }
    const WindingScan scan = winding_scan(sig);
    if (scan.winding != 0) {
        throw NotMinimumPhaseError("log_field: winding " + std::to_string(scan.winding) +
                                   " != 0, logarithm has no continuous periodic branch");
    }

    const std::size_t n = sig.size();
    std::vector<cplx> g(n);
    double phase = std::arg(sig[0] / bias);
    cplx prev = sig[0] / bias;
    for (std::size_t j = 0; j < n; ++j) {
        const cplx ratio = sig[j] / bias;
        if (j > 0) {
            phase += std::arg(ratio * std::conj(prev));
            prev = ratio;
        }
        g[j] = cplx{std::log(std::abs(ratio)), phase};
    }
    // reduce the mean of Im G to its principal window (2*pi ambiguity of the
    // global branch); a true minimum-phase field has mean Im G ~ 0 already
    double mean_im = 0.0;
    for (const cplx& v : g) mean_im += v.imag();
    mean_im /= static_cast<double>(n);
    const double shift = two_pi * std::round(mean_im / two_pi);
    if (shift != 0.0) {
        for (cplx& v : g) v -= cplx{0.0, shift};
    }
    return LogField{ComplexSignal(sig.grid(), std::move(g), "logfield"), bias};
}

namespace {

std::vector<double> retrieve_pass(const RealSignal& intensity, std::size_t factor) {
    const std::size_t n = intensity.size();
    std::vector<double> log_i;
    if (factor == 1) {
        log_i.resize(n);
        for (std::size_t j = 0; j < n; ++j) log_i[j] = 0.5 * std::log(intensity[j]);
    } else {
        std::vector<cplx> c(n);
        for (std::size_t j = 0; j < n; ++j) c[j] = cplx{intensity[j], 0.0};
        const ComplexSignal fine =
            spectral_upsample(ComplexSignal(intensity.grid(), std::move(c)), factor);
        const double eps = 1e-30 * *std::max_element(intensity.samples().begin(),
                                                     intensity.samples().end());
        log_i.resize(fine.size());
        for (std::size_t j = 0; j < fine.size(); ++j) {
            // interpolation of a non-band-limited intensity may ring below zero
            log_i[j] = 0.5 * std::log(std::max(fine[j].real(), eps));
        }
    }
    std::vector<double> h = hilbert(log_i);
    if (factor > 1) {
        std::vector<double> coarse(n);
        for (std::size_t j = 0; j < n; ++j) coarse[j] = h[j * factor];
        return coarse;
    }
    return h;
}

}  // namespace

RealSignal retrieve_phase(const RealSignal& intensity, double phase_bias,
                          const RetrievalOptions& opts) {
    const std::size_t n = intensity.size();
    double max_i = 0.0;
    for (double v : intensity.samples()) max_i = std::max(max_i, v);
    if (!(max_i > 0.0)) {
        throw NonPositiveIntensityError("retrieve_phase: intensity is identically zero");
    }
    const double eps = 1e-30 * max_i;
    for (double v : intensity.samples()) {
        if (!(v > eps)) {
            throw NonPositiveIntensityError("retrieve_phase: intensity touches zero");
        }
    }

    std::vector<double> phi;
    if (opts.fixed_factor > 0) {
        phi = retrieve_pass(intensity, opts.fixed_factor);
    } else {
        std::size_t factor = 1;
        phi = retrieve_pass(intensity, factor);
        while (n * factor * 2 <= opts.max_samples) {
            factor *= 2;
            std::vector<double> next = retrieve_pass(intensity, factor);
            double delta = 0.0;
            for (std::size_t j = 0; j < n; ++j) delta = std::max(delta, std::abs(next[j] - phi[j]));
            phi = std::move(next);
            if (delta < opts.refine_tol) break;
        }
    }

    // the p.v. double-integral identity: the mean of (phi - phase_bias) is 0
    double mean = 0.0;
    for (double v : phi) mean += v;
    mean /= static_cast<double>(n);
    for (double& v : phi) v += phase_bias - mean;
    return RealSignal(intensity.grid(), std::move(phi), "phase");
}

ComplexSignal minphase_signal(const RealSignal& intensity, double phase_bias,
                              const RetrievalOptions& opts) {
    const RealSignal phi = retrieve_phase(intensity, phase_bias, opts);
    std::vector<cplx> e(intensity.size());
    for (std::size_t j = 0; j < intensity.size(); ++j) {
        e[j] = std::polar(std::sqrt(intensity[j]), phi[j]);
    }
    return ComplexSignal(intensity.grid(), std::move(e), "minphase");
}

double reconstruction_error(const ComplexSignal& a, const ComplexSignal& b) {
    require_same_grid(a, b);
    double ea = 0.0, eb = 0.0;
    cplx s{0.0, 0.0};
    for (std::size_t j = 0; j < a.size(); ++j) {
        ea += std::norm(a[j]);
        eb += std::norm(b[j]);
        s += a[j] * std::conj(b[j]);
    }
    if (ea == 0.0) {
        if (eb == 0.0) return 0.0;
        throw std::invalid_argument("reconstruction_error: reference signal is zero");
    }
    const double num = std::max(ea + eb - 2.0 * std::abs(s), 0.0);
    return std::sqrt(num / ea);
}

AnalysisReport analyze(const ComplexSignal& sig, std::optional<cplx> bias) {
    AnalysisReport rep;
    rep.bias = bias.value_or(time_average(sig));
    rep.phase_bias = std::arg(rep.bias);

    const WindingScan scan = winding_scan(sig);
    rep.winding = scan.winding;
    rep.winding_count = static_cast<unsigned>(std::abs(scan.winding));
    rep.min_phase = rep.winding_count == 0;
    rep.min_abs = scan.min_abs;
    rep.conditions = check_conditions(sig, rep.bias);

    std::vector<double> intensity(sig.size());
    for (std::size_t j = 0; j < sig.size(); ++j) intensity[j] = std::norm(sig[j]);
    const ComplexSignal projected =
        minphase_signal(RealSignal(sig.grid(), std::move(intensity)), rep.phase_bias);
    rep.retrieval_error = reconstruction_error(sig, projected);
    return rep;
}

}  // namespace minphase
