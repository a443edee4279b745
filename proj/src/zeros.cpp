#include "minphase/zeros.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "minphase/analysis.hpp"
#include "minphase/core.hpp"

namespace minphase {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double kTrimRel = 1e-12;     // trailing-coefficient trim threshold
constexpr double kSsbRel = 1e-10;      // allowed negative-frequency leakage
constexpr double kOnAxisBand = 1e-9;   // |w| within this of 1 counts as on-axis
constexpr double kZeroFloorW = 1e-9;   // |w| below this is the w=0 cluster

// ascending-k coefficients of the field polynomial in w, trimmed at the top
std::vector<cplx> band_coefficients(const ComplexSignal& sig) {
    const Spectrum spec = forward_transform(sig);
    double cmax = 0.0;
    for (const cplx& c : spec.coeffs()) cmax = std::max(cmax, std::abs(c));
    if (cmax == 0.0) {
        throw DegenerateCoefficientsError("zeros: zero signal");
    }
    double neg_max = 0.0;
    for (long k = spec.k_min(); k < 0; ++k) neg_max = std::max(neg_max, std::abs(spec.coeff(k)));
    if (neg_max > kSsbRel * cmax) {
        throw NotSSBError("zeros: negative-frequency content " + std::to_string(neg_max / cmax) +
                          " of peak exceeds 1e-10");
    }
    long top = spec.k_max();
    while (top > 0 && std::abs(spec.coeff(top)) < kTrimRel * cmax) --top;
    std::vector<cplx> c(static_cast<std::size_t>(top) + 1);
    for (long k = 0; k <= top; ++k) c[static_cast<std::size_t>(k)] = spec.coeff(k);
    return c;
}

ZeroEstimate zero_from_root(cplx w, double t_w) {
    const double t = std::fmod(-std::arg(w) * t_w / two_pi + t_w, t_w);
    const double tau = -(t_w / two_pi) * std::log(std::abs(w));
    return ZeroEstimate{t, tau, ZeroMethod::oracle, 0.0};
}

}  // namespace

std::vector<ZeroEstimate> zeros_oracle(const ComplexSignal& sig, OracleDiagnostics* diag) {
    const std::vector<cplx> c = band_coefficients(sig);
    const std::size_t degree = c.size() - 1;
    if (diag != nullptr) *diag = OracleDiagnostics{degree, 0, 0};
    if (degree == 0) {
        return {};
    }

    const auto n = static_cast<Eigen::Index>(degree);
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    const cplx lead = c[degree];
    for (Eigen::Index i = 0; i < n; ++i) {
        companion(i, n - 1) = -c[static_cast<std::size_t>(i)] / lead;
    }

    Eigen::ComplexSchur<Eigen::MatrixXcd> schur;
    Eigen::MatrixXcd q_unused;
    schur.computeFromHessenberg(companion, q_unused, false);
    if (schur.info() != Eigen::Success) {
        throw DegenerateCoefficientsError("zeros: Schur iteration failed");
    }

    const double t_w = sig.grid().t_w();
    std::vector<ZeroEstimate> zeros;
    for (Eigen::Index i = 0; i < n; ++i) {
        const cplx w = schur.matrixT()(i, i);
        const double r = std::abs(w);
        if (std::abs(r - 1.0) <= kOnAxisBand) {
            if (diag != nullptr) ++diag->on_axis_count;
        } else if (r > 1.0) {
            if (diag != nullptr) ++diag->outside_count;
        } else if (r > kZeroFloorW) {
            zeros.push_back(zero_from_root(w, t_w));
        }
    }
    std::sort(zeros.begin(), zeros.end(),
              [](const ZeroEstimate& a, const ZeroEstimate& b) { return a.t_k < b.t_k; });
    return zeros;
}

ComplexSignal blaschke_ratio(const ComplexSignal& sig, double bias_phase) {
    double emax = 0.0, emin = std::numeric_limits<double>::infinity();
    for (const cplx& v : sig.samples()) {
        emax = std::max(emax, std::abs(v));
        emin = std::min(emin, std::abs(v));
    }
    if (!(emin > 1e-14 * emax)) {
        throw ZeroCrossingError("blaschke_ratio: |E| touches zero");
    }
    std::vector<double> intensity(sig.size());
    for (std::size_t j = 0; j < sig.size(); ++j) intensity[j] = std::norm(sig[j]);
    const ComplexSignal e0 =
        minphase_signal(RealSignal(sig.grid(), std::move(intensity)), bias_phase);
    std::vector<cplx> h(sig.size());
    for (std::size_t j = 0; j < sig.size(); ++j) h[j] = sig[j] / e0[j];
    return ComplexSignal(sig.grid(), std::move(h), "blaschke");
}

cplx lorentzian_model(double t, const std::vector<ZeroEstimate>& zeros, double t_w,
                      double global_phase) {
    cplx prod = std::polar(1.0, global_phase);
    for (const ZeroEstimate& z : zeros) {
        const cplx u = pi * cplx{t - z.t_k, z.tau_abs} / t_w;
        const cplx cot = std::cos(u) / std::sin(u);
        prod *= 1.0 - cplx{0.0, two_pi * z.tau_abs / t_w} * cot;
    }
    return prod;
}

namespace {

struct FitWorkspace {
    std::vector<std::size_t> points;       // grid indices in the fit windows
    const ComplexSignal* ratio = nullptr;  // data
    double t_w = 0.0;
};

// residuals r (stacked Re, Im) and Jacobian for params p = {theta, t_k, ln tau_k ...}
double fit_cost(const FitWorkspace& ws, const Eigen::VectorXd& p, Eigen::VectorXd* r_out,
                Eigen::MatrixXd* jac_out) {
    const std::size_t n_zero = (static_cast<std::size_t>(p.size()) - 1) / 2;
    const std::size_t m = ws.points.size();
    const double theta = p(0);
    double cost = 0.0;
    if (r_out != nullptr) r_out->resize(2 * static_cast<Eigen::Index>(m));
    if (jac_out != nullptr) jac_out->setZero(2 * static_cast<Eigen::Index>(m), p.size());

    for (std::size_t ip = 0; ip < m; ++ip) {
        const std::size_t j = ws.points[ip];
        const double t = ws.ratio->grid().t(j);
        cplx model = std::polar(1.0, theta);
        std::vector<cplx> factors(n_zero);
        std::vector<cplx> dfdt(n_zero), dfdl(n_zero);
        for (std::size_t k = 0; k < n_zero; ++k) {
            const double tk = p(1 + 2 * static_cast<Eigen::Index>(k));
            const double tau = std::exp(p(2 + 2 * static_cast<Eigen::Index>(k)));
            const cplx u = pi * cplx{t - tk, tau} / ws.t_w;
            const cplx s = std::sin(u);
            const cplx cot = std::cos(u) / s;
            const cplx csc2 = 1.0 / (s * s);
            const cplx scale{0.0, two_pi * tau / ws.t_w};
            factors[k] = 1.0 - scale * cot;
            // d/dt_k and tau * d/dtau (log-parameter)
            dfdt[k] = -scale * csc2 * (pi / ws.t_w);
            dfdl[k] = tau * (-cplx{0.0, two_pi / ws.t_w} * cot -
                             scale * csc2 * cplx{0.0, pi / ws.t_w});
            model *= factors[k];
        }
        const cplx res = (*ws.ratio)[j] - model;
        cost += std::norm(res);
        if (r_out != nullptr) {
            (*r_out)(2 * static_cast<Eigen::Index>(ip)) = res.real();
            (*r_out)(2 * static_cast<Eigen::Index>(ip) + 1) = res.imag();
        }
        if (jac_out != nullptr) {
            // residual = data - model, so d(res)/dp = -d(model)/dp
            const cplx dtheta = -model * cplx{0.0, 1.0};
            (*jac_out)(2 * static_cast<Eigen::Index>(ip), 0) = -dtheta.real();
            (*jac_out)(2 * static_cast<Eigen::Index>(ip) + 1, 0) = -dtheta.imag();
            for (std::size_t k = 0; k < n_zero; ++k) {
                const cplx base = model / factors[k];
                const cplx dm_dt = base * dfdt[k];
                const cplx dm_dl = base * dfdl[k];
                (*jac_out)(2 * static_cast<Eigen::Index>(ip), 1 + 2 * static_cast<Eigen::Index>(k)) = dm_dt.real();
                (*jac_out)(2 * static_cast<Eigen::Index>(ip) + 1, 1 + 2 * static_cast<Eigen::Index>(k)) = dm_dt.imag();
                (*jac_out)(2 * static_cast<Eigen::Index>(ip), 2 + 2 * static_cast<Eigen::Index>(k)) = dm_dl.real();
                (*jac_out)(2 * static_cast<Eigen::Index>(ip) + 1, 2 + 2 * static_cast<Eigen::Index>(k)) = dm_dl.imag();
            }
        }
    }
    return cost;
}

}  // namespace

std::vector<ZeroEstimate> fit_lorentzians(const ComplexSignal& ratio, std::size_t n_expected,
                                          const FitOptions& opts) {
    const std::size_t n = ratio.size();
    const double t_w = ratio.grid().t_w();
    const double dt = ratio.grid().dt();

    std::vector<double> dev(n);
    double worst_mod = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        dev[j] = std::abs(ratio[j] - 1.0);
        worst_mod = std::max(worst_mod, std::abs(std::abs(ratio[j]) - 1.0));
    }
    if (worst_mod > 1e-3) {
        throw std::invalid_argument("fit_lorentzians: ratio is not pure phase (|H|-1 up to " +
                                    std::to_string(worst_mod) + ")");
    }

    // peak detection: circular local maxima above threshold
    std::vector<std::size_t> peaks;
    for (std::size_t j = 0; j < n; ++j) {
        const double prev = dev[(j + n - 1) % n];
        const double next = dev[(j + 1) % n];
        if (dev[j] > opts.peak_threshold && dev[j] > prev && dev[j] >= next) {
            peaks.push_back(j);
        }
    }
    if (peaks.size() != n_expected) {
        throw PeakCountMismatchError("fit_lorentzians: found " + std::to_string(peaks.size()) +
                                     " peaks, expected " + std::to_string(n_expected));
    }
    if (n_expected == 0) {
        return {};
    }

    // initialize: t at the peak, tau from the half-width at |H-1| = sqrt(2)
    const double half_level = std::sqrt(2.0);
    Eigen::VectorXd p(1 + 2 * static_cast<Eigen::Index>(n_expected));
    p(0) = 0.0;
    for (std::size_t k = 0; k < n_expected; ++k) {
        const std::size_t jp = peaks[k];
        auto cross = [&](long dir) {
            std::size_t steps = 0;
            std::size_t j = jp;
            while (steps < n) {
                const std::size_t jn = (j + n + static_cast<std::size_t>(static_cast<long>(n) + dir)) % n;
                if (dev[jn] < half_level) {
                    // linear interpolation between j and jn
                    const double f = (dev[j] - half_level) / std::max(dev[j] - dev[jn], 1e-300);
                    return static_cast<double>(steps) + f;
                }
                j = jn;
                ++steps;
            }
            return static_cast<double>(n);
        };
        const double width = 0.5 * (cross(+1) + cross(-1)) * dt;
        p(1 + 2 * static_cast<Eigen::Index>(k)) = ratio.grid().t(jp);
        p(2 + 2 * static_cast<Eigen::Index>(k)) = std::log(std::max(width, 0.25 * dt));
    }

    // fit windows: union of +-window_tau*tau around each peak (min 8 samples per side)
    FitWorkspace ws;
    ws.ratio = &ratio;
    ws.t_w = t_w;
    std::vector<bool> in_window(n, false);
    for (std::size_t k = 0; k < n_expected; ++k) {
        const double tau0 = std::exp(p(2 + 2 * static_cast<Eigen::Index>(k)));
        const auto half = std::max<std::size_t>(
            static_cast<std::size_t>(std::ceil(opts.window_tau * tau0 / dt)), 8);
        for (std::size_t d = 0; d <= 2 * half; ++d) {
            in_window[(peaks[k] + n - half % n + d) % n] = true;
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (in_window[j]) ws.points.push_back(j);
    }

    // damped Gauss-Newton on the complex residuals
    double lambda = 1e-3;
    Eigen::VectorXd r;
    Eigen::MatrixXd jac;
    double cost = fit_cost(ws, p, &r, &jac);
    for (std::size_t iter = 0; iter < opts.max_iter; ++iter) {
        const Eigen::MatrixXd jtj = jac.transpose() * jac;
        const Eigen::VectorXd jtr = jac.transpose() * r;
        bool stepped = false;
        for (int inner = 0; inner < 12; ++inner) {
            Eigen::MatrixXd damped = jtj;
            damped.diagonal() += lambda * jtj.diagonal().cwiseMax(1e-12);
            const Eigen::VectorXd step = damped.ldlt().solve(-jtr);
            const Eigen::VectorXd p_try = p + step;
            const double cost_try = fit_cost(ws, p_try, nullptr, nullptr);
            if (std::isfinite(cost_try) && cost_try < cost) {
                const double rel_drop = (cost - cost_try) / std::max(cost, 1e-300);
                p = p_try;
                cost = cost_try;
                lambda = std::max(lambda / 3.0, 1e-12);
                stepped = true;
                if (rel_drop < 1e-12) iter = opts.max_iter;  // converged
                break;
            }
            lambda *= 10.0;
            if (lambda > 1e12) {
                throw FitDivergedError("fit_lorentzians: damping exhausted");
            }
        }
        if (!stepped) break;
        cost = fit_cost(ws, p, &r, &jac);
    }
    if (!std::isfinite(cost)) {
        throw FitDivergedError("fit_lorentzians: non-finite cost");
    }

    const double rms = std::sqrt(cost / static_cast<double>(ws.points.size()));
    std::vector<ZeroEstimate> zeros(n_expected);
    for (std::size_t k = 0; k < n_expected; ++k) {
        double tk = std::fmod(p(1 + 2 * static_cast<Eigen::Index>(k)), t_w);
        if (tk < 0.0) tk += t_w;
        zeros[k] = ZeroEstimate{tk, std::exp(p(2 + 2 * static_cast<Eigen::Index>(k))),
                                ZeroMethod::lorentzian_fit, rms};
    }
    std::sort(zeros.begin(), zeros.end(),
              [](const ZeroEstimate& a, const ZeroEstimate& b) { return a.t_k < b.t_k; });
    return zeros;
}

ComplexSignal flip_zero(const ComplexSignal& sig, const ZeroEstimate& zero) {
    if (!(zero.tau_abs > 0.0) || !std::isfinite(zero.tau_abs) || !std::isfinite(zero.t_k)) {
        throw std::invalid_argument("flip_zero: zero must lie strictly below the real axis");
    }
    const double t_w = sig.grid().t_w();
    const double omega0 = two_pi / t_w;
    const cplx w0 = std::polar(std::exp(-omega0 * zero.tau_abs), -omega0 * zero.t_k);

    const std::vector<cplx> c = band_coefficients(sig);
    const std::size_t degree = c.size() - 1;
    if (degree < 1) {
        throw std::invalid_argument("flip_zero: field has no zeros");
    }
    double cmax = 0.0;
    for (const cplx& v : c) cmax = std::max(cmax, std::abs(v));

    // synthetic division p(w) = (w - w0) q(w) + rem
    std::vector<cplx> q(degree);
    q[degree - 1] = c[degree];
    for (std::size_t j = degree - 1; j > 0; --j) {
        q[j - 1] = c[j] + w0 * q[j];
    }
    const cplx rem = c[0] + w0 * q[0];
    if (std::abs(rem) > 1e-6 * cmax) {
        throw std::invalid_argument("flip_zero: location is not a zero of the field (remainder " +
                                    std::to_string(std::abs(rem) / cmax) + " of peak)");
    }

    // E' = q(w) * (1 - conj(w0) w): same degree, zero moved to 1/conj(w0)
    const cplx w0c = std::conj(w0);
    Spectrum out(sig.grid());
    for (std::size_t k = 0; k <= degree; ++k) {
        cplx v{0.0, 0.0};
        if (k < degree) v += q[k];
        if (k > 0) v -= w0c * q[k - 1];
        out.set_coeff(static_cast<long>(k), v);
    }
    ComplexSignal flipped = inverse_transform(out);
    return ComplexSignal(sig.grid(), flipped.samples(), sig.label());
}

}  // namespace minphase
