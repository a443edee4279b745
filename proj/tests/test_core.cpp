#include <doctest.h>

#include "minphase/core.hpp"
#include "test_util.hpp"

using namespace minphase;
using test_util::pi;

TEST_CASE("forward transform: constant signal is DC only") {
    TimeGrid g(64, 0.25);
    const cplx c{1.5, -0.5};
    ComplexSignal sig(g, std::vector<cplx>(64, c));
    Spectrum spec = forward_transform(sig);
    CHECK(std::abs(spec.coeff(0) - c * g.t_w()) < 1e-12 * std::abs(c) * g.t_w());
    for (long k = spec.k_min(); k <= spec.k_max(); ++k) {
        if (k != 0) CHECK(std::abs(spec.coeff(k)) < 1e-12 * g.t_w());
    }
}

TEST_CASE("convention lock: e^{-i Omega t} lands on bin +1") {
    TimeGrid g(128, 1.0 / 128.0);  // t_w = 1
    ComplexSignal sig = test_util::tone_sum(g, {{1, cplx{1.0, 0.0}}});
    Spectrum spec = forward_transform(sig);
    CHECK(std::abs(spec.coeff(1) - cplx{g.t_w(), 0.0}) < 1e-12 * g.t_w());
    double off_bin = 0.0;
    for (long k = spec.k_min(); k <= spec.k_max(); ++k) {
        if (k != 1) off_bin = std::max(off_bin, std::abs(spec.coeff(k)));
    }
    CHECK(off_bin < 1e-12 * g.t_w());

    // the conjugate tone is a negative frequency: analytic projection kills it
    ComplexSignal conj_tone = test_util::tone_sum(g, {{-1, cplx{1.0, 0.0}}});
    ComplexSignal projected = analytic_projection(conj_tone);
    for (const cplx& v : projected.samples()) CHECK(std::abs(v) < 1e-12);
    // while the paper-positive tone passes unchanged
    ComplexSignal kept = analytic_projection(sig);
    CHECK(test_util::max_abs_diff(kept, sig) < 1e-13);
}

TEST_CASE("inverse transform: zero spectrum, analytic tone, roundtrip") {
    TimeGrid g(64, 0.5, 2.0);  // shifted origin exercises the t0 phases
    SUBCASE("all-zero coefficients give the zero signal") {
        ComplexSignal sig = inverse_transform(Spectrum(g));
        for (const cplx& v : sig.samples()) CHECK(std::abs(v) == 0.0);
    }
    SUBCASE("single k=+1 coefficient reproduces the tone") {
        Spectrum spec(g);
        spec.set_coeff(1, cplx{g.t_w(), 0.0});
        ComplexSignal sig = inverse_transform(spec);
        ComplexSignal expect = test_util::tone_sum(g, {{1, cplx{1.0, 0.0}}});
        CHECK(test_util::max_abs_diff(sig, expect) < 1e-13);
    }
    SUBCASE("forward then inverse is the identity on random signals") {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            ComplexSignal sig = test_util::random_signal(g, seed);
            ComplexSignal back = inverse_transform(forward_transform(sig));
            CHECK(test_util::rel_rms_diff(sig, back) < 1e-12);
        }
    }
}

TEST_CASE("Parseval: sum |samples|^2 dt equals sum |coeffs|^2 / t_w") {
    TimeGrid g(256, 0.125);
    ComplexSignal sig = test_util::random_signal(g, 42);
    Spectrum spec = forward_transform(sig);
    double time_side = signal_energy(sig);
    double freq_side = 0.0;
    for (const cplx& c : spec.coeffs()) freq_side += std::norm(c);
    freq_side /= g.t_w();
    CHECK(std::abs(time_side - freq_side) < 1e-12 * time_side);
}

TEST_CASE("analytic projection: cosine keeps its paper-positive half") {
    TimeGrid g(128, 1.0 / 16.0);
    // cos(Omega t) = (e^{+i Omega t} + e^{-i Omega t}) / 2
    ComplexSignal c = test_util::tone_sum(g, {{1, cplx{0.5, 0.0}}, {-1, cplx{0.5, 0.0}}});
    ComplexSignal projected = analytic_projection(c);
    ComplexSignal expect = test_util::tone_sum(g, {{1, cplx{0.5, 0.0}}});
    CHECK(test_util::max_abs_diff(projected, expect) < 1e-13);

    SUBCASE("idempotent on an already-SSB signal") {
        ComplexSignal twice = analytic_projection(projected);
        CHECK(test_util::max_abs_diff(twice, projected) < 1e-13);
    }
}

TEST_CASE("analytic projection output obeys the Kramers-Kronig identity") {
    // real white noise in, SSB out: s = mean(s) + i * hilbert(s)
    TimeGrid g(512, 0.25);
    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss;
    std::vector<cplx> samples(g.n_samples());
    for (auto& v : samples) v = cplx{gauss(rng), 0.0};
    ComplexSignal s = analytic_projection(ComplexSignal(g, std::move(samples)));

    ComplexSignal h = hilbert(s);
    const cplx dc = time_average(s);
    double worst = 0.0;
    for (std::size_t j = 0; j < s.size(); ++j) {
        worst = std::max(worst, std::abs(s[j] - (dc + cplx{0.0, 1.0} * h[j])));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("hilbert: DC annihilated, cos -> -sin, involution") {
    TimeGrid g(128, 1.0 / 128.0);
    SUBCASE("constant maps to zero") {
        ComplexSignal sig(g, std::vector<cplx>(g.n_samples(), cplx{2.0, 1.0}));
        ComplexSignal h = hilbert(sig);
        for (const cplx& v : h.samples()) CHECK(std::abs(v) < 1e-14);
    }
    SUBCASE("hilbert(cos) = -sin under the e^{+i omega t} convention") {
        std::vector<cplx> c(g.n_samples()), ms(g.n_samples());
        for (std::size_t j = 0; j < g.n_samples(); ++j) {
            c[j] = cplx{std::cos(g.omega(1) * g.t(j)), 0.0};
            ms[j] = cplx{-std::sin(g.omega(1) * g.t(j)), 0.0};
        }
        ComplexSignal h = hilbert(ComplexSignal(g, std::move(c)));
        CHECK(test_util::max_abs_diff(h, ComplexSignal(g, std::move(ms))) < 1e-13);
    }
    SUBCASE("hilbert twice negates any zero-mean signal") {
        ComplexSignal sig = test_util::random_signal(g, 3);
        const cplx dc = time_average(sig);
        std::vector<cplx> centered(sig.size());
        for (std::size_t j = 0; j < sig.size(); ++j) centered[j] = sig[j] - dc;
        ComplexSignal zm(g, std::move(centered));
        ComplexSignal hh = hilbert(hilbert(zm));
        double num = 0.0, den = 0.0;
        for (std::size_t j = 0; j < zm.size(); ++j) {
            num += std::norm(hh[j] + zm[j]);
            den += std::norm(zm[j]);
        }
        CHECK(std::sqrt(num / den) < 1e-12);
    }
}

TEST_CASE("hilbert matches the p.v. cot-kernel quadrature") {
    // independent route: principal-value Riemann sum of the periodic kernel
    // (1/t_w) cot(pi (t'-t)/t_w) on a refined grid, band-limited integrand
    TimeGrid coarse(32, 1.0 / 32.0);
    ComplexSignal sig = test_util::tone_sum(
        coarse, {{1, cplx{1.0, 0.3}}, {2, cplx{-0.4, 0.1}}, {-3, cplx{0.2, 0.2}}});
    const std::size_t refine = 512;
    ComplexSignal fine = spectral_upsample(sig, refine);
    const TimeGrid& gf = fine.grid();
    ComplexSignal h = hilbert(sig);
    double worst = 0.0;
    for (std::size_t j = 0; j < sig.size(); ++j) {
        const double t = coarse.t(j);
        cplx acc{0.0, 0.0};
        for (std::size_t l = 0; l < fine.size(); ++l) {
            if (l == j * refine) continue;  // symmetric gap around the pole = p.v.
            const double u = pi * (gf.t(l) - t) / gf.t_w();
            acc += fine[l] * (1.0 / std::tan(u));
        }
        acc *= gf.dt() / gf.t_w();
        worst = std::max(worst, std::abs(acc - h[j]));
    }
    CHECK(worst < 1e-3);
}

TEST_CASE("hilbert equals circular convolution with the materialized kernel") {
    // second route: materialize the kernel as the inverse transform of
    // -i sgn(omega) and convolve directly, O(n^2)
    TimeGrid g(64, 0.5);
    Spectrum mult(g);
    for (long k = mult.k_min(); k <= mult.k_max(); ++k) {
        if (k > 0) mult.set_coeff(k, cplx{0.0, -g.t_w()});
        if (k < 0) mult.set_coeff(k, cplx{0.0, g.t_w()});
    }
    ComplexSignal kernel = inverse_transform(mult);  // kernel samples, integral-normalized

    ComplexSignal sig = test_util::random_signal(g, 11);
    const std::size_t n = g.n_samples();
    std::vector<cplx> direct(n, cplx{0.0, 0.0});
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t m = 0; m < n; ++m) {
            direct[j] += sig[(j + n - m) % n] * kernel[m];
        }
        direct[j] *= g.dt() / g.t_w();
    }
    ComplexSignal h = hilbert(sig);
    CHECK(test_util::max_abs_diff(h, ComplexSignal(g, std::move(direct))) < 1e-10);
}

TEST_CASE("time average") {
    TimeGrid g(64, 1.0 / 64.0);
    SUBCASE("constant") {
        ComplexSignal sig(g, std::vector<cplx>(64, cplx{3.0, 4.0}));
        CHECK(std::abs(time_average(sig) - cplx{3.0, 4.0}) < 1e-15);
    }
    SUBCASE("full-period tone averages to zero") {
        ComplexSignal sig = test_util::tone_sum(g, {{1, cplx{2.0, 1.0}}});
        CHECK(std::abs(time_average(sig)) < 1e-14);
    }
    SUBCASE("bias plus tone returns the bias") {
        ComplexSignal sig = test_util::tone_sum(g, {{0, cplx{0.7, -0.2}}, {1, cplx{2.0, 1.0}}});
        CHECK(std::abs(time_average(sig) - cplx{0.7, -0.2}) < 1e-13);
    }
}

TEST_CASE("spectral upsample is exact for band-limited signals") {
    TimeGrid g(64, 1.0 / 64.0);
    ComplexSignal sig = test_util::tone_sum(g, {{0, cplx{1.0, 0.0}}, {3, cplx{0.5, 0.2}}});
    ComplexSignal fine = spectral_upsample(sig, 4);
    CHECK(fine.size() == 256);
    ComplexSignal expect = test_util::tone_sum(fine.grid(), {{0, cplx{1.0, 0.0}}, {3, cplx{0.5, 0.2}}});
    CHECK(test_util::max_abs_diff(fine, expect) < 1e-12);
}
