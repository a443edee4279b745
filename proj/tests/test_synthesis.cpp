#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "minphase/core.hpp"
#include "minphase/synthesis.hpp"
#include "test_util.hpp"

using namespace minphase;
using test_util::pi;

namespace {

SymbolSequence zero_symbols(std::size_t n, const Constellation& c = {}) {
    SymbolSequence seq;
    seq.symbols.assign(n, cplx{0.0, 0.0});
    seq.constellation = c;
    return seq;
}

}  // namespace

TEST_CASE("constellation draws") {
    SUBCASE("shifted 16QAM values live on the (b + k) grid") {
        const Constellation c{ConstellationKind::Shifted16QAM, 1.1, 8};
        const double rt = std::sqrt(2.0);
        SymbolSequence seq = make_constellation(c, 512, 9, 2.0);
        std::set<int> seen;
        for (const cplx& a : seq.symbols) {
            const double k1 = a.real() / rt - 1.1;
            const double k2 = a.imag() / rt - 1.1;
            CHECK(k1 == doctest::Approx(std::round(k1)).epsilon(1e-12));
            CHECK(k2 == doctest::Approx(std::round(k2)).epsilon(1e-12));
            CHECK(k1 >= -1e-9);
            CHECK(k1 <= 7.0 + 1e-9);
            seen.insert(static_cast<int>(std::round(k1)));
        }
        CHECK(seen.size() == 8);  // all levels show up in 512 draws
    }
    SUBCASE("shifted 8AM is real with k in 0..7") {
        const Constellation c{ConstellationKind::Shifted8AM, 0.1, 8};
        SymbolSequence seq = make_constellation(c, 256, 3);
        for (const cplx& a : seq.symbols) {
            CHECK(a.imag() == 0.0);
            CHECK(a.real() >= 0.1 - 1e-12);
            CHECK(a.real() <= 7.1 + 1e-12);
        }
    }
    SUBCASE("biased quadrant enforces the floor strictly") {
        const Constellation c{ConstellationKind::BiasedQuadrant, 0.2, 8};
        SymbolSequence seq = make_constellation(c, 256, 17);
        for (const cplx& a : seq.symbols) {
            CHECK(a.real() > 0.2);
            CHECK(a.imag() > 0.2);
        }
    }
    SUBCASE("fixed seed draws identical sequences") {
        const Constellation c{ConstellationKind::Shifted16QAM, 0.5, 8};
        SymbolSequence a = make_constellation(c, 64, 1234);
        SymbolSequence b = make_constellation(c, 64, 1234);
        CHECK(a.symbols == b.symbols);
        SymbolSequence d = make_constellation(c, 64, 1235);
        CHECK(a.symbols != d.symbols);
    }
    SUBCASE("nearest symbol decision, ties toward the smaller index") {
        const Constellation c{ConstellationKind::Shifted8AM, 0.0, 8};
        CHECK(nearest_symbol(cplx{2.2, 0.0}, c, 1.0) == cplx{2.0, 0.0});
        // exactly between grid points 1 and 2: the earlier point wins
        CHECK(nearest_symbol(cplx{1.5, 0.0}, c, 1.0) == cplx{1.0, 0.0});
    }
}

TEST_CASE("synthesize: single pulse and pure bias") {
    const PulseConfig cfg(0.1, 1.0);
    TimeGrid g(16 * 16, 1.0 / 16.0);

    SUBCASE("single symbol at t=0 gives a_0 H_beta(0)") {
        SymbolSequence seq = zero_symbols(16);
        seq.symbols[0] = cplx{1.0, 0.0};  // sqrt(T) = 1
        ComplexSignal e = synthesize(seq, cfg, g);
        CHECK(e[0].real() == doctest::Approx(cfg.peak()).epsilon(1e-9));
        CHECK(std::abs(e[0].imag()) < 1e-12);
    }
    SUBCASE("no symbols plus unit bias gives the constant 1") {
        SymbolSequence seq = zero_symbols(16);
        seq.bias_field = cplx{1.0, 0.0};
        ComplexSignal e = synthesize(seq, cfg, g);
        for (const cplx& v : e.samples()) CHECK(std::abs(v - cplx{1.0, 0.0}) < 1e-14);
    }
    SUBCASE("grid constraints are enforced") {
        SymbolSequence seq = zero_symbols(16);
        CHECK_THROWS_AS(synthesize(seq, cfg, TimeGrid(64, 1.0)), std::invalid_argument);
        // M = 2 < 4: aliasing guard
        CHECK_THROWS_AS(synthesize(seq, cfg, TimeGrid(32, 0.5)), std::invalid_argument);
    }
}

TEST_CASE("synthesize_spectral: exact band limitation") {
    const PulseConfig cfg(0.1, 1.0);
    const std::size_t n_sym = 64;
    TimeGrid g(n_sym * 16, 1.0 / 16.0);
    SymbolSequence seq = make_constellation({ConstellationKind::Shifted16QAM, 0.5, 8}, n_sym, 5);
    seq.bias_field = cplx{3.0, 1.0};
    ComplexSignal e = synthesize_spectral(seq, cfg, g);
    Spectrum spec = forward_transform(e);

    const double b_top = 2.0 * pi * cfg.b_limit();  // omega upper band edge
    double peak = 0.0;
    for (const cplx& c : spec.coeffs()) peak = std::max(peak, std::abs(c));
    for (long k = spec.k_min(); k <= spec.k_max(); ++k) {
        const double w = g.omega(k);
        if (w < 0.0 || w >= b_top) {
            CHECK(std::abs(spec.coeff(k)) < 1e-13 * peak);
        }
    }
    // DC bin carries exactly the bias
    CHECK(std::abs(spec.coeff(0) / g.t_w() - cplx{3.0, 1.0}) < 1e-12);
}

TEST_CASE("single-symbol spectrum follows the shifted C_beta profile") {
    const PulseConfig cfg(0.2, 1.0);
    const std::size_t n_sym = 32;
    TimeGrid g(n_sym * 16, 1.0 / 16.0);
    SymbolSequence seq = zero_symbols(n_sym);
    seq.symbols[0] = cplx{1.0, 0.0};
    Spectrum spec = forward_transform(synthesize_spectral(seq, cfg, g));
    for (long k = 0; k <= spec.k_max(); ++k) {
        const double x = static_cast<double>(k) / static_cast<double>(n_sym) - (1.0 + cfg.beta) / 2.0;
        CHECK(std::abs(spec.coeff(k) - cplx{rrc_spectrum(x, cfg.beta), 0.0}) < 1e-12);
    }
}

TEST_CASE("time-domain and spectral synthesis agree") {
    const PulseConfig cfg(0.1, 1.0);
    const std::size_t n_sym = 128;
    TimeGrid g(n_sym * 16, 1.0 / 16.0);
    SymbolSequence seq = make_constellation({ConstellationKind::Shifted16QAM, 1.1, 8}, n_sym, 21);
    seq.bias_field = cplx{2.0, 2.0};
    ComplexSignal a = synthesize(seq, cfg, g);
    ComplexSignal b = synthesize_spectral(seq, cfg, g);
    CHECK(test_util::rel_rms_diff(b, a) < 1e-3);  // wrap truncation only
}

TEST_CASE("time-domain out-of-band leakage stays below 1e-4") {
    const PulseConfig cfg(0.1, 1.0);
    const std::size_t n_sym = 512;
    TimeGrid g(n_sym * 16, 1.0 / 16.0);
    SymbolSequence seq = make_constellation({ConstellationKind::Shifted16QAM, 1.1, 8}, n_sym, 2);
    ComplexSignal e = synthesize(seq, cfg, g);
    Spectrum spec = forward_transform(e);
    const double b_top = 2.0 * pi * cfg.b_limit();
    double in_band = 0.0, out_band = 0.0;
    for (long k = spec.k_min(); k <= spec.k_max(); ++k) {
        const double w = g.omega(k);
        const double p = std::norm(spec.coeff(k));
        if (w <= 0.0 || w >= b_top) {
            out_band += p;
        } else {
            in_band += p;
        }
    }
    CHECK(out_band / (in_band + out_band) < 1e-4);
}

TEST_CASE("matched filter recovers the symbols through the spectral path") {
    const PulseConfig cfg(0.1, 1.0);
    const std::size_t n_sym = 128;
    const std::size_t m = 16;
    TimeGrid g(n_sym * m, 1.0 / 16.0);
    SymbolSequence seq = make_constellation({ConstellationKind::Shifted16QAM, 0.5, 8}, n_sym, 33);
    ComplexSignal e = synthesize_spectral(seq, cfg, g);
    const std::vector<cplx> w = periodic_pulse(cfg, g);

    double worst = 0.0, scale = 0.0;
    for (std::size_t s = 0; s < n_sym; ++s) {
        cplx acc{0.0, 0.0};
        for (std::size_t l = 0; l < g.n_samples(); ++l) {
            acc += e[l] * std::conj(w[(l + g.n_samples() - s * m) % g.n_samples()]);
        }
        acc *= g.dt();
        worst = std::max(worst, std::abs(acc - seq.symbols[s]));
        scale = std::max(scale, std::abs(seq.symbols[s]));
    }
    CHECK(worst / scale < 1e-3);
}

TEST_CASE("nominal bias field") {
    const PulseConfig cfg(0.1, 1.0);
    const Constellation qam{ConstellationKind::Shifted16QAM, 1.1, 8};
    const cplx b_qam = nominal_bias_field(qam, cfg);
    CHECK(b_qam.real() == doctest::Approx(4.6 * cfg.peak()));
    CHECK(b_qam.imag() == doctest::Approx(4.6 * cfg.peak()));
    const Constellation am{ConstellationKind::Shifted8AM, 0.1, 8};
    const cplx b_am = nominal_bias_field(am, cfg);
    CHECK(b_am.imag() == 0.0);
    CHECK(b_am.real() == doctest::Approx(std::sqrt(2.0) * 3.6 * cfg.peak()));
}
