#include <doctest.h>

#include <cmath>

#include "minphase/pulse.hpp"
#include "test_util.hpp"

using namespace minphase;
using test_util::pi;

TEST_CASE("rrc pulse peak value") {
    const double T = 2.0;
    for (double beta : {0.1, 0.35, 1.0}) {
        const double expect = (1.0 / std::sqrt(T)) * ((1.0 - beta) + 4.0 * beta / pi);
        CHECK(rrc_pulse(0.0, T, beta) == doctest::Approx(expect).epsilon(1e-14));
        CHECK(PulseConfig(beta, T).peak() == doctest::Approx(expect).epsilon(1e-14));
    }
}

TEST_CASE("beta -> 0 limit object is the sinc pulse") {
    const double T = 1.0;
    CHECK(rrc_pulse(0.0, T, 0.0) == doctest::Approx(1.0));
    CHECK(std::abs(rrc_pulse(T, T, 0.0)) < 1e-15);       // H_0(T) = 0
    CHECK(std::abs(rrc_pulse(3.0 * T, T, 0.0)) < 1e-15); // zeros at all nonzero multiples
    CHECK(rrc_pulse(0.5 * T, T, 0.0) == doctest::Approx(std::sin(pi / 2) / (pi / 2)));
    // small-beta pulses approach it
    CHECK(rrc_pulse(0.3, T, 1e-6) == doctest::Approx(rrc_pulse(0.3, T, 0.0)).epsilon(1e-4));
}

TEST_CASE("rrc pulse is even and finite at the removable singularities") {
    const double T = 1.0;
    for (double beta : {0.1, 0.25, 0.7}) {
        for (double t : {0.3, 1.7, T / (4.0 * beta), 5.55}) {
            CHECK(rrc_pulse(t, T, beta) == rrc_pulse(-t, T, beta));
            CHECK(std::isfinite(rrc_pulse(t, T, beta)));
        }
        // approach the 4*beta*t = T singularity from both sides
        const double ts = T / (4.0 * beta);
        const double limit = rrc_pulse(ts, T, beta);
        CHECK(rrc_pulse(ts * (1.0 + 1e-9), T, beta) == doctest::Approx(limit).epsilon(1e-6));
        CHECK(rrc_pulse(ts * (1.0 - 1e-9), T, beta) == doctest::Approx(limit).epsilon(1e-6));
    }
}

TEST_CASE("rrc spectrum branch values") {
    for (double beta : {0.1, 0.5, 1.0}) {
        CHECK(rrc_spectrum(0.0, beta) == 1.0);
        CHECK(rrc_spectrum((1.0 - beta) / 2.0, beta) == doctest::Approx(1.0));
        CHECK(std::abs(rrc_spectrum((1.0 + beta) / 2.0, beta)) < 1e-15);
        CHECK(rrc_spectrum(0.75 * (1.0 + beta), beta) == 0.0);
        CHECK(rrc_spectrum(0.3, beta) == rrc_spectrum(-0.3, beta));
    }
    // the beta -> 0 limit object carries the 1/sqrt(2) band-edge value
    CHECK(rrc_spectrum(0.5, 0.0) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(rrc_spectrum(-0.5, 0.0) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(rrc_spectrum(0.499, 0.0) == 1.0);
    CHECK(rrc_spectrum(0.501, 0.0) == 0.0);
}

TEST_CASE("pulse config invariants") {
    CHECK_THROWS_AS(PulseConfig(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(PulseConfig(1.2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(PulseConfig(0.1, 0.0), std::invalid_argument);
    const PulseConfig cfg(0.25, 2.0);
    CHECK(cfg.b_limit() == doctest::Approx(1.25 / 2.0));
    CHECK(cfg.carrier_omega() == doctest::Approx(1.25 * pi / 2.0));
}

TEST_CASE("orthogonality of shifted pulses, direct quadrature") {
    // sum H(t - nT) H(t - n'T) dt == delta_{n,n'} for |n - n'| <= 5; long fine
    // grid, interior pulses; the integrand is band-limited so the Riemann sum
    // converges fast and only tail truncation remains
    const double T = 1.0;
    const double beta = 0.1;
    const int m_over = 32;
    const double span = 160.0;  // integration window in symbol periods
    const double dt = T / m_over;
    const auto n_pts = static_cast<std::size_t>(span / dt);

    for (int shift = 0; shift <= 5; ++shift) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n_pts; ++j) {
            const double t = -span / 2.0 + static_cast<double>(j) * dt;
            acc += rrc_pulse(t, T, beta) * rrc_pulse(t - shift * T, T, beta);
        }
        acc *= dt;
        const double expect = shift == 0 ? 1.0 : 0.0;
        CHECK(std::abs(acc - expect) < 1e-6);
    }
}
