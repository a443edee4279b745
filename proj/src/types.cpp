#include "minphase/types.hpp"

#include <cmath>
#include <numbers>

namespace minphase {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

TimeGrid::TimeGrid(std::size_t n_samples, double dt, double t0)
    : n_(n_samples), dt_(dt), t0_(t0) {
    if (!is_power_of_two(n_samples)) {
        throw std::invalid_argument("TimeGrid: n_samples must be a power of two, got " +
                                    std::to_string(n_samples));
    }
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::invalid_argument("TimeGrid: dt must be positive and finite");
    }
    if (!std::isfinite(t0)) {
        throw std::invalid_argument("TimeGrid: t0 must be finite");
    }
}

double TimeGrid::omega0() const { return 2.0 * std::numbers::pi / t_w(); }

ComplexSignal::ComplexSignal(TimeGrid grid, std::vector<cplx> samples, std::string label)
    : grid_(grid), samples_(std::move(samples)), label_(std::move(label)) {
    if (samples_.size() != grid_.n_samples()) {
        throw std::invalid_argument("ComplexSignal: sample count " +
                                    std::to_string(samples_.size()) + " != grid n_samples " +
                                    std::to_string(grid_.n_samples()));
    }
    for (const cplx& v : samples_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::invalid_argument("ComplexSignal: non-finite sample");
        }
    }
}

RealSignal::RealSignal(TimeGrid grid, std::vector<double> samples, std::string label)
    : grid_(grid), samples_(std::move(samples)), label_(std::move(label)) {
    if (samples_.size() != grid_.n_samples()) {
        throw std::invalid_argument("RealSignal: sample count mismatch");
    }
    for (double v : samples_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("RealSignal: non-finite sample");
        }
    }
}

Spectrum::Spectrum(TimeGrid grid, std::vector<cplx> coeffs)
    : grid_(grid), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != grid_.n_samples()) {
        throw std::invalid_argument("Spectrum: coefficient count mismatch");
    }
}

Spectrum::Spectrum(TimeGrid grid) : grid_(grid), coeffs_(grid.n_samples(), cplx{0.0, 0.0}) {}

std::size_t Spectrum::index_of(long k) const {
    if (k < k_min() || k > k_max()) {
        throw std::out_of_range("Spectrum: bin " + std::to_string(k) + " out of range");
    }
    return static_cast<std::size_t>(k - k_min());
}

void require_same_grid(const ComplexSignal& a, const ComplexSignal& b) {
    if (!(a.grid() == b.grid())) {
        throw GridMismatchError("signals live on different grids");
    }
}

}  // namespace minphase
