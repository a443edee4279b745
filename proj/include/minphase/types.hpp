#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "minphase/errors.hpp"

namespace minphase {

using cplx = std::complex<double>;

/// Uniform periodic sampling grid: t_j = t0 + j*dt for j in [0, n_samples),
/// period t_w = n_samples*dt. n_samples must be a power of two.
class TimeGrid {
public:
    TimeGrid(std::size_t n_samples, double dt, double t0 = 0.0);

    std::size_t n_samples() const { return n_; }
    double dt() const { return dt_; }
    double t0() const { return t0_; }
    double t_w() const { return static_cast<double>(n_) * dt_; }
    double t(std::size_t j) const { return t0_ + static_cast<double>(j) * dt_; }
    /// Fundamental angular frequency 2*pi/t_w.
    double omega0() const;
    /// Angular frequency of bin k (k in [-n/2, n/2)).
    double omega(long k) const { return omega0() * static_cast<double>(k); }

    friend bool operator==(const TimeGrid& a, const TimeGrid& b) {
        return a.n_ == b.n_ && a.dt_ == b.dt_ && a.t0_ == b.t0_;
    }

private:
    std::size_t n_;
    double dt_;
    double t0_;
};

/// Complex field samples on a TimeGrid. Immutable after construction;
/// construction validates length and finiteness.
class ComplexSignal {
public:
    ComplexSignal(TimeGrid grid, std::vector<cplx> samples, std::string label = {});

    const TimeGrid& grid() const { return grid_; }
    const std::vector<cplx>& samples() const { return samples_; }
    const std::string& label() const { return label_; }
    std::size_t size() const { return samples_.size(); }
    const cplx& operator[](std::size_t j) const { return samples_[j]; }

private:
    TimeGrid grid_;
    std::vector<cplx> samples_;
    std::string label_;
};

/// Real-valued samples (intensity, phase) on a TimeGrid.
class RealSignal {
public:
    RealSignal(TimeGrid grid, std::vector<double> samples, std::string label = {});

    const TimeGrid& grid() const { return grid_; }
    const std::vector<double>& samples() const { return samples_; }
    const std::string& label() const { return label_; }
    std::size_t size() const { return samples_.size(); }
    double operator[](std::size_t j) const { return samples_[j]; }

private:
    TimeGrid grid_;
    std::vector<double> samples_;
    std::string label_;
};

/// Complex frequency coefficients under the e^{+i*omega*t} forward convention.
/// Bin k in {-n/2, ..., n/2-1} holds an approximation of the transform at
/// omega_k = 2*pi*k/t_w; storage is ascending in k.
class Spectrum {
public:
    Spectrum(TimeGrid grid, std::vector<cplx> coeffs);
    /// All-zero spectrum on a grid.
    explicit Spectrum(TimeGrid grid);

    const TimeGrid& grid() const { return grid_; }
    const std::vector<cplx>& coeffs() const { return coeffs_; }

    long k_min() const { return -static_cast<long>(grid_.n_samples() / 2); }
    long k_max() const { return static_cast<long>(grid_.n_samples() / 2) - 1; }

    const cplx& coeff(long k) const { return coeffs_[index_of(k)]; }
    void set_coeff(long k, cplx v) { coeffs_[index_of(k)] = v; }

private:
    std::size_t index_of(long k) const;

    TimeGrid grid_;
    std::vector<cplx> coeffs_;
};

/// Throws GridMismatchError unless both signals share one grid.
void require_same_grid(const ComplexSignal& a, const ComplexSignal& b);

}  // namespace minphase
