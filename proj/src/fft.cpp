#include "fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace minphase::detail {

namespace {
std::mutex plan_mutex;  // FFTW planning is not thread-safe
}

void fft_inplace(std::vector<std::complex<double>>& data, int sign) {
    if (data.empty()) {
        throw std::invalid_argument("fft_inplace: empty buffer");
    }
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        plan = fftw_plan_dft_1d(static_cast<int>(data.size()), ptr, ptr,
                                sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD, FFTW_ESTIMATE);
    }
    if (plan == nullptr) {
        throw std::runtime_error("fft_inplace: fftw_plan_dft_1d failed");
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        fftw_destroy_plan(plan);
    }
}

}  // namespace minphase::detail
