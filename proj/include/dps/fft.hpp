// Thin FFTW wrapper.  Plan creation is serialized behind a mutex (FFTW
// planning is not thread-safe; execution of distinct plans is).  Plans use
// FFTW_ESTIMATE so results are deterministic for a given size.
#pragma once

#include <complex>
#include <mutex>
#include <vector>

#include <fftw3.h>

#include "dps/core.hpp"

namespace dps::fft {

inline std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

inline fftw_complex* as_fftw(std::vector<cplx>& v) {
    return reinterpret_cast<fftw_complex*>(v.data());
}

// In-place DFT of each length-n row of an n x n row-major array.
// sign = FFTW_FORWARD gives sum_k x_k e^{-2*pi*i*j*k/n}; FFTW_BACKWARD the
// conjugate phase.  Unnormalized, like FFTW itself.
inline void transform_rows(std::vector<cplx>& data, int n, int sign) {
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        plan = fftw_plan_many_dft(1, &n, n, as_fftw(data), nullptr, 1, n,
                                  as_fftw(data), nullptr, 1, n, sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(plan);
}

// In-place 2-D forward DFT of an n x n row-major array:
//   out[m][l] = sum_{j,k} in[j][k] e^{-2*pi*i*(m*j + l*k)/n}
inline void transform_2d_forward(std::vector<cplx>& data, int n) {
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        plan = fftw_plan_dft_2d(n, n, as_fftw(data), as_fftw(data), FFTW_FORWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(plan);
}

} // namespace dps::fft
