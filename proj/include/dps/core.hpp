// Core domain types for the discrete phase-space toolkit: the odd Hilbert
// space dimension, index arithmetic on the symmetric label window [-h, h],
// and the integer modular phase that keeps basis sums mod-N periodic.
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace dps {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct dimension_error : error { using error::error; };
struct label_error : error { using error::error; };
struct shape_error : error { using error::error; };
struct normalization_error : error { using error::error; };
struct density_error : error { using error::error; };
struct scaling_error : error { using error::error; };
struct parameter_error : error { using error::error; };
struct resolution_error : error { using error::error; };
struct embedding_error : error { using error::error; };
struct reference_angle_error : error { using error::error; };
struct input_error : error { using error::error; };

// Odd Hilbert-space dimension N with half-width h = (N-1)/2.  Labels of
// phase-space points and summation indices live in [-h, h]; N = 1 is the
// legal degenerate case.  Even or non-positive N is rejected outright.
struct Dimension {
    int N = 1;
    int h = 0;

    Dimension() = default;
    explicit Dimension(int n) : N(n), h((n - 1) / 2) {
        if (n < 1 || n % 2 == 0)
            throw dimension_error("dimension must be an odd positive integer, got " +
                                  std::to_string(n));
    }

    // scaling parameter: epsilon^2 * N = 2*pi
    double epsilon() const { return std::sqrt(two_pi / N); }

    bool operator==(const Dimension&) const = default;
};

// floored division (quotient toward -infinity)
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    long long r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// canonical representative of i mod N in [0, N-1]
inline int mod_n(long long i, const Dimension& dim) {
    long long r = i % dim.N;
    return static_cast<int>(r < 0 ? r + dim.N : r);
}

// canonical representative of i mod N in [-h, h]
inline int wrap_label(long long i, const Dimension& dim) {
    return mod_n(i + dim.h, dim) - dim.h;
}

// mod-N Kronecker delta: true iff a == b (mod N)
inline bool mod_delta(long long a, long long b, const Dimension& dim) {
    return mod_n(a - b, dim) == 0;
}

// Integer-valued modular phase
//   phi(m, n; N) = N*[m/N]*[n/N] - m*[n/N] - n*[m/N]
// with [.] the floored integer part.  It vanishes identically on
// [0, N-1]^2 and books the sign picked up when summation indices are
// folded back into the canonical window.
inline long long modular_phase(long long m, long long n, const Dimension& dim) {
    const long long im = floor_div(m, dim.N);
    const long long in = floor_div(n, dim.N);
    return static_cast<long long>(dim.N) * im * in - m * in - n * im;
}

} // namespace dps
