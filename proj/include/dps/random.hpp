// Seeded random states and operators for property verification.  The
// uniform and Gaussian variates are derived from mt19937_64 with fixed
// arithmetic (no library distributions), so identical seeds give identical
// sequences on every platform.
#pragma once

#include <cmath>
#include <random>

#include "dps/core.hpp"
#include "dps/matrix.hpp"

namespace dps {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // uniform in [0, 1)
    double uniform() { return (gen_() >> 11) * 0x1.0p-53; }

    // standard normal via Box-Muller
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(two_pi * u2);
        have_spare_ = true;
        return r * std::cos(two_pi * u2);
    }

    cplx complex_normal() {
        const double re = normal();
        const double im = normal();
        return {re, im};
    }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

inline StateVector random_state(Dimension dim, Rng& rng) {
    StateVector s(dim);
    for (int k = 0; k < dim.N; ++k) s[k] = rng.complex_normal();
    normalize(s);
    return s;
}

inline ComplexMatrix random_hermitian(Dimension dim, Rng& rng) {
    ComplexMatrix m(dim);
    for (int r = 0; r < dim.N; ++r) {
        m(r, r) = rng.normal();
        for (int c = r + 1; c < dim.N; ++c) {
            const cplx v = 0.5 * rng.complex_normal();
            m(r, c) = v;
            m(c, r) = std::conj(v);
        }
    }
    return m;
}

} // namespace dps
