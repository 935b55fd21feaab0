// Discrete Wigner function of pure states and density operators.
//
// For a pure state with amplitudes psi_k in the U eigenbasis,
//   rho_w(m,n) = (1/N^2) sum_{j,l,k} psi_k^* psi_{k-l}
//                e^{(2*pi*i/N)(j*k - j*l/2 - m*j - n*l)},
// with j,l summed over [-h,h], k over a full residue system and amplitude
// indices taken mod N.  Equivalently rho_w is the double Fourier transform
// of the characteristic grid
//   rho_s(j,l) = sum_k psi_k^* psi_{k-l} e^{(2*pi*i/N)(j*k - j*l/2)},
// which is what the FFT-accelerated path evaluates.  The direct path sums
// the defining series with the geometric j-sum precomputed; the two paths
// share no transform code and serve as mutual checks.
#pragma once

#include <cmath>
#include <vector>

#include "dps/core.hpp"
#include "dps/fft.hpp"
#include "dps/mapping.hpp"
#include "dps/matrix.hpp"
#include "dps/operator_basis.hpp"

namespace dps {

// Real N x N grid of Wigner values, labels (m,n) in [-h,h]^2.  For a
// normalized state the values sum to 1 and each lies in [-1, 1]; negative
// values are expected and never clipped.
struct WignerGrid {
    Dimension dim;
    std::vector<double> values; // [(m+h)*N + (n+h)]

    WignerGrid() = default;
    explicit WignerGrid(Dimension d) : dim(d), values(static_cast<size_t>(d.N) * d.N) {}

    double& at(int m, int n) { return values[static_cast<size_t>(m + dim.h) * dim.N + (n + dim.h)]; }
    double at(int m, int n) const {
        return values[static_cast<size_t>(m + dim.h) * dim.N + (n + dim.h)];
    }
};

// Complex pre-image of the Wigner grid under the double Fourier transform;
// every entry is bounded by 1 in modulus (Schwarz).
struct CharacteristicGrid {
    Dimension dim;
    std::vector<cplx> values; // [(j+h)*N + (l+h)]

    CharacteristicGrid() = default;
    explicit CharacteristicGrid(Dimension d) : dim(d), values(static_cast<size_t>(d.N) * d.N) {}

    cplx& at(int j, int l) { return values[static_cast<size_t>(j + dim.h) * dim.N + (l + dim.h)]; }
    const cplx& at(int j, int l) const {
        return values[static_cast<size_t>(j + dim.h) * dim.N + (l + dim.h)];
    }
};

namespace detail {

inline void require_normalized(const StateVector& state) {
    if (std::abs(norm(state) - 1.0) > 1e-8)
        throw normalization_error("state vector is not normalized");
}

} // namespace detail

inline CharacteristicGrid characteristic_grid(const StateVector& state) {
    detail::require_normalized(state);
    const Dimension dim = state.dim;
    const int N = dim.N, h = dim.h;
    const auto half = half_root_table(dim);
    CharacteristicGrid rs(dim);
    std::vector<cplx> a(N);
    for (int l = -h; l <= h; ++l) {
        for (int k = 0; k < N; ++k) a[k] = std::conj(state[k]) * state[mod_n(k - l, dim)];
        for (int j = -h; j <= h; ++j) {
            cplx acc = 0.0;
            for (int k = 0; k < N; ++k) {
                const long long t = static_cast<long long>(j) * (2 * k - l);
                acc += a[k] * half[static_cast<size_t>(((t % (2 * N)) + 2 * N) % (2 * N))];
            }
            rs.at(j, l) = acc;
        }
    }
    return rs;
}

// Direct evaluation of the defining triple sum.  The geometric sum over j,
//   S(x) = sum_{j=-h}^{h} e^{i*pi*j*x/N}  (x integer, period 2N, real),
// is tabulated once; the remaining double sum is evaluated point by point.
inline WignerGrid wigner_pure(const StateVector& state) {
    detail::require_normalized(state);
    const Dimension dim = state.dim;
    const int N = dim.N, h = dim.h;

    // S[x mod 2N] = 1 + 2 sum_{j>0} cos(pi*j*x/N)
    std::vector<double> S(2 * N);
    for (int x = 0; x < 2 * N; ++x) {
        double s = 1.0;
        for (int j = 1; j <= h; ++j) s += 2.0 * std::cos(pi * j * x / N);
        S[x] = s;
    }

    // partial(m,l) = sum_k psi_k^* psi_{k-l} S(2(k-m) - l)
    std::vector<cplx> partial(static_cast<size_t>(N) * N);
    std::vector<cplx> a(N);
    for (int l = -h; l <= h; ++l) {
        for (int k = 0; k < N; ++k) a[k] = std::conj(state[k]) * state[mod_n(k - l, dim)];
        for (int m = -h; m <= h; ++m) {
            cplx acc = 0.0;
            for (int k = 0; k < N; ++k)
                acc += a[k] * S[static_cast<size_t>((((2 * (k - m) - l) % (2 * N)) + 2 * N) % (2 * N))];
            partial[static_cast<size_t>(m + h) * N + (l + h)] = acc;
        }
    }

    const auto w = root_table(dim);
    WignerGrid out(dim);
    for (int m = -h; m <= h; ++m) {
        for (int n = -h; n <= h; ++n) {
            cplx acc = 0.0;
            for (int l = -h; l <= h; ++l)
                acc += partial[static_cast<size_t>(m + h) * N + (l + h)] *
                       std::conj(w[mod_n(static_cast<long long>(n) * l, dim)]);
            out.at(m, n) = acc.real() / (static_cast<double>(N) * N);
        }
    }
    return out;
}

// FFT-accelerated path: build the characteristic grid row by row with
// length-N DFTs, then one 2-D DFT.  Agrees with wigner_pure to roundoff.
inline WignerGrid wigner_fast(const StateVector& state) {
    detail::require_normalized(state);
    const Dimension dim = state.dim;
    const int N = dim.N, h = dim.h;
    const auto half = half_root_table(dim);

    // rows indexed by l mod N: row l holds a_l(k) = psi_k^* psi_{k-l}
    std::vector<cplx> rows(static_cast<size_t>(N) * N);
    for (int l = -h; l <= h; ++l) {
        const size_t base = static_cast<size_t>(mod_n(l, dim)) * N;
        for (int k = 0; k < N; ++k)
            rows[base + k] = std::conj(state[k]) * state[mod_n(k - l, dim)];
    }
    // A_l[j mod N] = sum_k a_l(k) e^{+2*pi*i*j*k/N}
    fft::transform_rows(rows, N, FFTW_BACKWARD);

    // rho_s(j,l) = A_l[j mod N] * e^{-i*pi*j*l/N}; the half-integer phase
    // depends on the actual j in [-h,h], not on j mod N
    std::vector<cplx> rs(static_cast<size_t>(N) * N); // [j mod N][l mod N]
    for (int j = -h; j <= h; ++j) {
        for (int l = -h; l <= h; ++l) {
            const long long t = -static_cast<long long>(j) * l;
            rs[static_cast<size_t>(mod_n(j, dim)) * N + mod_n(l, dim)] =
                rows[static_cast<size_t>(mod_n(l, dim)) * N + mod_n(j, dim)] *
                half[static_cast<size_t>(((t % (2 * N)) + 2 * N) % (2 * N))];
        }
    }

    fft::transform_2d_forward(rs, N);

    WignerGrid out(dim);
    for (int m = -h; m <= h; ++m)
        for (int n = -h; n <= h; ++n)
            out.at(m, n) =
                rs[static_cast<size_t>(mod_n(m, dim)) * N + mod_n(n, dim)].real() /
                (static_cast<double>(N) * N);
    return out;
}

// Wigner grid of a density operator: real part of (1/N) Tr[G(m,n) rho].
// Benign numerical asymmetry (residual < 1e-8) is symmetrized away; larger
// asymmetry or a trace away from 1 is rejected.
inline WignerGrid wigner_density(const ComplexMatrix& rho, const BasisSet& basis) {
    if (rho.dim.N != basis.dim.N) throw shape_error("density dimension does not match basis");
    if (hermiticity_residual(rho) > 1e-8)
        throw density_error("density operator is not Hermitian");
    if (std::abs(trace(rho) - 1.0) > 1e-8)
        throw density_error("density operator trace is not 1");
    ComplexMatrix sym(rho.dim);
    for (int r = 0; r < rho.n(); ++r)
        for (int c = 0; c < rho.n(); ++c)
            sym(r, c) = 0.5 * (rho(r, c) + std::conj(rho(c, r)));
    const PhaseSpaceFunction f = map_operator(sym, basis);
    WignerGrid out(basis.dim);
    for (size_t i = 0; i < f.values.size(); ++i) out.values[i] = f.values[i].real();
    return out;
}

// N * sum of squared grid values: 1 for pure states, Tr[rho^2] in general
inline double purity_sum(const WignerGrid& w) {
    double acc = 0.0;
    for (double v : w.values) acc += v * v;
    return acc * w.dim.N;
}

// number of sites with |value| above the noise threshold; at least N for
// any pure state
inline int support_count(const WignerGrid& w, double threshold = 1e-10) {
    if (threshold <= 0.0) throw parameter_error("support threshold must be positive");
    int count = 0;
    for (double v : w.values)
        if (std::abs(v) > threshold) ++count;
    return count;
}

// marginal over n: probabilities in the U eigenbasis, indexed by m in [-h,h]
inline std::vector<double> marginal_u(const WignerGrid& w) {
    std::vector<double> out(w.dim.N, 0.0);
    for (int m = -w.dim.h; m <= w.dim.h; ++m)
        for (int n = -w.dim.h; n <= w.dim.h; ++n) out[m + w.dim.h] += w.at(m, n);
    return out;
}

// marginal over m: probabilities in the V eigenbasis, indexed by n in [-h,h]
inline std::vector<double> marginal_v(const WignerGrid& w) {
    std::vector<double> out(w.dim.N, 0.0);
    for (int n = -w.dim.h; n <= w.dim.h; ++n)
        for (int m = -w.dim.h; m <= w.dim.h; ++m) out[n + w.dim.h] += w.at(m, n);
    return out;
}

} // namespace dps
