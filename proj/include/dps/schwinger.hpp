// The Schwinger unitary pair (U, V) on an odd N-dimensional space and the
// finite Fourier transform connecting their eigenbases.
//
// Conventions used throughout the toolkit:
//   U = diag(w^k), w = exp(2*pi*i/N), eigenvector |u_k> = e_k at index k;
//   V |u_k> = |u_{k+1 mod N}>  (cyclic shift), so U V = w V U;
//   F[j][k] = w^{-jk} / sqrt(N); column j of F is the V eigenvector of
//   eigenvalue w^j, and F^dagger V F = diag(w^j).
#pragma once

#include "dps/core.hpp"
#include "dps/matrix.hpp"

namespace dps {

// table of the N-th roots of unity: root_n(dim)[r] = exp(2*pi*i*r/N)
inline std::vector<cplx> root_table(Dimension dim) {
    std::vector<cplx> t(dim.N);
    for (int r = 0; r < dim.N; ++r)
        t[r] = std::polar(1.0, two_pi * r / dim.N);
    return t;
}

// table of the 2N-th roots: half_root_table(dim)[s] = exp(i*pi*s/N),
// indexed mod 2N; covers the half-integer phases of the basis sums
inline std::vector<cplx> half_root_table(Dimension dim) {
    std::vector<cplx> t(2 * dim.N);
    for (int s = 0; s < 2 * dim.N; ++s)
        t[s] = std::polar(1.0, pi * s / dim.N);
    return t;
}

inline ComplexMatrix build_u(Dimension dim) {
    ComplexMatrix u(dim);
    const auto w = root_table(dim);
    for (int k = 0; k < dim.N; ++k) u(k, k) = w[k];
    return u;
}

inline ComplexMatrix build_v(Dimension dim) {
    ComplexMatrix v(dim);
    for (int k = 0; k < dim.N; ++k) v((k + 1) % dim.N, k) = 1.0;
    return v;
}

inline ComplexMatrix finite_fourier(Dimension dim) {
    ComplexMatrix f(dim);
    const auto w = root_table(dim);
    const double s = 1.0 / std::sqrt(static_cast<double>(dim.N));
    for (int j = 0; j < dim.N; ++j)
        for (int k = 0; k < dim.N; ++k)
            f(j, k) = std::conj(w[mod_n(static_cast<long long>(j) * k, dim)]) * s;
    return f;
}

// V eigenvector of eigenvalue w^j: amplitudes w^{-jk}/sqrt(N) (column j of F)
inline StateVector v_eigenvector(Dimension dim, int j) {
    StateVector s(dim);
    const auto w = root_table(dim);
    const double c = 1.0 / std::sqrt(static_cast<double>(dim.N));
    for (int k = 0; k < dim.N; ++k)
        s[k] = std::conj(w[mod_n(static_cast<long long>(j) * k, dim)]) * c;
    return s;
}

// U eigenvector |u_k>: the computational basis vector at index k mod N
inline StateVector u_eigenvector(Dimension dim, int k) {
    StateVector s(dim);
    s[mod_n(k, dim)] = 1.0;
    return s;
}

// sum_j f(j) |v_j><v_j| over the label window j in [-h, h]; the result is
// circulant, so only the N distinct diagonals are computed
inline ComplexMatrix v_spectral_matrix(Dimension dim, const std::vector<cplx>& eigenvalues) {
    if (static_cast<int>(eigenvalues.size()) != dim.N)
        throw shape_error("eigenvalue list does not match dimension");
    const auto w = root_table(dim);
    std::vector<cplx> diag_sum(dim.N, 0.0); // entry d: (1/N) sum_j f(j) w^{jd}
    for (int j = 0; j < dim.N; ++j)
        for (int d = 0; d < dim.N; ++d)
            diag_sum[d] += eigenvalues[j] * w[mod_n(static_cast<long long>(j) * d, dim)];
    for (auto& v : diag_sum) v /= static_cast<double>(dim.N);
    ComplexMatrix out(dim);
    for (int r = 0; r < dim.N; ++r)
        for (int c = 0; c < dim.N; ++c)
            out(r, c) = diag_sum[mod_n(c - r, dim)];
    return out;
}

// sum_k f(k) |u_k><u_k| (a diagonal matrix)
inline ComplexMatrix u_spectral_matrix(Dimension dim, const std::vector<cplx>& eigenvalues) {
    if (static_cast<int>(eigenvalues.size()) != dim.N)
        throw shape_error("eigenvalue list does not match dimension");
    ComplexMatrix out(dim);
    for (int k = 0; k < dim.N; ++k) out(k, k) = eigenvalues[k];
    return out;
}

} // namespace dps
