// Dense square complex matrices and state vectors over an odd-dimensional
// space.  Deliberately small: the toolkit only needs multiply, adjoint,
// trace and norms at desk scale, so there is no BLAS dependency.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "dps/core.hpp"

namespace dps {

struct ComplexMatrix {
    Dimension dim;
    std::vector<cplx> a; // row-major, N x N

    ComplexMatrix() = default;
    explicit ComplexMatrix(Dimension d) : dim(d), a(static_cast<size_t>(d.N) * d.N) {}

    cplx& operator()(int r, int c) { return a[static_cast<size_t>(r) * dim.N + c]; }
    const cplx& operator()(int r, int c) const { return a[static_cast<size_t>(r) * dim.N + c]; }

    int n() const { return dim.N; }
};

inline ComplexMatrix identity(Dimension dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim.N; ++i) m(i, i) = 1.0;
    return m;
}

inline void check_same_dim(const ComplexMatrix& x, const ComplexMatrix& y) {
    if (x.dim.N != y.dim.N) throw shape_error("matrix dimensions differ");
}

inline ComplexMatrix multiply(const ComplexMatrix& x, const ComplexMatrix& y) {
    check_same_dim(x, y);
    const int n = x.n();
    ComplexMatrix out(x.dim);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const cplx xik = x(i, k);
            if (xik == 0.0) continue;
            for (int j = 0; j < n; ++j) out(i, j) += xik * y(k, j);
        }
    }
    return out;
}

inline ComplexMatrix adjoint(const ComplexMatrix& x) {
    ComplexMatrix out(x.dim);
    for (int i = 0; i < x.n(); ++i)
        for (int j = 0; j < x.n(); ++j) out(j, i) = std::conj(x(i, j));
    return out;
}

inline cplx trace(const ComplexMatrix& x) {
    cplx t = 0.0;
    for (int i = 0; i < x.n(); ++i) t += x(i, i);
    return t;
}

// Tr[x * y] without forming the product
inline cplx trace_of_product(const ComplexMatrix& x, const ComplexMatrix& y) {
    check_same_dim(x, y);
    cplx t = 0.0;
    for (int r = 0; r < x.n(); ++r)
        for (int c = 0; c < x.n(); ++c) t += x(r, c) * y(c, r);
    return t;
}

inline ComplexMatrix add(const ComplexMatrix& x, const ComplexMatrix& y) {
    check_same_dim(x, y);
    ComplexMatrix out = x;
    for (size_t i = 0; i < out.a.size(); ++i) out.a[i] += y.a[i];
    return out;
}

inline ComplexMatrix subtract(const ComplexMatrix& x, const ComplexMatrix& y) {
    check_same_dim(x, y);
    ComplexMatrix out = x;
    for (size_t i = 0; i < out.a.size(); ++i) out.a[i] -= y.a[i];
    return out;
}

inline ComplexMatrix scale(const ComplexMatrix& x, cplx s) {
    ComplexMatrix out = x;
    for (auto& v : out.a) v *= s;
    return out;
}

inline double max_abs(const ComplexMatrix& x) {
    double m = 0.0;
    for (const auto& v : x.a) m = std::max(m, std::abs(v));
    return m;
}

inline double max_abs_diff(const ComplexMatrix& x, const ComplexMatrix& y) {
    check_same_dim(x, y);
    double m = 0.0;
    for (size_t i = 0; i < x.a.size(); ++i) m = std::max(m, std::abs(x.a[i] - y.a[i]));
    return m;
}

// max entrywise |x - x^dagger|
inline double hermiticity_residual(const ComplexMatrix& x) {
    double m = 0.0;
    for (int r = 0; r < x.n(); ++r)
        for (int c = 0; c <= r; ++c)
            m = std::max(m, std::abs(x(r, c) - std::conj(x(c, r))));
    return m;
}

// Amplitudes psi_k, k = 0..N-1, in the eigenbasis of the diagonal Schwinger
// operator.  Unit norm is a caller-side contract checked where it matters.
struct StateVector {
    Dimension dim;
    std::vector<cplx> amp;

    StateVector() = default;
    explicit StateVector(Dimension d) : dim(d), amp(d.N) {}

    cplx& operator[](int k) { return amp[static_cast<size_t>(k)]; }
    const cplx& operator[](int k) const { return amp[static_cast<size_t>(k)]; }
};

inline double norm(const StateVector& s) {
    double n2 = 0.0;
    for (const auto& v : s.amp) n2 += std::norm(v);
    return std::sqrt(n2);
}

inline void normalize(StateVector& s) {
    const double n = norm(s);
    if (n == 0.0) throw normalization_error("cannot normalize the zero vector");
    for (auto& v : s.amp) v /= n;
}

inline ComplexMatrix outer_product(const StateVector& s) {
    ComplexMatrix out(s.dim);
    for (int r = 0; r < s.dim.N; ++r)
        for (int c = 0; c < s.dim.N; ++c) out(r, c) = s[r] * std::conj(s[c]);
    return out;
}

inline StateVector apply(const ComplexMatrix& m, const StateVector& s) {
    if (m.dim.N != s.dim.N) throw shape_error("matrix/state dimensions differ");
    StateVector out(s.dim);
    for (int r = 0; r < m.n(); ++r) {
        cplx acc = 0.0;
        for (int c = 0; c < m.n(); ++c) acc += m(r, c) * s[c];
        out[r] = acc;
    }
    return out;
}

} // namespace dps
