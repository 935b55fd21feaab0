// Phase-point operator basis on the N x N integer grid.
//
// Each basis element is
//   G(j,l) = (1/N) sum_{m,n=-h}^{h} U^m V^n e^{-i*pi*m*n/N}
//            e^{-2*pi*i*(m*j + n*l)/N} e^{i*pi*phi(m+h, n+h; N)}
// with the modular phase phi vanishing on the in-range summation window.
// The half-lattice factor e^{-i*pi*m*n/N} carries the sign that makes every
// element self-adjoint under the commutation convention U V = w V U.  The
// N^2 elements form a complete trace-orthogonal set: Tr G = 1 and
// Tr[G^dag(m,n) G(r,s)] = N when (m,n) = (r,s) mod N, else 0.
#pragma once

#include <vector>

#include "dps/core.hpp"
#include "dps/matrix.hpp"
#include "dps/schwinger.hpp"

namespace dps {

struct PhasePointLabel {
    int j = 0;
    int l = 0;

    bool operator==(const PhasePointLabel&) const = default;
};

inline bool in_range(PhasePointLabel lab, Dimension dim) {
    return lab.j >= -dim.h && lab.j <= dim.h && lab.l >= -dim.h && lab.l <= dim.h;
}

inline void require_in_range(PhasePointLabel lab, Dimension dim) {
    if (!in_range(lab, dim))
        throw label_error("phase-point label (" + std::to_string(lab.j) + "," +
                          std::to_string(lab.l) + ") outside [-h,h] for N=" +
                          std::to_string(dim.N));
}

// Builds one basis element.  V^n is a cyclic shift, so for a fixed matrix
// entry (r,c) only the single summand n = r - c (mod N, folded to [-h,h])
// survives and the double operator sum collapses to a sum over m.
inline ComplexMatrix build_g(PhasePointLabel lab, Dimension dim) {
    require_in_range(lab, dim);
    const int N = dim.N, h = dim.h;
    const auto half = half_root_table(dim); // half[s mod 2N] = e^{i*pi*s/N}
    ComplexMatrix g(dim);
    for (int r = 0; r < N; ++r) {
        for (int c = 0; c < N; ++c) {
            const int n = wrap_label(r - c, dim);
            cplx acc = 0.0;
            for (int m = -h; m <= h; ++m) {
                // exponent in units of pi/N:
                //   2*m*r  (from U^m acting on row r)
                //   - m*n  (self-adjointness phase)
                //   - 2*(m*j + n*l)
                const long long t = static_cast<long long>(m) * (2 * r - n - 2 * lab.j) -
                                    2 * static_cast<long long>(n) * lab.l;
                acc += half[static_cast<size_t>(((t % (2 * N)) + 2 * N) % (2 * N))];
            }
            g(r, c) = acc / static_cast<double>(N);
        }
    }
    return g;
}

// All N^2 elements, indexed by label with j as the major axis.
struct BasisSet {
    Dimension dim;
    std::vector<ComplexMatrix> elements; // [(j+h)*N + (l+h)]

    const ComplexMatrix& at(PhasePointLabel lab) const {
        require_in_range(lab, dim);
        return elements[static_cast<size_t>(lab.j + dim.h) * dim.N + (lab.l + dim.h)];
    }
};

inline BasisSet build_all(Dimension dim) {
    BasisSet b{dim, {}};
    b.elements.reserve(static_cast<size_t>(dim.N) * dim.N);
    for (int j = -dim.h; j <= dim.h; ++j)
        for (int l = -dim.h; l <= dim.h; ++l)
            b.elements.push_back(build_g({j, l}, dim));
    return b;
}

namespace detail {

// Sign picked up when the summation indices a+c and b+d are folded back
// into [-h, h].  alpha and beta count the folds (each is -1, 0 or +1); a
// fold of one index flips the half-lattice phase of the other unless the
// two folds cancel jointly, which the alpha*beta term books.
inline double kernel_fold_sign(int ac, int bd, Dimension dim) {
    const int alpha = static_cast<int>(floor_div(ac + dim.h, dim.N));
    const int beta = static_cast<int>(floor_div(bd + dim.h, dim.N));
    const long long parity = static_cast<long long>(alpha) * bd +
                             static_cast<long long>(beta) * ac +
                             static_cast<long long>(alpha) * beta;
    return (parity % 2 == 0) ? 1.0 : -1.0;
}

// Quadruple sum shared by the per-triple kernel and the difference table.
// Arguments are the label differences (m-u, n-v, m-r, n-s); only their
// values mod N matter.
inline cplx kernel_difference_sum(long long dmu, long long dnv, long long dmr, long long dns,
                                  Dimension dim, const std::vector<cplx>& half) {
    const int N = dim.N, h = dim.h;
    cplx total = 0.0;
    for (int a = -h; a <= h; ++a) {
        for (int b = -h; b <= h; ++b) {
            for (int c = -h; c <= h; ++c) {
                const long long base = static_cast<long long>(a) * dmu * 2 +
                                       static_cast<long long>(b) * dnv * 2 +
                                       static_cast<long long>(c) * dmr * 2 -
                                       static_cast<long long>(b) * c;
                for (int d = -h; d <= h; ++d) {
                    // exponent in units of pi/N: (a*d - b*c) + 2*(a*dmu + b*dnv + c*dmr + d*dns)
                    const long long t = base + static_cast<long long>(a) * d +
                                        2 * static_cast<long long>(d) * dns;
                    const double sgn = kernel_fold_sign(a + c, b + d, dim);
                    total += sgn * half[static_cast<size_t>(((t % (2 * N)) + 2 * N) % (2 * N))];
                }
            }
        }
    }
    return total / static_cast<double>(static_cast<long long>(N) * N);
}

} // namespace detail

// Tr[G^dag(m,n) G(u,v) G(r,s)] evaluated as a closed quadruple sum over the
// label window; the workhorse for composing phase-space representatives of
// operator products.
inline cplx triple_product_kernel(PhasePointLabel mn, PhasePointLabel uv, PhasePointLabel rs,
                                  Dimension dim) {
    require_in_range(mn, dim);
    require_in_range(uv, dim);
    require_in_range(rs, dim);
    const auto half = half_root_table(dim);
    return detail::kernel_difference_sum(mn.j - uv.j, mn.l - uv.l, mn.j - rs.j, mn.l - rs.l,
                                         dim, half);
}

// The kernel depends on the three labels only through pairwise differences
// mod N, so all N^6 triples collapse to an N^4 table.  Used by the product
// composition, where every entry is hit many times.
struct TripleKernelTable {
    Dimension dim;
    std::vector<cplx> values; // [((dmu*N + dnv)*N + dmr)*N + dns], each index in [0, N)

    explicit TripleKernelTable(Dimension d) : dim(d) {
        const int N = dim.N;
        const auto half = half_root_table(dim);
        values.resize(static_cast<size_t>(N) * N * N * N);
        for (int dmu = 0; dmu < N; ++dmu)
            for (int dnv = 0; dnv < N; ++dnv)
                for (int dmr = 0; dmr < N; ++dmr)
                    for (int dns = 0; dns < N; ++dns)
                        values[index(dmu, dnv, dmr, dns)] =
                            detail::kernel_difference_sum(dmu, dnv, dmr, dns, dim, half);
    }

    size_t index(int dmu, int dnv, int dmr, int dns) const {
        const int N = dim.N;
        return ((static_cast<size_t>(dmu) * N + dnv) * N + dmr) * N + dns;
    }

    cplx value(PhasePointLabel mn, PhasePointLabel uv, PhasePointLabel rs) const {
        return values[index(mod_n(mn.j - uv.j, dim), mod_n(mn.l - uv.l, dim),
                            mod_n(mn.j - rs.j, dim), mod_n(mn.l - rs.l, dim))];
    }
};

} // namespace dps
