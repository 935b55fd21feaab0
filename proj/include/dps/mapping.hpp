// Operator <-> phase-space mapping.
//
// The representative of an operator A is f(m,n) = (1/N) Tr[G(m,n) A]; the
// inverse decomposition is A = sum_{m,n} f(m,n) G(m,n).  Trace pairings and
// product/commutator composition stay entirely in phase space: with these
// 1/N-normalized representatives,
//   Tr[A B]   = N * sum f_A f_B
//   (AB)(m,n) = (1/N) sum_{uv,rs} f_A(u,v) f_B(r,s) K((m,n),(u,v),(r,s))
// where K is the triple-product kernel.
#pragma once

#include <vector>

#include "dps/core.hpp"
#include "dps/matrix.hpp"
#include "dps/operator_basis.hpp"

namespace dps {

// Complex-valued function on the phase-space grid, indexed by labels
// (m,n) in [-h,h]^2.  Representatives of Hermitian operators are real up
// to roundoff; that is an asserted property, not a type constraint.
struct PhaseSpaceFunction {
    Dimension dim;
    std::vector<cplx> values; // [(m+h)*N + (n+h)]

    PhaseSpaceFunction() = default;
    explicit PhaseSpaceFunction(Dimension d)
        : dim(d), values(static_cast<size_t>(d.N) * d.N) {}

    cplx& at(int m, int n) { return values[static_cast<size_t>(m + dim.h) * dim.N + (n + dim.h)]; }
    const cplx& at(int m, int n) const {
        return values[static_cast<size_t>(m + dim.h) * dim.N + (n + dim.h)];
    }
};

inline void check_same_dim(const PhaseSpaceFunction& f, const PhaseSpaceFunction& g) {
    if (f.dim.N != g.dim.N) throw shape_error("phase-space functions have different dimensions");
}

inline PhaseSpaceFunction map_operator(const ComplexMatrix& op, const BasisSet& basis) {
    if (op.dim.N != basis.dim.N) throw shape_error("operator dimension does not match basis");
    const Dimension dim = basis.dim;
    PhaseSpaceFunction f(dim);
    for (int m = -dim.h; m <= dim.h; ++m)
        for (int n = -dim.h; n <= dim.h; ++n)
            f.at(m, n) = trace_of_product(basis.at({m, n}), op) / static_cast<double>(dim.N);
    return f;
}

inline ComplexMatrix reconstruct(const PhaseSpaceFunction& f, const BasisSet& basis) {
    if (f.dim.N != basis.dim.N) throw shape_error("function dimension does not match basis");
    const Dimension dim = basis.dim;
    ComplexMatrix out(dim);
    for (int m = -dim.h; m <= dim.h; ++m) {
        for (int n = -dim.h; n <= dim.h; ++n) {
            const cplx w = f.at(m, n);
            const ComplexMatrix& g = basis.at({m, n});
            for (size_t i = 0; i < out.a.size(); ++i) out.a[i] += w * g.a[i];
        }
    }
    return out;
}

// Tr[A B] from the two representatives alone
inline cplx trace_pair(const PhaseSpaceFunction& f, const PhaseSpaceFunction& g) {
    check_same_dim(f, g);
    cplx acc = 0.0;
    for (size_t i = 0; i < f.values.size(); ++i) acc += f.values[i] * g.values[i];
    return acc * static_cast<double>(f.dim.N);
}

// Representative of the operator product A*B from the representatives of A
// and B.  The kernel difference table is built once per call; the
// composition itself is an N^6 contraction.
inline PhaseSpaceFunction product_representative(const PhaseSpaceFunction& f,
                                                 const PhaseSpaceFunction& g, Dimension dim) {
    check_same_dim(f, g);
    if (f.dim.N != dim.N) throw shape_error("function dimension does not match");
    const int h = dim.h;
    const TripleKernelTable kernel(dim);
    PhaseSpaceFunction out(dim);
    for (int m = -h; m <= h; ++m) {
        for (int n = -h; n <= h; ++n) {
            cplx acc = 0.0;
            for (int u = -h; u <= h; ++u)
                for (int v = -h; v <= h; ++v) {
                    const cplx fu = f.at(u, v);
                    if (fu == 0.0) continue;
                    for (int r = -h; r <= h; ++r)
                        for (int s = -h; s <= h; ++s)
                            acc += fu * g.at(r, s) * kernel.value({m, n}, {u, v}, {r, s});
                }
            out.at(m, n) = acc / static_cast<double>(dim.N);
        }
    }
    return out;
}

// Representative of the commutator [A, B]
inline PhaseSpaceFunction commutator_representative(const PhaseSpaceFunction& f,
                                                    const PhaseSpaceFunction& g, Dimension dim) {
    PhaseSpaceFunction ab = product_representative(f, g, dim);
    PhaseSpaceFunction ba = product_representative(g, f, dim);
    PhaseSpaceFunction out(dim);
    for (size_t i = 0; i < out.values.size(); ++i) out.values[i] = ab.values[i] - ba.values[i];
    return out;
}

} // namespace dps
