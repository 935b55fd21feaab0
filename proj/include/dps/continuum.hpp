// Scaled operator pairs and continuum-limit studies.
//
// Cartesian side: with eps = sqrt(2*pi/N) and a free exponent delta in
// (0,2), the Hermitian pair
//   P = sum_j j eps^delta p0 |v_j><v_j|,   Q = sum_j j eps^(2-delta) q0 |u_j><u_j|
// satisfies V = exp[i eps^(2-delta) P / p0] and U = exp[i eps^delta Q / q0]
// exactly at every N.  As N grows, the rescaled discrete Wigner function of
// a sampled Gaussian approaches the continuum Weyl-Wigner Gaussian on the
// physical grid q = j*dq, p = l*dp.
//
// Angular side: delta = 0 keeps the V-side eigenvalues integer-spaced
// (angular momentum) while the U-side eigenvalues become angles
// theta = eps^2 * j in (-pi, pi); the same rescaling then approaches the
// angle/angular-momentum Wigner kernel, and with a reference angle the
// number/phase operator representatives come out exactly linear in the
// grid labels.
#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "dps/core.hpp"
#include "dps/mapping.hpp"
#include "dps/matrix.hpp"
#include "dps/operator_basis.hpp"
#include "dps/quadrature.hpp"
#include "dps/schwinger.hpp"
#include "dps/wigner.hpp"

namespace dps {

struct CartesianScaling {
    Dimension dim;
    double delta = 1.0;
    double p0 = 1.0;
    double q0 = 1.0;

    CartesianScaling(Dimension d, double delta_, double p0_ = 1.0, double q0_ = 1.0)
        : dim(d), delta(delta_), p0(p0_), q0(q0_) {
        if (!(delta > 0.0 && delta < 2.0))
            throw scaling_error("delta must lie in the open interval (0,2)");
        if (!(p0 > 0.0) || !(q0 > 0.0))
            throw scaling_error("p0 and q0 must be positive");
    }

    double dq() const { return q0 * std::pow(dim.epsilon(), 2.0 - delta); }
    double dp() const { return p0 * std::pow(dim.epsilon(), delta); }
};

struct AngularScaling {
    Dimension dim;
    double theta0 = 1.0;
    double m0 = 1.0;

    explicit AngularScaling(Dimension d, double theta0_ = 1.0, double m0_ = 1.0)
        : dim(d), theta0(theta0_), m0(m0_) {
        if (!(theta0 > 0.0) || !(m0 > 0.0))
            throw scaling_error("theta0 and m0 must be positive");
    }

    double dtheta() const { return theta0 * two_pi / dim.N; }
};

struct ConvergenceReport {
    std::vector<Dimension> dims;
    std::vector<double> errors;
    std::string norm = "max-abs";
};

// (P, Q) with eigenvalue ladders j*dp on the V eigenbasis and j*dq on the
// U eigenbasis, j in [-h, h]
inline std::pair<ComplexMatrix, ComplexMatrix> build_pq(const CartesianScaling& scaling) {
    const Dimension dim = scaling.dim;
    std::vector<cplx> pvals(dim.N), qvals(dim.N);
    for (int k = 0; k < dim.N; ++k) {
        pvals[k] = wrap_label(k, dim) * scaling.dp();
        qvals[k] = wrap_label(k, dim) * scaling.dq();
    }
    return {v_spectral_matrix(dim, pvals), u_spectral_matrix(dim, qvals)};
}

// (M, Theta): integer-spaced angular momentum on the V side, angles
// theta0 * eps^2 * j on the U side
inline std::pair<ComplexMatrix, ComplexMatrix> build_m_theta(const AngularScaling& scaling) {
    const Dimension dim = scaling.dim;
    std::vector<cplx> mvals(dim.N), tvals(dim.N);
    for (int k = 0; k < dim.N; ++k) {
        mvals[k] = wrap_label(k, dim) * scaling.m0;
        tvals[k] = wrap_label(k, dim) * scaling.dtheta();
    }
    return {v_spectral_matrix(dim, mvals), u_spectral_matrix(dim, tvals)};
}

// Weyl-Wigner function of the unit Gaussian of width sigma (hbar = 1):
//   W(q,p) = (1/pi) exp(-q^2/sigma^2 - sigma^2 p^2)
inline double continuum_wigner_cartesian(double q, double p, double sigma) {
    if (!(sigma > 0.0)) throw parameter_error("sigma must be positive");
    return std::exp(-q * q / (sigma * sigma) - sigma * sigma * p * p) / pi;
}

// Normalized samples of the width-sigma Gaussian on the position grid
inline StateVector gaussian_state(Dimension dim, double sigma, double delta, double q0 = 1.0) {
    if (!(sigma > 0.0)) throw parameter_error("sigma must be positive");
    const CartesianScaling scaling(dim, delta, 1.0, q0);
    StateVector s(dim);
    for (int k = 0; k < dim.N; ++k) {
        const double q = wrap_label(k, dim) * scaling.dq();
        s[k] = std::exp(-q * q / (2.0 * sigma * sigma));
    }
    normalize(s);
    return s;
}

namespace detail {

// max |W_N - W| over the centered square |m|,|n| <= h/2, which keeps the
// comparison away from the periodic wrap-around of the discrete grid
inline double central_half_error(const WignerGrid& grid, double dq, double dp, double sigma) {
    const Dimension dim = grid.dim;
    const double cell = dq * dp; // phase-space cell area
    const int half = dim.h / 2;
    double err = 0.0;
    for (int m = -half; m <= half; ++m)
        for (int n = -half; n <= half; ++n) {
            const double w_n = grid.at(m, n) / cell;
            const double ref = continuum_wigner_cartesian(m * dq, n * dp, sigma);
            err = std::max(err, std::abs(w_n - ref));
        }
    return err;
}

} // namespace detail

// Per-dimension max error of the rescaled discrete Wigner function of the
// sampled Gaussian against the continuum Weyl-Wigner Gaussian.
inline ConvergenceReport cartesian_convergence(double sigma, const std::vector<Dimension>& dims,
                                               double delta) {
    ConvergenceReport report;
    report.norm = "max-abs";
    for (const Dimension& dim : dims) {
        const CartesianScaling scaling(dim, delta);
        if (sigma < scaling.dq() || sigma > dim.N * scaling.dq() / 8.0)
            throw resolution_error("sigma outside the resolvable window [dq, N*dq/8] at N=" +
                                   std::to_string(dim.N));
        const StateVector state = gaussian_state(dim, sigma, delta);
        const WignerGrid grid = wigner_fast(state);
        report.dims.push_back(dim);
        report.errors.push_back(
            detail::central_half_error(grid, scaling.dq(), scaling.dp(), sigma));
    }
    return report;
}

// Short centered list of angular-momentum amplitudes c_m, m in [-M, M]
struct AngularCoefficients {
    std::vector<cplx> c; // index m + M, odd length 2M+1

    int m_max() const { return (static_cast<int>(c.size()) - 1) / 2; }
    cplx at(int m) const { return c[static_cast<size_t>(m + m_max())]; }
};

inline AngularCoefficients make_angular_coefficients(std::vector<cplx> c) {
    if (c.empty() || c.size() % 2 == 0)
        throw parameter_error("angular coefficient list must have odd length 2*M+1");
    double n2 = 0.0;
    for (const auto& v : c) n2 += std::norm(v);
    if (std::abs(std::sqrt(n2) - 1.0) > 1e-6)
        throw parameter_error("angular coefficients must have unit norm");
    const double n = std::sqrt(n2);
    for (auto& v : c) v /= n;
    return {std::move(c)};
}

// The finite superposition sum_m c_m |v_m> expressed in the U eigenbasis
inline StateVector angular_superposition_state(Dimension dim, const AngularCoefficients& coeffs) {
    if (coeffs.m_max() >= dim.h)
        throw embedding_error("angular momentum cutoff must be below h = (N-1)/2");
    StateVector s(dim);
    for (int m = -coeffs.m_max(); m <= coeffs.m_max(); ++m) {
        const StateVector vm = v_eigenvector(dim, mod_n(m, dim));
        for (int k = 0; k < dim.N; ++k) s[k] += coeffs.at(m) * vm[k];
    }
    normalize(s);
    return s;
}

// Angle/angular-momentum Wigner function of the superposition, evaluated
// by quadrature:
//   W(theta, l) = (1/2pi) Int_{-pi}^{pi} psi(theta - a/2) psi*(theta + a/2) e^{i l a} da
// with psi(x) = sum_m c_m e^{imx} / sqrt(2pi).
inline double angular_wigner_reference(const AngularCoefficients& coeffs, double theta, int l) {
    static const GaussLegendreRule rule = gauss_legendre(64);
    const auto psi = [&coeffs](double x) {
        cplx acc = 0.0;
        for (int m = -coeffs.m_max(); m <= coeffs.m_max(); ++m)
            acc += coeffs.at(m) * std::polar(1.0, m * x);
        return acc / std::sqrt(two_pi);
    };
    const auto integrand = [&](double alpha) {
        return psi(theta - 0.5 * alpha) * std::conj(psi(theta + 0.5 * alpha)) *
               std::polar(1.0, l * alpha);
    };
    return (integrate(integrand, -pi, pi, rule, 4) / two_pi).real();
}

// Per-dimension max error of the angle-rescaled discrete Wigner function
// against the quadrature reference, over every angle grid point and the
// angular momentum window l in [-M, M].
inline ConvergenceReport angular_convergence(const AngularCoefficients& coeffs,
                                             const std::vector<Dimension>& dims) {
    ConvergenceReport report;
    report.norm = "max-abs";
    for (const Dimension& dim : dims) {
        const StateVector state = angular_superposition_state(dim, coeffs);
        const WignerGrid grid = wigner_fast(state);
        const double dtheta = two_pi / dim.N;
        double err = 0.0;
        for (int m = -dim.h; m <= dim.h; ++m) {
            const double theta = dtheta * m;
            for (int l = -coeffs.m_max(); l <= coeffs.m_max(); ++l) {
                const double w_n = grid.at(m, l) / dtheta;
                err = std::max(err, std::abs(w_n - angular_wigner_reference(coeffs, theta, l)));
            }
        }
        report.dims.push_back(dim);
        report.errors.push_back(err);
    }
    return report;
}

// Number and phase operator representatives.  The number operator is the
// integer-spaced V-side ladder; the phase operator is the U-side angle
// ladder shifted by a reference angle that must sit on the angle grid.
// Returned in the trace-pairing normalization Tr[G op], which makes them
// exactly n and theta_ref + (2pi/N) m.
inline std::pair<PhaseSpaceFunction, PhaseSpaceFunction>
pegg_barnett_map(double theta_ref, Dimension dim, const BasisSet& basis) {
    if (basis.dim.N != dim.N) throw shape_error("basis dimension does not match");
    const double step = two_pi / dim.N;
    const double ratio = theta_ref / step;
    if (std::abs(ratio - std::round(ratio)) > 1e-9)
        throw reference_angle_error("theta_ref must be an integer multiple of 2*pi/N");

    std::vector<cplx> number_vals(dim.N), phase_vals(dim.N);
    for (int k = 0; k < dim.N; ++k) {
        number_vals[k] = wrap_label(k, dim);
        phase_vals[k] = theta_ref + step * wrap_label(k, dim);
    }
    const ComplexMatrix number_op = v_spectral_matrix(dim, number_vals);
    const ComplexMatrix phase_op = u_spectral_matrix(dim, phase_vals);

    PhaseSpaceFunction number_rep = map_operator(number_op, basis);
    PhaseSpaceFunction phase_rep = map_operator(phase_op, basis);
    for (auto& v : number_rep.values) v *= static_cast<double>(dim.N);
    for (auto& v : phase_rep.values) v *= static_cast<double>(dim.N);
    return {std::move(number_rep), std::move(phase_rep)};
}

} // namespace dps
