#include <catch2/catch_amalgamated.hpp>

#include "dps/continuum.hpp"
#include "dps/expm.hpp"
#include "dps/quadrature.hpp"
#include "dps/schwinger.hpp"

using namespace dps;

namespace {

// closed-form angular Wigner function for a finite superposition; kept as
// an independent check on the quadrature reference
double angular_closed_form(const AngularCoefficients& coeffs, double theta, int l) {
    cplx total = 0.0;
    const int mm = coeffs.m_max();
    for (int m = -mm; m <= mm; ++m)
        for (int m2 = -mm; m2 <= mm; ++m2) {
            const double x = l - 0.5 * (m + m2);
            const double integral =
                std::abs(x) < 1e-14 ? two_pi : 2.0 * std::sin(pi * x) / x;
            total += coeffs.at(m) * std::conj(coeffs.at(m2)) *
                     std::polar(1.0, (m - m2) * theta) * integral;
        }
    return (total / (4.0 * pi * pi)).real();
}

} // namespace

TEST_CASE("scaling parameter validation") {
    CHECK_THROWS_AS(CartesianScaling(Dimension(5), 0.0), scaling_error);
    CHECK_THROWS_AS(CartesianScaling(Dimension(5), 2.0), scaling_error);
    CHECK_THROWS_AS(CartesianScaling(Dimension(5), -0.3), scaling_error);
    CHECK_THROWS_AS(CartesianScaling(Dimension(5), 1.0, -1.0), scaling_error);
    CHECK_THROWS_AS(CartesianScaling(Dimension(5), 1.0, 1.0, 0.0), scaling_error);
    const CartesianScaling s(Dimension(5), 1.0);
    CHECK(s.dq() * s.dp() == Catch::Approx(two_pi / 5));
}

TEST_CASE("position operator is the label-ordered ladder") {
    const Dimension dim(3);
    const CartesianScaling scaling(dim, 1.0);
    const auto [p, q] = build_pq(scaling);
    const double eps = dim.epsilon();
    // amplitude index order 0,1,2 carries labels 0,1,-1
    CHECK(q(0, 0).real() == Catch::Approx(0.0).margin(1e-15));
    CHECK(q(1, 1).real() == Catch::Approx(eps));
    CHECK(q(2, 2).real() == Catch::Approx(-eps));
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            if (r != c) CHECK(std::abs(q(r, c)) < 1e-15);
    CHECK(hermiticity_residual(p) < 1e-12);
    CHECK(hermiticity_residual(q) < 1e-12);
}

TEST_CASE("matrix exponential helper agrees with spectral evaluation") {
    const Dimension dim(5);
    // diagonal case has an elementwise ground truth
    ComplexMatrix d(dim);
    for (int k = 0; k < 5; ++k) d(k, k) = 0.3 * k - 0.7;
    const ComplexMatrix ed = expm_i(d, 1.3);
    for (int k = 0; k < 5; ++k)
        CHECK(std::abs(ed(k, k) - std::polar(1.0, 1.3 * d(k, k).real())) < 1e-13);

    // circulant case against the spectral builder
    std::vector<cplx> eig(5);
    for (int k = 0; k < 5; ++k) eig[k] = wrap_label(k, dim) * 0.8;
    const ComplexMatrix m = v_spectral_matrix(dim, eig);
    std::vector<cplx> expected(5);
    for (int k = 0; k < 5; ++k) expected[k] = std::polar(1.0, 0.6 * eig[k].real());
    CHECK(max_abs_diff(expm_i(m, 0.6), v_spectral_matrix(dim, expected)) < 1e-13);
}

TEST_CASE("exponential identities recover the Schwinger pair") {
    for (int n : {3, 5, 7}) {
        const Dimension dim(n);
        const ComplexMatrix u = build_u(dim);
        const ComplexMatrix v = build_v(dim);
        const double eps = dim.epsilon();
        for (double delta : {0.5, 1.0, 1.5}) {
            const CartesianScaling scaling(dim, delta, 2.0, 0.5);
            const auto [p, q] = build_pq(scaling);
            INFO("N=" << n << " delta=" << delta);
            CHECK(max_abs_diff(expm_i(p, std::pow(eps, 2.0 - delta) / scaling.p0), v) < 1e-12);
            CHECK(max_abs_diff(expm_i(q, std::pow(eps, delta) / scaling.q0), u) < 1e-12);
        }
    }
}

TEST_CASE("angular operators and their exponential identities") {
    const Dimension dim(3);
    const AngularScaling scaling(dim);
    const auto [m_op, theta_op] = build_m_theta(scaling);

    // theta eigenvalues are (2*pi/3) * label
    CHECK(theta_op(0, 0).real() == Catch::Approx(0.0).margin(1e-15));
    CHECK(theta_op(1, 1).real() == Catch::Approx(two_pi / 3));
    CHECK(theta_op(2, 2).real() == Catch::Approx(-two_pi / 3));

    // integer-spaced angular momentum: eigenvalue gap is exactly m0
    const Dimension dim5(5);
    const AngularScaling s5(dim5, 1.0, 1.0);
    const auto [m5, t5] = build_m_theta(s5);
    const ComplexMatrix f = finite_fourier(dim5);
    const ComplexMatrix diag = multiply(adjoint(f), multiply(m5, f));
    for (int k = 0; k < 5; ++k)
        CHECK(diag(k, k).real() == Catch::Approx(wrap_label(k, dim5)).margin(1e-12));

    for (int n : {3, 5, 7}) {
        const Dimension d(n);
        const AngularScaling sc(d);
        const auto [mm, tt] = build_m_theta(sc);
        const double eps2 = d.epsilon() * d.epsilon();
        CHECK(max_abs_diff(expm_i(mm, eps2 / sc.m0), build_v(d)) < 1e-12);
        CHECK(max_abs_diff(expm_i(tt, 1.0 / sc.theta0), build_u(d)) < 1e-12);
    }
}

TEST_CASE("continuum Weyl-Wigner Gaussian") {
    CHECK(continuum_wigner_cartesian(0.0, 0.0, 1.0) == Catch::Approx(1.0 / pi));
    CHECK(continuum_wigner_cartesian(0.7, -1.2, 1.3) ==
          Catch::Approx(continuum_wigner_cartesian(-0.7, 1.2, 1.3)));
    CHECK_THROWS_AS(continuum_wigner_cartesian(0.0, 0.0, 0.0), parameter_error);
    CHECK_THROWS_AS(continuum_wigner_cartesian(0.0, 0.0, -1.0), parameter_error);

    // unit normalization by quadrature
    const GaussLegendreRule rule = gauss_legendre(48);
    const double sigma = 0.8;
    const auto inner = [&](double q) {
        return integrate([&](double p) { return cplx(continuum_wigner_cartesian(q, p, sigma)); },
                         -9.0, 9.0, rule, 6);
    };
    const cplx total = integrate([&](double q) { return inner(q); }, -9.0, 9.0, rule, 6);
    CHECK(total.real() == Catch::Approx(1.0).margin(1e-6));
}

TEST_CASE("gaussian state construction and resolution guard") {
    const Dimension dim(21);
    const StateVector psi = gaussian_state(dim, 1.0, 1.0);
    CHECK(norm(psi) == Catch::Approx(1.0));
    CHECK(psi[0].real() > psi[1].real()); // peaked at q = 0

    CHECK_THROWS_AS(cartesian_convergence(0.01, {dim}, 1.0), resolution_error);
    CHECK_THROWS_AS(cartesian_convergence(50.0, {dim}, 1.0), resolution_error);
}

TEST_CASE("cartesian convergence toward the continuum Gaussian") {
    const ConvergenceReport single = cartesian_convergence(1.0, {Dimension(21)}, 1.0);
    REQUIRE(single.errors.size() == 1);
    CHECK(single.norm == "max-abs");

    const std::vector<Dimension> ladder{Dimension(11), Dimension(21), Dimension(31),
                                        Dimension(41)};
    const ConvergenceReport report = cartesian_convergence(1.0, ladder, 1.0);
    REQUIRE(report.errors.size() == 4);
    for (size_t i = 1; i < report.errors.size(); ++i)
        CHECK(report.errors[i] < report.errors[i - 1]);
    CHECK(report.errors.back() < 1e-2);

    // the limit target does not depend on the grid split between q and p
    const std::vector<Dimension> dims{Dimension(51)};
    const double lo = cartesian_convergence(1.0, dims, 0.5).errors[0];
    const double hi = cartesian_convergence(1.0, dims, 1.5).errors[0];
    CHECK(lo < 2.0 * hi);
    CHECK(hi < 2.0 * lo);
}

TEST_CASE("angular coefficient validation") {
    CHECK_THROWS_AS(make_angular_coefficients({}), parameter_error);
    CHECK_THROWS_AS(make_angular_coefficients({cplx(1.0), cplx(0.0)}), parameter_error);
    CHECK_THROWS_AS(make_angular_coefficients({cplx(0.5)}), parameter_error);
    const AngularCoefficients c = make_angular_coefficients({cplx(0.6), cplx(0.0), cplx(0.8)});
    CHECK(c.m_max() == 1);
    CHECK(c.at(-1).real() == Catch::Approx(0.6));

    // embedding requires the cutoff to stay below h
    CHECK_THROWS_AS(angular_superposition_state(Dimension(3), c), embedding_error);
}

TEST_CASE("quadrature reference matches the closed form") {
    const double r = 1.0 / std::sqrt(2.0);
    const AngularCoefficients c = make_angular_coefficients({cplx(0.0), cplx(r), cplx(r)});
    for (double theta : {-2.1, -0.4, 0.0, 0.3, 1.9})
        for (int l : {-1, 0, 1})
            CHECK(angular_wigner_reference(c, theta, l) ==
                  Catch::Approx(angular_closed_form(c, theta, l)).margin(1e-12));
}

TEST_CASE("angular momentum eigenstate reproduces the flat angle profile") {
    const AngularCoefficients c0 = make_angular_coefficients({cplx(1.0)});
    for (int n : {11, 21}) {
        const Dimension dim(n);
        const ConvergenceReport report = angular_convergence(c0, {dim});
        CHECK(report.errors[0] < 1e-10);

        const StateVector psi = angular_superposition_state(dim, c0);
        const WignerGrid grid = wigner_fast(psi);
        const double dtheta = two_pi / n;
        for (int m = -dim.h; m <= dim.h; ++m)
            CHECK(grid.at(m, 0) / dtheta == Catch::Approx(1.0 / two_pi).margin(1e-12));
    }
}

TEST_CASE("global phase leaves the grid unchanged") {
    const Dimension dim(11);
    const AngularCoefficients plain = make_angular_coefficients({cplx(1.0)});
    const AngularCoefficients rotated =
        make_angular_coefficients({std::polar(1.0, 0.77)});
    const WignerGrid a = wigner_fast(angular_superposition_state(dim, plain));
    const WignerGrid b = wigner_fast(angular_superposition_state(dim, rotated));
    for (size_t i = 0; i < a.values.size(); ++i)
        CHECK(std::abs(a.values[i] - b.values[i]) < 1e-13);
}

TEST_CASE("angular convergence toward the quadrature reference") {
    const double r = 1.0 / std::sqrt(2.0);
    const AngularCoefficients c = make_angular_coefficients({cplx(0.0), cplx(r), cplx(r)});
    const ConvergenceReport report =
        angular_convergence(c, {Dimension(11), Dimension(21), Dimension(51)});
    REQUIRE(report.errors.size() == 3);
    for (size_t i = 1; i < report.errors.size(); ++i)
        CHECK(report.errors[i] < report.errors[i - 1]);
}

TEST_CASE("number and phase representatives are the grid labels") {
    const Dimension dim(3);
    const BasisSet basis = build_all(dim);

    const auto [num0, phase0] = pegg_barnett_map(0.0, dim, basis);
    for (int m = -1; m <= 1; ++m)
        for (int n = -1; n <= 1; ++n) {
            CHECK(std::abs(num0.at(m, n) - cplx(n)) < 1e-10);
            CHECK(std::abs(phase0.at(m, n) - cplx(two_pi * m / 3)) < 1e-10);
        }

    const double theta_ref = two_pi / 3;
    const auto [num1, phase1] = pegg_barnett_map(theta_ref, dim, basis);
    for (int m = -1; m <= 1; ++m)
        for (int n = -1; n <= 1; ++n)
            CHECK(std::abs(phase1.at(m, n) - cplx(theta_ref + two_pi * m / 3)) < 1e-10);

    CHECK_THROWS_AS(pegg_barnett_map(0.4, dim, basis), reference_angle_error);
    CHECK_THROWS_AS(pegg_barnett_map(0.0, Dimension(5), basis), shape_error);
}

TEST_CASE("degenerate one-dimensional representatives") {
    const Dimension dim(1);
    const BasisSet basis = build_all(dim);
    const auto [num, phase] = pegg_barnett_map(two_pi, dim, basis);
    CHECK(std::abs(num.at(0, 0)) < 1e-12);
    CHECK(std::abs(phase.at(0, 0) - cplx(two_pi)) < 1e-12);
}
