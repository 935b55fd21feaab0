#include <catch2/catch_amalgamated.hpp>

#include "dps/mapping.hpp"
#include "dps/random.hpp"
#include "dps/schwinger.hpp"
#include "support/oracles.hpp"

using namespace dps;

namespace {

double max_diff(const PhaseSpaceFunction& f, const PhaseSpaceFunction& g) {
    double worst = 0.0;
    for (size_t i = 0; i < f.values.size(); ++i)
        worst = std::max(worst, std::abs(f.values[i] - g.values[i]));
    return worst;
}

} // namespace

TEST_CASE("identity maps to the constant 1/N") {
    for (int n : {1, 3, 5}) {
        const Dimension dim(n);
        const BasisSet basis = build_all(dim);
        const PhaseSpaceFunction f = map_operator(identity(dim), basis);
        for (const auto& v : f.values) CHECK(std::abs(v - cplx(1.0 / n)) < 1e-13);
    }
}

TEST_CASE("map of U depends on m only, as a pure phase over N") {
    const Dimension dim(3);
    const BasisSet basis = build_all(dim);
    const PhaseSpaceFunction f = map_operator(build_u(dim), basis);
    for (int m = -1; m <= 1; ++m)
        for (int n = -1; n <= 1; ++n) {
            const cplx want = std::polar(1.0 / 3.0, two_pi * m / 3.0);
            CHECK(std::abs(f.at(m, n) - want) < 1e-13);
        }
}

TEST_CASE("map of a U-basis projector is a delta column") {
    const Dimension dim(3);
    const BasisSet basis = build_all(dim);
    const PhaseSpaceFunction f = map_operator(outer_product(u_eigenvector(dim, 0)), basis);
    for (int m = -1; m <= 1; ++m)
        for (int n = -1; n <= 1; ++n) {
            const double want = (m == 0) ? 1.0 / 3.0 : 0.0;
            CHECK(std::abs(f.at(m, n) - want) < 1e-13);
        }
}

TEST_CASE("reconstruct inverts the constant function to the identity") {
    const Dimension dim(5);
    const BasisSet basis = build_all(dim);
    PhaseSpaceFunction f(dim);
    for (auto& v : f.values) v = 1.0 / 5.0;
    CHECK(max_abs_diff(reconstruct(f, basis), identity(dim)) < 1e-12);
}

TEST_CASE("round trip on seeded random Hermitian operators") {
    Rng rng(2024);
    for (int n : {3, 5, 7, 9, 11}) {
        const Dimension dim(n);
        const BasisSet basis = build_all(dim);
        for (int i = 0; i < 20; ++i) {
            const ComplexMatrix a = random_hermitian(dim, rng);
            CHECK(max_abs_diff(reconstruct(map_operator(a, basis), basis), a) < 1e-10);
        }
    }
}

TEST_CASE("round trip on V") {
    const Dimension dim(3);
    const BasisSet basis = build_all(dim);
    const ComplexMatrix v = build_v(dim);
    CHECK(max_abs_diff(reconstruct(map_operator(v, basis), basis), v) < 1e-12);
}

TEST_CASE("mapping is linear") {
    const Dimension dim(5);
    const BasisSet basis = build_all(dim);
    Rng rng(5);
    const ComplexMatrix a = random_hermitian(dim, rng);
    const ComplexMatrix b = random_hermitian(dim, rng);
    const cplx alpha(0.7, -0.3), beta(-1.1, 0.45);
    const ComplexMatrix combo = add(scale(a, alpha), scale(b, beta));
    const PhaseSpaceFunction direct = map_operator(combo, basis);
    const PhaseSpaceFunction fa = map_operator(a, basis);
    const PhaseSpaceFunction fb = map_operator(b, basis);
    PhaseSpaceFunction recombined(dim);
    for (size_t i = 0; i < recombined.values.size(); ++i)
        recombined.values[i] = alpha * fa.values[i] + beta * fb.values[i];
    CHECK(max_diff(direct, recombined) < 1e-12);
}

TEST_CASE("Hermitian operators map to real functions") {
    Rng rng(77);
    for (int n : {3, 7, 11}) {
        const Dimension dim(n);
        const BasisSet basis = build_all(dim);
        const PhaseSpaceFunction f = map_operator(random_hermitian(dim, rng), basis);
        for (const auto& v : f.values) CHECK(std::abs(v.imag()) < 1e-12);
    }
}

TEST_CASE("trace pairing reproduces the matrix trace") {
    Rng rng(31);
    const Dimension dim(3);
    const BasisSet basis = build_all(dim);

    const ComplexMatrix a = random_hermitian(dim, rng);
    const ComplexMatrix b = random_hermitian(dim, rng);
    CHECK(std::abs(trace_pair(map_operator(a, basis), map_operator(b, basis)) -
                   trace_of_product(a, b)) < 1e-10);

    const ComplexMatrix proj = outer_product(u_eigenvector(dim, 0));
    CHECK(std::abs(trace_pair(map_operator(proj, basis), map_operator(proj, basis)) -
                   trace_of_product(proj, proj)) < 1e-12);

    const Dimension one(1);
    const BasisSet basis1 = build_all(one);
    const PhaseSpaceFunction f1 = map_operator(identity(one), basis1);
    CHECK(std::abs(trace_pair(f1, f1) - cplx(1.0)) < 1e-14);
}

TEST_CASE("composing with the identity representative is the identity map") {
    const Dimension dim(3);
    const BasisSet basis = build_all(dim);
    Rng rng(8);
    const PhaseSpaceFunction f = map_operator(random_hermitian(dim, rng), basis);
    const PhaseSpaceFunction g = map_operator(identity(dim), basis);
    CHECK(max_diff(product_representative(f, g, dim), f) < 1e-10);
    CHECK(max_diff(product_representative(g, f, dim), f) < 1e-10);
}

TEST_CASE("product representative matches mapping the matrix product") {
    const Dimension dim(3);
    const BasisSet basis = build_all(dim);

    const ComplexMatrix u = build_u(dim);
    const ComplexMatrix v = build_v(dim);
    const PhaseSpaceFunction fu = map_operator(u, basis);
    const PhaseSpaceFunction fv = map_operator(v, basis);
    CHECK(max_diff(product_representative(fu, fv, dim), map_operator(multiply(u, v), basis)) <
          1e-9);

    Rng rng(12);
    for (int i = 0; i < 5; ++i) {
        const ComplexMatrix a = random_hermitian(dim, rng);
        const ComplexMatrix b = random_hermitian(dim, rng);
        CHECK(max_diff(product_representative(map_operator(a, basis), map_operator(b, basis), dim),
                       map_operator(multiply(a, b), basis)) < 1e-9);
    }
}

TEST_CASE("commutator representative") {
    const Dimension dim(3);
    const BasisSet basis = build_all(dim);
    Rng rng(13);

    const PhaseSpaceFunction f = map_operator(random_hermitian(dim, rng), basis);
    for (const auto& v : commutator_representative(f, f, dim).values)
        CHECK(std::abs(v) < 1e-10);

    // commuting diagonal operators
    ComplexMatrix d1(dim), d2(dim);
    for (int k = 0; k < 3; ++k) {
        d1(k, k) = 0.3 * k - 0.5;
        d2(k, k) = 1.1 - 0.2 * k * k;
    }
    const PhaseSpaceFunction fd1 = map_operator(d1, basis);
    const PhaseSpaceFunction fd2 = map_operator(d2, basis);
    for (const auto& v : commutator_representative(fd1, fd2, dim).values)
        CHECK(std::abs(v) < 1e-10);

    const ComplexMatrix u = build_u(dim);
    const ComplexMatrix v = build_v(dim);
    const PhaseSpaceFunction direct = map_operator(
        subtract(multiply(u, v), multiply(v, u)), basis);
    CHECK(max_diff(commutator_representative(map_operator(u, basis), map_operator(v, basis), dim),
                   direct) < 1e-9);
}

TEST_CASE("shape mismatches are rejected") {
    const BasisSet basis3 = build_all(Dimension(3));
    const BasisSet basis5 = build_all(Dimension(5));
    CHECK_THROWS_AS(map_operator(identity(Dimension(5)), basis3), shape_error);
    const PhaseSpaceFunction f3 = map_operator(identity(Dimension(3)), basis3);
    const PhaseSpaceFunction f5 = map_operator(identity(Dimension(5)), basis5);
    CHECK_THROWS_AS(reconstruct(f3, basis5), shape_error);
    CHECK_THROWS_AS(trace_pair(f3, f5), shape_error);
    CHECK_THROWS_AS(product_representative(f3, f5, Dimension(3)), shape_error);
    CHECK_THROWS_AS(product_representative(f3, f3, Dimension(5)), shape_error);
}
