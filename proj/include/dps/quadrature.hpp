// Gauss-Legendre quadrature nodes/weights and a composite integrator for
// smooth complex integrands on a finite interval.
#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "dps/core.hpp"

namespace dps {

struct GaussLegendreRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

// Nodes are the roots of the degree-n Legendre polynomial, found by Newton
// iteration from the Chebyshev initial guess.
inline GaussLegendreRule gauss_legendre(int n) {
    if (n < 1) throw parameter_error("quadrature order must be positive");
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

// Composite Gauss-Legendre integral of f over [a, b] split into `panels`
// equal subintervals.
inline cplx integrate(const std::function<cplx(double)>& f, double a, double b,
                      const GaussLegendreRule& rule, int panels = 4) {
    cplx total = 0.0;
    const double width = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * width;
        const double mid = lo + 0.5 * width;
        for (size_t i = 0; i < rule.nodes.size(); ++i)
            total += rule.weights[i] * f(mid + 0.5 * width * rule.nodes[i]);
    }
    return total * (0.5 * width);
}

} // namespace dps
