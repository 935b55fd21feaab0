// Matrix exponential by scaling-and-squaring with a Taylor series.  Plenty
// for the skew-Hermitian arguments that appear in the exponential
// identities; not intended for ill-conditioned general use.
#pragma once

#include <cmath>

#include "dps/core.hpp"
#include "dps/matrix.hpp"

namespace dps {

inline double inf_norm(const ComplexMatrix& x) {
    double worst = 0.0;
    for (int r = 0; r < x.n(); ++r) {
        double row = 0.0;
        for (int c = 0; c < x.n(); ++c) row += std::abs(x(r, c));
        worst = std::max(worst, row);
    }
    return worst;
}

inline ComplexMatrix expm(const ComplexMatrix& x) {
    const double nrm = inf_norm(x);
    int squarings = 0;
    double scale = 1.0;
    while (nrm * scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }
    ComplexMatrix scaled = dps::scale(x, scale);

    ComplexMatrix result = identity(x.dim);
    ComplexMatrix term = identity(x.dim);
    for (int k = 1; k <= 40; ++k) {
        term = multiply(term, scaled);
        for (auto& v : term.a) v /= static_cast<double>(k);
        result = add(result, term);
        if (max_abs(term) < 1e-20) break;
    }
    for (int s = 0; s < squarings; ++s) result = multiply(result, result);
    return result;
}

// exp(i * factor * x)
inline ComplexMatrix expm_i(const ComplexMatrix& x, double factor) {
    return expm(scale(x, cplx(0.0, factor)));
}

} // namespace dps
