// Command pipelines behind the dps command-line tool: state loading,
// artifact emission, and the verification suites.  Kept header-side so the
// test suite can drive every pipeline directly.
#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dps/continuum.hpp"
#include "dps/core.hpp"
#include "dps/expm.hpp"
#include "dps/io.hpp"
#include "dps/mapping.hpp"
#include "dps/operator_basis.hpp"
#include "dps/random.hpp"
#include "dps/schwinger.hpp"
#include "dps/wigner.hpp"

namespace dps {

enum class Command {
    basis_check,
    map,
    wigner,
    limit_cartesian,
    limit_angular,
    pegg_barnett,
    verify_all,
};

enum class OutputFormat { csv, json };

struct RunConfig {
    Command command = Command::verify_all;
    int N = 3;
    std::vector<int> dims;        // limit commands
    double delta = 1.0;
    double sigma = 1.0;
    double theta_ref = 0.0;
    std::string state_spec = "u0";
    std::string coeffs;           // angular amplitudes "re:im,re:im,..." centered on m=0
    std::string output_path;      // empty = stdout
    OutputFormat format = OutputFormat::csv;
    std::uint64_t seed = 1234;
};

// Named state sources: presets u<k>, v<k> (eigenvectors), "gaussian" (the
// sampled Gaussian on the position grid), or a path to a JSON file holding
// a length-N list of [re, im] pairs.  File amplitudes must be within 1e-6
// of unit norm and are renormalized exactly.
inline StateVector load_state(const std::string& spec, Dimension dim, double sigma = 1.0,
                              double delta = 1.0) {
    if (spec.empty()) throw input_error("empty state spec");
    if (spec == "gaussian") return gaussian_state(dim, sigma, delta);
    if ((spec[0] == 'u' || spec[0] == 'v') && spec.size() > 1) {
        bool numeric = true;
        for (size_t i = 1; i < spec.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(spec[i])) && !(i == 1 && spec[i] == '-'))
                numeric = false;
        if (numeric) {
            const int k = std::stoi(spec.substr(1));
            if (k <= -dim.N || k >= dim.N)
                throw input_error("eigenvector index out of range for N=" + std::to_string(dim.N));
            return spec[0] == 'u' ? u_eigenvector(dim, mod_n(k, dim))
                                  : v_eigenvector(dim, mod_n(k, dim));
        }
    }

    std::ifstream in(spec);
    if (!in) throw input_error("state preset or file not found: " + spec);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_array())
        throw input_error("state file must be a JSON list of [re, im] pairs");
    if (static_cast<int>(j.size()) != dim.N)
        throw input_error("state file has " + std::to_string(j.size()) +
                          " entries, expected " + std::to_string(dim.N));
    StateVector s(dim);
    for (int k = 0; k < dim.N; ++k) {
        const auto& e = j[k];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw input_error("state file entries must be [re, im] number pairs");
        s[k] = cplx(e[0].get<double>(), e[1].get<double>());
    }
    if (std::abs(norm(s) - 1.0) > 1e-6)
        throw input_error("state file norm deviates from 1 by more than 1e-6");
    normalize(s);
    return s;
}

inline AngularCoefficients parse_angular_coefficients(const std::string& text) {
    if (text.empty()) {
        // default study case: equal superposition of m = 0 and m = 1
        const double r = 1.0 / std::sqrt(2.0);
        return make_angular_coefficients({cplx(0.0), cplx(r), cplx(r)});
    }
    std::vector<cplx> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        try {
            if (colon == std::string::npos)
                c.emplace_back(std::stod(item), 0.0);
            else
                c.emplace_back(std::stod(item.substr(0, colon)),
                               std::stod(item.substr(colon + 1)));
        } catch (const std::exception&) {
            throw input_error("bad coefficient entry: " + item);
        }
    }
    return make_angular_coefficients(std::move(c));
}

namespace detail {

struct CheckList {
    std::string text;
    bool all_ok = true;

    void add(const std::string& name, double err, double tol) {
        const bool ok = err <= tol;
        all_ok = all_ok && ok;
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%s %-34s max_err=%.3e tol=%.0e\n",
                      ok ? "ok  " : "FAIL", name.c_str(), err, tol);
        text += buf;
    }

    void add_count(const std::string& name, long long value, long long bound) {
        const bool ok = value >= bound;
        all_ok = all_ok && ok;
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%s %-34s min=%lld bound=%lld\n",
                      ok ? "ok  " : "FAIL", name.c_str(), value, bound);
        text += buf;
    }
};

inline double unitary_residual(const ComplexMatrix& m) {
    return max_abs_diff(multiply(m, adjoint(m)), identity(m.dim));
}

inline ComplexMatrix matrix_power_n(const ComplexMatrix& m, int p) {
    ComplexMatrix out = identity(m.dim);
    for (int i = 0; i < p; ++i) out = multiply(out, m);
    return out;
}

inline void verify_schwinger(Dimension dim, CheckList& checks) {
    const ComplexMatrix u = build_u(dim);
    const ComplexMatrix v = build_v(dim);
    const ComplexMatrix f = finite_fourier(dim);
    checks.add("U^N = I", max_abs_diff(matrix_power_n(u, dim.N), identity(dim)), 1e-12);
    checks.add("V^N = I", max_abs_diff(matrix_power_n(v, dim.N), identity(dim)), 1e-12);
    const cplx w = std::polar(1.0, two_pi / dim.N);
    checks.add("U V = w V U", max_abs_diff(multiply(u, v), scale(multiply(v, u), w)), 1e-12);
    checks.add("F unitary", unitary_residual(f), 1e-12);
    ComplexMatrix d = multiply(adjoint(f), multiply(v, f));
    double diag_err = 0.0;
    const auto roots = root_table(dim);
    for (int r = 0; r < dim.N; ++r)
        for (int c = 0; c < dim.N; ++c)
            diag_err = std::max(diag_err, std::abs(d(r, c) - (r == c ? roots[r] : cplx(0.0))));
    checks.add("F^dag V F = diag(w^j)", diag_err, 1e-12);
}

inline void verify_basis(const BasisSet& basis, CheckList& checks) {
    const Dimension dim = basis.dim;
    double herm = 0.0, tr = 0.0;
    for (const auto& g : basis.elements) {
        herm = std::max(herm, hermiticity_residual(g));
        tr = std::max(tr, std::abs(trace(g) - 1.0));
    }
    checks.add("basis hermiticity", herm, 1e-12);
    checks.add("basis unit trace", tr, 1e-12);

    double orth = 0.0;
    const int n2 = dim.N * dim.N;
    for (int i = 0; i < n2; ++i)
        for (int k = 0; k < n2; ++k) {
            const cplx t = trace_of_product(adjoint(basis.elements[i]), basis.elements[k]);
            const double want = (i == k) ? dim.N : 0.0;
            orth = std::max(orth, std::abs(t - want));
        }
    checks.add("basis orthogonality", orth, 1e-10);

    ComplexMatrix sum(dim);
    for (const auto& g : basis.elements) sum = add(sum, g);
    checks.add("basis completeness", max_abs_diff(sum, scale(identity(dim), dim.N)), 1e-10);
}

inline void verify_kernel(const BasisSet& basis, Rng& rng, CheckList& checks) {
    const Dimension dim = basis.dim;
    double err = 0.0;
    const auto check_triple = [&](PhasePointLabel a, PhasePointLabel b, PhasePointLabel c) {
        const cplx direct =
            trace_of_product(adjoint(basis.at(a)), multiply(basis.at(b), basis.at(c)));
        err = std::max(err, std::abs(triple_product_kernel(a, b, c, dim) - direct));
    };
    if (dim.N <= 5) {
        for (int m = -dim.h; m <= dim.h; ++m)
            for (int n = -dim.h; n <= dim.h; ++n)
                for (int u = -dim.h; u <= dim.h; ++u)
                    for (int v = -dim.h; v <= dim.h; ++v)
                        for (int r = -dim.h; r <= dim.h; ++r)
                            for (int s = -dim.h; s <= dim.h; ++s)
                                check_triple({m, n}, {u, v}, {r, s});
        checks.add("kernel vs trace oracle (all)", err, 1e-10);
    } else {
        const auto rand_label = [&]() {
            return PhasePointLabel{static_cast<int>(rng.uniform() * dim.N) - dim.h,
                                   static_cast<int>(rng.uniform() * dim.N) - dim.h};
        };
        for (int i = 0; i < 1000; ++i) check_triple(rand_label(), rand_label(), rand_label());
        checks.add("kernel vs trace oracle (sampled)", err, 1e-10);
    }
}

inline void verify_mapping(const BasisSet& basis, Rng& rng, CheckList& checks) {
    const Dimension dim = basis.dim;
    double round_trip = 0.0, trace_rule = 0.0, reality = 0.0;
    for (int i = 0; i < 20; ++i) {
        const ComplexMatrix a = random_hermitian(dim, rng);
        const ComplexMatrix b = random_hermitian(dim, rng);
        const PhaseSpaceFunction fa = map_operator(a, basis);
        const PhaseSpaceFunction fb = map_operator(b, basis);
        round_trip = std::max(round_trip, max_abs_diff(reconstruct(fa, basis), a));
        trace_rule = std::max(trace_rule,
                              std::abs(trace_pair(fa, fb) - trace_of_product(a, b)));
        for (const auto& v : fa.values) reality = std::max(reality, std::abs(v.imag()));
    }
    checks.add("mapping round trip", round_trip, 1e-10);
    checks.add("trace rule vs matrix trace", trace_rule, 1e-10);
    checks.add("hermitian map reality", reality, 1e-12);

    if (dim.N <= 7) {
        double comp = 0.0;
        for (int i = 0; i < 3; ++i) {
            const ComplexMatrix a = random_hermitian(dim, rng);
            const ComplexMatrix b = random_hermitian(dim, rng);
            const PhaseSpaceFunction fa = map_operator(a, basis);
            const PhaseSpaceFunction fb = map_operator(b, basis);
            const PhaseSpaceFunction fab = product_representative(fa, fb, dim);
            const PhaseSpaceFunction direct = map_operator(multiply(a, b), basis);
            for (size_t k = 0; k < fab.values.size(); ++k)
                comp = std::max(comp, std::abs(fab.values[k] - direct.values[k]));
            const PhaseSpaceFunction fcomm = commutator_representative(fa, fb, dim);
            const PhaseSpaceFunction dcomm = map_operator(
                subtract(multiply(a, b), multiply(b, a)), basis);
            for (size_t k = 0; k < fcomm.values.size(); ++k)
                comp = std::max(comp, std::abs(fcomm.values[k] - dcomm.values[k]));
        }
        checks.add("product/commutator composition", comp, 1e-9);
    }
}

inline void verify_wigner(Dimension dim, const BasisSet& basis, Rng& rng, CheckList& checks) {
    const ComplexMatrix f = finite_fourier(dim);
    double marg_u = 0.0, marg_v = 0.0, bound = 0.0, purity = 0.0, fast_slow = 0.0,
           reality = 0.0;
    long long min_support = dim.N * static_cast<long long>(dim.N);
    for (int i = 0; i < 50; ++i) {
        const StateVector psi = random_state(dim, rng);
        const WignerGrid grid = wigner_pure(psi);
        const WignerGrid fast = wigner_fast(psi);
        for (size_t k = 0; k < grid.values.size(); ++k) {
            fast_slow = std::max(fast_slow, std::abs(grid.values[k] - fast.values[k]));
            bound = std::max(bound, std::abs(grid.values[k]) - 1.0);
        }
        const auto mu = marginal_u(grid);
        const auto mv = marginal_v(grid);
        for (int m = -dim.h; m <= dim.h; ++m)
            marg_u = std::max(marg_u, std::abs(mu[m + dim.h] - std::norm(psi[mod_n(m, dim)])));
        for (int n = -dim.h; n <= dim.h; ++n) {
            cplx amp = 0.0;
            for (int k = 0; k < dim.N; ++k) amp += std::conj(f(mod_n(n, dim), k)) * psi[k];
            marg_v = std::max(marg_v, std::abs(mv[n + dim.h] - std::norm(amp)));
        }
        purity = std::max(purity, std::abs(purity_sum(grid) - 1.0));
        min_support = std::min(min_support, static_cast<long long>(support_count(grid)));
        const PhaseSpaceFunction rep = map_operator(outer_product(psi), basis);
        for (const auto& v : rep.values) reality = std::max(reality, std::abs(v.imag()));
    }
    checks.add("wigner marginal (U side)", marg_u, 1e-10);
    checks.add("wigner marginal (V side)", marg_v, 1e-10);
    checks.add("wigner bound |w| <= 1", bound, 1e-10);
    checks.add("wigner purity", purity, 1e-9);
    checks.add("wigner fast path vs direct", fast_slow, 1e-10);
    checks.add("wigner reality residue", reality, 1e-12);
    checks.add_count("wigner support count >= N", min_support, dim.N);
}

inline void verify_continuum(Dimension dim, const BasisSet& basis, CheckList& checks) {
    const CartesianScaling scaling(dim, 1.0);
    const auto [p, q] = build_pq(scaling);
    const ComplexMatrix u = build_u(dim);
    const ComplexMatrix v = build_v(dim);
    const double eps = dim.epsilon();
    checks.add("exp identity V == exp(i e^(2-d) P/p0)",
               max_abs_diff(expm_i(p, std::pow(eps, 2.0 - scaling.delta) / scaling.p0), v), 1e-12);
    checks.add("exp identity U == exp(i e^d Q/q0)",
               max_abs_diff(expm_i(q, std::pow(eps, scaling.delta) / scaling.q0), u), 1e-12);

    const double theta_ref = two_pi / dim.N;
    const auto [num_rep, phase_rep] = pegg_barnett_map(theta_ref, dim, basis);
    double err = 0.0;
    for (int m = -dim.h; m <= dim.h; ++m)
        for (int n = -dim.h; n <= dim.h; ++n) {
            err = std::max(err, std::abs(num_rep.at(m, n) - cplx(n)));
            err = std::max(err, std::abs(phase_rep.at(m, n) - cplx(theta_ref + two_pi * m / dim.N)));
        }
    checks.add("number/phase representatives", err, 1e-10);
}

} // namespace detail

inline int cmd_basis_check(const RunConfig& config, std::ostream& out) {
    const Dimension dim(config.N);
    detail::CheckList checks;
    checks.text += "basis-check N=" + std::to_string(dim.N) + "\n";
    detail::verify_basis(build_all(dim), checks);
    out << checks.text;
    out << (checks.all_ok ? "all checks passed\n" : "CHECKS FAILED\n");
    return checks.all_ok ? 0 : 1;
}

inline int cmd_verify_all(const RunConfig& config, std::ostream& out) {
    const Dimension dim(config.N);
    Rng rng(config.seed);
    detail::CheckList checks;
    checks.text += "verify-all N=" + std::to_string(dim.N) +
                   " seed=" + std::to_string(config.seed) + "\n";
    const BasisSet basis = build_all(dim);
    detail::verify_schwinger(dim, checks);
    detail::verify_basis(basis, checks);
    detail::verify_kernel(basis, rng, checks);
    detail::verify_mapping(basis, rng, checks);
    detail::verify_wigner(dim, basis, rng, checks);
    detail::verify_continuum(dim, basis, checks);
    checks.text += checks.all_ok ? "all checks passed\n" : "CHECKS FAILED\n";
    if (!config.output_path.empty()) atomic_write_text(config.output_path, checks.text);
    out << checks.text;
    return checks.all_ok ? 0 : 1;
}

namespace detail {

inline void emit(const RunConfig& config, const std::string& csv, const nlohmann::json& json,
                 std::ostream& out) {
    const std::string content =
        config.format == OutputFormat::csv ? csv : json.dump(2) + "\n";
    if (config.output_path.empty())
        out << content;
    else
        atomic_write_text(config.output_path, content);
}

inline std::vector<Dimension> parse_dims(const RunConfig& config) {
    if (config.dims.empty()) throw input_error("no dimensions given");
    std::vector<Dimension> dims;
    for (int n : config.dims) dims.emplace_back(n);
    return dims;
}

} // namespace detail

inline int cmd_wigner(const RunConfig& config, std::ostream& out) {
    const Dimension dim(config.N);
    const StateVector state = load_state(config.state_spec, dim, config.sigma, config.delta);
    const WignerGrid grid = wigner_fast(state);
    detail::emit(config, grid_to_csv(grid), grid_to_json(grid), out);
    return 0;
}

inline int cmd_map(const RunConfig& config, std::ostream& out) {
    const Dimension dim(config.N);
    const StateVector state = load_state(config.state_spec, dim, config.sigma, config.delta);
    const PhaseSpaceFunction f = map_operator(outer_product(state), build_all(dim));
    detail::emit(config, grid_to_csv(f), grid_to_json(f), out);
    return 0;
}

inline int cmd_limit_cartesian(const RunConfig& config, std::ostream& out) {
    const ConvergenceReport report =
        cartesian_convergence(config.sigma, detail::parse_dims(config), config.delta);
    detail::emit(config, report_to_csv(report), report_to_json(report), out);
    return 0;
}

inline int cmd_limit_angular(const RunConfig& config, std::ostream& out) {
    const AngularCoefficients coeffs = parse_angular_coefficients(config.coeffs);
    const ConvergenceReport report = angular_convergence(coeffs, detail::parse_dims(config));
    detail::emit(config, report_to_csv(report), report_to_json(report), out);
    return 0;
}

inline int cmd_pegg_barnett(const RunConfig& config, std::ostream& out) {
    const Dimension dim(config.N);
    const auto [num_rep, phase_rep] = pegg_barnett_map(config.theta_ref, dim, build_all(dim));
    std::string csv = "m,n,number,phase\n";
    for (int m = -dim.h; m <= dim.h; ++m)
        for (int n = -dim.h; n <= dim.h; ++n)
            csv += std::to_string(m) + "," + std::to_string(n) + "," +
                   format_double(num_rep.at(m, n).real()) + "," +
                   format_double(phase_rep.at(m, n).real()) + "\n";
    nlohmann::json number_rows = nlohmann::json::array(), phase_rows = nlohmann::json::array();
    for (int m = -dim.h; m <= dim.h; ++m) {
        nlohmann::json nrow = nlohmann::json::array(), prow = nlohmann::json::array();
        for (int n = -dim.h; n <= dim.h; ++n) {
            nrow.push_back(num_rep.at(m, n).real());
            prow.push_back(phase_rep.at(m, n).real());
        }
        number_rows.push_back(nrow);
        phase_rows.push_back(prow);
    }
    const nlohmann::json j = {{"N", dim.N},
                              {"labels", "[-h,h]"},
                              {"number", number_rows},
                              {"phase", phase_rows}};
    detail::emit(config, csv, j, out);
    return 0;
}

// Executes the configured pipeline.  Exit status: 0 on success, 1 when a
// verification command finds a numerical failure, 2 on any configuration
// or input error.
inline int run(const RunConfig& config, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    try {
        switch (config.command) {
            case Command::basis_check: return cmd_basis_check(config, out);
            case Command::map: return cmd_map(config, out);
            case Command::wigner: return cmd_wigner(config, out);
            case Command::limit_cartesian: return cmd_limit_cartesian(config, out);
            case Command::limit_angular: return cmd_limit_angular(config, out);
            case Command::pegg_barnett: return cmd_pegg_barnett(config, out);
            case Command::verify_all: return cmd_verify_all(config, out);
        }
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace dps
