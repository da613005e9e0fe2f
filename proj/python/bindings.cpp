#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fta/certify.hpp"
#include "fta/io.hpp"
#include "fta/solver.hpp"

namespace py = pybind11;

namespace {

using CD = fta::Complex<double>;
using CQ = fta::Complex<fta::Rational>;

CD from_py(std::complex<double> z) { return {z.real(), z.imag()}; }
std::complex<double> to_py(const CD& z) { return {z.re, z.im}; }

fta::Polynomial<double> float_poly(const std::vector<std::complex<double>>& coeffs) {
    std::vector<CD> c;
    c.reserve(coeffs.size());
    for (const auto& z : coeffs) c.push_back(from_py(z));
    return fta::Polynomial<double>(std::move(c));
}

// Exact coefficients arrive as terms like "1/3", "2-5i" or "i".
fta::Polynomial<fta::Rational> exact_poly(const std::vector<std::string>& coeffs) {
    std::vector<CQ> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.push_back(fta::parse_complex_term(s));
    return fta::Polynomial<fta::Rational>(std::move(c));
}

py::tuple exact_pair(const CQ& z) { return py::make_tuple(fta::to_string(z.re), fta::to_string(z.im)); }

template <fta::OrderedField T>
fta::SolverConfig<T> make_config(T tol, T step_init, T step_shrink, int max_outer, int max_backtracks,
                                 int polish_iters) {
    fta::SolverConfig<T> cfg;
    cfg.residual_tol = tol;
    cfg.step_init = step_init;
    cfg.step_shrink = step_shrink;
    cfg.max_outer = max_outer;
    cfg.max_backtracks = max_backtracks;
    cfg.polish_iters = polish_iters;
    cfg.validate();
    return cfg;
}

py::dict float_report(const fta::RootResult<double>& r) {
    std::vector<std::complex<double>> roots;
    for (const auto& z : r.roots) roots.push_back(to_py(z));
    py::dict d;
    d["roots"] = roots;
    d["residual_one_norms"] = r.residual_one_norms;
    d["iterations"] = r.iterations;
    d["backtracks"] = r.backtracks;
    return d;
}

py::list trace_rows(const fta::DescentTrace<double>& t) {
    py::list rows;
    for (const auto& s : t.steps) {
        py::dict row;
        row["z"] = to_py(s.z);
        row["f"] = s.f_value;
        row["k"] = s.k;
        row["alpha"] = to_py(s.alpha);
        row["zeta"] = to_py(s.zeta.zeta);
        row["r"] = s.r_accepted;
        row["backtracks"] = s.backtracks;
        row["decrease_bound"] = s.decrease_bound;
        rows.append(row);
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_fta, m) {
    m.doc() = "Polynomial roots from the four field operations";

    static py::exception<fta::NonConvergence<double>> non_convergence(m, "NonConvergenceError",
                                                                       PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const fta::NonConvergence<double>& e) {
            py::set_error(non_convergence, e.what());
        }
    });

    m.def(
        "find_roots",
        [](const std::vector<std::complex<double>>& coeffs, double residual_tol, double step_init,
           double step_shrink, int max_outer, int max_backtracks, int polish_iters) {
            const auto cfg = make_config(residual_tol, step_init, step_shrink, max_outer, max_backtracks, polish_iters);
            return float_report(fta::find_all_roots(float_poly(coeffs), cfg));
        },
        py::arg("coeffs"), py::arg("residual_tol") = 1e-9, py::arg("step_init") = 1.0, py::arg("step_shrink") = 0.5,
        py::arg("max_outer") = 10000, py::arg("max_backtracks") = 200, py::arg("polish_iters") = 5,
        "All roots of sum coeffs[j] z^j, ascending by (Re, Im). Returns a dict with roots, "
        "residual_one_norms, iterations and backtracks.");

    m.def(
        "find_roots_exact",
        [](const std::vector<std::string>& coeffs) {
            const auto r = fta::find_all_roots(exact_poly(coeffs), fta::SolverConfig<fta::Rational>{});
            py::list out;
            for (const auto& z : r.roots) out.append(exact_pair(z));
            return out;
        },
        py::arg("coeffs"), "Roots in exact rational arithmetic (degree <= 4) as (re, im) string pairs.");

    m.def(
        "trace",
        [](const std::vector<std::complex<double>>& coeffs, std::optional<std::complex<double>> start) {
            const auto p = float_poly(coeffs);
            const CD z0 = start ? from_py(*start) : fta::starting_point(p);
            const auto out = fta::descend_to_root(p, z0, fta::SolverConfig<double>{});
            return py::make_tuple(to_py(out.root), trace_rows(out.trace));
        },
        py::arg("coeffs"), py::arg("start") = py::none(), "Descent toward one root: (root, list of step dicts).");

    m.def(
        "nth_root",
        [](double c, int n) { return fta::positive_nth_root(c, n, fta::SolverConfig<double>{}); }, py::arg("c"),
        py::arg("n"), "Positive real x with x**n == c.");

    m.def(
        "evaluate",
        [](const std::vector<std::complex<double>>& coeffs, std::complex<double> z) {
            return to_py(fta::evaluate(float_poly(coeffs), from_py(z)));
        },
        py::arg("coeffs"), py::arg("z"));

    m.def(
        "growth_radius", [](const std::vector<std::complex<double>>& coeffs) {
            return fta::growth_radius(float_poly(coeffs));
        },
        py::arg("coeffs"), "Radius beyond which f exceeds f(0).");

    m.def(
        "taylor_shift",
        [](const std::vector<std::string>& coeffs, const std::string& z0) {
            const auto s = fta::taylor_shift(exact_poly(coeffs), fta::parse_complex_term(z0));
            py::list q;
            for (const auto& c : s.quotient.coeffs()) q.append(exact_pair(c));
            return py::make_tuple(exact_pair(s.base_value), s.order, q);
        },
        py::arg("coeffs"), py::arg("z0"),
        "Exact P(z0 + h) = P(z0) + h^k Q(h) with Q(0) != 0: returns (P(z0), k, Q coefficients).");

    m.def(
        "estermann_zeta",
        [](unsigned k) {
            const auto c = fta::estermann_zeta(k);
            return py::make_tuple(exact_pair(c.zeta), exact_pair(c.zeta_pow_k));
        },
        py::arg("k"), "(zeta, zeta**k) for zeta = (1 + i/k)**2 as exact string pairs.");

    m.def(
        "verify_lemma",
        [](unsigned max_k, unsigned threads) {
            fta::LemmaSweepReport r;
            {
                py::gil_scoped_release release;
                r = fta::run_lemma_sweep(max_k, threads);
            }
            return py::make_tuple(r.all_passed, r.lines);
        },
        py::arg("max_k"), py::arg("threads") = 0);

    m.def(
        "check_norms",
        [](std::size_t samples, std::uint64_t seed, bool mutate) {
            const auto r = fta::run_norm_checks(samples, seed,
                                                mutate ? fta::NormMutation::shrink_product : fta::NormMutation::none);
            py::dict d;
            d["samples"] = r.samples;
            d["lower_failures"] = r.lower_failures;
            d["upper_failures"] = r.upper_failures;
            d["conjugate_failures"] = r.conjugate_failures;
            d["passed"] = r.passed();
            return d;
        },
        py::arg("samples"), py::arg("seed") = 0, py::arg("mutate") = false);
}
