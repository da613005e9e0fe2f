// fta: polynomial roots by descent with Estermann directions, plus exact
// certification of the inequalities the method relies on.
//
// Exit codes: 0 success, 1 a certification check failed, 2 usage error,
// 3 solver did not converge (a partial report is still printed).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "fta/certify.hpp"
#include "fta/io.hpp"
#include "fta/solver.hpp"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PolynomialSource {
    std::string coeffs;
    std::string input;
};

struct ConfigFlags {
    std::optional<std::string> residual_tol;
    std::optional<std::string> step_init;
    std::optional<std::string> step_shrink;
    std::optional<int> max_outer;
    std::optional<int> max_backtracks;
    std::optional<int> polish_iters;
};

void add_source_options(CLI::App* cmd, PolynomialSource& src) {
    auto* c = cmd->add_option("--coeffs", src.coeffs, "Comma-separated coefficients a0,a1,... (\"re\" or \"re+imi\")");
    auto* i = cmd->add_option("--input", src.input, "Polynomial JSON file {\"coeffs\": [[re, im], ...]}");
    c->excludes(i);
    i->excludes(c);
}

void add_config_options(CLI::App* cmd, ConfigFlags& flags) {
    cmd->add_option("--residual-tol", flags.residual_tol, "Stop when f <= tol^2 * (sum |a_j|_1)^2");
    cmd->add_option("--step-init", flags.step_init, "Initial step length per iteration");
    cmd->add_option("--step-shrink", flags.step_shrink, "Backtracking factor in (0, 1)");
    cmd->add_option("--max-outer", flags.max_outer, "Maximum descent iterations per root");
    cmd->add_option("--max-backtracks", flags.max_backtracks, "Maximum step reductions per iteration");
    cmd->add_option("--polish-iters", flags.polish_iters, "Polishing iterations on the original polynomial");
}

template <fta::OrderedField T>
fta::SolverConfig<T> make_config(const ConfigFlags& flags) {
    fta::SolverConfig<T> cfg;
    auto scalar = [](const std::string& s) { return fta::scalar_from_rational<T>(fta::parse_rational(s)); };
    if (flags.residual_tol) cfg.residual_tol = scalar(*flags.residual_tol);
    if (flags.step_init) cfg.step_init = scalar(*flags.step_init);
    if (flags.step_shrink) cfg.step_shrink = scalar(*flags.step_shrink);
    if (flags.max_outer) cfg.max_outer = *flags.max_outer;
    if (flags.max_backtracks) cfg.max_backtracks = *flags.max_backtracks;
    if (flags.polish_iters) cfg.polish_iters = *flags.polish_iters;
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return cfg;
}

template <fta::OrderedField T>
fta::Polynomial<T> load_polynomial(const PolynomialSource& src) {
    try {
        if (!src.coeffs.empty()) return fta::parse_inline_coeffs<T>(src.coeffs);
        if (!src.input.empty()) {
            std::ifstream in(src.input);
            if (!in) throw UsageError("cannot open " + src.input);
            return fta::polynomial_from_json<T>(nlohmann::json::parse(in));
        }
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    throw UsageError("one of --coeffs or --input is required");
}

template <fta::OrderedField T>
void print_report(std::ostream& os, const fta::RootResult<T>& r, bool json, bool converged) {
    if (json) {
        os << fta::root_result_to_json(r, converged).dump() << '\n';
        return;
    }
    if (!converged) os << "status: not converged (partial result)\n";
    for (std::size_t j = 0; j < r.roots.size(); ++j) {
        os << "root " << j << ": " << fta::to_string(r.roots[j].re) << ' ' << fta::to_string(r.roots[j].im) << "i";
        if (j < r.residual_one_norms.size()) os << "  residual=" << fta::to_string(r.residual_one_norms[j]);
        os << '\n';
    }
    os << "iterations: " << r.iterations << "  backtracks: " << r.backtracks << '\n';
}

template <fta::OrderedField T>
int run_solve(const PolynomialSource& src, const ConfigFlags& flags, bool json) {
    const auto p = load_polynomial<T>(src);
    if (p.degree() < 1) throw UsageError(fta::DegreeError().what());
    const auto cfg = make_config<T>(flags);
    try {
        print_report(std::cout, fta::find_all_roots(p, cfg), json, true);
        return 0;
    } catch (fta::NonConvergence<T>& e) {
        auto& partial = e.partial;
        for (const auto& z : partial.roots) partial.residual_one_norms.push_back(fta::one_norm(fta::evaluate(p, z)));
        print_report(std::cout, partial, json, false);
        std::cerr << "error: " << e.what() << '\n';
        return kExitNoConvergence;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int run_trace(const PolynomialSource& src, const ConfigFlags& flags, const std::string& csv_path,
              const std::string& start_text) {
    const auto p = load_polynomial<double>(src);
    if (p.degree() < 1) throw UsageError(fta::DegreeError().what());
    const auto cfg = make_config<double>(flags);
    std::ofstream out(csv_path);
    if (!out) throw UsageError("cannot write " + csv_path);
    try {
        fta::Complex<double> start;
        try {
            start = start_text.empty() ? fta::starting_point(p) : fta::to_float(fta::parse_complex_term(start_text));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        const auto outcome = fta::descend_to_root(p, start, cfg);
        fta::write_trace_csv(out, outcome.trace);
        std::cout << "root: " << fta::to_string(outcome.root.re) << ' ' << fta::to_string(outcome.root.im) << "i  steps: "
                  << outcome.trace.steps.size() << '\n';
        return 0;
    } catch (const fta::NonConvergence<double>& e) {
        fta::write_trace_csv(out, e.trace);
        std::cerr << "error: " << e.what() << '\n';
        return kExitNoConvergence;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polynomial roots from the four field operations"};
    app.require_subcommand(1);

    PolynomialSource source;
    ConfigFlags flags;
    bool json = false;
    bool exact = false;
    auto* solve = app.add_subcommand("solve", "Find all roots of a polynomial");
    add_source_options(solve, source);
    add_config_options(solve, flags);
    solve->add_flag("--json", json, "Emit the report as JSON");
    solve->add_flag("--exact", exact, "Run the solver in exact rational arithmetic (degree <= 4)");

    unsigned max_k = 0;
    unsigned threads = 0;
    auto* lemma = app.add_subcommand("verify-lemma", "Certify Re[zeta^k] < 0 < Im[zeta^k] for even k <= K");
    lemma->add_option("--max-k", max_k, "Largest k to check")->required();
    lemma->add_option("--threads", threads, "Worker threads (0 = all cores)");

    std::size_t samples = 0;
    std::uint64_t seed = 0;
    bool mutate = false;
    auto* norms = app.add_subcommand("check-norms", "Certify the 1-norm product inequalities on random rationals");
    norms->add_option("--samples", samples, "Number of random pairs")->required()->check(CLI::PositiveNumber);
    norms->add_option("--seed", seed, "SplitMix64 seed");
    norms->add_flag("--mutate", mutate, "Harness self-test: replace |zw|_1 by 0.49 |z|_1 |w|_1");

    std::string root_c;
    int root_n = 0;
    auto* nth = app.add_subcommand("nth-root", "Positive real nth root of c > 0");
    nth->add_option("c", root_c, "Positive number")->required();
    nth->add_option("n", root_n, "Root index >= 2")->required();
    add_config_options(nth, flags);

    std::string csv_path;
    std::string trace_start;
    auto* trace = app.add_subcommand("trace", "Export the descent trace toward the first root as CSV");
    add_source_options(trace, source);
    add_config_options(trace, flags);
    trace->add_option("--csv", csv_path, "Output CSV path")->required();
    trace->add_option("--start", trace_start, "Starting point (\"re\" or \"re+imi\"); default: best sampled point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*solve) return exact ? run_solve<fta::Rational>(source, flags, json) : run_solve<double>(source, flags, json);

        if (*lemma) {
            if (max_k < 2) throw UsageError("--max-k must be at least 2");
            const auto report = fta::run_lemma_sweep(max_k, threads);
            for (const auto& line : report.lines) std::cout << line << '\n';
            return report.all_passed ? 0 : kExitCheckFailed;
        }

        if (*norms) {
            const auto report = fta::run_norm_checks(
                samples, seed, mutate ? fta::NormMutation::shrink_product : fta::NormMutation::none);
            std::cout << "samples=" << report.samples << " lower_failures=" << report.lower_failures
                      << " upper_failures=" << report.upper_failures
                      << " conjugate_failures=" << report.conjugate_failures << '\n';
            for (const auto& f : report.first_failures) std::cout << "FAIL " << f << '\n';
            std::cout << (report.passed() ? "all checks passed" : "checks FAILED") << '\n';
            return report.passed() ? 0 : kExitCheckFailed;
        }

        if (*nth) {
            double c = 0;
            try {
                c = fta::to_double(fta::parse_rational(root_c));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            if (!(c > 0)) throw UsageError("c must be positive");
            if (root_n < 2) throw UsageError("n must be at least 2");
            const auto cfg = make_config<double>(flags);
            try {
                std::cout << fta::to_string(fta::positive_nth_root(c, root_n, cfg)) << '\n';
            } catch (const fta::NonConvergence<double>& e) {
                std::cerr << "error: " << e.what() << '\n';
                return kExitNoConvergence;
            } catch (const std::runtime_error& e) {
                std::cerr << "error: " << e.what() << '\n';
                return kExitNoConvergence;
            }
            return 0;
        }

        if (*trace) return run_trace(source, flags, csv_path, trace_start);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
