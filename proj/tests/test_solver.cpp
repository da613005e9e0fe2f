#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"

#include "fta/random.hpp"
#include "fta/solver.hpp"
#include "support/oracles.hpp"

using fta::Complex;
using fta::Polynomial;
using fta::Rational;
using CD = Complex<double>;
using CQ = Complex<Rational>;
using PD = Polynomial<double>;

namespace {

bool contains_near(const std::vector<CD>& roots, const CD& z, double tol) {
    return std::any_of(roots.begin(), roots.end(), [&](const CD& r) { return fta::one_norm(r - z) <= tol; });
}

std::vector<CD> random_roots(fta::SplitMix64& rng, int n) {
    std::vector<CD> r;
    for (int i = 0; i < n; ++i) r.push_back({rng.uniform(-2, 2), rng.uniform(-2, 2)});
    return r;
}

}  // namespace

TEST_CASE("config validation") {
    fta::SolverConfig<double> cfg;
    CHECK_NOTHROW(cfg.validate());
    CHECK(cfg.residual_tol == 1e-9);
    CHECK(cfg.step_init == 1.0);
    CHECK(cfg.step_shrink == 0.5);
    CHECK(cfg.max_outer == 10000);
    CHECK(cfg.max_backtracks == 200);

    cfg.step_shrink = 1.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.step_shrink = 0.5;
    cfg.residual_tol = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.residual_tol = 1e-9;
    cfg.max_outer = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("descend on a linear polynomial") {
    // f(z) = |z - 2|^2: from 0 the first candidate +1 is accepted at r = 1
    // twice (f: 4 -> 1 -> 0).
    const PD p{CD(-2), CD(1)};
    const auto out = fta::descend_to_root(p, CD(0), fta::SolverConfig<double>{});
    CHECK(out.root == CD(2));
    REQUIRE(out.trace.steps.size() == 2);
    CHECK(out.trace.steps[0].alpha == CD(-2));
    CHECK(out.trace.steps[0].zeta.zeta == CD(1));
    CHECK(out.trace.steps[0].r_accepted == 1.0);
    CHECK(out.trace.steps[1].f_value == 1.0);

    const Polynomial<Rational> pq{CQ(Rational(-2)), CQ(Rational(1))};
    const auto exact = fta::descend_to_root(pq, CQ(), fta::SolverConfig<Rational>{});
    CHECK(exact.root == CQ(Rational(2)));
    CHECK(exact.trace.final_f == 0);
}

TEST_CASE("descend on z^2 + 1") {
    const PD p{CD(1), CD(0), CD(1)};
    const fta::SolverConfig<double> cfg;
    const auto out = fta::descend_to_root(p, CD(1), cfg);
    CHECK((fta::one_norm(out.root - CD(0, 1)) < 1e-8 || fta::one_norm(out.root - CD(0, -1)) < 1e-8));
    CHECK(fta::one_norm(fta::evaluate(p, out.root)) <= 1e-9 * fta::coefficient_scale(p));
    for (std::size_t j = 1; j < out.trace.steps.size(); ++j)
        CHECK(out.trace.steps[j].f_value < out.trace.steps[j - 1].f_value);
}

TEST_CASE("descend from a root takes no steps") {
    const PD p{CD(1), CD(0), CD(1)};
    const auto out = fta::descend_to_root(p, CD(0, 1), fta::SolverConfig<double>{});
    CHECK(out.root == CD(0, 1));
    CHECK(out.trace.steps.empty());
}

TEST_CASE("non-convergence carries the best point and trace") {
    const PD p{CD(-6), CD(11), CD(-6), CD(1)};
    fta::SolverConfig<double> cfg;
    cfg.max_outer = 2;
    try {
        fta::descend_to_root(p, CD(10), cfg);
        FAIL("expected NonConvergence");
    } catch (const fta::NonConvergence<double>& e) {
        CHECK(e.trace.steps.size() == 2);
        CHECK(e.best_z == e.trace.final_z);
        CHECK(fta::objective(p, e.best_z) < fta::objective(p, CD(10)));
    }
    // Roots off the sampled start grid, so one step cannot finish the job.
    const auto generic = fta::from_roots<double>(std::vector<CD>{CD(0.3, 0.7), CD(-1.1, 0.2), CD(0.9, -1.3)});
    cfg.max_outer = 1;
    try {
        fta::find_all_roots(generic, cfg);
        FAIL("expected NonConvergence");
    } catch (const fta::NonConvergence<double>& e) {
        CHECK(e.partial.roots.empty());
    }
}

TEST_CASE("certified decrease bound") {
    // Q constant: R is empty, the bound is (|zeta|^k |Q0|)^2.
    const PD linear{CD(-2), CD(1)};
    const auto s1 = fta::taylor_shift(linear, CD(0));
    const fta::DirectionCandidate<double> plus_one{CD(1), CD(1)};
    CHECK(fta::certified_decrease_bound(s1, plus_one) == 1.0);

    // z^2 + 1 at 1: P(1 + h) = 2 + 2h + h^2, so k = 1, Q = 2 + h, R = 1 and
    // M = max(2 * 1 * 1, (1 * (2 + 1))^2) = 9.
    const Polynomial<Rational> p{CQ(Rational(1)), CQ(Rational(0)), CQ(Rational(1))};
    const auto s = fta::taylor_shift(p, CQ(Rational(1)));
    REQUIRE(s.order == 1);
    const auto zeta = fta::pick_descent_direction<Rational>(fta::conj(s.base_value) * s.quotient[0], 1);
    CHECK(zeta.zeta == CQ(Rational(-1)));
    CHECK(fta::certified_decrease_bound(s, zeta) == 9);
}

TEST_CASE("find_all_roots examples") {
    const fta::SolverConfig<double> cfg;
    auto r = fta::find_all_roots(PD{CD(1), CD(0), CD(1)}, cfg);
    REQUIRE(r.roots.size() == 2);
    CHECK(contains_near(r.roots, CD(0, 1), 1e-9));
    CHECK(contains_near(r.roots, CD(0, -1), 1e-9));

    r = fta::find_all_roots(PD{CD(-6), CD(11), CD(-6), CD(1)}, cfg);
    REQUIRE(r.roots.size() == 3);
    CHECK(fta::one_norm(r.roots[0] - CD(1)) < 1e-6);
    CHECK(fta::one_norm(r.roots[1] - CD(2)) < 1e-6);
    CHECK(fta::one_norm(r.roots[2] - CD(3)) < 1e-6);
    CHECK(r.residual_one_norms.size() == 3);

    r = fta::find_all_roots(PD{CD(0), CD(0), CD(0), CD(1)}, cfg);
    CHECK(r.roots == std::vector<CD>(3, CD(0)));
    CHECK(r.iterations == 0);

    // z^3 - z: one root at the origin from the shortcut, two by descent.
    r = fta::find_all_roots(PD{CD(0), CD(-1), CD(0), CD(1)}, cfg);
    REQUIRE(r.roots.size() == 3);
    CHECK(contains_near(r.roots, CD(-1), 1e-9));
    CHECK(contains_near(r.roots, CD(0), 1e-12));
    CHECK(contains_near(r.roots, CD(1), 1e-9));

    CHECK_THROWS_AS(fta::find_all_roots(PD{CD(5)}, cfg), fta::DegreeError);
}

TEST_CASE("exact solver mode") {
    const fta::SolverConfig<Rational> cfg;
    const Polynomial<Rational> p{CQ(Rational(1)), CQ(Rational(0)), CQ(Rational(1))};
    const auto r = fta::find_all_roots(p, cfg);
    CHECK(r.roots == std::vector<CQ>{CQ(Rational(0), Rational(-1)), CQ(Rational(0), Rational(1))});
    CHECK(r.residual_one_norms == std::vector<Rational>{0, 0});

    const std::vector<CQ> five(5, CQ(Rational(1)));
    CHECK_THROWS_AS(fta::find_all_roots(fta::from_roots<Rational>(five), cfg), std::invalid_argument);
}

TEST_CASE("roots are ordered by real then imaginary part") {
    fta::SplitMix64 rng(8);
    const auto roots = random_roots(rng, 6);
    const auto r = fta::find_all_roots(fta::from_roots<double>(roots), fta::SolverConfig<double>{});
    for (std::size_t j = 1; j < r.roots.size(); ++j) {
        const auto& a = r.roots[j - 1];
        const auto& b = r.roots[j];
        CHECK((a.re < b.re || (a.re == b.re && a.im <= b.im)));
    }
}

TEST_CASE("trace invariants, Vieta and the minimizer bound on random instances") {
    fta::SplitMix64 rng(77);
    const fta::SolverConfig<double> cfg;
    for (int t = 0; t < 40; ++t) {
        const int n = static_cast<int>(rng.uniform_int(1, 8));
        const auto truth = random_roots(rng, n);
        const PD p = fta::from_roots<double>(truth);
        const auto r = fta::find_all_roots(p, cfg, true);
        const double scale = fta::coefficient_scale(p);

        REQUIRE(oracle::matched_max_distance(truth, r.roots) <= 1e-6);
        for (const auto& tr : r.traces) {
            for (std::size_t j = 0; j < tr.steps.size(); ++j) {
                const auto& s = tr.steps[j];
                REQUIRE((s.alpha * s.zeta.zeta_pow_k).re < 0);
                const double next = j + 1 < tr.steps.size() ? tr.steps[j + 1].f_value : tr.final_f;
                REQUIRE(next < s.f_value);
            }
        }

        CD sum, prod(1);
        for (const auto& z : r.roots) {
            sum = sum + z;
            prod = prod * z;
        }
        const auto c = p.coeffs();
        REQUIRE(fta::one_norm(sum + c[n - 1]) <= 1e-6 * scale);
        const CD sign(n % 2 == 0 ? 1.0 : -1.0);
        REQUIRE(fta::one_norm(prod - sign * c[0]) <= 1e-6 * scale);

        const double radius = fta::growth_radius(p);
        for (const auto& z : r.roots) REQUIRE(fta::one_norm(z) <= radius);
    }
}

TEST_CASE("positive nth root") {
    const fta::SolverConfig<double> cfg;
    const double sqrt2 = fta::positive_nth_root(2.0, 2, cfg);
    CHECK(std::abs(sqrt2 - oracle::bisection_nth_root(2.0, 2)) <= 1e-9);
    CHECK(fta::positive_nth_root(4.0, 2, cfg) == 2.0);
    CHECK(fta::positive_nth_root(8.0, 3, cfg) == 2.0);
    CHECK(fta::positive_nth_root(81.0, 4, cfg) == 3.0);
    CHECK(std::abs(fta::positive_nth_root(10.0, 5, cfg) - oracle::bisection_nth_root(10.0, 5)) <= 1e-9);
    CHECK_THROWS_AS(fta::positive_nth_root(0.0, 2, cfg), std::invalid_argument);
    CHECK_THROWS_AS(fta::positive_nth_root(-4.0, 2, cfg), std::invalid_argument);
    CHECK_THROWS_AS(fta::positive_nth_root(4.0, 1, cfg), std::invalid_argument);

    CHECK(fta::positive_nth_root(Rational(9), 2, fta::SolverConfig<Rational>{}) == 3);
}
