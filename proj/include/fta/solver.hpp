#pragma once

// Root finding by descent on f(z) = P(z) conj(P(z)).
//
// At a point z0 with P(z0 + h) = P(z0) + h^k Q(h), the expansion
//   f(z0 + r zeta) - f(z0) = 2 r^k Re[alpha zeta^k] + O(r^{k+1}),
//   alpha = conj(P(z0)) Q(0),
// shows that any zeta with Re[alpha zeta^k] < 0 is a descent direction for
// small r. The Estermann candidate set always contains one when alpha != 0, so
// a backtracking search along it strictly decreases f until P(z0) = 0.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fta/estermann.hpp"
#include "fta/polynomial.hpp"

namespace fta {

template <OrderedField T>
struct SolverConfig {
    /// Converged once f(z) <= residual_tol^2 * coefficient_scale(P).
    T residual_tol = scalar_from_double<T>(1e-9);
    /// Trial step length at the start of each backtracking search.
    T step_init = T(1);
    /// Factor applied to the step after each failed trial.
    T step_shrink = scalar_from_double<T>(0.5);
    int max_outer = 10000;
    int max_backtracks = 200;
    /// Extra descent iterations on the original polynomial for each root
    /// found on a deflated one.
    int polish_iters = 5;

    void validate() const {
        if (!(T(0) < step_shrink) || !(step_shrink < T(1)))
            throw std::invalid_argument("step_shrink must lie in (0, 1)");
        if (!(T(0) < residual_tol)) throw std::invalid_argument("residual_tol must be positive");
        if (!(T(0) < step_init)) throw std::invalid_argument("step_init must be positive");
        if (max_outer <= 0 || max_backtracks <= 0) throw std::invalid_argument("iteration limits must be positive");
        if (polish_iters < 0) throw std::invalid_argument("polish_iters must be nonnegative");
    }
};

/// One accepted step of the descent.
template <OrderedField T>
struct DescentStep {
    Complex<T> z;  // point the step starts from
    T f_value;     // f(z)
    std::size_t k = 0;
    Complex<T> alpha;  // conj(P(z)) Q(0)
    DirectionCandidate<T> zeta;
    T r_accepted;
    int backtracks = 0;
    /// Majorant M for this step (see certified_decrease_bound).
    T decrease_bound;
};

template <OrderedField T>
struct DescentTrace {
    std::vector<DescentStep<T>> steps;
    Complex<T> final_z;
    T final_f;
};

template <OrderedField T>
struct DescentOutcome {
    Complex<T> root;
    DescentTrace<T> trace;
};

template <OrderedField T>
struct RootResult {
    std::vector<Complex<T>> roots;  // ascending by (Re, Im)
    /// |P(root)|₁ against the original polynomial, aligned with `roots`.
    std::vector<T> residual_one_norms;
    std::vector<DescentTrace<T>> traces;  // only filled when requested
    std::size_t iterations = 0;
    std::size_t backtracks = 0;
};

/// Descent stopped without reaching the residual target. Carries the best
/// point reached, its trace, and any roots already found.
template <OrderedField T>
class NonConvergence : public std::runtime_error {
  public:
    NonConvergence(const std::string& what, Complex<T> best_z, DescentTrace<T> trace)
        : std::runtime_error(what), best_z(std::move(best_z)), trace(std::move(trace)) {}

    Complex<T> best_z;
    DescentTrace<T> trace;
    RootResult<T> partial;
};

/// Majorant M with
///   max(|P(z0) zeta^{k+1} R(r zeta)|₁, |zeta^k Q(r zeta)|₁²) <= M  for r in (0, 1),
/// where Q(h) = Q(0) + h R(h). Bounded through coefficient 1-norms:
///   M = max(|P(z0)|₁ |zeta|₁^{k+1} sum_j |R_j|₁ s^j, (|zeta|₁^k sum_j |Q_j|₁ s^j)^2),
///   s = max(1, |zeta|₁).
/// For any r in (0, 1) at a local minimum this yields -2 Re[alpha zeta^k] <= 3 r M.
template <OrderedField T>
T certified_decrease_bound(const ShiftDecomposition<T>& shift, const DirectionCandidate<T>& zeta) {
    const T zn = one_norm(zeta.zeta);
    const T s = zn < T(1) ? T(1) : zn;
    const auto q = shift.quotient.coeffs();
    T q_sum(0), r_sum(0), s_pow(1);
    for (std::size_t j = 0; j < q.size(); ++j) {
        q_sum = T(q_sum + one_norm(q[j]) * s_pow);
        s_pow = T(s_pow * s);
    }
    s_pow = T(1);
    for (std::size_t j = 1; j < q.size(); ++j) {
        r_sum = T(r_sum + one_norm(q[j]) * s_pow);
        s_pow = T(s_pow * s);
    }
    const unsigned k = static_cast<unsigned>(shift.order);
    const T first = T(one_norm(shift.base_value) * power(zn, k + 1) * r_sum);
    const T inner = T(power(zn, k) * q_sum);
    const T second = T(inner * inner);
    return second < first ? first : second;
}

/// -2 Re[alpha zeta^k] <= 3 r M, required for steps with r < 1.
template <OrderedField T>
bool decrease_certificate_holds(const DescentStep<T>& step) {
    if (!(step.r_accepted < T(1))) return true;
    const T lead = (step.alpha * step.zeta.zeta_pow_k).re;
    return !(T(T(3) * step.r_accepted * step.decrease_bound) < T(T(-2) * lead));
}

namespace detail {

template <OrderedField T>
class CandidateCache {
  public:
    const std::vector<DirectionCandidate<T>>& get(std::size_t k) {
        if (k >= cache_.size()) cache_.resize(k + 1);
        if (!cache_[k]) cache_[k] = candidate_set<T>(static_cast<int>(k));
        return *cache_[k];
    }

  private:
    std::vector<std::optional<std::vector<DirectionCandidate<T>>>> cache_;
};

/// One backtracking search from z. Returns nullopt when no trial within the
/// budget achieves the sufficient decrease
///   f(z + r zeta) <= f(z) - 1/2 r^k |Re[alpha zeta^k]|   (and strictly below f(z)).
template <OrderedField T>
std::optional<std::pair<DescentStep<T>, T>> backtracking_step(const Polynomial<T>& p, const Complex<T>& z,
                                                              const T& f, const SolverConfig<T>& cfg,
                                                              CandidateCache<T>& cache) {
    const auto shift = taylor_shift(p, z);
    const Complex<T> alpha = conj(shift.base_value) * shift.quotient[0];
    if (alpha.is_zero()) return std::nullopt;
    const auto& candidates = cache.get(shift.order);
    DirectionCandidate<T> zeta = pick_descent_direction<T>(alpha, std::span(candidates));
    const T lead = (alpha * zeta.zeta_pow_k).re;
    const T half_lead = T(abs_value(lead) / T(2));
    const unsigned k = static_cast<unsigned>(shift.order);

    T r = cfg.step_init;
    for (int b = 0; b <= cfg.max_backtracks; ++b) {
        const Complex<T> trial = z + scale(zeta.zeta, r);
        if (trial == z) break;
        const T f_trial = objective(p, trial);
        if (f_trial < f && !(T(f - power(r, k) * half_lead) < f_trial)) {
            DescentStep<T> step{z, f, shift.order, alpha, zeta, r, b, certified_decrease_bound(shift, zeta)};
            return std::make_pair(std::move(step), f_trial);
        }
        r = T(r * cfg.step_shrink);
    }
    return std::nullopt;
}

/// Descent with an explicit residual target; at most `budget` accepted steps.
/// Returns whether the target was met.
template <OrderedField T>
bool run_descent(const Polynomial<T>& p, Complex<T>& z, T& f, const T& target, int budget,
                 const SolverConfig<T>& cfg, DescentTrace<T>& trace) {
    CandidateCache<T> cache;
    f = objective(p, z);
    for (int outer = 0; outer < budget; ++outer) {
        if (!(target < f)) break;
        auto step = backtracking_step(p, z, f, cfg, cache);
        if (!step) break;
        z = z + scale(step->first.zeta.zeta, step->first.r_accepted);
        f = step->second;
        trace.steps.push_back(std::move(step->first));
    }
    trace.final_z = z;
    trace.final_f = f;
    return !(target < f);
}

}  // namespace detail

/// Minimizes f from z_start until f(z) <= residual_tol^2 * coefficient_scale(P).
/// Throws NonConvergence when max_outer is exhausted or no further descent step
/// can be found before the target is met.
template <OrderedField T>
DescentOutcome<T> descend_to_root(const Polynomial<T>& p, const Complex<T>& z_start, const SolverConfig<T>& cfg) {
    if (p.degree() < 1) throw DegreeError();
    cfg.validate();
    const T target = T(cfg.residual_tol * cfg.residual_tol * coefficient_scale(p));
    Complex<T> z = z_start;
    T f(0);
    DescentTrace<T> trace;
    if (!detail::run_descent(p, z, f, target, cfg.max_outer, cfg, trace)) {
        const bool exhausted = trace.steps.size() >= static_cast<std::size_t>(cfg.max_outer);
        throw NonConvergence<T>(exhausted ? "descent did not converge within max_outer iterations"
                                          : "descent stalled above the residual target",
                                z, std::move(trace));
    }
    return {z, std::move(trace)};
}

/// Best objective among 0 and the axis/corner points {±R, ±iR, ±R±iR} / 2^m,
/// m = 0..4, where R = growth_radius(P). Ties keep the earlier point.
template <OrderedField T>
Complex<T> starting_point(const Polynomial<T>& p) {
    const T radius = growth_radius(p);
    Complex<T> best(T(0));
    T best_f = objective(p, best);
    T scale_m = radius;
    for (int m = 0; m <= 4; ++m) {
        const T neg = T(-scale_m);
        const Complex<T> pts[] = {{scale_m, T(0)}, {neg, T(0)}, {T(0), scale_m}, {T(0), neg},
                                  {scale_m, scale_m}, {scale_m, neg}, {neg, scale_m}, {neg, neg}};
        for (const auto& z : pts) {
            const T f = objective(p, z);
            if (f < best_f) {
                best = z;
                best_f = f;
            }
        }
        scale_m = T(scale_m / T(2));
    }
    return best;
}

/// All n roots: zeros at the origin first, then descent on successive
/// deflations, each root polished on the original polynomial.
/// The exact backend is limited to degree <= 4 (rational growth).
template <OrderedField T>
RootResult<T> find_all_roots(const Polynomial<T>& p, const SolverConfig<T>& cfg, bool keep_traces = false) {
    if (p.degree() < 1) throw DegreeError();
    if constexpr (is_exact_v<T>) {
        if (p.degree() > 4) throw std::invalid_argument("exact solver mode is limited to degree <= 4");
    }
    cfg.validate();

    RootResult<T> result;
    const auto coeffs = p.coeffs();
    std::size_t zeros = 0;
    while (coeffs[zeros].is_zero()) ++zeros;
    result.roots.assign(zeros, Complex<T>(T(0)));

    auto record = [&](DescentTrace<T>&& t) {
        result.iterations += t.steps.size();
        for (const auto& s : t.steps) result.backtracks += static_cast<std::size_t>(s.backtracks);
        if (keep_traces) result.traces.push_back(std::move(t));
    };

    if (zeros < p.degree()) {
        Polynomial<T> current(std::vector<Complex<T>>(coeffs.begin() + static_cast<std::ptrdiff_t>(zeros), coeffs.end()));
        while (current.degree() >= 1) {
            DescentOutcome<T> found;
            try {
                found = descend_to_root(current, starting_point(current), cfg);
            } catch (NonConvergence<T>& e) {
                record(DescentTrace<T>(e.trace));
                e.partial = result;
                throw;
            }
            record(std::move(found.trace));

            Complex<T> root = found.root;
            T f(0);
            DescentTrace<T> polish;
            detail::run_descent(p, root, f, T(0), cfg.polish_iters, cfg, polish);
            record(std::move(polish));

            result.roots.push_back(root);
            current = deflate(current, root).quotient;
        }
    }

    std::sort(result.roots.begin(), result.roots.end(), [](const Complex<T>& a, const Complex<T>& b) {
        if (a.re < b.re) return true;
        if (b.re < a.re) return false;
        return a.im < b.im;
    });
    for (const auto& r : result.roots) result.residual_one_norms.push_back(one_norm(evaluate(p, r)));
    return result;
}

/// The positive real x with x^n = c, read off the roots of z^n - c.
template <OrderedField T>
T positive_nth_root(const T& c, int n, const SolverConfig<T>& cfg) {
    if (!(T(0) < c)) throw std::invalid_argument("nth root needs c > 0");
    if (n < 2) throw std::invalid_argument("nth root needs n >= 2");
    std::vector<Complex<T>> coeffs(static_cast<std::size_t>(n) + 1);
    coeffs[0] = Complex<T>(T(-c));
    coeffs[static_cast<std::size_t>(n)] = Complex<T>(T(1));
    const Polynomial<T> p(std::move(coeffs));
    const auto result = find_all_roots(p, cfg);

    const Complex<T>* best = nullptr;
    for (const auto& r : result.roots) {
        if (!(T(0) < r.re)) continue;
        if (best == nullptr || abs_value(r.im) < abs_value(best->im)) best = &r;
    }
    if (best == nullptr) throw std::runtime_error("no root with positive real part");
    const T x = best->re;
    const T residual = abs_value(T(power(x, static_cast<unsigned>(n)) - c));
    if (T(cfg.residual_tol * (T(1) + c)) < residual)
        throw std::runtime_error("positive root residual exceeds tolerance");
    return x;
}

}  // namespace fta
