#pragma once

// Estermann descent directions. For even k the direction zeta = (1 + i/k)^2
// satisfies Re[zeta^k] < 0 < Im[zeta^k]; together with zeta = 1 and the
// conjugate this gives, for every alpha != 0, a candidate with
// Re[alpha zeta^k] < 0. For odd k the four units +1, -1, +i, -i suffice.

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fta/complex.hpp"

namespace fta {

/// Pascal triangle of exact binomial coefficients C(m, j), 0 <= j <= m <= max_row.
class BinomialTable {
  public:
    explicit BinomialTable(unsigned max_row);

    unsigned max_row() const { return static_cast<unsigned>(rows_.size()) - 1; }
    const mpz_class& operator()(unsigned m, unsigned j) const;

  private:
    std::vector<std::vector<mpz_class>> rows_;
};

template <OrderedField T>
struct DirectionCandidate {
    Complex<T> zeta;
    Complex<T> zeta_pow_k;
};

/// zeta = (1 + i/k)^2 with zeta^k, both exact. k must be even and >= 2.
DirectionCandidate<Rational> estermann_zeta(unsigned k);

struct LemmaDirectVerdict {
    unsigned k = 0;
    Complex<Rational> zeta_pow_k;
    bool re_negative = false;
    bool im_positive = false;

    bool holds() const { return re_negative && im_positive; }
};

/// zeta^k by k repeated exact multiplications, then the two strict sign tests.
LemmaDirectVerdict verify_lemma_direct(unsigned k);

struct LemmaTermwiseVerdict {
    unsigned k = 0;
    /// 1 - C(2k,2)/k^2 + C(2k,4)/k^4
    Rational head;
    /// -(3/2)(5k-3)/(6k^2)
    Rational head_bound;
    /// head == 1 - (2 - 1/k)(2/3 + 5/(6k) - 1/(2k^2))
    bool head_identity = false;
    bool head_negative = false;
    bool head_within_bound = false;
    /// Odd j for which a real or imaginary pair term has the wrong sign.
    std::vector<unsigned> failing_real_pairs;
    std::vector<unsigned> failing_imag_pairs;
    /// Re and Im of (1 + i/k)^{2k} reassembled from the head and pair terms.
    Complex<Rational> expansion;
    bool matches_direct = false;

    bool holds() const {
        return head_identity && head_negative && head_within_bound && failing_real_pairs.empty() &&
               failing_imag_pairs.empty() && matches_direct;
    }
};

/// Checks the binomial expansion of (1 + i/k)^{2k} term by term:
///   head < 0 and head <= -(3/2)(5k-3)/(6k^2),
///   -C(2k,2j)/k^{2j} + C(2k,2j+2)/k^{2j+2} < 0   for odd j, 3 <= j <= k-1,
///   C(2k,2j-1)/k^{2j-1} - C(2k,2j+1)/k^{2j+1} > 0 for odd j, 1 <= j <= k-1,
/// and that the grouped sums reproduce zeta^k from verify_lemma_direct.
/// `table` must cover row 2k.
LemmaTermwiseVerdict verify_lemma_termwise(unsigned k, const BinomialTable& table);
LemmaTermwiseVerdict verify_lemma_termwise(unsigned k);

/// "k=<k> direct=OK termwise=OK re=<rational> im=<rational>"
std::string lemma_report_line(const LemmaDirectVerdict& direct, const LemmaTermwiseVerdict& termwise);

/// Candidates in fixed order: odd k -> +1, -1, +i, -i; even k -> 1, zeta, conj(zeta).
std::vector<DirectionCandidate<Rational>> exact_candidate_set(unsigned k);

template <OrderedField T>
std::vector<DirectionCandidate<T>> candidate_set(int k) {
    if (k < 1) throw std::invalid_argument("candidate order must be >= 1");
    auto exact = exact_candidate_set(static_cast<unsigned>(k));
    if constexpr (is_exact_v<T>) {
        return exact;
    } else {
        std::vector<DirectionCandidate<T>> out;
        out.reserve(exact.size());
        for (const auto& c : exact) out.push_back({to_backend<T>(c.zeta), to_backend<T>(c.zeta_pow_k)});
        return out;
    }
}

/// Candidate minimizing Re[alpha zeta^k] / (|alpha|₁ |zeta^k|₁); ties go to
/// the earliest candidate. The chosen candidate always has Re[alpha zeta^k] < 0.
template <OrderedField T>
DirectionCandidate<T> pick_descent_direction(const Complex<T>& alpha,
                                             std::span<const DirectionCandidate<T>> candidates) {
    if (alpha.is_zero()) throw std::invalid_argument("alpha is zero: the point is already a root");
    const T alpha_norm = one_norm(alpha);
    const DirectionCandidate<T>* best = nullptr;
    T best_score(0);
    for (const auto& c : candidates) {
        const T score = T((alpha * c.zeta_pow_k).re / (alpha_norm * one_norm(c.zeta_pow_k)));
        if (best == nullptr || score < best_score) {
            best = &c;
            best_score = score;
        }
    }
    if (best == nullptr || !((alpha * best->zeta_pow_k).re < T(0))) {
        throw std::runtime_error("no candidate gives a strict descent direction");
    }
    return *best;
}

template <OrderedField T>
DirectionCandidate<T> pick_descent_direction(const Complex<T>& alpha, int k) {
    const auto candidates = candidate_set<T>(k);
    return pick_descent_direction<T>(alpha, std::span<const DirectionCandidate<T>>(candidates));
}

}  // namespace fta
