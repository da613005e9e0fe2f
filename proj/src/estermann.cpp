#include "fta/estermann.hpp"

#include <sstream>
#include <stdexcept>

namespace fta {

BinomialTable::BinomialTable(unsigned max_row) {
    rows_.reserve(max_row + 1);
    rows_.push_back({mpz_class(1)});
    for (unsigned m = 1; m <= max_row; ++m) {
        const auto& prev = rows_.back();
        std::vector<mpz_class> row(m + 1);
        row[0] = 1;
        row[m] = 1;
        for (unsigned j = 1; j < m; ++j) row[j] = prev[j - 1] + prev[j];
        rows_.push_back(std::move(row));
    }
}

const mpz_class& BinomialTable::operator()(unsigned m, unsigned j) const {
    if (m >= rows_.size() || j > m) throw std::out_of_range("binomial index outside table");
    return rows_[m][j];
}

DirectionCandidate<Rational> estermann_zeta(unsigned k) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("Estermann direction needs an even k >= 2");
    const Complex<Rational> base(Rational(1), Rational(1, k));
    const Complex<Rational> zeta = base * base;
    return {zeta, power(zeta, k)};
}

LemmaDirectVerdict verify_lemma_direct(unsigned k) {
    LemmaDirectVerdict v;
    v.k = k;
    v.zeta_pow_k = estermann_zeta(k).zeta_pow_k;
    v.re_negative = v.zeta_pow_k.re < 0;
    v.im_positive = v.zeta_pow_k.im > 0;
    return v;
}

namespace {

// C(2k, m) / k^m
Rational binomial_term(const BinomialTable& table, unsigned k, unsigned m, const std::vector<mpz_class>& kpow) {
    Rational t(table(2 * k, m), kpow[m]);
    t.canonicalize();
    return t;
}

}  // namespace

LemmaTermwiseVerdict verify_lemma_termwise(unsigned k, const BinomialTable& table) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("termwise check needs an even k >= 2");
    if (table.max_row() < 2 * k) throw std::invalid_argument("binomial table too small");

    std::vector<mpz_class> kpow(2 * k + 1);
    kpow[0] = 1;
    for (unsigned m = 1; m <= 2 * k; ++m) kpow[m] = kpow[m - 1] * k;
    auto term = [&](unsigned m) { return binomial_term(table, k, m, kpow); };

    LemmaTermwiseVerdict v;
    v.k = k;
    const Rational kq(k);

    v.head = Rational(1) - term(2) + term(4);
    v.head_bound = Rational(-3, 2) * (5 * kq - 3) / (6 * kq * kq);
    const Rational factored =
        Rational(1) - (2 - 1 / kq) * (Rational(2, 3) + 5 / (6 * kq) - 1 / (2 * kq * kq));
    v.head_identity = v.head == factored;
    v.head_negative = v.head < 0;
    v.head_within_bound = v.head <= v.head_bound;

    Rational re = v.head;
    for (unsigned j = 3; j + 1 <= k; j += 2) {
        const Rational pair = -term(2 * j) + term(2 * j + 2);
        if (!(pair < 0)) v.failing_real_pairs.push_back(j);
        re += pair;
    }
    Rational im(0);
    for (unsigned j = 1; j + 1 <= k; j += 2) {
        const Rational pair = term(2 * j - 1) - term(2 * j + 1);
        if (!(pair > 0)) v.failing_imag_pairs.push_back(j);
        im += pair;
    }
    v.expansion = {re, im};
    v.matches_direct = v.expansion == verify_lemma_direct(k).zeta_pow_k;
    return v;
}

LemmaTermwiseVerdict verify_lemma_termwise(unsigned k) {
    return verify_lemma_termwise(k, BinomialTable(2 * k));
}

std::string lemma_report_line(const LemmaDirectVerdict& direct, const LemmaTermwiseVerdict& termwise) {
    std::ostringstream os;
    os << "k=" << direct.k << " direct=" << (direct.holds() ? "OK" : "FAIL")
       << " termwise=" << (termwise.holds() ? "OK" : "FAIL") << " re=" << to_string(direct.zeta_pow_k.re)
       << " im=" << to_string(direct.zeta_pow_k.im);
    return os.str();
}

std::vector<DirectionCandidate<Rational>> exact_candidate_set(unsigned k) {
    if (k < 1) throw std::invalid_argument("candidate order must be >= 1");
    using C = Complex<Rational>;
    auto with_power = [k](const C& zeta) { return DirectionCandidate<Rational>{zeta, power(zeta, k)}; };
    if (k % 2 == 1) {
        return {with_power(C(Rational(1))), with_power(C(Rational(-1))), with_power(C(Rational(0), Rational(1))),
                with_power(C(Rational(0), Rational(-1)))};
    }
    const auto est = estermann_zeta(k);
    return {with_power(C(Rational(1))), est, {conj(est.zeta), conj(est.zeta_pow_k)}};
}

}  // namespace fta
