#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fta/complex.hpp"

namespace fta {

class DegreeError : public std::invalid_argument {
  public:
    DegreeError() : std::invalid_argument("degree must be ≥ 1") {}
};

/// Complex polynomial a0 + a1 z + ... + an z^n with an != 0. Coefficients
/// are stored in ascending powers; trailing (leading-power) zeros are trimmed
/// on construction.
template <OrderedField T>
class Polynomial {
  public:
    using value_type = Complex<T>;

    explicit Polynomial(std::vector<Complex<T>> coeffs) : coeffs_(std::move(coeffs)) {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
        if (coeffs_.empty()) throw std::invalid_argument("zero polynomial has no degree");
    }

    Polynomial(std::initializer_list<Complex<T>> coeffs)
        : Polynomial(std::vector<Complex<T>>(coeffs)) {}

    std::size_t degree() const { return coeffs_.size() - 1; }
    std::span<const Complex<T>> coeffs() const { return coeffs_; }
    const Complex<T>& operator[](std::size_t j) const { return coeffs_[j]; }
    const Complex<T>& leading() const { return coeffs_.back(); }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

  private:
    std::vector<Complex<T>> coeffs_;
};

/// Monic polynomial with the given roots, expanded by repeated multiplication
/// with (z - r).
template <OrderedField T>
Polynomial<T> from_roots(std::span<const Complex<T>> roots) {
    std::vector<Complex<T>> c{Complex<T>(T(1))};
    for (const auto& r : roots) {
        std::vector<Complex<T>> next(c.size() + 1);
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j + 1] = next[j + 1] + c[j];
            next[j] = next[j] - r * c[j];
        }
        c = std::move(next);
    }
    return Polynomial<T>(std::move(c));
}

/// Horner evaluation.
template <OrderedField T>
Complex<T> evaluate(const Polynomial<T>& p, const Complex<T>& z) {
    const auto c = p.coeffs();
    Complex<T> acc = c.back();
    for (std::size_t j = c.size() - 1; j-- > 0;) acc = acc * z + c[j];
    return acc;
}

/// f(z) = P(z) * conj(P(z)), real and nonnegative.
template <OrderedField T>
T objective(const Polynomial<T>& p, const Complex<T>& z) {
    const Complex<T> v = evaluate(p, z);
    const Complex<T> f = v * conj(v);
    // re*(-im) + im*re vanishes exactly in both backends.
    if (!fta::is_zero(f.im)) throw std::logic_error("objective has a nonzero imaginary part");
    return f.re;
}

/// (sum_j |a_j|₁)^2, the reference magnitude for residual tolerances.
template <OrderedField T>
T coefficient_scale(const Polynomial<T>& p) {
    T s(0);
    for (const auto& a : p.coeffs()) s = T(s + one_norm(a));
    return T(s * s);
}

/// Coefficients of h -> P(z0 + h), obtained by n rounds of synthetic division
/// by (z - z0); the remainder of round j is the coefficient of h^j.
template <OrderedField T>
std::vector<Complex<T>> shifted_coefficients(const Polynomial<T>& p, const Complex<T>& z0) {
    std::vector<Complex<T>> b(p.coeffs().begin(), p.coeffs().end());
    const std::size_t n = p.degree();
    for (std::size_t round = 0; round < n; ++round) {
        for (std::size_t j = n; j-- > round;) b[j] = b[j] + z0 * b[j + 1];
    }
    return b;
}

/// P(z0 + h) = base_value + h^order * quotient(h), quotient(0) != 0.
template <OrderedField T>
struct ShiftDecomposition {
    Complex<T> base_value;
    std::size_t order = 0;
    Polynomial<T> quotient;
};

/// Relative threshold below which a shifted coefficient counts as zero when
/// picking the order on the float backend.
inline constexpr double kOrderThreshold = 0x1p-40;

template <OrderedField T>
ShiftDecomposition<T> taylor_shift(const Polynomial<T>& p, const Complex<T>& z0) {
    if (p.degree() < 1) throw DegreeError();
    auto c = shifted_coefficients(p, z0);
    const std::size_t n = p.degree();

    std::size_t k = 0;
    if constexpr (is_exact_v<T>) {
        for (k = 1; c[k].is_zero(); ++k) {}
    } else {
        // Scale-relative test against the non-constant part; c[n] = a_n is
        // never zero so the max is positive and the loop stops by k = n.
        T largest(0);
        for (std::size_t j = 1; j <= n; ++j) largest = std::max(largest, one_norm(c[j]));
        const T cutoff = T(kOrderThreshold * largest);
        for (k = 1; k < n && !(cutoff < one_norm(c[k])); ++k) {}
    }
    std::vector<Complex<T>> q(c.begin() + static_cast<std::ptrdiff_t>(k), c.end());
    return {c[0], k, Polynomial<T>(std::move(q))};
}

/// Lower bound on f(z) as a function of t = |z|₁:
///   |a_n|₁² t^{2n} / 2^{2n+1} - sum_{0<=j<k<=n} 2 |a_j|₁ |a_k|₁ t^{j+k}.
template <OrderedField T>
T growth_bound(const Polynomial<T>& p, const T& t) {
    const std::size_t n = p.degree();
    std::vector<T> norms;
    norms.reserve(n + 1);
    for (const auto& a : p.coeffs()) norms.push_back(one_norm(a));

    std::vector<T> tpow(2 * n + 1);
    tpow[0] = T(1);
    for (std::size_t m = 1; m <= 2 * n; ++m) tpow[m] = T(tpow[m - 1] * t);

    T bound = T(norms[n] * norms[n] * tpow[2 * n] / power(T(2), static_cast<unsigned>(2 * n + 1)));
    for (std::size_t k = 1; k <= n; ++k) {
        if (fta::is_zero(norms[k])) continue;
        for (std::size_t j = 0; j < k; ++j) {
            bound = T(bound - T(2) * norms[j] * norms[k] * tpow[j + k]);
        }
    }
    return bound;
}

/// Smallest R in {1, 2, 4, ...} whose growth bound strictly exceeds f(0).
/// The bound only grows past that point, so every global minimizer of f lies
/// in |z|₁ <= R.
template <OrderedField T>
T growth_radius(const Polynomial<T>& p) {
    if (p.degree() < 1) throw DegreeError();
    const T f0 = objective(p, Complex<T>(T(0)));
    T r(1);
    while (!(f0 < growth_bound(p, r))) r = T(r * T(2));
    return r;
}

template <OrderedField T>
struct Deflation {
    Polynomial<T> quotient;
    Complex<T> remainder;  // equals P(root)
};

/// Synthetic division by (z - root).
template <OrderedField T>
Deflation<T> deflate(const Polynomial<T>& p, const Complex<T>& root) {
    if (p.degree() < 1) throw DegreeError();
    const auto a = p.coeffs();
    const std::size_t n = p.degree();
    std::vector<Complex<T>> b(n);
    b[n - 1] = a[n];
    for (std::size_t j = n - 1; j-- > 0;) b[j] = a[j + 1] + root * b[j + 1];
    Complex<T> rem = a[0] + root * b[0];
    return {Polynomial<T>(std::move(b)), std::move(rem)};
}

}  // namespace fta
