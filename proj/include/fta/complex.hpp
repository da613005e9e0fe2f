#pragma once

#include <ostream>

#include "fta/scalar.hpp"

namespace fta {

/// A complex number over one of the scalar backends. Values are immutable in
/// practice: every operation returns a fresh value.
template <OrderedField T>
struct Complex {
    T re{0};
    T im{0};

    Complex() = default;
    Complex(T r) : re(std::move(r)), im(0) {}
    Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

    static Complex i() { return Complex(T(0), T(1)); }

    bool is_zero() const { return fta::is_zero(re) && fta::is_zero(im); }

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re == b.re && a.im == b.im;
    }
};

template <OrderedField T>
Complex<T> operator+(const Complex<T>& z, const Complex<T>& w) {
    return {T(z.re + w.re), T(z.im + w.im)};
}

template <OrderedField T>
Complex<T> operator-(const Complex<T>& z, const Complex<T>& w) {
    return {T(z.re - w.re), T(z.im - w.im)};
}

template <OrderedField T>
Complex<T> operator-(const Complex<T>& z) {
    return {T(-z.re), T(-z.im)};
}

template <OrderedField T>
Complex<T> operator*(const Complex<T>& z, const Complex<T>& w) {
    return {T(z.re * w.re - z.im * w.im), T(z.re * w.im + z.im * w.re)};
}

template <OrderedField T>
Complex<T> conj(const Complex<T>& z) {
    return {z.re, T(-z.im)};
}

/// z / w computed as (z * conj(w)) scaled by 1 / (w.re^2 + w.im^2).
/// Throws DivisionByZero when w == 0.
template <OrderedField T>
Complex<T> operator/(const Complex<T>& z, const Complex<T>& w) {
    const T denom = T(w.re * w.re + w.im * w.im);
    if (fta::is_zero(denom)) throw DivisionByZero();
    const T inv = T(T(1) / denom);
    const Complex<T> num = z * conj(w);
    return {T(num.re * inv), T(num.im * inv)};
}

template <OrderedField T>
Complex<T> scale(const Complex<T>& z, const T& s) {
    return {T(z.re * s), T(z.im * s)};
}

/// |Re z| + |Im z|.
template <OrderedField T>
T one_norm(const Complex<T>& z) {
    return T(abs_value(z.re) + abs_value(z.im));
}

/// z * conj(z) as a real scalar (the squared Euclidean modulus, no root taken).
template <OrderedField T>
T norm_squared(const Complex<T>& z) {
    return T(z.re * z.re + z.im * z.im);
}

template <OrderedField T>
Complex<T> power(const Complex<T>& z, unsigned e) {
    Complex<T> result(T(1));
    for (unsigned j = 0; j < e; ++j) result = result * z;
    return result;
}

template <OrderedField T>
Complex<T> to_backend(const Complex<Rational>& z) {
    return {scalar_from_rational<T>(z.re), scalar_from_rational<T>(z.im)};
}

inline Complex<double> to_float(const Complex<Rational>& z) { return to_backend<double>(z); }
inline Complex<double> to_float(const Complex<double>& z) { return z; }

template <OrderedField T>
std::ostream& operator<<(std::ostream& os, const Complex<T>& z) {
    return os << '[' << to_string(z.re) << ", " << to_string(z.im) << ']';
}

/// Outcome of checking |z|₁|w|₁/2 <= |zw|₁ <= |z|₁|w|₁ together with
/// |conj z|₁ = |z|₁ on one pair.
template <OrderedField T>
struct NormProductVerdict {
    T lower;     // |z|₁|w|₁ / 2
    T product;   // |zw|₁
    T upper;     // |z|₁|w|₁
    bool lower_holds = false;
    bool upper_holds = false;
    bool conjugate_holds = false;

    bool holds() const { return lower_holds && upper_holds && conjugate_holds; }
    bool lower_tight() const { return lower == product; }
    bool upper_tight() const { return upper == product; }
};

template <OrderedField T>
NormProductVerdict<T> check_norm_product(const Complex<T>& z, const Complex<T>& w) {
    NormProductVerdict<T> v;
    v.upper = T(one_norm(z) * one_norm(w));
    v.lower = T(v.upper / T(2));
    v.product = one_norm(z * w);
    v.lower_holds = !(v.product < v.lower);
    v.upper_holds = !(v.upper < v.product);
    v.conjugate_holds = one_norm(conj(z)) == one_norm(z) && one_norm(conj(w)) == one_norm(w);
    return v;
}

}  // namespace fta
