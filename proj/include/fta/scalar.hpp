#pragma once

// Scalar backends. Both backends expose exactly the four field operations and
// ordering; there is no square root or transcendental function anywhere.

#include <concepts>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fta {

/// Exact backend: arbitrary-precision rational, always kept in lowest terms
/// with a positive denominator.
using Rational = mpq_class;

/// Float backend: IEEE binary64.
using Float = double;

class DivisionByZero : public std::domain_error {
  public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

class ParseError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

template <class T>
concept OrderedField = requires(T a, T b) {
    { T(0) };
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a / b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a < b } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
};

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

/// Absolute value by sign flip.
template <OrderedField T>
T abs_value(const T& x) {
    if (x < T(0)) return T(-x);
    return x;
}

template <OrderedField T>
bool is_zero(const T& x) {
    return x == T(0);
}

template <OrderedField T>
T checked_div(const T& a, const T& b) {
    if (is_zero(b)) throw DivisionByZero();
    return T(a / b);
}

/// x^e by repeated multiplication (e >= 0).
template <OrderedField T>
T power(const T& x, unsigned e) {
    T result(1);
    T base = x;
    while (e != 0) {
        if (e & 1u) result = T(result * base);
        e >>= 1;
        if (e != 0) base = T(base * base);
    }
    return result;
}

/// Builds an integer-valued scalar.
template <OrderedField T>
T from_int(long v) {
    return T(v);
}

double to_double(const Rational& q);
inline double to_double(double x) { return x; }

/// Exact conversion of a finite double to a rational.
Rational rational_from_double(double x);

/// Parses "n", "n/d", or a decimal such as "-1.25" or "3e-2" into an exact rational.
Rational parse_rational(std::string_view text);

/// Serializes as "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& q);

/// Shortest round-trip decimal form.
std::string to_string(double x);

template <OrderedField T>
T scalar_from_double(double x) {
    if constexpr (is_exact_v<T>) {
        return rational_from_double(x);
    } else {
        return T(x);
    }
}

template <OrderedField T>
T scalar_from_rational(const Rational& q) {
    if constexpr (is_exact_v<T>) {
        return q;
    } else {
        return T(to_double(q));
    }
}

}  // namespace fta
