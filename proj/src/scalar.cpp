#include "fta/scalar.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

namespace fta {

double to_double(const Rational& q) { return q.get_d(); }

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw ParseError("non-finite value has no rational form");
    return Rational(x);
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw ParseError("malformed integer '" + std::string(s) + "'");
    mpz_class v(std::string(s), 10);
    return negative ? mpz_class(-v) : v;
}

// [sign] digits [. digits] [e [sign] digits]
Rational parse_decimal(std::string_view s) {
    const std::string original(s);
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        const auto exp_text = s.substr(e + 1);
        std::string_view digits = exp_text;
        if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) digits.remove_prefix(1);
        if (!all_digits(digits)) throw ParseError("malformed number '" + original + "'");
        const char* first = exp_text.data() + (exp_text.front() == '+' ? 1 : 0);
        auto [ptr, ec] = std::from_chars(first, exp_text.data() + exp_text.size(), exponent);
        if (ec != std::errc() || exponent > 4096 || exponent < -4096)
            throw ParseError("exponent out of range in '" + original + "'");
        s = s.substr(0, e);
    }
    std::string mantissa;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        const auto whole = s.substr(0, dot);
        const auto frac = s.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
            (whole.empty() && frac.empty()))
            throw ParseError("malformed number '" + original + "'");
        mantissa = std::string(whole) + std::string(frac);
        exponent -= static_cast<long>(frac.size());
    } else {
        if (!all_digits(s)) throw ParseError("malformed number '" + original + "'");
        mantissa = std::string(s);
    }
    mpz_class num(mantissa, 10);
    if (negative) num = -num;
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    Rational q = exponent < 0 ? Rational(num, ten_pow) : Rational(num * ten_pow);
    q.canonicalize();
    return q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty number");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const mpz_class num = parse_integer(text.substr(0, slash));
        const mpz_class den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    return parse_decimal(text);
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(double x) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), ptr);
}

}  // namespace fta
