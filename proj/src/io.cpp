#include "fta/io.hpp"

#include <cctype>
#include <ostream>

namespace fta {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// "", "+", "-" stand for an implicit unit coefficient of i.
Rational imaginary_part(std::string_view s) {
    if (s.empty() || s == "+") return Rational(1);
    if (s == "-") return Rational(-1);
    return parse_rational(s);
}

}  // namespace

Complex<Rational> parse_complex_term(std::string_view term) {
    term = trim(term);
    if (term.empty()) throw ParseError("empty coefficient");
    if (term.back() != 'i') return {parse_rational(term), Rational(0)};

    term.remove_suffix(1);
    // Split at the last sign that is neither leading nor part of an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t j = term.size(); j-- > 1;) {
        if ((term[j] == '+' || term[j] == '-') && term[j - 1] != 'e' && term[j - 1] != 'E') {
            split = j;
            break;
        }
    }
    if (split == std::string_view::npos) return {Rational(0), imaginary_part(trim(term))};
    return {parse_rational(term.substr(0, split)), imaginary_part(trim(term.substr(split)))};
}

std::vector<Complex<Rational>> parse_inline_coeffs_exact(std::string_view text) {
    std::vector<Complex<Rational>> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_complex_term(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<Complex<Rational>> coeffs_from_json_exact(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("coeffs") || !doc["coeffs"].is_array())
        throw ParseError("polynomial JSON needs a \"coeffs\" array");
    auto part = [](const nlohmann::json& v) -> Rational {
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_number_integer()) return Rational(mpz_class(v.dump(), 10));
        if (v.is_number()) return rational_from_double(v.get<double>());
        throw ParseError("coefficient parts must be numbers or strings");
    };
    std::vector<Complex<Rational>> out;
    for (const auto& pair : doc["coeffs"]) {
        if (!pair.is_array() || pair.size() != 2) throw ParseError("each coefficient must be [re, im]");
        out.push_back({part(pair[0]), part(pair[1])});
    }
    return out;
}

nlohmann::json scalar_to_json(const Rational& q) { return to_string(q); }
nlohmann::json scalar_to_json(double x) { return x; }

void write_trace_csv(std::ostream& os, const DescentTrace<double>& trace) {
    // Adding +0.0 folds signed zeros so conjugation never prints "-0".
    const auto cell = [](double v) { return to_string(v + 0.0); };
    os << kTraceCsvHeader << '\n';
    std::size_t index = 0;
    for (const auto& s : trace.steps) {
        os << index++ << ',' << cell(s.z.re) << ',' << cell(s.z.im) << ',' << cell(s.f_value) << ','
           << s.k << ',' << cell(s.alpha.re) << ',' << cell(s.alpha.im) << ','
           << cell(s.zeta.zeta.re) << ',' << cell(s.zeta.zeta.im) << ',' << cell(s.r_accepted)
           << ',' << s.backtracks << '\n';
    }
}

}  // namespace fta
