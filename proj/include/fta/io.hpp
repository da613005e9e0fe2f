#pragma once

// Text formats:
//   polynomial JSON  {"coeffs": [[re, im], ...]}  ascending powers; exact mode
//                    writes "num/den" strings, float mode writes numbers.
//   inline coeffs    "a0,a1,..." where each term is "re", "re+imi", "re-imi" or "imi".
//   trace CSV        step,re_z,im_z,f,k,re_alpha,im_alpha,re_zeta,im_zeta,r,backtracks

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "fta/polynomial.hpp"
#include "fta/solver.hpp"

namespace fta {

/// Parses one inline term into an exact complex value.
Complex<Rational> parse_complex_term(std::string_view term);

std::vector<Complex<Rational>> parse_inline_coeffs_exact(std::string_view text);

template <OrderedField T>
Polynomial<T> parse_inline_coeffs(std::string_view text) {
    std::vector<Complex<T>> out;
    for (const auto& c : parse_inline_coeffs_exact(text)) out.push_back(to_backend<T>(c));
    return Polynomial<T>(std::move(out));
}

/// Accepts numbers or rational strings for each part.
std::vector<Complex<Rational>> coeffs_from_json_exact(const nlohmann::json& doc);

template <OrderedField T>
Polynomial<T> polynomial_from_json(const nlohmann::json& doc) {
    std::vector<Complex<T>> out;
    if constexpr (is_exact_v<T>) {
        out = coeffs_from_json_exact(doc);
    } else {
        // Numbers are taken as-is so float documents round-trip bit for bit.
        if (!doc.is_object() || !doc.contains("coeffs") || !doc["coeffs"].is_array())
            throw ParseError("polynomial JSON needs a \"coeffs\" array");
        for (const auto& pair : doc["coeffs"]) {
            if (!pair.is_array() || pair.size() != 2) throw ParseError("each coefficient must be [re, im]");
            auto part = [](const nlohmann::json& v) -> double {
                if (v.is_number()) return v.get<double>();
                if (v.is_string()) return to_double(parse_rational(v.get<std::string>()));
                throw ParseError("coefficient parts must be numbers or strings");
            };
            out.push_back({part(pair[0]), part(pair[1])});
        }
    }
    return Polynomial<T>(std::move(out));
}

nlohmann::json scalar_to_json(const Rational& q);
nlohmann::json scalar_to_json(double x);

template <OrderedField T>
nlohmann::json complex_to_json(const Complex<T>& z) {
    return nlohmann::json::array({scalar_to_json(z.re), scalar_to_json(z.im)});
}

template <OrderedField T>
nlohmann::json polynomial_to_json(const Polynomial<T>& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& a : p.coeffs()) coeffs.push_back(complex_to_json(a));
    return {{"coeffs", coeffs}};
}

template <OrderedField T>
nlohmann::json root_result_to_json(const RootResult<T>& r, bool converged = true) {
    nlohmann::json roots = nlohmann::json::array();
    nlohmann::json residuals = nlohmann::json::array();
    for (const auto& z : r.roots) roots.push_back(complex_to_json(z));
    for (const auto& v : r.residual_one_norms) residuals.push_back(scalar_to_json(v));
    return {{"converged", converged},
            {"roots", roots},
            {"residual_one_norms", residuals},
            {"iterations", r.iterations},
            {"backtracks", r.backtracks}};
}

inline constexpr std::string_view kTraceCsvHeader =
    "step,re_z,im_z,f,k,re_alpha,im_alpha,re_zeta,im_zeta,r,backtracks";

void write_trace_csv(std::ostream& os, const DescentTrace<double>& trace);

}  // namespace fta
