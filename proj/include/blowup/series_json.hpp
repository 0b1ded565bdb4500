#pragma once

// JSON encodings.
//   Rational: canonical string ("-3/4").
//   XPoly:    array of Rational strings indexed by x-exponent.
//   TSeries:  {"variable":"t","valuation":v,"order":N,"normalization":..,"coeffs":[XPoly...]}
//             coeffs[k] belongs to t^(v+k); the zero series has v = N + 1 and no coeffs.
//   BiSeries: {"variables":["u","v"],"order":N,"normalization":"plain","coeffs":[[row 0],[row 1],...]}
//             row i lists the u^i v^j coefficients for j = 0 .. N - i.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "blowup/biseries.hpp"
#include "blowup/errors.hpp"
#include "blowup/rational.hpp"
#include "blowup/tseries.hpp"
#include "blowup/xpoly.hpp"

namespace blowup {

enum class Normalization { plain, factorial };

inline std::string to_string(Normalization n) { return n == Normalization::plain ? "plain" : "factorial"; }

inline Normalization parse_normalization(std::string_view s) {
    if (s == "plain") {
        return Normalization::plain;
    }
    if (s == "factorial") {
        return Normalization::factorial;
    }
    throw ParseError("unknown normalization '" + std::string(s) + "'");
}

inline nlohmann::json xpoly_to_json(const XPoly& p) {
    auto out = nlohmann::json::array();
    for (const auto& c : p.coefficients()) {
        out.push_back(c.str());
    }
    return out;
}

inline Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    throw ParseError("expected a rational string, got " + j.dump());
}

inline XPoly xpoly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw ParseError("expected an array of rationals for a polynomial, got " + j.dump());
    }
    std::vector<Rational> c;
    c.reserve(j.size());
    for (const auto& e : j) {
        c.push_back(rational_from_json(e));
    }
    return XPoly(std::move(c));
}

inline nlohmann::json tseries_to_json(const TSeries& s, Normalization norm = Normalization::plain) {
    nlohmann::json j;
    j["variable"] = "t";
    j["valuation"] = s.valuation();
    j["order"] = s.order();
    j["normalization"] = to_string(norm);
    auto coeffs = nlohmann::json::array();
    for (int n = s.valuation(); n <= s.order(); ++n) {
        coeffs.push_back(xpoly_to_json(norm == Normalization::factorial ? s.normalized_coeff(n) : s.coeff(n)));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline TSeries tseries_from_json(const nlohmann::json& j) {
    try {
        if (j.value("variable", std::string("t")) != "t") {
            throw ParseError("series variable must be \"t\"");
        }
        const int valuation = j.at("valuation").get<int>();
        const int order = j.at("order").get<int>();
        const Normalization norm = parse_normalization(j.value("normalization", std::string("plain")));
        const auto& coeffs = j.at("coeffs");
        if (!coeffs.is_array()) {
            throw ParseError("\"coeffs\" must be an array");
        }
        if (valuation + static_cast<int>(coeffs.size()) - 1 > order) {
            throw ParseError("more coefficients than the declared order allows");
        }
        std::vector<XPoly> c;
        int n = valuation;
        for (const auto& e : coeffs) {
            XPoly p = xpoly_from_json(e);
            if (norm == Normalization::factorial) {
                if (n < 0) {
                    throw ParseError("factorial normalization with negative exponent");
                }
                p *= Rational::factorial(static_cast<unsigned long>(n)).inverse();
            }
            c.push_back(std::move(p));
            ++n;
        }
        return TSeries::from_coefficients(valuation, std::move(c), order);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed series JSON: ") + e.what());
    }
}

inline nlohmann::json biseries_to_json(const BiSeries& s) {
    nlohmann::json j;
    j["variables"] = {"u", "v"};
    j["order"] = s.order();
    j["normalization"] = "plain";
    auto rows = nlohmann::json::array();
    for (int i = 0; i <= s.order(); ++i) {
        auto row = nlohmann::json::array();
        for (int jj = 0; i + jj <= s.order(); ++jj) {
            row.push_back(xpoly_to_json(s.at(i, jj)));
        }
        rows.push_back(std::move(row));
    }
    j["coeffs"] = std::move(rows);
    return j;
}

inline BiSeries biseries_from_json(const nlohmann::json& j) {
    try {
        if (j.value("normalization", std::string("plain")) != "plain") {
            throw ParseError("bivariate series support plain normalization only");
        }
        const int order = j.at("order").get<int>();
        const auto& rows = j.at("coeffs");
        if (!rows.is_array() || static_cast<int>(rows.size()) != order + 1) {
            throw ParseError("bivariate coefficient triangle has the wrong number of rows");
        }
        BiSeries out(order);
        for (int i = 0; i <= order; ++i) {
            const auto& row = rows[static_cast<std::size_t>(i)];
            if (!row.is_array() || static_cast<int>(row.size()) != order - i + 1) {
                throw ParseError("bivariate row " + std::to_string(i) + " has the wrong length");
            }
            for (int jj = 0; i + jj <= order; ++jj) {
                out.set(i, jj, xpoly_from_json(row[static_cast<std::size_t>(jj)]));
            }
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed bivariate series JSON: ") + e.what());
    }
}

} // namespace blowup
