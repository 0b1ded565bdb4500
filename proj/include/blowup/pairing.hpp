#pragma once

// Evaluation of the blow-up formulas on user data.
//
// A Donaldson-type linear form is represented only through its values on
// powers of x: mu_k = D(x^k z0) for a fixed implicit z0. Pairing a universal
// series in Q[x][[t]] with such moments gives a rational series in t.
//
// Evaluations:
//   even (maina)   D_c(B^2) + D_{c+tau}(S^2)
//   even (main')   D_c(B^2) + D_c(tau S^2)/2          tau-inserted moments nu_k
//   odd  (mainb)   D_c(BS' - B'S) + D_c(tau BS)
//   simple type    e^{-t^2}(a cosh^2 t + b sinh^2 t)  or  e^{-t^2}(a + d sinh(2t)/2)

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "blowup/elementary.hpp"
#include "blowup/errors.hpp"
#include "blowup/series_json.hpp"
#include "blowup/series_set.hpp"
#include "blowup/tseries.hpp"

namespace blowup::pairing {

struct MomentFunctional {
    std::string label;
    std::vector<Rational> moments;

    /// mu_k = scale * ratio^k for k < length.
    static MomentFunctional geometric(std::string label, const Rational& scale, const Rational& ratio,
                                      std::size_t length) {
        MomentFunctional m{std::move(label), {}};
        Rational v = scale;
        for (std::size_t k = 0; k < length; ++k) {
            m.moments.push_back(v);
            v *= ratio;
        }
        return m;
    }

    static MomentFunctional zero(std::string label, std::size_t length) {
        return {std::move(label), std::vector<Rational>(length)};
    }

    friend MomentFunctional operator+(const MomentFunctional& a, const MomentFunctional& b) {
        MomentFunctional out{a.label, {}};
        const std::size_t n = std::min(a.moments.size(), b.moments.size());
        for (std::size_t k = 0; k < n; ++k) {
            out.moments.push_back(a.moments[k] + b.moments[k]);
        }
        return out;
    }

    friend MomentFunctional operator*(const Rational& c, const MomentFunctional& a) {
        MomentFunctional out{a.label, {}};
        for (const auto& m : a.moments) {
            out.moments.push_back(c * m);
        }
        return out;
    }
};

enum class Provenance { maina, mainb, main_prime, corollary_even, corollary_odd };

inline std::string to_string(Provenance p) {
    switch (p) {
    case Provenance::maina:
        return "maina";
    case Provenance::mainb:
        return "mainb";
    case Provenance::main_prime:
        return "main'";
    case Provenance::corollary_even:
        return "corollary-even";
    case Provenance::corollary_odd:
        return "corollary-odd";
    }
    return "unknown";
}

struct EvalResult {
    TSeries series; ///< x-free coefficients
    Provenance provenance;
};

/// Coefficient of t^n of the result is sum_k [x^k] f_n * mu_k.
inline TSeries pair(const TSeries& f, const MomentFunctional& mu) {
    if (f.valuation() < 0) {
        throw SeriesError("pairing needs a power series (valuation >= 0)");
    }
    const int needed = f.max_x_degree() + 1;
    if (static_cast<int>(mu.moments.size()) < needed) {
        throw std::invalid_argument("functional '" + mu.label + "' has " + std::to_string(mu.moments.size()) +
                                    " moments; pairing needs at least " + std::to_string(needed));
    }
    return f.map_coefficients([&](const XPoly& p) {
        Rational acc;
        for (std::size_t k = 0; k < p.size(); ++k) {
            acc += p[k] * mu.moments[k];
        }
        return XPoly(acc);
    });
}

/// Highest x-degree of B^2, S^2, BS and the Wronskian through t^order,
/// i.e. one less than the number of moments an evaluation at that order needs.
inline int required_moments(const BlowupSeriesSet& set, int order) {
    int d = -1;
    for (SeriesId id : {SeriesId::b_squared, SeriesId::s_squared, SeriesId::bs, SeriesId::wronskian}) {
        d = std::max(d, set[id].truncated(order).max_x_degree());
    }
    return d + 1;
}

inline EvalResult eval_even(const BlowupSeriesSet& set, const MomentFunctional& mu_c,
                            const MomentFunctional& mu_ctau, int order) {
    return {pair(set[SeriesId::b_squared].truncated(order), mu_c) +
                pair(set[SeriesId::s_squared].truncated(order), mu_ctau),
            Provenance::maina};
}

inline EvalResult eval_even_mainprime(const BlowupSeriesSet& set, const MomentFunctional& mu_c,
                                      const MomentFunctional& nu_c, int order) {
    return {pair(set[SeriesId::b_squared].truncated(order), mu_c) +
                pair(set[SeriesId::s_squared].truncated(order), nu_c) * Rational(1, 2),
            Provenance::main_prime};
}

inline EvalResult eval_odd(const BlowupSeriesSet& set, const MomentFunctional& mu_c, const MomentFunctional& nu_c,
                           int order) {
    return {pair(set[SeriesId::wronskian].truncated(order), mu_c) + pair(set[SeriesId::bs].truncated(order), nu_c),
            Provenance::mainb};
}

// Overloads that generate the universal series themselves.

inline EvalResult eval_even(const MomentFunctional& mu_c, const MomentFunctional& mu_ctau, int order) {
    return eval_even(BlowupSeriesSet::generate(std::max(order, 4)), mu_c, mu_ctau, order);
}

inline EvalResult eval_even_mainprime(const MomentFunctional& mu_c, const MomentFunctional& nu_c, int order) {
    return eval_even_mainprime(BlowupSeriesSet::generate(std::max(order, 4)), mu_c, nu_c, order);
}

inline EvalResult eval_odd(const MomentFunctional& mu_c, const MomentFunctional& nu_c, int order) {
    return eval_odd(BlowupSeriesSet::generate(std::max(order, 4)), mu_c, nu_c, order);
}

enum class Parity { even, odd };

/// Closed forms for simple-type data: even e^{-t^2}(a cosh^2 t + b sinh^2 t),
/// odd e^{-t^2}(a + d sinh(2t)/2).
inline EvalResult eval_simple_type(const Rational& a, const Rational& b, const Rational& d, Parity parity,
                                   int order) {
    const TSeries gauss = elementary::exp_monomial(Rational(-1), 2, order);
    if (parity == Parity::even) {
        const TSeries ch = elementary::cosh(order);
        const TSeries sh = elementary::sinh(order);
        return {gauss * ((ch * ch) * a + (sh * sh) * b), Provenance::corollary_even};
    }
    const TSeries half_sinh_2t = elementary::sinh(order).scaled_argument(Rational(2)) * Rational(1, 2);
    return {gauss * (TSeries::one(order) * a + half_sinh_2t * d), Provenance::corollary_odd};
}

// JSON: moment file {"label": ..., "moments": ["1", "2", ...]}.

inline MomentFunctional moments_from_json(const nlohmann::json& j) {
    try {
        MomentFunctional m;
        m.label = j.value("label", std::string());
        const auto& arr = j.at("moments");
        if (!arr.is_array()) {
            throw ParseError("\"moments\" must be an array");
        }
        for (const auto& e : arr) {
            m.moments.push_back(rational_from_json(e));
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed moment file: ") + e.what());
    }
}

inline nlohmann::json moments_to_json(const MomentFunctional& m) {
    nlohmann::json j;
    j["label"] = m.label;
    auto arr = nlohmann::json::array();
    for (const auto& r : m.moments) {
        arr.push_back(r.str());
    }
    j["moments"] = std::move(arr);
    return j;
}

inline nlohmann::json eval_result_to_json(const EvalResult& r, Normalization norm) {
    nlohmann::json j;
    j["provenance"] = to_string(r.provenance);
    j["series"] = tseries_to_json(r.series, norm);
    return j;
}

} // namespace blowup::pairing
