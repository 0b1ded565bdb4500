#pragma once

// Order-by-order construction of the blow-up series B (even) and S (odd).
//
// The pair is pinned down by the two-variable functional equation
//
//     B(u+v) B(u-v) = B(u)^2 B(v)^2 - S(u)^2 S(v)^2
//
// together with B = 1 + O(t^4), S = t + O(t^2) and the normalization
// S = t - x t^3/6 + O(t^5). The v^2 and v^4 coefficients of the equation are
// the ODEs
//
//     (E2)  B''B - B'^2 + S^2 = 0
//     (E4)  B''''B - 4B'''B' + 3B''^2 + 2B^2 - 4x S^2 = 0
//
// and they are what the solver runs on: (E4) at t^n fixes b_{n+4}, then
// (E2) at t^{n+2} fixes s_{n+1}. The full two-variable equation and the
// published table are checked on the result before it is handed out.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "blowup/biseries.hpp"
#include "blowup/errors.hpp"
#include "blowup/golden_table.hpp"
#include "blowup/rational.hpp"
#include "blowup/tseries.hpp"
#include "blowup/xpoly.hpp"

namespace blowup {

struct BlowupPair {
    TSeries b; ///< even series, B = 1 - t^4/12 + ...
    TSeries s; ///< odd series, S = t - x t^3/6 + ...
};

struct GenerateOptions {
    /// Total degree through which the two-variable equation is re-checked.
    int bivariate_check_order = 16;
    bool check_golden = true;
};

/// Both sides of B(u+v)B(u-v) = B^2(u)B^2(v) - S^2(u)S^2(v) through total degree `order`.
inline std::pair<BiSeries, BiSeries> bb_sides(const TSeries& b, const TSeries& s, int order) {
    const TSeries bt = b.truncated(order);
    const TSeries st = s.truncated(order);
    const TSeries b2 = bt * bt;
    const TSeries s2 = st * st;
    BiSeries lhs = BiSeries::substitute(bt, Sign::plus) * BiSeries::substitute(bt, Sign::minus);
    BiSeries rhs = BiSeries::outer(b2, b2) - BiSeries::outer(s2, s2);
    return {lhs.truncated(order), rhs.truncated(order)};
}

namespace detail {

// Coefficient of t^m in the k-th derivative of the series with coefficients f.
inline XPoly derivative_coeff(const std::vector<XPoly>& f, int k, int m) {
    const auto idx = static_cast<std::size_t>(m + k);
    if (m < 0 || idx >= f.size() || f[idx].is_zero()) {
        return {};
    }
    Rational falling(1);
    for (int j = m + 1; j <= m + k; ++j) {
        falling *= Rational(j);
    }
    return f[idx] * falling;
}

// Coefficient of t^n in f^(kf) * g^(kg).
inline XPoly product_coeff(const std::vector<XPoly>& f, int kf, const std::vector<XPoly>& g, int kg, int n) {
    XPoly acc;
    for (int i = 0; i <= n; ++i) {
        XPoly a = derivative_coeff(f, kf, i);
        if (a.is_zero()) {
            continue;
        }
        XPoly c = derivative_coeff(g, kg, n - i);
        if (!c.is_zero()) {
            acc += a * c;
        }
    }
    return acc;
}

// Left side of (E2) at t^m.
inline XPoly e2_residual(const std::vector<XPoly>& b, const std::vector<XPoly>& s, int m) {
    return product_coeff(b, 2, b, 0, m) - product_coeff(b, 1, b, 1, m) + product_coeff(s, 0, s, 0, m);
}

// Left side of (E4) at t^n.
inline XPoly e4_residual(const std::vector<XPoly>& b, const std::vector<XPoly>& s, int n) {
    XPoly r = product_coeff(b, 4, b, 0, n);
    r -= product_coeff(b, 3, b, 1, n) * Rational(4);
    r += product_coeff(b, 2, b, 2, n) * Rational(3);
    r += product_coeff(b, 0, b, 0, n) * Rational(2);
    r -= (product_coeff(s, 0, s, 0, n) * Rational(4)).shifted(1);
    return r;
}

} // namespace detail

/// The series of the left sides of (E2) and (E4), for independent re-checks.
inline TSeries e2_series(const TSeries& b, const TSeries& s) {
    return b.derivative().derivative() * b - b.derivative() * b.derivative() + s * s;
}

inline TSeries e4_series(const TSeries& b, const TSeries& s) {
    const TSeries d1 = b.derivative();
    const TSeries d2 = d1.derivative();
    const TSeries d3 = d2.derivative();
    const TSeries d4 = d3.derivative();
    return d4 * b - Rational(4) * (d3 * d1) + Rational(3) * (d2 * d2) + Rational(2) * (b * b) -
           (s * s) * (XPoly::x() * Rational(4));
}

/// Solves for B and S through t^order without running the post-checks.
/// Exposed separately so that tests can inspect a raw solve.
inline BlowupPair solve_blowup_pair(int order) {
    if (order < 4) {
        throw std::invalid_argument("generation needs order >= 4, got " + std::to_string(order));
    }
    // s_k needs b_{k+3}; solving through b_{order+3} covers everything.
    const auto size = static_cast<std::size_t>(order + 5);
    std::vector<XPoly> b(size);
    std::vector<XPoly> s(size);
    b[0] = XPoly(1);
    s[1] = XPoly(1);
    const XPoly s3_seed = XPoly::monomial(Rational(-1, 6), 1);

    for (int m = 0; m <= 1; ++m) {
        if (!detail::e2_residual(b, s, m).is_zero()) {
            throw GenerationFailure("seed data violates the v^2 equation", m);
        }
    }
    for (int n = 0; n + 1 <= order; ++n) {
        // (E4) at t^n is linear in b_{n+4} with coefficient (n+4)!/n! * b_0.
        const auto bi = static_cast<std::size_t>(n + 4);
        const XPoly r4 = detail::e4_residual(b, s, n);
        const XPoly lead4 = b[0] * Rational::factorial(static_cast<unsigned long>(n + 4)) *
                            Rational::factorial(static_cast<unsigned long>(n)).inverse();
        if (!lead4.is_constant() || lead4.is_zero()) {
            throw GenerationFailure("non-unique solve for the B coefficient", n + 4);
        }
        b[bi] = r4 * (-lead4.constant_term().inverse());

        // (E2) at t^m, m = n + 2, is linear in s_{m-1} with coefficient 2 s_1 once m >= 3.
        const int m = n + 2;
        const XPoly r2 = detail::e2_residual(b, s, m);
        if (m < 3) {
            if (!r2.is_zero()) {
                throw GenerationFailure("inconsistent v^2 equation", m);
            }
            continue;
        }
        const XPoly lead2 = s[1] * Rational(2);
        if (!lead2.is_constant() || lead2.is_zero() || !s[0].is_zero()) {
            throw GenerationFailure("non-unique solve for the S coefficient", m - 1);
        }
        s[static_cast<std::size_t>(m - 1)] = r2 * (-lead2.constant_term().inverse());
        if (m - 1 == 3 && !(s[3] == s3_seed)) {
            throw GenerationFailure("solved S coefficient " + s[3].str() + " contradicts the seed " + s3_seed.str(),
                                    3);
        }
    }
    b.resize(static_cast<std::size_t>(order + 1));
    s.resize(static_cast<std::size_t>(order + 1));
    return {TSeries::from_coefficients(0, std::move(b), order), TSeries::from_coefficients(0, std::move(s), order)};
}

/// B and S through t^order, verified against the two-variable equation and
/// the published table. Any disagreement is a GenerationFailure.
inline BlowupPair generate_blowup_pair(int order, const GenerateOptions& options = {}) {
    BlowupPair pair = solve_blowup_pair(order);

    const int biv = std::min(order, options.bivariate_check_order);
    if (biv >= 0) {
        auto [lhs, rhs] = bb_sides(pair.b, pair.s, biv);
        if (auto m = first_difference(lhs, rhs, biv)) {
            throw GenerationFailure("generated pair violates the two-variable equation at u^" + std::to_string(m->u) +
                                        " v^" + std::to_string(m->v),
                                    m->u + m->v);
        }
    }
    if (options.check_golden) {
        const auto& table = GoldenTable::embedded();
        for (const auto& [name, generated] : {std::pair{"B", &pair.b}, std::pair{"S", &pair.s}}) {
            const TSeries& golden = table.rows.at(name);
            const int upto = std::min(order, golden.order());
            if (auto m = first_difference(*generated, golden.truncated(upto), upto)) {
                throw GenerationFailure(std::string("generated ") + name + " disagrees with the published table", m->t);
            }
        }
    }
    return pair;
}

} // namespace blowup
