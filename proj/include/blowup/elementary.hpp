#pragma once

// Rational Taylor series of a few elementary functions, x-free.

#include "blowup/rational.hpp"
#include "blowup/tseries.hpp"

namespace blowup::elementary {

/// exp(c t^k) through t^order (k >= 1).
inline TSeries exp_monomial(const Rational& c, int k, int order) {
    return TSeries::monomial(XPoly(c), k, order).exp();
}

inline TSeries cosh(int order) {
    const TSeries e = exp_monomial(Rational(1), 1, order);
    return (e + e.scaled_argument(Rational(-1))) * Rational(1, 2);
}

inline TSeries sinh(int order) {
    const TSeries e = exp_monomial(Rational(1), 1, order);
    return (e - e.scaled_argument(Rational(-1))) * Rational(1, 2);
}

/// Taylor coefficients (-1)^k / (2k)! and (-1)^k / (2k+1)!.
inline TSeries cos(int order) {
    std::vector<XPoly> c(static_cast<std::size_t>(order + 1));
    for (int n = 0; n <= order; n += 2) {
        const Rational f = Rational::factorial(static_cast<unsigned long>(n)).inverse();
        c[static_cast<std::size_t>(n)] = XPoly((n / 2) % 2 == 0 ? f : -f);
    }
    return TSeries::from_coefficients(0, std::move(c), order);
}

inline TSeries sin(int order) {
    std::vector<XPoly> c(static_cast<std::size_t>(order + 1));
    for (int n = 1; n <= order; n += 2) {
        const Rational f = Rational::factorial(static_cast<unsigned long>(n)).inverse();
        c[static_cast<std::size_t>(n)] = XPoly((n / 2) % 2 == 0 ? f : -f);
    }
    return TSeries::from_coefficients(0, std::move(c), order);
}

} // namespace blowup::elementary
