#pragma once

// Truncated Laurent series in t with coefficients in Q[x].
//
// A TSeries is known exactly through t^order; everything above that is
// unknown, not zero. Each operation computes the order through which its
// result is still exact, so comparisons never run past real information.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blowup/errors.hpp"
#include "blowup/rational.hpp"
#include "blowup/xpoly.hpp"

namespace blowup {

class TSeries {
public:
    /// The zero series, exact through t^order.
    explicit TSeries(int order = 0) : valuation_(order + 1), order_(order) {}

    /// Series whose coefficient of t^(start + k) is coeffs[k]; entries past
    /// `order` are dropped, missing entries up to `order` are zero.
    static TSeries from_coefficients(int start, std::vector<XPoly> coeffs, int order) {
        TSeries s(order);
        if (order < start) {
            return s;
        }
        coeffs.resize(static_cast<std::size_t>(order - start + 1));
        s.valuation_ = start;
        s.c_ = std::move(coeffs);
        s.normalize();
        return s;
    }

    static TSeries monomial(XPoly c, int exponent, int order) {
        return from_coefficients(exponent, {std::move(c)}, order);
    }
    static TSeries constant(XPoly c, int order) { return monomial(std::move(c), 0, order); }
    static TSeries one(int order) { return constant(XPoly(1), order); }
    /// The series "t".
    static TSeries t(int order) { return monomial(XPoly(1), 1, order); }

    /// Lowest exponent with a nonzero coefficient; order + 1 for the zero series.
    [[nodiscard]] int valuation() const { return valuation_; }
    [[nodiscard]] int order() const { return order_; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }

    /// Plain coefficient of t^n. Below the valuation this is exactly zero;
    /// past the order it is unknown and asking is an error.
    [[nodiscard]] XPoly coeff(int n) const {
        if (n > order_) {
            throw SeriesError("coefficient of t^" + std::to_string(n) + " requested from a series exact only through t^" +
                              std::to_string(order_));
        }
        if (n < valuation_) {
            return {};
        }
        return c_[static_cast<std::size_t>(n - valuation_)];
    }

    /// Coefficient of t^n / n!, the layout of the published tables.
    [[nodiscard]] XPoly normalized_coeff(int n) const {
        if (n < 0) {
            throw SeriesError("factorial normalization is undefined for t^" + std::to_string(n));
        }
        return coeff(n) * Rational::factorial(static_cast<unsigned long>(n));
    }

    [[nodiscard]] TSeries truncated(int new_order) const {
        if (new_order > order_) {
            throw SeriesError("cannot extend a series known through t^" + std::to_string(order_) + " to t^" +
                              std::to_string(new_order));
        }
        if (is_zero()) {
            return TSeries(new_order);
        }
        return from_coefficients(valuation_, c_, new_order);
    }

    /// Multiplication by t^k.
    [[nodiscard]] TSeries shifted(int k) const {
        TSeries s = *this;
        s.valuation_ += k;
        s.order_ += k;
        return s;
    }

    /// Applies `f` to every coefficient (used for x -> value substitution and pairing).
    [[nodiscard]] TSeries map_coefficients(const std::function<XPoly(const XPoly&)>& f) const {
        if (is_zero()) {
            return *this;
        }
        std::vector<XPoly> out;
        out.reserve(c_.size());
        for (const auto& c : c_) {
            out.push_back(f(c));
        }
        return from_coefficients(valuation_, std::move(out), order_);
    }

    /// Substitutes x = v in every coefficient.
    [[nodiscard]] TSeries eval_x(const Rational& v) const {
        return map_coefficients([&](const XPoly& p) { return XPoly(p.eval(v)); });
    }

    /// Largest x-degree over all stored coefficients (-1 for zero).
    [[nodiscard]] int max_x_degree() const {
        int d = -1;
        for (const auto& c : c_) {
            d = std::max(d, c.degree());
        }
        return d;
    }

    friend TSeries operator+(const TSeries& a, const TSeries& b) { return combine(a, b, false); }
    friend TSeries operator-(const TSeries& a, const TSeries& b) { return combine(a, b, true); }
    friend TSeries operator-(const TSeries& a) { return a.map_coefficients([](const XPoly& p) { return -p; }); }
    friend TSeries operator*(const TSeries& a, const Rational& s) {
        return a.map_coefficients([&](const XPoly& p) { return p * s; });
    }
    friend TSeries operator*(const Rational& s, const TSeries& a) { return a * s; }
    friend TSeries operator*(const TSeries& a, const XPoly& p) {
        return a.map_coefficients([&](const XPoly& q) { return q * p; });
    }

    friend TSeries operator*(const TSeries& a, const TSeries& b) {
        // a = t^va (..) exact through Na, so a*b is exact through min(Na + vb, Nb + va).
        const int order = std::min(a.order_ + b.valuation_, b.order_ + a.valuation_);
        if (a.is_zero() || b.is_zero()) {
            return TSeries(order);
        }
        const int lo = a.valuation_ + b.valuation_;
        if (order < lo) {
            return TSeries(order);
        }
        std::vector<XPoly> out(static_cast<std::size_t>(order - lo + 1));
        for (int n = lo; n <= order; ++n) {
            XPoly acc;
            for (int i = a.valuation_; i <= n - b.valuation_; ++i) {
                const XPoly& ai = a.c_[static_cast<std::size_t>(i - a.valuation_)];
                if (ai.is_zero()) {
                    continue;
                }
                const XPoly& bj = b.c_[static_cast<std::size_t>(n - i - b.valuation_)];
                if (!bj.is_zero()) {
                    acc += ai * bj;
                }
            }
            out[static_cast<std::size_t>(n - lo)] = std::move(acc);
        }
        return from_coefficients(lo, std::move(out), order);
    }

    TSeries& operator+=(const TSeries& o) { return *this = *this + o; }
    TSeries& operator-=(const TSeries& o) { return *this = *this - o; }
    TSeries& operator*=(const TSeries& o) { return *this = *this * o; }

    /// d/dt; exact through one order less.
    [[nodiscard]] TSeries derivative() const {
        std::vector<XPoly> out;
        const int start = valuation_ - 1;
        for (int n = valuation_; n <= order_; ++n) {
            out.push_back(coeff(n) * Rational(n));
        }
        return from_coefficients(start, std::move(out), order_ - 1);
    }

    /// Antiderivative with zero constant term, i.e. the integral from 0 to t.
    /// Refuses series with a t^-1 term (that would need a logarithm).
    [[nodiscard]] TSeries integral() const {
        if (order_ < -1) {
            throw SeriesError("logarithmic singularity: t^-1 coefficient is not determined");
        }
        if (valuation_ <= -1 && !coeff(-1).is_zero()) {
            throw SeriesError("logarithmic singularity: nonzero t^-1 coefficient " + coeff(-1).str());
        }
        std::vector<XPoly> out;
        const int start = valuation_ + 1;
        for (int n = valuation_; n <= order_; ++n) {
            out.push_back(n == -1 ? XPoly() : coeff(n) * Rational(1, n + 1));
        }
        return from_coefficients(start, std::move(out), order_ + 1);
    }

    /// f(t) -> f(c t): the coefficient of t^n is multiplied by c^n.
    [[nodiscard]] TSeries scaled_argument(const Rational& c) const {
        if (c.is_zero()) {
            if (valuation_ < 0) {
                throw SeriesError("cannot set t = 0 in a series with negative powers");
            }
            return constant(coeff(0), order_ < 0 ? 0 : order_);
        }
        std::vector<XPoly> out;
        Rational power = c.pow(valuation_);
        for (int n = valuation_; n <= order_; ++n) {
            out.push_back(coeff(n) * power);
            power *= c;
        }
        return from_coefficients(valuation_, std::move(out), order_);
    }

    /// Multiplicative inverse. The lowest nonzero coefficient must be a
    /// nonzero rational; the result has valuation -valuation() and is exact
    /// through order() - 2 valuation().
    [[nodiscard]] TSeries reciprocal() const {
        if (is_zero()) {
            throw SeriesError("non-unit leading coefficient: series is zero through t^" + std::to_string(order_));
        }
        const XPoly& lead = c_.front();
        if (!lead.is_constant()) {
            throw SeriesError("non-unit leading coefficient " + lead.str() + " at t^" + std::to_string(valuation_));
        }
        const int v = valuation_;
        const int unit_order = order_ - v; // the unit part u = a / t^v is exact through t^unit_order
        const Rational inv_lead = lead.constant_term().inverse();
        std::vector<XPoly> w;
        w.reserve(static_cast<std::size_t>(unit_order + 1));
        w.emplace_back(inv_lead);
        for (int n = 1; n <= unit_order; ++n) {
            XPoly acc;
            for (int k = 1; k <= n && k < static_cast<int>(c_.size()); ++k) {
                const XPoly& uk = c_[static_cast<std::size_t>(k)];
                if (!uk.is_zero()) {
                    acc += uk * w[static_cast<std::size_t>(n - k)];
                }
            }
            w.push_back(acc * (-inv_lead));
        }
        return from_coefficients(-v, std::move(w), unit_order - v);
    }

    friend TSeries operator/(const TSeries& a, const TSeries& b) { return a * b.reciprocal(); }

    /// exp of a series without constant term, from n f_n = sum_k k a_k f_{n-k}.
    [[nodiscard]] TSeries exp() const {
        if (!is_zero() && valuation_ < 1) {
            throw SeriesError("exp needs a series with zero constant term (valuation " + std::to_string(valuation_) +
                              ")");
        }
        if (order_ < 0) {
            throw SeriesError("exp of a series not determined at t^0");
        }
        std::vector<XPoly> f;
        f.reserve(static_cast<std::size_t>(order_ + 1));
        f.emplace_back(1);
        for (int n = 1; n <= order_; ++n) {
            XPoly acc;
            for (int k = std::max(1, valuation_); k <= n; ++k) {
                const XPoly& ak = c_[static_cast<std::size_t>(k - valuation_)];
                if (!ak.is_zero()) {
                    acc += (ak * f[static_cast<std::size_t>(n - k)]) * Rational(k);
                }
            }
            f.push_back(acc * Rational(1, n));
        }
        return from_coefficients(0, std::move(f), order_);
    }

    /// Square root of a series with constant term exactly 1, from g^2 = a.
    [[nodiscard]] TSeries sqrt() const {
        if (order_ < 0 || valuation_ != 0 || !(c_.front() == XPoly(1))) {
            throw SeriesError("sqrt needs a series with constant term 1");
        }
        std::vector<XPoly> g;
        g.reserve(static_cast<std::size_t>(order_ + 1));
        g.emplace_back(1);
        const Rational half(1, 2);
        for (int n = 1; n <= order_; ++n) {
            XPoly acc = coeff(n);
            for (int k = 1; k < n; ++k) {
                acc -= g[static_cast<std::size_t>(k)] * g[static_cast<std::size_t>(n - k)];
            }
            g.push_back(acc * half);
        }
        return from_coefficients(0, std::move(g), order_);
    }

    /// Structural equality: same order, same coefficients.
    friend bool operator==(const TSeries& a, const TSeries& b) = default;

private:
    static TSeries combine(const TSeries& a, const TSeries& b, bool subtract) {
        const int order = std::min(a.order_, b.order_);
        const int lo = std::min(a.valuation_, b.valuation_);
        if (lo > order) {
            return TSeries(order);
        }
        std::vector<XPoly> out(static_cast<std::size_t>(order - lo + 1));
        for (int n = lo; n <= order; ++n) {
            XPoly v = a.coeff(n);
            if (subtract) {
                v -= b.coeff(n);
            } else {
                v += b.coeff(n);
            }
            out[static_cast<std::size_t>(n - lo)] = std::move(v);
        }
        return from_coefficients(lo, std::move(out), order);
    }

    void normalize() {
        std::size_t skip = 0;
        while (skip < c_.size() && c_[skip].is_zero()) {
            ++skip;
        }
        if (skip == c_.size()) {
            c_.clear();
            valuation_ = order_ + 1;
            return;
        }
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(skip));
        valuation_ += static_cast<int>(skip);
    }

    int valuation_;
    int order_;
    std::vector<XPoly> c_;
};

/// Where two series first disagree: lowest t-power, then lowest x-power.
struct Mismatch {
    int t = 0;
    int x = 0;
    Rational lhs;
    Rational rhs;
};

/// Compares a and b through t^n. Both must be exact at least that far.
inline std::optional<Mismatch> first_difference(const TSeries& a, const TSeries& b, int n) {
    if (n > a.order() || n > b.order()) {
        throw SeriesError("comparison through t^" + std::to_string(n) + " exceeds known orders " +
                          std::to_string(a.order()) + " and " + std::to_string(b.order()));
    }
    for (int k = std::min(a.valuation(), b.valuation()); k <= n; ++k) {
        const XPoly pa = a.coeff(k);
        const XPoly pb = b.coeff(k);
        if (pa == pb) {
            continue;
        }
        const std::size_t top = std::max(pa.size(), pb.size());
        for (std::size_t j = 0; j < top; ++j) {
            if (pa[j] != pb[j]) {
                return Mismatch{k, static_cast<int>(j), pa[j], pb[j]};
            }
        }
    }
    return std::nullopt;
}

inline bool equal_to_order(const TSeries& a, const TSeries& b, int n) { return !first_difference(a, b, n); }

} // namespace blowup
