#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "blowup/rational.hpp"

namespace blowup {

/// Dense polynomial in the formal variable x over the rationals.
///
/// Coefficient k multiplies x^k. The highest stored coefficient is always
/// nonzero; the zero polynomial stores nothing and has degree -1.
class XPoly {
public:
    XPoly() = default;
    XPoly(Rational constant) { // NOLINT(google-explicit-constructor)
        if (!constant.is_zero()) {
            c_.push_back(std::move(constant));
        }
    }
    XPoly(long constant) : XPoly(Rational(constant)) {} // NOLINT(google-explicit-constructor)
    XPoly(int constant) : XPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

    explicit XPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    XPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static XPoly x() { return monomial(Rational(1), 1); }

    static XPoly monomial(Rational c, std::size_t power) {
        if (c.is_zero()) {
            return {};
        }
        std::vector<Rational> v(power + 1);
        v[power] = std::move(c);
        return XPoly(std::move(v));
    }

    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_constant() const { return c_.size() <= 1; }
    [[nodiscard]] std::size_t size() const { return c_.size(); }

    /// Coefficient of x^k; zero beyond the degree.
    [[nodiscard]] Rational operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }
    [[nodiscard]] Rational constant_term() const { return (*this)[0]; }
    [[nodiscard]] const std::vector<Rational>& coefficients() const { return c_; }

    XPoly& operator+=(const XPoly& o) {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size());
        }
        for (std::size_t k = 0; k < o.c_.size(); ++k) {
            c_[k] += o.c_[k];
        }
        trim();
        return *this;
    }

    XPoly& operator-=(const XPoly& o) {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size());
        }
        for (std::size_t k = 0; k < o.c_.size(); ++k) {
            c_[k] -= o.c_[k];
        }
        trim();
        return *this;
    }

    XPoly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_) {
            c *= s;
        }
        return *this;
    }

    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator-(XPoly a) {
        for (auto& c : a.c_) {
            c = -c;
        }
        return a;
    }
    friend XPoly operator*(XPoly a, const Rational& s) { return a *= s; }
    friend XPoly operator*(const Rational& s, XPoly a) { return a *= s; }

    friend XPoly operator*(const XPoly& a, const XPoly& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                acc[i + j] += a.c_[i].raw() * b.c_[j].raw();
            }
        }
        std::vector<Rational> out;
        out.reserve(acc.size());
        for (auto& q : acc) {
            out.emplace_back(std::move(q));
        }
        return XPoly(std::move(out));
    }

    XPoly& operator*=(const XPoly& o) { return *this = *this * o; }

    /// Multiplication by x^k.
    [[nodiscard]] XPoly shifted(std::size_t k) const {
        if (is_zero()) {
            return {};
        }
        std::vector<Rational> v(k);
        v.insert(v.end(), c_.begin(), c_.end());
        return XPoly(std::move(v));
    }

    /// Horner evaluation at x = v.
    [[nodiscard]] Rational eval(const Rational& v) const {
        Rational acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * v + *it;
        }
        return acc;
    }

    friend bool operator==(const XPoly& a, const XPoly& b) = default;

    /// Human-readable form, ascending powers: "-6x - x^3", "2 + x^2", "0".
    [[nodiscard]] std::string str() const {
        if (is_zero()) {
            return "0";
        }
        std::string out;
        bool first = true;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            const Rational& c = c_[k];
            if (c.is_zero()) {
                continue;
            }
            Rational mag = c.sign() < 0 ? -c : c;
            if (first) {
                if (c.sign() < 0) {
                    out += "-";
                }
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            first = false;
            if (k == 0 || !mag.is_one()) {
                out += mag.str();
            }
            if (k >= 1) {
                out += "x";
            }
            if (k >= 2) {
                out += "^" + std::to_string(k);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const XPoly& p) { return os << p.str(); }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) {
            c_.pop_back();
        }
    }

    std::vector<Rational> c_;
};

} // namespace blowup
