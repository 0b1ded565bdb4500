#pragma once

// Exact rationals. Storage and arithmetic are GMP's mpq; this wrapper pins
// down the canonical text form and turns division by zero into an exception
// instead of a SIGFPE.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "blowup/errors.hpp"

namespace blowup {

class Rational {
public:
    Rational() = default;
    Rational(long value) : v_(value) {} // NOLINT(google-explicit-constructor)
    Rational(int value) : v_(static_cast<long>(value)) {} // NOLINT(google-explicit-constructor)

    Rational(long numerator, long denominator) {
        if (denominator == 0) {
            throw ArithmeticError("rational with zero denominator");
        }
        v_ = mpq_class(numerator, denominator);
        v_.canonicalize();
    }

    explicit Rational(const mpz_class& integer) : v_(integer) {}

    explicit Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

    /// Parses "p", "-p" or "p/q" (q > 0). Non-reduced input is accepted and
    /// reduced, so "4/6" parses to 2/3.
    static Rational parse(std::string_view text) {
        auto digits = [](std::string_view s) {
            if (s.empty()) {
                return false;
            }
            for (char c : s) {
                if (c < '0' || c > '9') {
                    return false;
                }
            }
            return true;
        };
        std::string_view body = text;
        if (!body.empty() && body.front() == '-') {
            body.remove_prefix(1);
        }
        auto slash = body.find('/');
        std::string_view num = body.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
        if (!digits(num) || (slash != std::string_view::npos && !digits(den))) {
            throw ParseError("malformed rational '" + std::string(text) + "'");
        }
        if (slash != std::string_view::npos && den.find_first_not_of('0') == std::string_view::npos) {
            throw ParseError("rational with zero denominator: '" + std::string(text) + "'");
        }
        mpq_class q;
        if (q.set_str(std::string(text), 10) != 0) {
            throw ParseError("malformed rational '" + std::string(text) + "'");
        }
        return Rational(std::move(q));
    }

    /// Canonical text: optional '-', then "p" or "p/q" with q >= 2.
    [[nodiscard]] std::string str() const { return v_.get_str(10); }

    [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
    [[nodiscard]] bool is_one() const { return v_ == 1; }
    [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(v_); }

    [[nodiscard]] mpz_class numerator() const { return v_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return v_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return v_; }

    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) {
            throw ArithmeticError("division by zero");
        }
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    [[nodiscard]] Rational inverse() const {
        if (is_zero()) {
            throw ArithmeticError("division by zero");
        }
        mpq_class r;
        mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
        return Rational(std::move(r));
    }

    /// this^e for any integer e (negative powers need a nonzero base).
    [[nodiscard]] Rational pow(long e) const {
        if (e < 0) {
            return inverse().pow(-e);
        }
        mpz_class num;
        mpz_class den;
        mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
        mpq_class r(num, den);
        return Rational(std::move(r));
    }

    static Rational factorial(unsigned long n) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), n);
        return Rational(f);
    }

    static Rational binomial(unsigned long n, unsigned long k) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), n, k);
        return Rational(b);
    }

private:
    mpq_class v_;
};

} // namespace blowup
