#include <gtest/gtest.h>

#include "blowup/rational.hpp"
#include "blowup/xpoly.hpp"
#include "support/random.hpp"

using blowup::ArithmeticError;
using blowup::ParseError;
using blowup::Rational;
using blowup::XPoly;

TEST(Rational, ExactArithmetic) {
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(Rational(-4, 6) * Rational(3), Rational(-2));
    EXPECT_EQ(Rational(-4, 6).str(), "-2/3");
    EXPECT_EQ((Rational(1, 2) - Rational(1, 2)).str(), "0");
    EXPECT_LT(Rational(-1, 3), Rational(1, 4));
    EXPECT_THROW((void)(Rational(1) / Rational(0)), ArithmeticError);
    EXPECT_THROW(Rational(1, 0), ArithmeticError);
}

TEST(Rational, CanonicalText) {
    EXPECT_EQ(Rational(6, 3).str(), "2");
    EXPECT_EQ(Rational(3, -6).str(), "-1/2");
    EXPECT_EQ(Rational::parse("4/6"), Rational(2, 3));
    EXPECT_EQ(Rational::parse("-17"), Rational(-17));
    EXPECT_THROW(Rational::parse("1/0"), ParseError);
    EXPECT_THROW(Rational::parse("1.5"), ParseError);
    EXPECT_THROW(Rational::parse(""), ParseError);
    EXPECT_THROW(Rational::parse("--1"), ParseError);
    EXPECT_THROW(Rational::parse("1/-2"), ParseError);
}

TEST(Rational, BeyondSixtyFourBits) {
    const Rational big = Rational::factorial(30);
    EXPECT_EQ(big.str(), "265252859812191058636308480000000");
    EXPECT_EQ(big / Rational::factorial(29), Rational(30));
}

TEST(RationalProperty, FieldAxiomsAndRoundTrip) {
    blowup::proptest::Gen g(11);
    for (int i = 0; i < 300; ++i) {
        const Rational a = g.rational();
        const Rational b = g.rational();
        const Rational c = g.rational();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        if (!b.is_zero()) {
            EXPECT_EQ((a / b) * b, a);
        }
        EXPECT_EQ(Rational::parse(a.str()), a);
        EXPECT_GE(a.denominator(), 1);
    }
}

TEST(XPoly, Arithmetic) {
    const XPoly x = XPoly::x();
    EXPECT_EQ(x * x, XPoly::monomial(Rational(1), 2));
    const XPoly p = XPoly::monomial(Rational(8), 1);
    EXPECT_TRUE((p + (-p)).is_zero());
    EXPECT_TRUE((p + (-p)).coefficients().empty());
    EXPECT_TRUE(((-x) * (-x) - x * x).is_zero());
    EXPECT_EQ(XPoly({Rational(0), Rational(96), Rational(0), Rational(128)}).degree(), 3);
    EXPECT_EQ(XPoly().degree(), -1);
    EXPECT_EQ(XPoly({Rational(1), Rational(0), Rational(0)}).degree(), 0);
}

TEST(XPoly, Evaluation) {
    EXPECT_EQ(XPoly::monomial(Rational(8), 1).eval(Rational(2)), Rational(16));
    EXPECT_EQ(XPoly({Rational(-4), Rational(0), Rational(-32)}).eval(Rational(2)), Rational(-132));
    EXPECT_EQ(XPoly({Rational(2), Rational(0), Rational(1)}).eval(Rational(-2)), Rational(6));
    EXPECT_EQ(XPoly().eval(Rational(5)), Rational(0));
}

TEST(XPoly, Text) {
    EXPECT_EQ(XPoly({Rational(0), Rational(-6), Rational(0), Rational(-1)}).str(), "-6x - x^3");
    EXPECT_EQ(XPoly({Rational(2), Rational(0), Rational(1)}).str(), "2 + x^2");
    EXPECT_EQ(XPoly({Rational(1, 3), Rational(-1, 6)}).str(), "1/3 - 1/6x");
    EXPECT_EQ(XPoly().str(), "0");
}

TEST(XPolyProperty, RingAxiomsAndEvaluationHomomorphism) {
    blowup::proptest::Gen g(12);
    for (int i = 0; i < 200; ++i) {
        const XPoly p = g.poly();
        const XPoly q = g.poly();
        const XPoly r = g.poly();
        const Rational v = g.rational();
        EXPECT_EQ(p * q, q * p);
        EXPECT_EQ((p * q) * r, p * (q * r));
        EXPECT_EQ(p * (q + r), p * q + p * r);
        EXPECT_EQ(p + q - q, p);
        EXPECT_EQ((p * q).eval(v), p.eval(v) * q.eval(v));
        EXPECT_EQ((p + q).eval(v), p.eval(v) + q.eval(v));
        if (!(p * q).is_zero()) {
            EXPECT_EQ((p * q).degree(), p.degree() + q.degree());
            EXPECT_FALSE((p * q).coefficients().back().is_zero());
        }
    }
}
