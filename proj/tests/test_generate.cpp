#include <gtest/gtest.h>

#include <optional>
#include <vector>

#include "blowup/generate.hpp"

using namespace blowup;

namespace {

// Independent oracle: solve B(u+v)B(u-v) = B(u)^2 B(v)^2 - S(u)^2 S(v)^2
// directly, one total degree at a time. At total degree d the only unknowns
// are b_d and s_{d-3}; every u^i v^{d-i} coefficient is affine in them, so the
// slice is an overdetermined 2x(d+1) linear system that must be consistent.
class BruteForce {
public:
    explicit BruteForce(int order) : order_(order), b_(order + 1), s_(order + 1) {
        b_[0] = XPoly(1);
        s_[1] = XPoly(1);
        s_[3] = XPoly::monomial(Rational(-1, 6), 1);
        for (int d = 4; d <= order; ++d) {
            solve_degree(d);
        }
    }

    const std::vector<XPoly>& b() const { return b_; }
    const std::vector<XPoly>& s() const { return s_; }
    // S is only pinned down through t^{order-3}
    int s_order() const { return order_ - 3; }

private:
    static XPoly square_coeff(const std::vector<XPoly>& f, int n) {
        XPoly acc;
        for (int k = 0; k <= n; ++k) {
            acc += f[static_cast<std::size_t>(k)] * f[static_cast<std::size_t>(n - k)];
        }
        return acc;
    }

    // Coefficient of u^i v^j of LHS - RHS, using b_0..b_d and s_0..s_d.
    XPoly residual(int i, int j) const {
        const int d = i + j;
        XPoly lhs;
        for (int m = 0; m <= d; ++m) {
            const int n = d - m;
            const XPoly& bm = b_[static_cast<std::size_t>(m)];
            const XPoly& bn = b_[static_cast<std::size_t>(n)];
            if (bm.is_zero() || bn.is_zero()) {
                continue;
            }
            // v^k from (u+v)^m and v^l from (u-v)^n with k + l = j
            Rational w;
            for (int k = 0; k <= std::min(m, j); ++k) {
                const int l = j - k;
                if (l > n) {
                    continue;
                }
                Rational term = Rational::binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(k)) *
                                Rational::binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(l));
                w += l % 2 == 0 ? term : -term;
            }
            lhs += (bm * bn) * w;
        }
        const XPoly rhs = square_coeff(b_, i) * square_coeff(b_, j) - square_coeff(s_, i) * square_coeff(s_, j);
        return lhs - rhs;
    }

    void solve_degree(int d) {
        const int si = d - 3;
        const bool s_unknown = si > 3;
        auto slice = [&] {
            std::vector<XPoly> r;
            for (int i = 0; i <= d; ++i) {
                r.push_back(residual(i, d - i));
            }
            return r;
        };
        b_[static_cast<std::size_t>(d)] = XPoly();
        if (s_unknown) {
            s_[static_cast<std::size_t>(si)] = XPoly();
        }
        const auto r0 = slice();
        b_[static_cast<std::size_t>(d)] = XPoly(1);
        const auto rb = slice();
        b_[static_cast<std::size_t>(d)] = XPoly();
        std::vector<XPoly> rs(r0.size());
        if (s_unknown) {
            s_[static_cast<std::size_t>(si)] = XPoly(1);
            rs = slice();
            s_[static_cast<std::size_t>(si)] = XPoly();
        }
        // slopes are rational because b_0 and s_1 are constants
        std::vector<Rational> alpha;
        std::vector<Rational> beta;
        for (std::size_t k = 0; k < r0.size(); ++k) {
            const XPoly a = rb[k] - r0[k];
            const XPoly c = s_unknown ? rs[k] - r0[k] : XPoly();
            ASSERT_TRUE(a.is_constant() && c.is_constant());
            alpha.push_back(a.constant_term());
            beta.push_back(c.constant_term());
        }
        std::optional<XPoly> bd;
        for (std::size_t k = 0; k < r0.size() && !bd; ++k) {
            if (!alpha[k].is_zero() && beta[k].is_zero()) {
                bd = r0[k] * (-alpha[k].inverse());
            }
        }
        ASSERT_TRUE(bd.has_value()) << "b_" << d << " is not determined";
        b_[static_cast<std::size_t>(d)] = *bd;
        if (s_unknown) {
            std::optional<XPoly> sd;
            for (std::size_t k = 0; k < r0.size() && !sd; ++k) {
                if (!beta[k].is_zero()) {
                    sd = (r0[k] + *bd * alpha[k]) * (-beta[k].inverse());
                }
            }
            ASSERT_TRUE(sd.has_value()) << "s_" << si << " is not determined";
            s_[static_cast<std::size_t>(si)] = *sd;
        }
        for (int i = 0; i <= d; ++i) {
            ASSERT_TRUE(residual(i, d - i).is_zero()) << "inconsistent at u^" << i << " v^" << d - i;
        }
    }

    int order_;
    std::vector<XPoly> b_;
    std::vector<XPoly> s_;
};

} // namespace

TEST(Generate, AgreesWithBruteForceSolveOfTheTwoVariableEquation) {
    const int order = 16;
    const BruteForce oracle(order);
    ASSERT_FALSE(::testing::Test::HasFatalFailure());
    const BlowupPair p = solve_blowup_pair(order);
    for (int n = 0; n <= order; ++n) {
        EXPECT_EQ(p.b.coeff(n), oracle.b()[static_cast<std::size_t>(n)]) << "b_" << n;
    }
    for (int n = 0; n <= oracle.s_order(); ++n) {
        EXPECT_EQ(p.s.coeff(n), oracle.s()[static_cast<std::size_t>(n)]) << "s_" << n;
    }
}

TEST(Generate, LowOrderCoefficients) {
    const BlowupPair p = generate_blowup_pair(12);
    EXPECT_EQ(p.b.coeff(0), XPoly(1));
    for (int n = 1; n <= 3; ++n) {
        EXPECT_TRUE(p.b.coeff(n).is_zero());
    }
    EXPECT_EQ(p.b.coeff(4), XPoly(Rational(-1, 12)));
    EXPECT_EQ(p.b.normalized_coeff(6), XPoly::monomial(Rational(8), 1));
    EXPECT_TRUE(p.s.coeff(0).is_zero());
    EXPECT_EQ(p.s.coeff(1), XPoly(1));
    EXPECT_EQ(p.s.coeff(3), XPoly::monomial(Rational(-1, 6), 1));
    EXPECT_EQ(p.s.normalized_coeff(5), XPoly({Rational(2), Rational(0), Rational(1)}));
}

TEST(Generate, MatchesTheTableAtTheTableOrder) {
    const BlowupPair p = generate_blowup_pair(16);
    const auto& table = GoldenTable::embedded();
    EXPECT_TRUE(equal_to_order(p.b, table.rows.at("B"), 16));
    EXPECT_TRUE(equal_to_order(p.s, table.rows.at("S"), 15));
}

TEST(Generate, StructuralProperties) {
    const int order = 28;
    const BlowupPair p = generate_blowup_pair(order);
    EXPECT_EQ(p.b.order(), order);
    EXPECT_EQ(p.s.order(), order);
    for (int n = 0; n <= order; ++n) {
        if (n % 2 == 1) {
            EXPECT_TRUE(p.b.coeff(n).is_zero()) << n;
        } else {
            EXPECT_TRUE(p.s.coeff(n).is_zero()) << n;
        }
        if (n >= 1) {
            EXPECT_LE(p.b.coeff(n).degree(), (n - 1) / 2) << n;
            EXPECT_LE(p.s.coeff(n).degree(), (n - 1) / 2) << n;
        }
    }
    const TSeries e2 = e2_series(p.b, p.s);
    const TSeries e4 = e4_series(p.b, p.s);
    EXPECT_TRUE(e2.is_zero());
    EXPECT_TRUE(e4.is_zero());
    EXPECT_EQ(e2.order(), order - 2);
    EXPECT_EQ(e4.order(), order - 4);
}

TEST(Generate, PrefixStable) {
    const BlowupPair lo = solve_blowup_pair(10);
    const BlowupPair hi = solve_blowup_pair(24);
    EXPECT_EQ(hi.b.truncated(10), lo.b);
    EXPECT_EQ(hi.s.truncated(10), lo.s);
}

TEST(Generate, RejectsTooSmallOrder) {
    EXPECT_THROW((void)solve_blowup_pair(3), std::invalid_argument);
    EXPECT_NO_THROW((void)solve_blowup_pair(4));
}

TEST(Generate, ResidualsFlagPerturbedSeries) {
    const BlowupPair p = solve_blowup_pair(12);
    const TSeries bad = p.b + TSeries::monomial(XPoly(Rational(1, 720)), 6, 12);
    EXPECT_FALSE(e4_series(bad, p.s).is_zero());
    auto [lhs, rhs] = bb_sides(bad, p.s, 12);
    const auto m = first_difference(lhs, rhs, 12);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->u + m->v, 6);
}
