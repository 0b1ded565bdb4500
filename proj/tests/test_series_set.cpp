#include <gtest/gtest.h>

#include "blowup/series_set.hpp"

using namespace blowup;

namespace {

const BlowupSeriesSet& set20() {
    static const BlowupSeriesSet s = BlowupSeriesSet::generate(20);
    return s;
}

} // namespace

TEST(SeriesSet, Names) {
    EXPECT_EQ(name_of(SeriesId::b_squared), "B2");
    EXPECT_EQ(name_of(SeriesId::s_one), "FRAK_S1");
    EXPECT_EQ(series_id_from_name("WRONSKIAN"), SeriesId::wronskian);
    EXPECT_FALSE(series_id_from_name("b").has_value());
    for (std::size_t i = 0; i < series_id_count; ++i) {
        EXPECT_EQ(series_id_from_name(series_names[i]), static_cast<SeriesId>(i));
    }
}

TEST(SeriesSet, EveryMemberReachesTheCertifiedOrder) {
    const auto& set = set20();
    EXPECT_EQ(set.order(), 20);
    for (std::size_t i = 0; i < series_id_count; ++i) {
        const auto id = static_cast<SeriesId>(i);
        ASSERT_TRUE(set.has(id)) << name_of(id);
        EXPECT_GE(set[id].order(), 20) << name_of(id);
        EXPECT_GE(set[id].valuation(), 0) << name_of(id);
    }
    EXPECT_EQ(set.series_hash().size(), 64U);
}

TEST(SeriesSet, ProductCoefficients) {
    const auto& set = set20();
    EXPECT_EQ(set[SeriesId::b_squared].normalized_coeff(4), XPoly(-4));
    EXPECT_EQ(set[SeriesId::b_squared].normalized_coeff(6), XPoly::monomial(Rational(16), 1));
    EXPECT_EQ(set[SeriesId::s_squared].normalized_coeff(2), XPoly(2));
    EXPECT_EQ(set[SeriesId::s_squared].normalized_coeff(4), XPoly::monomial(Rational(-8), 1));
    EXPECT_EQ(set[SeriesId::wronskian].coeff(0), XPoly(1));
    EXPECT_EQ(set[SeriesId::wronskian].normalized_coeff(2), XPoly::monomial(Rational(-1), 1));
    EXPECT_EQ(set[SeriesId::wronskian].normalized_coeff(4), XPoly({Rational(8), Rational(0), Rational(1)}));
    EXPECT_EQ(set[SeriesId::bs].normalized_coeff(3), XPoly::monomial(Rational(-1), 1));
}

TEST(SeriesSet, FrakB) {
    const auto& set = set20();
    const TSeries& p = set[SeriesId::b_plus];
    EXPECT_EQ(p.coeff(0), XPoly(1));
    EXPECT_EQ(p.coeff(1), XPoly());
    EXPECT_EQ(p.coeff(2), XPoly(1));
    EXPECT_EQ(p.coeff(4), XPoly({Rational(-1, 6), Rational(-1, 3)}));
    EXPECT_EQ(set[SeriesId::b_minus].coeff(2), XPoly(-1));
    EXPECT_EQ(set[SeriesId::b_zero].normalized_coeff(4), XPoly(-4));
    EXPECT_EQ(set[SeriesId::b_tau].normalized_coeff(2), XPoly(2));
    // B+ B- = B(2t)
    const TSeries prod = p * set[SeriesId::b_minus];
    EXPECT_TRUE(equal_to_order(prod, set.b().scaled_argument(Rational(2)), 20));
    // the two closed forms agree
    EXPECT_TRUE(equal_to_order(frak_b_sqrt_form(set.b(), set.s(), Sign::plus), p, 20));
    EXPECT_TRUE(equal_to_order(frak_b_sqrt_form(set.b(), set.s(), Sign::minus), set[SeriesId::b_minus], 20));
}

TEST(SeriesSet, FrakS) {
    const auto& set = set20();
    const TSeries& s0 = set[SeriesId::s_zero];
    EXPECT_EQ(s0.coeff(0), XPoly(1));
    EXPECT_EQ(s0.coeff(2), XPoly::monomial(Rational(-1, 2), 1));
    EXPECT_EQ(s0.coeff(4), XPoly({Rational(1, 3), Rational(0), Rational(1, 24)}));
    const TSeries& s1 = set[SeriesId::s_one];
    EXPECT_EQ(s1.valuation(), 1);
    EXPECT_EQ(s1.coeff(1), XPoly(1));
    EXPECT_EQ(s1.coeff(3), XPoly::monomial(Rational(-1, 6), 1));
    // integrands: (B + S')/S - 2/t starts -x t/6
    const TSeries q1 = frak_s1_integrand(set.b(), set.s());
    EXPECT_EQ(q1.valuation(), 1);
    EXPECT_EQ(q1.coeff(1), XPoly::monomial(Rational(-1, 6), 1));
    const TSeries q0 = frak_s0_integrand(set.b(), set.s());
    EXPECT_EQ(q0.valuation(), 1);
    EXPECT_EQ(q0.coeff(1), XPoly::monomial(Rational(-1, 2), 1));
}

TEST(SeriesSet, Parity) {
    const auto& set = set20();
    for (SeriesId id : {SeriesId::b, SeriesId::b_squared, SeriesId::s_squared, SeriesId::wronskian, SeriesId::b_zero,
                        SeriesId::b_tau, SeriesId::s_zero}) {
        EXPECT_EQ(set[id].truncated(20).scaled_argument(Rational(-1)), set[id].truncated(20)) << name_of(id);
    }
    for (SeriesId id : {SeriesId::s, SeriesId::bs, SeriesId::s_one}) {
        EXPECT_EQ(set[id].truncated(20).scaled_argument(Rational(-1)), -set[id].truncated(20)) << name_of(id);
    }
    // the exponents integrate odd functions, so both factors are even
    for (SeriesId id : {SeriesId::b_plus, SeriesId::b_minus}) {
        EXPECT_EQ(set[id].scaled_argument(Rational(-1)), set[id]) << name_of(id);
    }
}

TEST(SeriesSet, CorruptedPairRecordsErrors) {
    // S with a constant term leaves an uncancelled 2/t in the S1 integrand
    const auto& good = set20();
    const TSeries bad_s = good.s() + TSeries::one(good.s().order());
    const auto set = BlowupSeriesSet::from_pair(good.b(), bad_s, 20);
    EXPECT_TRUE(set.has(SeriesId::b_squared));
    EXPECT_TRUE(set.has(SeriesId::b_plus));
    EXPECT_FALSE(set.has(SeriesId::s_zero));
    EXPECT_FALSE(set.has(SeriesId::s_one));
    EXPECT_THROW((void)set[SeriesId::s_zero], SeriesError);
    EXPECT_NE(set.series_hash(), good.series_hash());
}

TEST(SeriesSet, HashIsDeterministic) {
    const auto a = BlowupSeriesSet::generate(12);
    const auto b = BlowupSeriesSet::generate(12);
    EXPECT_EQ(a.series_hash(), b.series_hash());
}
