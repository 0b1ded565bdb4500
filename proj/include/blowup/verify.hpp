#pragma once

// The identity catalog: every series identity relating B, S and the
// (-2)-sphere series, each checked exactly through a finite order.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "blowup/biseries.hpp"
#include "blowup/elementary.hpp"
#include "blowup/generate.hpp"
#include "blowup/report.hpp"
#include "blowup/series_set.hpp"

namespace blowup::verify {

using Outcome = std::variant<std::monostate, Mismatch, BiMismatch>;

enum class Arity { univariate, bivariate };

inline constexpr const char* claim_finite = "finite-order agreement";
inline constexpr const char* claim_conjectural = "conjectural (series level)";

struct IdentityDescriptor {
    std::string id;
    Arity arity = Arity::univariate;
    std::string claim = claim_finite;
    /// Orders beyond this get slow; informational.
    int max_feasible_order_hint = 64;
    std::function<Outcome(const BlowupSeriesSet&, int)> check;
};

namespace detail {

using SeriesPair = std::pair<TSeries, TSeries>;

inline Outcome compare(const SeriesPair& sides, int order) {
    if (auto m = first_difference(sides.first, sides.second, order)) {
        return *m;
    }
    return std::monostate{};
}

inline Outcome compare(const std::pair<BiSeries, BiSeries>& sides, int order) {
    if (auto m = first_difference(sides.first, sides.second, order)) {
        return *m;
    }
    return std::monostate{};
}

inline std::function<Outcome(const BlowupSeriesSet&, int)> univariate(
    std::function<SeriesPair(const BlowupSeriesSet&, int)> sides) {
    return [sides = std::move(sides)](const BlowupSeriesSet& set, int order) { return compare(sides(set, order), order); };
}

} // namespace detail

/// Both sides of S(u)S(v)S(u+v) = B'(u)B(v)B(u+v) + B(u)B'(v)B(u+v) - B(u)B(v)B'(u+v).
inline std::pair<BiSeries, BiSeries> bbb_sides(const TSeries& b, const TSeries& s, int order) {
    const TSeries bt = b.truncated(order + 1);
    const TSeries st = s.truncated(order);
    const TSeries db = bt.derivative();
    const BiSeries bu = BiSeries::in_u(bt.truncated(order));
    const BiSeries bv = BiSeries::in_v(bt.truncated(order));
    const BiSeries bsum = BiSeries::substitute(bt.truncated(order), Sign::plus);
    const BiSeries lhs = BiSeries::in_u(st) * BiSeries::in_v(st) * BiSeries::substitute(st, Sign::plus);
    const BiSeries rhs = BiSeries::in_u(db) * bv * bsum + bu * BiSeries::in_v(db) * bsum -
                         bu * bv * BiSeries::substitute(db, Sign::plus);
    return {lhs.truncated(order), rhs.truncated(order)};
}

/// Reference closed forms at the simple-type points x = 2 (hyperbolic) and x = -2 (trigonometric).
struct DegenerationReference {
    TSeries b_squared;
    TSeries s_squared;
    TSeries wronskian;
    TSeries bs;
};

inline DegenerationReference degeneration_reference(const Rational& point, int order) {
    if (point != Rational(2) && point != Rational(-2)) {
        throw std::invalid_argument("simple-type degeneration is defined at x = 2 and x = -2 only");
    }
    const bool hyperbolic = point == Rational(2);
    // e^{-t^2} at x = 2, e^{t^2} at x = -2
    const TSeries gauss = elementary::exp_monomial(hyperbolic ? Rational(-1) : Rational(1), 2, order);
    const TSeries even = hyperbolic ? elementary::cosh(order) : elementary::cos(order);
    const TSeries odd = hyperbolic ? elementary::sinh(order) : elementary::sin(order);
    const TSeries half_odd_2t = odd.scaled_argument(Rational(2)) * Rational(1, 2);
    return {gauss * even * even, gauss * odd * odd, gauss, gauss * half_odd_2t};
}

/// The full catalog in its fixed reporting order.
inline std::vector<IdentityDescriptor> catalog() {
    using detail::SeriesPair;
    using detail::univariate;
    std::vector<IdentityDescriptor> c;

    auto member_pair = [](SeriesId lhs, SeriesId rhs) {
        return univariate([lhs, rhs](const BlowupSeriesSet& set, int) { return SeriesPair{set[lhs], set[rhs]}; });
    };
    c.push_back({"frak_b0_equals_b_squared", Arity::univariate, claim_finite, 64,
                 member_pair(SeriesId::b_zero, SeriesId::b_squared)});
    c.push_back({"frak_btau_equals_s_squared", Arity::univariate, claim_finite, 64,
                 member_pair(SeriesId::b_tau, SeriesId::s_squared)});
    c.push_back({"frak_s0_equals_wronskian", Arity::univariate, claim_finite, 64,
                 member_pair(SeriesId::s_zero, SeriesId::wronskian)});
    c.push_back({"frak_s1_equals_bs", Arity::univariate, claim_finite, 64, member_pair(SeriesId::s_one, SeriesId::bs)});

    c.push_back({"frak_b_plus_closed_forms", Arity::univariate, claim_finite, 64,
                 univariate([](const BlowupSeriesSet& set, int) {
                     return SeriesPair{set[SeriesId::b_plus], frak_b_sqrt_form(set.b(), set.s(), Sign::plus)};
                 })});
    c.push_back({"frak_b_minus_closed_forms", Arity::univariate, claim_finite, 64,
                 univariate([](const BlowupSeriesSet& set, int) {
                     return SeriesPair{set[SeriesId::b_minus], frak_b_sqrt_form(set.b(), set.s(), Sign::minus)};
                 })});
    c.push_back({"frak_b_product", Arity::univariate, claim_finite, 64, univariate([](const BlowupSeriesSet& set, int) {
                     return SeriesPair{set[SeriesId::b_plus] * set[SeriesId::b_minus],
                                       set.b().scaled_argument(Rational(2))};
                 })});

    // d/dt (B^2 +- S^2) = ((B' +- S)/B)(2t) (B^2 +- S^2)
    auto pm_ode = [](Sign sign) {
        return univariate([sign](const BlowupSeriesSet& set, int) {
            const TSeries& b = set.b();
            const TSeries& s = set.s();
            const TSeries f = sign == Sign::plus ? set[SeriesId::b_squared] + set[SeriesId::s_squared]
                                                 : set[SeriesId::b_squared] - set[SeriesId::s_squared];
            const TSeries numerator = sign == Sign::plus ? b.derivative() + s : b.derivative() - s;
            return SeriesPair{f.derivative(), (numerator / b).scaled_argument(Rational(2)) * f};
        });
    };
    c.push_back({"pm_ode_plus", Arity::univariate, claim_conjectural, 64, pm_ode(Sign::plus)});
    c.push_back({"pm_ode_minus", Arity::univariate, claim_conjectural, 64, pm_ode(Sign::minus)});

    c.push_back({"ode_v2", Arity::univariate, claim_finite, 64, univariate([](const BlowupSeriesSet& set, int order) {
                     return SeriesPair{e2_series(set.b(), set.s()), TSeries(order)};
                 })});
    c.push_back({"ode_v4", Arity::univariate, claim_finite, 64, univariate([](const BlowupSeriesSet& set, int order) {
                     return SeriesPair{e4_series(set.b(), set.s()), TSeries(order)};
                 })});

    // B(2t) = B^4 - S^4: the two-variable equation on the diagonal u = v.
    c.push_back({"bb_diagonal", Arity::univariate, claim_conjectural, 64,
                 univariate([](const BlowupSeriesSet& set, int) {
                     const TSeries& b2 = set[SeriesId::b_squared];
                     const TSeries& s2 = set[SeriesId::s_squared];
                     return SeriesPair{set.b().scaled_argument(Rational(2)), b2 * b2 - s2 * s2};
                 })});
    c.push_back({"bb", Arity::bivariate, claim_conjectural, 24, [](const BlowupSeriesSet& set, int order) {
                     return detail::compare(bb_sides(set.b(), set.s(), order), order);
                 }});
    c.push_back({"bbb", Arity::bivariate, claim_conjectural, 24, [](const BlowupSeriesSet& set, int order) {
                     return detail::compare(bbb_sides(set.b(), set.s(), order), order);
                 }});

    auto degeneration = [](const Rational& point, SeriesId member) {
        return univariate([point, member](const BlowupSeriesSet& set, int order) {
            const auto ref = degeneration_reference(point, order);
            const TSeries& expected = member == SeriesId::b_squared   ? ref.b_squared
                                      : member == SeriesId::s_squared ? ref.s_squared
                                      : member == SeriesId::wronskian ? ref.wronskian
                                                                      : ref.bs;
            return SeriesPair{set[member].eval_x(point), expected};
        });
    };
    for (const auto& [prefix, point] : {std::pair{"simple_type", Rational(2)}, std::pair{"mirror", Rational(-2)}}) {
        const std::string p = prefix;
        c.push_back({p + "_b_squared", Arity::univariate, claim_finite, 64, degeneration(point, SeriesId::b_squared)});
        c.push_back({p + "_s_squared", Arity::univariate, claim_finite, 64, degeneration(point, SeriesId::s_squared)});
        c.push_back({p + "_wronskian", Arity::univariate, claim_finite, 64, degeneration(point, SeriesId::wronskian)});
        c.push_back({p + "_bs", Arity::univariate, claim_finite, 64, degeneration(point, SeriesId::bs)});
    }

    // Normalized [t^2]B^2 = 0, [t^2]S^2 = 2, [t^4]B^2 = -4, [t^4]S^2 = -8x.
    c.push_back({"relation_coefficients", Arity::univariate, claim_finite, 4, [](const BlowupSeriesSet& set, int) {
                     const TSeries b2 = TSeries::from_coefficients(0, {XPoly(1), {}, {}, {}, XPoly(Rational(-4, 24))}, 4);
                     const TSeries s2 = TSeries::from_coefficients(
                         2, {XPoly(Rational(2, 2)), {}, XPoly::monomial(Rational(-8, 24), 1)}, 4);
                     Outcome o = detail::compare({set[SeriesId::b_squared], b2}, 4);
                     if (std::holds_alternative<std::monostate>(o)) {
                         o = detail::compare({set[SeriesId::s_squared], s2}, 4);
                     }
                     return o;
                 }});

    c.push_back({"parity", Arity::univariate, claim_finite, 64, [](const BlowupSeriesSet& set, int order) {
                     static constexpr SeriesId even[] = {SeriesId::b,      SeriesId::b_squared, SeriesId::s_squared,
                                                         SeriesId::wronskian, SeriesId::b_plus, SeriesId::b_minus,
                                                         SeriesId::b_zero, SeriesId::b_tau,    SeriesId::s_zero};
                     static constexpr SeriesId odd[] = {SeriesId::s, SeriesId::bs, SeriesId::s_one};
                     for (SeriesId id : even) {
                         Outcome o = detail::compare({set[id], set[id].scaled_argument(Rational(-1))}, order);
                         if (!std::holds_alternative<std::monostate>(o)) {
                             return o;
                         }
                     }
                     for (SeriesId id : odd) {
                         Outcome o = detail::compare({set[id], -set[id].scaled_argument(Rational(-1))}, order);
                         if (!std::holds_alternative<std::monostate>(o)) {
                             return o;
                         }
                     }
                     return Outcome{};
                 }});
    return c;
}

/// Runs one descriptor. Exceptions become failing reports carrying the message.
inline VerificationReport run_identity(const IdentityDescriptor& d, const BlowupSeriesSet& set, int order) {
    VerificationReport r;
    r.identity = d.id;
    r.claim = d.claim;
    r.series_hash = set.series_hash();
    r.order = d.id == "relation_coefficients" ? 4 : order;
    const auto start = std::chrono::steady_clock::now();
    try {
        r.first_mismatch = d.check(set, order);
        r.pass = std::holds_alternative<std::monostate>(r.first_mismatch);
    } catch (const std::exception& e) {
        r.pass = false;
        r.error = e.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

struct VerifyOptions {
    int jobs = 1;
    /// Total degree for the two-variable identities.
    int bivariate_order = 16;
    /// Restrict to these identity ids; empty means the whole catalog.
    std::vector<std::string> only;
};

inline int order_for(const IdentityDescriptor& d, int order, const VerifyOptions& opt) {
    return d.arity == Arity::bivariate ? std::min(order, opt.bivariate_order) : order;
}

/// Runs the (filtered) catalog over an existing set. Reports come back in
/// catalog order whatever the thread schedule.
inline std::vector<VerificationReport> run_catalog(const BlowupSeriesSet& set, int order, const VerifyOptions& opt = {}) {
    if (order > set.order()) {
        throw std::invalid_argument("verification order " + std::to_string(order) + " exceeds the set's order " +
                                    std::to_string(set.order()));
    }
    std::vector<IdentityDescriptor> selected;
    for (auto& d : catalog()) {
        if (opt.only.empty() || std::find(opt.only.begin(), opt.only.end(), d.id) != opt.only.end()) {
            selected.push_back(std::move(d));
        }
    }
    for (const auto& id : opt.only) {
        if (std::none_of(selected.begin(), selected.end(), [&](const auto& d) { return d.id == id; })) {
            throw std::invalid_argument("unknown identity '" + id + "'");
        }
    }
    std::vector<VerificationReport> reports(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < selected.size(); i = next++) {
            reports[i] = run_identity(selected[i], set, order_for(selected[i], order, opt));
        }
    };
    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
    }
    return reports;
}

inline constexpr int min_verify_order = 8;

/// Regenerates B and S at `order`, builds every derived series and runs the catalog.
inline std::vector<VerificationReport> verify_all(int order, const VerifyOptions& opt = {}) {
    if (order < min_verify_order) {
        throw std::invalid_argument("verify needs order >= " + std::to_string(min_verify_order) + ", got " +
                                    std::to_string(order));
    }
    const auto set = BlowupSeriesSet::generate(order, {.bivariate_check_order = std::min(order, opt.bivariate_order)});
    return run_catalog(set, order, opt);
}

// Named entry points for the individual groups.

inline std::vector<VerificationReport> run_group(const BlowupSeriesSet& set, int order,
                                                 std::vector<std::string> ids) {
    VerifyOptions opt;
    opt.only = std::move(ids);
    opt.bivariate_order = order;
    return run_catalog(set, order, opt);
}

inline std::vector<VerificationReport> verify_frak_identities(const BlowupSeriesSet& set, int order) {
    return run_group(set, order,
                     {"frak_b0_equals_b_squared", "frak_btau_equals_s_squared", "frak_s0_equals_wronskian",
                      "frak_s1_equals_bs"});
}

inline VerificationReport verify_bb(const BlowupSeriesSet& set, int total_order) {
    return run_group(set, total_order, {"bb"}).front();
}

inline VerificationReport verify_bbb(const BlowupSeriesSet& set, int total_order) {
    return run_group(set, total_order, {"bbb"}).front();
}

inline std::vector<VerificationReport> verify_pm_ode(const BlowupSeriesSet& set, int order) {
    return run_group(set, order, {"pm_ode_plus", "pm_ode_minus"});
}

inline std::vector<VerificationReport> verify_simple_type_degeneration(const BlowupSeriesSet& set, int order,
                                                                       const Rational& point = Rational(2)) {
    const std::string p = point == Rational(2) ? "simple_type" : "mirror";
    if (point != Rational(2) && point != Rational(-2)) {
        throw std::invalid_argument("simple-type degeneration is defined at x = 2 and x = -2 only");
    }
    return run_group(set, order, {p + "_b_squared", p + "_s_squared", p + "_wronskian", p + "_bs"});
}

inline VerificationReport verify_relations_coefficients(const BlowupSeriesSet& set) {
    if (set.order() < 4) {
        throw std::invalid_argument("relation coefficients need order >= 4");
    }
    return run_group(set, set.order(), {"relation_coefficients"}).front();
}

} // namespace blowup::verify
