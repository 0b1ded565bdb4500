#pragma once

// Every universal series derived from B and S:
//
//   products    B^2, S^2, BS and the Wronskian BS' - B'S
//   (-2)-sphere series from the integral formulas
//     B+-(t)  = exp( int_0^t ((B' +- S)/B)(2s) ds )
//     B0      = (B+ + B-)/2,      Btau = (B+ - B-)/2
//     S0(t)   = exp( 1/2 int_0^{2t} ((-B + S')/S)(s) ds )
//     S1(t)   = t exp( 1/2 int_0^{2t} [((B + S')/S)(s) - 2/s] ds )

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "blowup/errors.hpp"
#include "blowup/generate.hpp"
#include "blowup/hash.hpp"
#include "blowup/series_json.hpp"
#include "blowup/tseries.hpp"

namespace blowup {

enum class SeriesId : std::size_t {
    b,
    s,
    b_squared,
    s_squared,
    bs,
    wronskian,
    b_plus,
    b_minus,
    b_zero,
    b_tau,
    s_zero,
    s_one,
};

inline constexpr std::size_t series_id_count = 12;

/// External names, as used by the CLI and in reports.
inline constexpr std::array<std::string_view, series_id_count> series_names{
    "B", "S", "B2", "S2", "BS", "WRONSKIAN", "BPLUS", "BMINUS", "FRAK_B0", "FRAK_BTAU", "FRAK_S0", "FRAK_S1"};

inline std::string_view name_of(SeriesId id) { return series_names[static_cast<std::size_t>(id)]; }

inline std::optional<SeriesId> series_id_from_name(std::string_view name) {
    for (std::size_t i = 0; i < series_id_count; ++i) {
        if (series_names[i] == name) {
            return static_cast<SeriesId>(i);
        }
    }
    return std::nullopt;
}

/// Extra margin of t-powers generated for B and S beyond the certified order,
/// so that derivatives and Laurent divisions still reach it.
inline constexpr int generation_margin = 4;

struct FrakB {
    TSeries plus;
    TSeries minus;
    TSeries zero;
    TSeries tau;
};

struct FrakS {
    TSeries zero;
    TSeries one;
};

struct DerivedProducts {
    TSeries b_squared;
    TSeries s_squared;
    TSeries bs;
    TSeries wronskian;
};

inline DerivedProducts build_derived(const TSeries& b, const TSeries& s) {
    return {b * b, s * s, b * s, b * s.derivative() - b.derivative() * s};
}

/// exp( int_0^t g(2s) ds ) for g = (B' + sign S)/B.
inline TSeries frak_b_exp_form(const TSeries& b, const TSeries& s, Sign sign) {
    const TSeries numerator = sign == Sign::plus ? b.derivative() + s : b.derivative() - s;
    return (numerator / b).scaled_argument(Rational(2)).integral().exp();
}

/// sqrt(B(2t)) exp( +-1/2 int_0^{2t} (S/B)(s) ds ), the second closed form.
inline TSeries frak_b_sqrt_form(const TSeries& b, const TSeries& s, Sign sign) {
    const Rational half = sign == Sign::plus ? Rational(1, 2) : Rational(-1, 2);
    const TSeries exponent = (s / b).integral().scaled_argument(Rational(2)) * half;
    return b.scaled_argument(Rational(2)).sqrt() * exponent.exp();
}

inline FrakB build_frak_b(const TSeries& b, const TSeries& s) {
    TSeries plus = frak_b_exp_form(b, s, Sign::plus);
    TSeries minus = frak_b_exp_form(b, s, Sign::minus);
    const Rational half(1, 2);
    TSeries zero = (plus + minus) * half;
    TSeries tau = (plus - minus) * half;
    return {std::move(plus), std::move(minus), std::move(zero), std::move(tau)};
}

/// Integrand of S0, (-B + S')/S: regular at 0.
inline TSeries frak_s0_integrand(const TSeries& b, const TSeries& s) {
    TSeries q = (s.derivative() - b) / s;
    if (q.valuation() < 0) {
        throw SeriesError("unexpected pole in (-B + S')/S: t^" + std::to_string(q.valuation()) + " coefficient " +
                          q.coeff(q.valuation()).str());
    }
    return q;
}

/// Integrand of S1, (B + S')/S - 2/s: the simple pole with residue 2 is removed.
inline TSeries frak_s1_integrand(const TSeries& b, const TSeries& s) {
    TSeries q = (b + s.derivative()) / s;
    q -= TSeries::monomial(XPoly(2), -1, q.order());
    if (q.valuation() < 0) {
        throw SeriesError("unexpected pole in (B + S')/S - 2/s: t^" + std::to_string(q.valuation()) +
                          " coefficient " + q.coeff(q.valuation()).str());
    }
    return q;
}

inline FrakS build_frak_s(const TSeries& b, const TSeries& s) {
    const Rational half(1, 2);
    TSeries zero = (frak_s0_integrand(b, s).integral().scaled_argument(Rational(2)) * half).exp();
    TSeries one = (frak_s1_integrand(b, s).integral().scaled_argument(Rational(2)) * half).exp().shifted(1);
    return {std::move(zero), std::move(one)};
}

/// B, S and everything derived from them, certified through `order()`.
///
/// Members that could not be constructed (only possible for hand-made,
/// corrupted B and S) are recorded with the error instead; asking for them
/// throws that error.
class BlowupSeriesSet {
public:
    /// Builds the set from a given pair. `order` is the order the set claims;
    /// members are kept at whatever order the operations leave them.
    static BlowupSeriesSet from_pair(TSeries b, TSeries s, int order) {
        BlowupSeriesSet set;
        set.order_ = order;
        set.hash_ = sha256_hex(tseries_to_json(b).dump() + "\n" + tseries_to_json(s).dump());
        set.put(SeriesId::b, b);
        set.put(SeriesId::s, s);
        set.attempt({SeriesId::b_squared, SeriesId::s_squared, SeriesId::bs, SeriesId::wronskian}, [&] {
            auto d = build_derived(b, s);
            set.put(SeriesId::b_squared, std::move(d.b_squared));
            set.put(SeriesId::s_squared, std::move(d.s_squared));
            set.put(SeriesId::bs, std::move(d.bs));
            set.put(SeriesId::wronskian, std::move(d.wronskian));
        });
        set.attempt({SeriesId::b_plus, SeriesId::b_minus, SeriesId::b_zero, SeriesId::b_tau}, [&] {
            auto f = build_frak_b(b, s);
            set.put(SeriesId::b_plus, std::move(f.plus));
            set.put(SeriesId::b_minus, std::move(f.minus));
            set.put(SeriesId::b_zero, std::move(f.zero));
            set.put(SeriesId::b_tau, std::move(f.tau));
        });
        set.attempt({SeriesId::s_zero, SeriesId::s_one}, [&] {
            auto f = build_frak_s(b, s);
            set.put(SeriesId::s_zero, std::move(f.zero));
            set.put(SeriesId::s_one, std::move(f.one));
        });
        return set;
    }

    /// Generates B and S with the margin needed to certify everything through `order`.
    static BlowupSeriesSet generate(int order, const GenerateOptions& options = {}) {
        auto pair = generate_blowup_pair(order + generation_margin, options);
        return from_pair(std::move(pair.b), std::move(pair.s), order);
    }

    [[nodiscard]] int order() const { return order_; }
    [[nodiscard]] const std::string& series_hash() const { return hash_; }

    [[nodiscard]] bool has(SeriesId id) const { return members_[index(id)].has_value(); }

    [[nodiscard]] const TSeries& operator[](SeriesId id) const {
        const auto& m = members_[index(id)];
        if (!m) {
            throw SeriesError(std::string(name_of(id)) + " unavailable: " + errors_[index(id)]);
        }
        return *m;
    }

    [[nodiscard]] const TSeries& b() const { return (*this)[SeriesId::b]; }
    [[nodiscard]] const TSeries& s() const { return (*this)[SeriesId::s]; }

private:
    static std::size_t index(SeriesId id) { return static_cast<std::size_t>(id); }

    void put(SeriesId id, TSeries value) { members_[index(id)] = std::move(value); }

    template <typename F>
    void attempt(std::initializer_list<SeriesId> ids, F&& build) {
        try {
            build();
        } catch (const std::exception& e) {
            for (auto id : ids) {
                members_[index(id)].reset();
                errors_[index(id)] = e.what();
            }
        }
    }

    int order_ = 0;
    std::string hash_;
    std::array<std::optional<TSeries>, series_id_count> members_{};
    std::array<std::string, series_id_count> errors_{};
};

} // namespace blowup
