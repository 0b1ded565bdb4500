#pragma once

// Truncated series in two variables (u, v) over Q[x], truncated by total
// degree: the coefficient of u^i v^j is stored for i + j <= order.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "blowup/errors.hpp"
#include "blowup/tseries.hpp"
#include "blowup/xpoly.hpp"

namespace blowup {

enum class Sign { plus, minus };

class BiSeries {
public:
    explicit BiSeries(int order = 0) : order_(order), c_(triangle_size(order)) {}

    [[nodiscard]] int order() const { return order_; }

    [[nodiscard]] const XPoly& at(int i, int j) const {
        check_index(i, j);
        return c_[index(i, j)];
    }
    void set(int i, int j, XPoly value) {
        check_index(i, j);
        c_[index(i, j)] = std::move(value);
    }

    /// Lowest total degree carrying a nonzero coefficient; order + 1 if none.
    [[nodiscard]] int valuation() const {
        for (int d = 0; d <= order_; ++d) {
            for (int i = 0; i <= d; ++i) {
                if (!c_[index(i, d - i)].is_zero()) {
                    return d;
                }
            }
        }
        return order_ + 1;
    }

    [[nodiscard]] BiSeries truncated(int new_order) const {
        if (new_order > order_) {
            throw SeriesError("cannot extend a bivariate series of total order " + std::to_string(order_));
        }
        BiSeries out(new_order);
        for (int i = 0; i <= new_order; ++i) {
            for (int j = 0; i + j <= new_order; ++j) {
                out.c_[out.index(i, j)] = c_[index(i, j)];
            }
        }
        return out;
    }

    /// t^n -> (u + v)^n or (u - v)^n, expanded binomially.
    static BiSeries substitute(const TSeries& a, Sign sign) {
        if (a.valuation() < 0) {
            throw SeriesError("substitution t -> u +/- v needs a power series (valuation >= 0)");
        }
        BiSeries out(a.order());
        for (int n = a.valuation(); n <= a.order(); ++n) {
            const XPoly an = a.coeff(n);
            if (an.is_zero()) {
                continue;
            }
            for (int k = 0; k <= n; ++k) {
                Rational b = Rational::binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
                if (sign == Sign::minus && (k % 2 == 1)) {
                    b = -b;
                }
                out.c_[out.index(n - k, k)] += an * b;
            }
        }
        return out;
    }

    /// a(u) * b(v).
    static BiSeries outer(const TSeries& a, const TSeries& b) {
        if (a.valuation() < 0 || b.valuation() < 0) {
            throw SeriesError("outer product needs power series (valuation >= 0)");
        }
        const int order = std::min(a.order() + b.valuation(), b.order() + a.valuation());
        BiSeries out(order);
        for (int i = a.valuation(); i <= std::min(order, a.order()); ++i) {
            const XPoly ai = a.coeff(i);
            if (ai.is_zero()) {
                continue;
            }
            for (int j = b.valuation(); i + j <= order; ++j) {
                out.c_[out.index(i, j)] = ai * b.coeff(j);
            }
        }
        return out;
    }

    static BiSeries in_u(const TSeries& a) { return outer(a, TSeries::one(a.order())); }
    static BiSeries in_v(const TSeries& a) { return outer(TSeries::one(a.order()), a); }

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b) { return combine(a, b, false); }
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b) { return combine(a, b, true); }

    friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
        const int va = a.valuation();
        const int vb = b.valuation();
        const int order = std::min(a.order_ + vb, b.order_ + va);
        BiSeries out(std::max(order, -1));
        for (int i1 = 0; i1 <= a.order_; ++i1) {
            for (int j1 = 0; i1 + j1 <= a.order_; ++j1) {
                const XPoly& p = a.c_[a.index(i1, j1)];
                if (p.is_zero() || i1 + j1 > order) {
                    continue;
                }
                for (int i2 = 0; i1 + j1 + i2 <= order && i2 <= b.order_; ++i2) {
                    for (int j2 = 0; i1 + j1 + i2 + j2 <= order && i2 + j2 <= b.order_; ++j2) {
                        const XPoly& q = b.c_[b.index(i2, j2)];
                        if (!q.is_zero()) {
                            out.c_[out.index(i1 + i2, j1 + j2)] += p * q;
                        }
                    }
                }
            }
        }
        return out;
    }

    friend bool operator==(const BiSeries& a, const BiSeries& b) = default;

private:
    static std::size_t triangle_size(int order) {
        if (order < 0) {
            return 0;
        }
        const auto n = static_cast<std::size_t>(order) + 1;
        return n * (n + 1) / 2;
    }

    [[nodiscard]] std::size_t index(int i, int j) const {
        // row i holds j = 0 .. order - i
        const auto ui = static_cast<std::size_t>(i);
        const auto n = static_cast<std::size_t>(order_) + 1;
        return ui * n - ui * (ui - 1) / 2 + static_cast<std::size_t>(j);
    }

    void check_index(int i, int j) const {
        if (i < 0 || j < 0 || i + j > order_) {
            throw SeriesError("bivariate index (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") outside total order " + std::to_string(order_));
        }
    }

    static BiSeries combine(const BiSeries& a, const BiSeries& b, bool subtract) {
        BiSeries out(std::min(a.order_, b.order_));
        for (int i = 0; i <= out.order_; ++i) {
            for (int j = 0; i + j <= out.order_; ++j) {
                XPoly v = a.c_[a.index(i, j)];
                if (subtract) {
                    v -= b.c_[b.index(i, j)];
                } else {
                    v += b.c_[b.index(i, j)];
                }
                out.c_[out.index(i, j)] = std::move(v);
            }
        }
        return out;
    }

    int order_;
    std::vector<XPoly> c_;
};

struct BiMismatch {
    int u = 0;
    int v = 0;
    int x = 0;
    Rational lhs;
    Rational rhs;
};

/// First disagreement through total degree n, scanning by total degree, then u-power, then x-power.
inline std::optional<BiMismatch> first_difference(const BiSeries& a, const BiSeries& b, int n) {
    if (n > a.order() || n > b.order()) {
        throw SeriesError("bivariate comparison through total degree " + std::to_string(n) + " exceeds known orders");
    }
    for (int d = 0; d <= n; ++d) {
        for (int i = d; i >= 0; --i) {
            const XPoly& pa = a.at(i, d - i);
            const XPoly& pb = b.at(i, d - i);
            if (pa == pb) {
                continue;
            }
            const std::size_t top = std::max(pa.size(), pb.size());
            for (std::size_t k = 0; k < top; ++k) {
                if (pa[k] != pb[k]) {
                    return BiMismatch{i, d - i, static_cast<int>(k), pa[k], pb[k]};
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace blowup
