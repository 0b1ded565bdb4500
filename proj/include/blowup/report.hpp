#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "blowup/biseries.hpp"
#include "blowup/tseries.hpp"

namespace blowup {

/// Outcome of checking one identity (or one table row) through a finite order.
///
/// A passing report certifies agreement through `order` only; nothing is
/// claimed beyond it.
struct VerificationReport {
    std::string identity;
    int order = 0;
    bool pass = false;
    /// Empty on pass. A Mismatch for series in t, a BiMismatch for (u, v).
    std::variant<std::monostate, Mismatch, BiMismatch> first_mismatch;
    /// Set when the identity could not be evaluated at all (for instance a
    /// corrupted series lost its invertible leading term).
    std::optional<std::string> error;
    /// "finite-order agreement" or "conjectural (series level)".
    std::string claim = "finite-order agreement";
    std::string series_hash;
    double ms = 0.0;
};

inline nlohmann::ordered_json mismatch_to_json(const VerificationReport& r) {
    if (const auto* m = std::get_if<Mismatch>(&r.first_mismatch)) {
        return nlohmann::ordered_json{{"t", m->t}, {"x", m->x}, {"lhs", m->lhs.str()}, {"rhs", m->rhs.str()}};
    }
    if (const auto* m = std::get_if<BiMismatch>(&r.first_mismatch)) {
        return nlohmann::ordered_json{{"u", m->u}, {"v", m->v}, {"x", m->x}, {"lhs", m->lhs.str()}, {"rhs", m->rhs.str()}};
    }
    return nullptr;
}

/// Report JSON. With `with_timing == false` the "ms" field is left out so
/// that reports from different runs compare byte for byte.
inline nlohmann::ordered_json report_to_json(const VerificationReport& r, bool with_timing = true) {
    nlohmann::ordered_json j;
    j["identity"] = r.identity;
    j["order"] = r.order;
    j["pass"] = r.pass;
    j["first_mismatch"] = mismatch_to_json(r);
    j["claim"] = r.claim;
    if (r.error) {
        j["error"] = *r.error;
    }
    j["series_hash"] = r.series_hash;
    if (with_timing) {
        j["ms"] = r.ms;
    }
    return j;
}

} // namespace blowup
