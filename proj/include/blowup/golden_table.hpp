#pragma once

// The published first terms of the universal series, kept as exact data.
// Source: data/golden_table.json, embedded at configure time.

#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "blowup/golden_table_data.hpp"
#include "blowup/hash.hpp"
#include "blowup/report.hpp"
#include "blowup/series_json.hpp"
#include "blowup/tseries.hpp"

namespace blowup {

struct GoldenTable {
    /// Row name ("B", "S", "B2", "S2", "FRAK_S0", "FRAK_S1") -> series exact through its last listed term.
    std::map<std::string, TSeries> rows;
    /// SHA-256 of the source JSON text.
    std::string hash;

    static GoldenTable parse(std::string_view text) {
        GoldenTable table;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("golden table is not valid JSON: ") + e.what());
        }
        if (!j.is_object() || !j.contains("series") || !j["series"].is_object()) {
            throw ParseError("golden table needs a \"series\" object");
        }
        try {
            for (const auto& [name, series] : j["series"].items()) {
                table.rows.emplace(name, tseries_from_json(series));
            }
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("malformed golden table row: " + std::string(e.what()));
        }
        table.hash = sha256_hex(text);
        return table;
    }

    static const GoldenTable& embedded() {
        static const GoldenTable table = parse(detail::golden_table_json);
        return table;
    }

    /// Highest t-power covered by any row.
    [[nodiscard]] int max_order() const {
        int n = 0;
        for (const auto& [name, s] : rows) {
            n = std::max(n, s.order());
        }
        return n;
    }
};

/// Compares `generated` with the golden row through the row's last term.
inline VerificationReport compare_with_golden(const std::string& label, const TSeries& generated,
                                              const TSeries& golden, const std::string& table_hash) {
    VerificationReport r;
    r.identity = label;
    r.order = golden.order();
    r.series_hash = table_hash;
    try {
        if (auto m = first_difference(generated, golden, golden.order())) {
            r.first_mismatch = *m;
        } else {
            r.pass = true;
        }
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

} // namespace blowup
