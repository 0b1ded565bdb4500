#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "blowup/golden_table.hpp"
#include "blowup/report.hpp"
#include "blowup/series_set.hpp"

namespace blowup {

/// Which members of a BlowupSeriesSet each table row certifies. A row is
/// checked against every listed member, so B2 covers both B^2 and the
/// integral-formula series FRAK_B0.
inline const std::vector<std::pair<std::string, std::vector<SeriesId>>>& golden_row_members() {
    static const std::vector<std::pair<std::string, std::vector<SeriesId>>> rows{
        {"B", {SeriesId::b}},
        {"S", {SeriesId::s}},
        {"B2", {SeriesId::b_squared, SeriesId::b_zero}},
        {"S2", {SeriesId::s_squared, SeriesId::b_tau}},
        {"FRAK_S0", {SeriesId::s_zero, SeriesId::wronskian}},
        {"FRAK_S1", {SeriesId::s_one, SeriesId::bs}},
    };
    return rows;
}

/// One report per (row, member) pair, labelled "golden:<row>:<member>".
inline std::vector<VerificationReport> golden_check(const BlowupSeriesSet& set,
                                                    const GoldenTable& table = GoldenTable::embedded()) {
    if (set.order() < table.max_order()) {
        throw std::invalid_argument("table check needs order >= " + std::to_string(table.max_order()) + ", got " +
                                    std::to_string(set.order()));
    }
    std::vector<VerificationReport> out;
    for (const auto& [row, members] : golden_row_members()) {
        const TSeries& golden = table.rows.at(row);
        for (SeriesId id : members) {
            const std::string label = "golden:" + row + ":" + std::string(name_of(id));
            if (!set.has(id)) {
                VerificationReport r;
                r.identity = label;
                r.order = golden.order();
                r.series_hash = table.hash;
                try {
                    (void)set[id];
                } catch (const std::exception& e) {
                    r.error = e.what();
                }
                out.push_back(std::move(r));
                continue;
            }
            out.push_back(compare_with_golden(label, set[id], golden, table.hash));
        }
    }
    return out;
}

} // namespace blowup
