#pragma once

// Command implementations for the blowup-series tool. Kept apart from main()
// so the test suite can drive them with in-memory streams.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 internal generation failure.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "blowup/blowup.hpp"

namespace blowup::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, generation_failed = 3 };

struct CliConfig {
    std::string command;
    int order = 28;
    int bivariate_order = 16;
    std::string series = "B";
    std::string format = "json";
    std::string normalization = "factorial";
    int jobs = 1;
    std::string input;
    std::string output;
    std::vector<std::string> identities;
    bool timing = true;
    std::string inject_fault;
};

/// Usage errors detected after flag parsing.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline std::optional<SeriesId> selector_to_id(const std::string& sel) {
    static const std::map<std::string, SeriesId> aliases{
        {"WS0", SeriesId::s_zero},
        {"WS1", SeriesId::s_one},
    };
    if (auto it = aliases.find(sel); it != aliases.end()) {
        return it->second;
    }
    return series_id_from_name(sel);
}

inline std::string latex_series(const std::string& name, const TSeries& s, Normalization norm) {
    std::ostringstream os;
    os << name << "(t) =\n";
    bool any = false;
    for (int n = std::max(0, s.valuation()); n <= s.order(); ++n) {
        const XPoly c = norm == Normalization::factorial ? s.normalized_coeff(n) : s.coeff(n);
        if (c.is_zero()) {
            continue;
        }
        os << (any ? "  + " : "    ") << "(" << c.str() << ")";
        if (n > 0) {
            os << (norm == Normalization::factorial ? " \\frac{t^{" + std::to_string(n) + "}}{" + std::to_string(n) + "!}"
                                                    : " t^{" + std::to_string(n) + "}");
        }
        os << "\n";
        any = true;
    }
    if (!any) {
        os << "    0\n";
    }
    os << "  + O(t^{" << s.order() + 1 << "})\n";
    return os.str();
}

inline std::string table_series(const TSeries& s, Normalization norm) {
    std::ostringstream os;
    for (int n = s.valuation(); n <= s.order(); ++n) {
        const XPoly c = norm == Normalization::factorial ? s.normalized_coeff(n) : s.coeff(n);
        const std::string label = norm == Normalization::factorial
                                      ? "t^" + std::to_string(n) + "/" + std::to_string(n) + "!"
                                      : "t^" + std::to_string(n);
        os << std::left << std::setw(12) << label << c.str() << "\n";
    }
    return os.str();
}

inline int run_gen(const CliConfig& cfg, std::ostream& out) {
    const auto id = selector_to_id(cfg.series);
    if (!id) {
        throw UsageError("unknown series '" + cfg.series + "' (expected B, S, B2, S2, BS, WS0, WS1, BPLUS, BMINUS)");
    }
    if (cfg.order < 0) {
        throw UsageError("order must be non-negative");
    }
    const Normalization norm = parse_normalization(cfg.normalization);
    const auto set = BlowupSeriesSet::generate(std::max(cfg.order, 4));
    const TSeries s = set[*id].truncated(cfg.order);
    if (cfg.format == "json") {
        out << tseries_to_json(s, norm).dump() << "\n";
    } else if (cfg.format == "latex") {
        out << latex_series(cfg.series, s, norm);
    } else if (cfg.format == "table") {
        out << table_series(s, norm);
    } else {
        throw UsageError("unknown format '" + cfg.format + "'");
    }
    return ok;
}

inline int run_verify(const CliConfig& cfg, std::ostream& out) {
    if (cfg.order < verify::min_verify_order) {
        throw UsageError("verify needs --order >= " + std::to_string(verify::min_verify_order));
    }
    verify::VerifyOptions opt;
    opt.jobs = cfg.jobs;
    opt.bivariate_order = cfg.bivariate_order;
    opt.only = cfg.identities;
    const auto set =
        BlowupSeriesSet::generate(cfg.order, {.bivariate_check_order = std::min(cfg.order, cfg.bivariate_order)});
    std::vector<VerificationReport> reports;
    try {
        reports = verify::run_catalog(set, cfg.order, opt);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    bool all = true;
    for (const auto& r : reports) {
        out << report_to_json(r, cfg.timing).dump() << "\n";
        all = all && r.pass;
    }
    return all ? ok : verification_failed;
}

/// Adds 1 to the x^0 part of the factorial-normalized coefficient of t^n in B or S.
inline BlowupSeriesSet set_with_fault(int order, const std::string& fault) {
    const auto colon = fault.find(':');
    const std::string which = fault.substr(0, colon);
    if (colon == std::string::npos || (which != "B" && which != "S")) {
        throw UsageError("--inject-fault expects B:<n> or S:<n>");
    }
    int n = 0;
    try {
        n = std::stoi(fault.substr(colon + 1));
    } catch (const std::exception&) {
        throw UsageError("--inject-fault expects B:<n> or S:<n>");
    }
    auto pair = generate_blowup_pair(order + generation_margin);
    TSeries& target = which == "B" ? pair.b : pair.s;
    if (n < 0 || n > target.order()) {
        throw UsageError("fault position out of range");
    }
    target += TSeries::monomial(XPoly(Rational::factorial(static_cast<unsigned long>(n)).inverse()), n, target.order());
    return BlowupSeriesSet::from_pair(std::move(pair.b), std::move(pair.s), order);
}

inline int run_table(const CliConfig& cfg, std::ostream& out) {
    const auto& table = GoldenTable::embedded();
    if (cfg.order < table.max_order()) {
        throw UsageError("table needs --order >= " + std::to_string(table.max_order()) + " to cover every row");
    }
    const auto set = cfg.inject_fault.empty() ? BlowupSeriesSet::generate(cfg.order)
                                              : set_with_fault(cfg.order, cfg.inject_fault);
    bool all = true;
    for (const auto& r : golden_check(set, table)) {
        if (r.pass) {
            out << "ok        " << r.identity << " through t^" << r.order << "\n";
            continue;
        }
        all = false;
        if (const auto* m = std::get_if<Mismatch>(&r.first_mismatch)) {
            const std::string row = r.identity.substr(7, r.identity.find(':', 7) - 7);
            const auto member = selector_to_id(r.identity.substr(r.identity.rfind(':') + 1));
            out << "MISMATCH  " << r.identity << " at t^" << m->t << "/" << m->t << "!: table "
                << table.rows.at(row).normalized_coeff(m->t).str() << ", generated "
                << set[*member].normalized_coeff(m->t).str() << "\n";
        } else {
            out << "ERROR     " << r.identity << ": " << r.error.value_or("unknown") << "\n";
        }
    }
    out << "table sha256 " << table.hash << "\n";
    return all ? ok : verification_failed;
}

inline pairing::MomentFunctional load_functional(const nlohmann::json& v, const std::filesystem::path& base) {
    if (v.is_string()) {
        std::filesystem::path p = v.get<std::string>();
        if (p.is_relative()) {
            p = base / p;
        }
        std::ifstream in(p);
        if (!in) {
            throw ParseError("cannot read moment file " + p.string());
        }
        try {
            return pairing::moments_from_json(nlohmann::json::parse(in));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("moment file " + p.string() + " is not valid JSON: " + e.what());
        }
    }
    return pairing::moments_from_json(v);
}

inline int run_eval(const CliConfig& cfg, std::ostream& out) {
    if (cfg.input.empty()) {
        throw UsageError("eval needs --input <request.json>");
    }
    std::ifstream in(cfg.input);
    if (!in) {
        throw ParseError("cannot read " + cfg.input);
    }
    nlohmann::json req;
    try {
        req = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("request is not valid JSON: ") + e.what());
    }
    const auto base = std::filesystem::path(cfg.input).parent_path();
    const std::string parity = req.value("parity", std::string());
    const int order = req.contains("order") ? req.at("order").get<int>() : cfg.order;
    if (order < 0) {
        throw UsageError("order must be non-negative");
    }
    if (!req.contains("functionals") || !req.at("functionals").is_object()) {
        throw ParseError("request needs a \"functionals\" object");
    }
    const auto& f = req.at("functionals");
    auto need = [&](const char* key) {
        if (!f.contains(key)) {
            throw UsageError(std::string("missing functional \"") + key + "\" for " + parity + " parity");
        }
        return load_functional(f.at(key), base);
    };
    const auto set = BlowupSeriesSet::generate(std::max(order, 4));
    pairing::EvalResult result;
    if (parity == "even") {
        const auto mu = need("c");
        if (f.contains("c+tau")) {
            result = pairing::eval_even(set, mu, need("c+tau"), order);
        } else if (f.contains("tau")) {
            result = pairing::eval_even_mainprime(set, mu, need("tau"), order);
        } else {
            throw UsageError("even parity needs a \"c+tau\" or a \"tau\" functional");
        }
    } else if (parity == "odd") {
        result = pairing::eval_odd(set, need("c"), need("tau"), order);
    } else {
        throw UsageError("parity must be \"even\" or \"odd\"");
    }
    out << pairing::eval_result_to_json(result, parse_normalization(cfg.normalization)).dump() << "\n";
    return ok;
}

inline int run_bench(const CliConfig& cfg, std::ostream& out) {
    if (cfg.order < verify::min_verify_order) {
        throw UsageError("bench needs --order >= " + std::to_string(verify::min_verify_order));
    }
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    const auto set =
        BlowupSeriesSet::generate(cfg.order, {.bivariate_check_order = std::min(cfg.order, cfg.bivariate_order)});
    const double gen_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    verify::VerifyOptions opt;
    opt.bivariate_order = cfg.bivariate_order;
    std::vector<std::pair<std::string, double>> rows{{"generate", gen_ms}};
    bool all = true;
    for (const auto& r : verify::run_catalog(set, cfg.order, opt)) {
        rows.emplace_back(r.identity, r.ms);
        all = all && r.pass;
    }
    if (cfg.format == "json") {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& [name, ms] : rows) {
            arr.push_back({{"step", name}, {"order", cfg.order}, {"ms", ms}});
        }
        out << arr.dump() << "\n";
    } else {
        out << std::left << std::setw(32) << "step" << std::right << std::setw(12) << "ms" << "\n";
        for (const auto& [name, ms] : rows) {
            out << std::left << std::setw(32) << name << std::right << std::setw(12) << std::fixed
                << std::setprecision(3) << ms << "\n";
        }
    }
    return all ? ok : verification_failed;
}

/// Parses argv and runs the command. Data goes to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact generation and verification of the universal blow-up series"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto* gen = app.add_subcommand("gen", "write one universal series");
    gen->add_option("--series", cfg.series, "B, S, B2, S2, BS, WS0, WS1, BPLUS, BMINUS");
    gen->add_option("--order", cfg.order, "truncation order in t");
    gen->add_option("--format", cfg.format, "json | latex | table");
    gen->add_option("--normalization", cfg.normalization, "plain | factorial");
    gen->add_option("--output", cfg.output, "write to this file instead of stdout");

    auto* ver = app.add_subcommand("verify", "run the identity catalog");
    ver->add_option("--order", cfg.order, "order in t for univariate identities");
    ver->add_option("--bivariate-order", cfg.bivariate_order, "total degree for the (u, v) identities");
    ver->add_option("--jobs", cfg.jobs, "worker threads");
    ver->add_option("--identity", cfg.identities, "run only these identities");
    ver->add_flag("--no-timing{false}", cfg.timing, "omit the ms field");
    ver->add_option("--output", cfg.output, "write to this file instead of stdout");

    auto* tab = app.add_subcommand("table", "compare generated series with the published table");
    tab->add_option("--order", cfg.order, "generation order (>= 16)");
    tab->add_option("--inject-fault", cfg.inject_fault, "perturb B:<n> or S:<n> before checking (testing aid)");

    auto* ev = app.add_subcommand("eval", "evaluate the blow-up formula on moment data");
    ev->add_option("--input", cfg.input, "evaluation request JSON");
    ev->add_option("--order", cfg.order, "order used when the request has none");
    ev->add_option("--normalization", cfg.normalization, "plain | factorial");
    ev->add_option("--output", cfg.output, "write to this file instead of stdout");

    auto* bench = app.add_subcommand("bench", "time generation and every identity");
    bench->add_option("--order", cfg.order, "order in t");
    bench->add_option("--bivariate-order", cfg.bivariate_order, "total degree for the (u, v) identities");
    bench->add_option("--format", cfg.format, "table | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    for (auto* sub : app.get_subcommands()) {
        cfg.command = sub->get_name();
    }
    if (cfg.command == "bench" && cfg.format == "json" && !bench->count("--format")) {
        cfg.format = "table";
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            err << "error: cannot write " << cfg.output << "\n";
            return usage_error;
        }
        sink = &file;
    }

    try {
        if (cfg.command == "gen") {
            return run_gen(cfg, *sink);
        }
        if (cfg.command == "verify") {
            return run_verify(cfg, *sink);
        }
        if (cfg.command == "table") {
            return run_table(cfg, *sink);
        }
        if (cfg.command == "eval") {
            return run_eval(cfg, *sink);
        }
        return run_bench(cfg, *sink);
    } catch (const GenerationFailure& e) {
        err << "generation failure: " << e.what() << "\n";
        return generation_failed;
    } catch (const std::invalid_argument& e) { // UsageError, ParseError, bad moments
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return generation_failed;
    }
}

} // namespace blowup::cli
