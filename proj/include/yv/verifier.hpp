/**
 * @file verifier.hpp
 * @brief Suite registry, execution and reporting.
 *
 * A suite is a deterministic enumeration of cases; each case reduces a
 * residual to normal form and passes iff it is exactly zero (or, for
 * structural checks such as rank computations, iff the stated exact
 * condition holds).  There are no tolerances anywhere.
 */
#pragma once

#include "yv/element.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace yv {

struct SuiteSpec {
    std::string suite;
    int n = 0;             // 0: suite default (possibly several n)
    std::vector<int> nu;   // empty: suite default compositions
    int cutoff = 0;        // 0: suite default
    uint64_t seed = 20240801;
    std::string only;      // case-id filter; '*' and '?' wildcards
    std::size_t term_cap = AlgebraContext::kDefaultTermCap;
};

struct Case {
    std::string id;
    std::string paper_ref;
    std::function<std::optional<std::string>()> run;  // nullopt: pass, else residual
};

struct CaseResult {
    std::string id;
    std::string paper_ref;
    bool passed = false;
    std::string residual;  // empty when passed
    double ms = 0.0;
};

struct SuiteReport {
    std::string suite;
    SuiteSpec spec;
    std::vector<CaseResult> cases;
    int passed = 0;
    int failed = 0;
    double elapsed_ms = 0.0;
};

namespace detail {

inline bool glob_match(const std::string& pat, const std::string& text) {
    // iterative wildcard match supporting '*' and '?'
    std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pat.size() && (pat[p] == '?' || pat[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pat.size() && pat[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pat.size() && pat[p] == '*') ++p;
    return p == pat.size();
}

inline bool case_selected(const std::string& only, const std::string& id) {
    if (only.empty()) return true;
    if (only.find('*') != std::string::npos || only.find('?') != std::string::npos)
        return glob_match(only, id);
    // bare patterns select a case family: exact id or a ':'-delimited prefix
    return id == only || (id.size() > only.size() && id.compare(0, only.size(), only) == 0 &&
                          id[only.size()] == ':');
}

}  // namespace detail

/// Implemented in the per-suite headers (suites/*.hpp); dispatched by name.
std::vector<Case> build_suite(const SuiteSpec& spec);

/// The suite catalog, in a fixed order.
const std::vector<std::string>& suite_names();

inline std::vector<Case> filtered_cases(const SuiteSpec& spec) {
    std::vector<Case> cases = build_suite(spec);
    if (spec.only.empty()) return cases;
    std::vector<Case> out;
    for (auto& c : cases)
        if (detail::case_selected(spec.only, c.id)) out.push_back(std::move(c));
    return out;
}

struct CaseInfo {
    std::string id;
    std::string paper_ref;
};

inline std::vector<CaseInfo> list_cases(const SuiteSpec& spec) {
    std::vector<CaseInfo> out;
    for (const auto& c : filtered_cases(spec)) out.push_back({c.id, c.paper_ref});
    return out;
}

inline SuiteReport run_suite(const SuiteSpec& spec) {
    using clock = std::chrono::steady_clock;
    SuiteReport report;
    report.suite = spec.suite;
    report.spec = spec;
    auto t0 = clock::now();
    for (const auto& c : filtered_cases(spec)) {
        CaseResult r;
        r.id = c.id;
        r.paper_ref = c.paper_ref;
        auto c0 = clock::now();
        try {
            auto residual = c.run();
            r.passed = !residual.has_value();
            if (residual) r.residual = *residual;
        } catch (const TermCapError& e) {
            r.passed = false;
            r.residual = std::string("term-cap: ") + e.what();
        } catch (const std::exception& e) {
            r.passed = false;
            r.residual = std::string("error: ") + e.what();
        }
        r.ms = std::chrono::duration<double, std::milli>(clock::now() - c0).count();
        (r.passed ? report.passed : report.failed)++;
        report.cases.push_back(std::move(r));
    }
    report.elapsed_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    return report;
}

inline nlohmann::json report_to_json(const SuiteReport& report) {
    nlohmann::json params;
    params["n"] = report.spec.n;
    params["nu"] = report.spec.nu;
    params["cutoff"] = report.spec.cutoff;
    params["only"] = report.spec.only;
    params["term_cap"] = report.spec.term_cap;
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : report.cases) {
        nlohmann::json jc;
        jc["id"] = c.id;
        jc["paper_ref"] = c.paper_ref;
        jc["status"] = c.passed ? "pass" : "fail";
        if (c.passed) jc["residual"] = nullptr;
        else jc["residual"] = c.residual;
        jc["ms"] = c.ms;
        cases.push_back(std::move(jc));
    }
    nlohmann::json j;
    j["suite"] = report.suite;
    j["params"] = std::move(params);
    j["cases"] = std::move(cases);
    j["passed"] = report.passed;
    j["failed"] = report.failed;
    j["elapsed_ms"] = report.elapsed_ms;
    j["seed"] = report.spec.seed;
    return j;
}

enum class ReportFormat { text, json };

/// Text format: failing cases in full, then one summary line.
inline std::string render_report(const SuiteReport& report, ReportFormat format) {
    if (format == ReportFormat::json) return report_to_json(report).dump(2);
    std::string out;
    out += "suite " + report.suite + "\n";
    for (const auto& c : report.cases) {
        if (c.passed) continue;
        out += "  FAIL " + c.id + " [" + c.paper_ref + "]\n";
        out += "       residual: " + c.residual + "\n";
    }
    const int total = report.passed + report.failed;
    if (report.failed == 0) {
        out += "PASS " + std::to_string(report.passed) + "/" + std::to_string(total) + "\n";
    } else {
        out += "FAIL " + std::to_string(report.failed) + "/" + std::to_string(total) +
               " failing\n";
    }
    return out;
}

}  // namespace yv
