/**
 * @file suites/all.hpp
 * @brief Suite registry: include this to get every suite plus the
 *        dispatcher used by run_suite / list_cases.
 */
#pragma once

#include "yv/suites/center_qdet.hpp"
#include "yv/suites/drinfeld.hpp"
#include "yv/suites/hopf_auto.hpp"
#include "yv/suites/kappa_pbw.hpp"
#include "yv/suites/lemmas.hpp"
#include "yv/suites/parabolic.hpp"
#include "yv/suites/rtt.hpp"

namespace yv {

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "rtt",           "levi",
        "drinfeld",      "drinfeld-lemmas",
        "parabolic",     "parabolic-lemmas",
        "root-vectors",  "automorphisms",
        "hopf",          "psi",
        "kappa",         "center",
        "qdet",          "sl",
        "pbw-independence"};
    return names;
}

inline std::vector<Case> build_suite(const SuiteSpec& spec) {
    const std::string& s = spec.suite;
    if (spec.n < 0 || spec.n > 8) throw std::invalid_argument("suite parameter n out of range");
    if (spec.cutoff < 0 || spec.cutoff > 12)
        throw std::invalid_argument("suite parameter cutoff out of range");
    if (!spec.nu.empty()) {
        int total = 0;
        for (int v : spec.nu) {
            if (v < 1) throw std::invalid_argument("composition parts must be >= 1");
            total += v;
        }
        if (spec.n > 0 && total != spec.n)
            throw std::invalid_argument("composition does not sum to n");
    }
    if (s == "rtt") return suites::rtt_suite(spec);
    if (s == "levi") return suites::levi_suite(spec);
    if (s == "drinfeld") return suites::drinfeld_suite(spec);
    if (s == "drinfeld-lemmas") return suites::drinfeld_lemmas_suite(spec);
    if (s == "parabolic") return suites::parabolic_suite(spec);
    if (s == "parabolic-lemmas") return suites::parabolic_lemmas_suite(spec);
    if (s == "root-vectors") return suites::root_vectors_suite(spec);
    if (s == "automorphisms") return suites::automorphisms_suite(spec);
    if (s == "hopf") return suites::hopf_suite(spec);
    if (s == "psi") return suites::psi_suite(spec);
    if (s == "kappa") return suites::kappa_suite(spec);
    if (s == "center") return suites::center_suite(spec);
    if (s == "qdet") return suites::qdet_suite(spec);
    if (s == "sl") return suites::sl_suite(spec);
    if (s == "pbw-independence") return suites::pbw_suite(spec);
    throw std::invalid_argument("unknown suite '" + s + "'");
}

}  // namespace yv
