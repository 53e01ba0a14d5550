// Acceptance suite: runs every verification criterion at its stated
// parameters and prints one pass/fail line per criterion.  All checks are
// exact (zero residual in the PBW normal form, or exact rank); there are
// no tolerances.

#include "yv/suites/all.hpp"

#include <cstdio>
#include <string>
#include <vector>

using namespace yv;

namespace {

struct Part {
    std::string suite;
    std::string only;  // empty: whole suite
};

struct Criterion {
    int number;
    std::string label;
    std::vector<Part> parts;
};

struct Tally {
    int passed = 0;
    int failed = 0;
    double ms = 0.0;
    std::vector<std::string> failures;
};

Tally run_parts(const std::vector<Part>& parts) {
    Tally tally;
    for (const auto& part : parts) {
        SuiteSpec spec;
        spec.suite = part.suite;
        spec.only = part.only;
        SuiteReport report = run_suite(spec);
        tally.passed += report.passed;
        tally.failed += report.failed;
        tally.ms += report.elapsed_ms;
        for (const auto& c : report.cases) {
            if (!c.passed && tally.failures.size() < 5)
                tally.failures.push_back(part.suite + "/" + c.id + ": " + c.residual);
        }
    }
    return tally;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1,
         "RTT/gl_n degeneration: gl bracket at r=s=1 (n<=4); (mr) consistency r+s<=6 (n<=3)",
         {{"rtt", "glbracket*"}, {"rtt", "mr*"}, {"rtt", "rmdef*"}}},
        {2, "QYBE: exact braid residual at 5 seeded rational (u,v) pairs, n<=3",
         {{"rtt", "qybe*"}}},
        {3, "Drinfeld presentation: (r0)-(r13), (r6b)/(r7b), n=2,3, level sums <= 5",
         {{"drinfeld", ""}}},
        {4, "Theorem A: (pr1)-(pr14) for every composition of n=2,3 (cutoff 5), n=4 (cutoff 3)",
         {{"parabolic", ""}}},
        {5, "Lemma suites: goody2/goody3/serre1/serre2 and parabolic analogues, r+s <= 5",
         {{"drinfeld-lemmas", ""}, {"parabolic-lemmas", ""}}},
        {6, "Root vectors: (indofk) for nu=(1,2,1),(2,2); (eij)/(ter) match Gauss/quasi-det",
         {{"root-vectors", ""}}},
        {7, "Evaluation oracle: kappa_2/kappa_3 kill (mr) residuals r+s<=5; kappa_l trunc",
         {{"kappa", "oracle*"}, {"kappa", "trunc:*"}}},
        {8, "PBW independence: Theorems truncthm/pbwcor/triangular/B at bounded degree",
         {{"pbw-independence", ""}, {"kappa", "truncthm*"}}},
        {9, "Center: [C_n^{(r)}, T^{(s)}] = 0 for r+s<=6, n=2,3; Theorem cid to cutoff 6",
         {{"center", ""}}},
        {10, "Hopf: coassociativity, counit, antipode axiom (r<=4, n=2); S = omega.sigma; s2",
         {{"hopf", ""}, {"automorphisms", "sws*"}, {"automorphisms", "s2*"},
          {"automorphisms", "involution*"}}},
        {11, "psi-embedding: Lemma qdet vs (pdidef), Lemma cent, (comp), (unam), m+n<=4",
         {{"psi", ""}}},
        {12, "Quantum determinants: (lfull)=(rfull0)=(rfull), (perm), sl/S1/gr/newd",
         {{"qdet", ""}}},
        {13, "sl-type generators: (dr1)-(eg) instances with k+l<=3, n=3, exact",
         {{"sl", ""}}},
    };

    int exit_code = 0;
    int grand_passed = 0, grand_failed = 0;
    for (const auto& criterion : criteria) {
        Tally tally = run_parts(criterion.parts);
        grand_passed += tally.passed;
        grand_failed += tally.failed;
        const bool ok = tally.failed == 0 && tally.passed > 0;
        std::printf("CRITERION %2d: %s  (%d cases, %.0f ms)  %s\n", criterion.number,
                    ok ? "PASS" : "FAIL", tally.passed + tally.failed, tally.ms,
                    criterion.label.c_str());
        for (const auto& f : tally.failures) std::printf("    failing %s\n", f.c_str());
        if (!ok) exit_code = 1;
    }
    std::printf("ACCEPTANCE: %s (%d passed, %d failed)\n", exit_code == 0 ? "PASS" : "FAIL",
                grand_passed, grand_failed);
    return exit_code;
}
