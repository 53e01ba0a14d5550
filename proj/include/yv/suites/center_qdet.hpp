/**
 * @file suites/center_qdet.hpp
 * @brief The center suite (centrality of C_n^{(r)}, Theorem cid) and the
 *        quantum-determinant suite ((lfull)=(rfull0)=(rfull), (perm),
 *        (tauprop2)/(Sprop), Lemma sl, Corollary S1, Lemma gr, Theorem
 *        newd, repeated-index degeneracy).
 */
#pragma once

#include "yv/suites/helpers.hpp"

namespace yv::suites {

inline std::vector<Case> center_suite(const SuiteSpec& spec) {
    std::vector<Case> cases;
    const int bound = default_cutoff(spec, 6);
    for (int n : default_ns(spec, {1, 2, 3})) {
        auto ctx = AlgebraContext::yangian(n, spec.term_cap);
        Shared<Series> cprod(
            [ctx, bound] { return center_series(ctx, bound, CenterMethod::product); });
        Shared<Series> cminor(
            [ctx, bound] { return center_series(ctx, bound, CenterMethod::minor); });

        for (int r = 1; r <= bound; ++r) {
            cases.push_back({cat("cid:n=", n, ":r=", r), "Theorem cid",
                             [cprod, cminor, r]() {
                                 return zero_residual(cminor.get().at(r) - cprod.get().at(r));
                             }});
            for (int s = 1; r + s <= bound; ++s)
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j)
                        cases.push_back(
                            {cat("central:n=", n, ":r=", r, ",s=", s, ";i=", i, ",j=", j),
                             "Theorem shortly (containment direction)",
                             [cprod, ctx, r, s, i, j]() {
                                 return zero_residual(elem_commutator(
                                     cprod.get().at(r),
                                     Element::gen(ctx, GenSym::yangian(1, i, j, s))));
                             }});
        }
    }
    return cases;
}

// ---------------------------------------------------------------------------

namespace qd {

/// Enumerates all tuples from {1..n}^d in lexicographic order.
inline std::vector<std::vector<int>> all_tuples(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(d, 1);
    while (true) {
        out.push_back(cur);
        int k = d - 1;
        while (k >= 0 && cur[k] == n) cur[k--] = 1;
        if (k < 0) break;
        ++cur[k];
    }
    return out;
}

inline std::vector<std::vector<int>> sorted_tuples(int n, int d) {
    std::vector<std::vector<int>> out;
    for (auto& t : all_tuples(n, d))
        if (std::is_sorted(t.begin(), t.end())) out.push_back(t);
    return out;
}

inline std::vector<std::vector<int>> distinct_increasing(int n, int d) {
    std::vector<std::vector<int>> out;
    for (auto& t : sorted_tuples(n, d))
        if (std::adjacent_find(t.begin(), t.end()) == t.end()) out.push_back(t);
    return out;
}

inline std::string tup(const std::vector<int>& t) {
    std::string s = "(";
    for (std::size_t k = 0; k < t.size(); ++k) s += (k ? "," : "") + std::to_string(t[k]);
    return s + ")";
}

inline int perm_sign(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
            if (p[a] > p[b]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

/// Sign of the permutation of {1..n} sending the sequence I to J.
inline int relative_sign(const std::vector<int>& I, const std::vector<int>& J) {
    const int n = static_cast<int>(I.size());
    std::vector<int> p(n);
    for (int k = 0; k < n; ++k) p[I[k] - 1] = J[k];
    return perm_sign(p);
}

/// Complements I (a distinct tuple in {1..n}) by the increasing tuple of
/// the missing values.
inline std::vector<int> complement(const std::vector<int>& I, int n) {
    std::vector<bool> used(n + 1, false);
    for (int v : I) used[v] = true;
    std::vector<int> out;
    for (int v = 1; v <= n; ++v)
        if (!used[v]) out.push_back(v);
    return out;
}

/// f(-u + c) for a truncated series.
inline Series recenter_neg(const Series& f, const Rational& c) {
    return f.eval_neg().shift(c);
}

}  // namespace qd

inline std::vector<Case> qdet_suite(const SuiteSpec& spec) {
    std::vector<Case> cases;
    const int cutoff = default_cutoff(spec, 4);

    for (int n : default_ns(spec, {2, 3})) {
        auto ctx = AlgebraContext::yangian(n, spec.term_cap);
        const std::string tag = cat("n=", n);

        // (lfull) = (rfull0) = (rfull) for all tuple pairs, d <= 3
        for (int d = 1; d <= 3; ++d)
            for (const auto& I : qd::all_tuples(n, d))
                for (const auto& J : qd::all_tuples(n, d))
                    cases.push_back(
                        {cat("eqforms:", tag, ":d=", d, ":I=", qd::tup(I), ",J=", qd::tup(J)),
                         "(lfull) = (rfull0) = (rfull)",
                         [ctx, I, J, cutoff]() {
                             QuantumMinorIndex idx{I, J};
                             Series a = quantum_minor(ctx, idx, cutoff, MinorFormula::left);
                             Series b = quantum_minor(ctx, idx, cutoff, MinorFormula::right);
                             auto res = series_residual(a, b);
                             if (res) return res;
                             Series c =
                                 quantum_minor(ctx, idx, cutoff, MinorFormula::rightshift);
                             return series_residual(a, c);
                         }});

        // (perm) antisymmetry in rows and columns
        for (int d = 2; d <= 3; ++d)
            for (const auto& I : qd::sorted_tuples(n, d))
                for (const auto& J : qd::sorted_tuples(n, d)) {
                    std::vector<int> perm(d);
                    for (int k = 0; k < d; ++k) perm[k] = k;
                    do {
                        if (std::is_sorted(perm.begin(), perm.end())) continue;
                        cases.push_back(
                            {cat("perm:", tag, ":d=", d, ":I=", qd::tup(I), ",J=", qd::tup(J),
                                 ":pi=", qd::tup(perm)),
                             "Eq. (perm)",
                             [ctx, I, J, perm, cutoff]() {
                                 const int dd = static_cast<int>(I.size());
                                 std::vector<int> Ip(dd), Jp(dd);
                                 for (int k = 0; k < dd; ++k) {
                                     Ip[k] = I[perm[k]];
                                     Jp[k] = J[perm[k]];
                                 }
                                 Rational sign(qd::perm_sign(perm));
                                 Series base =
                                     quantum_minor(ctx, {I, J}, cutoff, MinorFormula::left);
                                 Series rows =
                                     quantum_minor(ctx, {Ip, J}, cutoff, MinorFormula::left);
                                 auto res = series_residual(rows, base * sign);
                                 if (res) return res;
                                 Series cols =
                                     quantum_minor(ctx, {I, Jp}, cutoff, MinorFormula::left);
                                 return series_residual(cols, base * sign);
                             }});
                    } while (std::next_permutation(perm.begin(), perm.end()));
                }

        // repeated-index degeneracy
        for (int d = 2; d <= 3; ++d)
            for (const auto& I : qd::sorted_tuples(n, d)) {
                if (std::adjacent_find(I.begin(), I.end()) == I.end()) continue;
                for (const auto& J : qd::sorted_tuples(n, d))
                    cases.push_back({cat("repeat:", tag, ":d=", d, ":I=", qd::tup(I), ",J=",
                                         qd::tup(J)),
                                     "antisymmetry consequence of (perm)",
                                     [ctx, I, J, cutoff]() -> std::optional<std::string> {
                                         Series m = quantum_minor(ctx, {I, J}, cutoff);
                                         if (m.is_zero()) return std::nullopt;
                                         return std::string("nonzero minor with repeated rows");
                                     }});
            }

        // (tauprop2) and (Sprop)
        Shared<GenMap> tau([ctx] { return make_tau(ctx); });
        Shared<GenMap> sigma([ctx] { return make_sigma(ctx); });
        for (int d = 1; d <= 2; ++d)
            for (const auto& I : qd::distinct_increasing(n, d))
                for (const auto& J : qd::distinct_increasing(n, d)) {
                    cases.push_back({cat("tauprop2:", tag, ":I=", qd::tup(I), ",J=", qd::tup(J)),
                                     "Eq. (tauprop2)", [ctx, tau, I, J, cutoff]() {
                                         Series lhs = tau.get().apply(
                                             quantum_minor(ctx, {I, J}, cutoff));
                                         Series rhs = quantum_minor(ctx, {J, I}, cutoff);
                                         return series_residual(lhs, rhs);
                                     }});
                    cases.push_back(
                        {cat("sprop:", tag, ":I=", qd::tup(I), ",J=", qd::tup(J)),
                         "Eq. (Sprop)", [ctx, sigma, I, J, cutoff]() {
                             const int d = static_cast<int>(I.size());
                             Series lhs =
                                 sigma.get().apply(quantum_minor(ctx, {I, J}, cutoff));
                             Series rhs = qd::recenter_neg(quantum_minor(ctx, {I, J}, cutoff),
                                                           Rational(d - 1));
                             return series_residual(lhs, rhs);
                         }});
                }

        // Lemma sl and Corollary S1
        Shared<GenMap> omega([ctx, cutoff] { return make_omega(ctx, cutoff); });
        Shared<GenMap> anti([ctx, cutoff] { return make_antipode(ctx, cutoff); });
        Shared<Series> cfull([ctx, cutoff, n] {
            return center_series(ctx, cutoff, CenterMethod::minor);
        });
        for (int d = 1; d <= 2 && d < n; ++d)
            for (const auto& I : qd::distinct_increasing(n, d))
                for (const auto& J : qd::distinct_increasing(n, d)) {
                    cases.push_back(
                        {cat("sl:", tag, ":I=", qd::tup(I), ",J=", qd::tup(J)), "Lemma sl",
                         [ctx, omega, cfull, I, J, n, cutoff]() {
                             Series lhs =
                                 omega.get().apply(quantum_minor(ctx, {I, J}, cutoff));
                             std::vector<int> Ic = qd::complement(I, n), Jc = qd::complement(J, n);
                             std::vector<int> Ifull = I, Jfull = J;
                             Ifull.insert(Ifull.end(), Ic.begin(), Ic.end());
                             Jfull.insert(Jfull.end(), Jc.begin(), Jc.end());
                             Rational eps(qd::relative_sign(Ifull, Jfull));
                             Series cneg = qd::recenter_neg(cfull.get(), Rational(n - 1));
                             Series minor = qd::recenter_neg(
                                 quantum_minor(ctx, {Jc, Ic}, cutoff), Rational(n - 1));
                             Series rhs = series_invert(cneg) * minor * eps;
                             return series_residual(lhs, rhs);
                         }});
                    cases.push_back(
                        {cat("s1:", tag, ":I=", qd::tup(I), ",J=", qd::tup(J)), "Corollary S1",
                         [ctx, anti, cfull, I, J, n, cutoff]() {
                             const int d = static_cast<int>(I.size());
                             Series lhs =
                                 anti.get().apply(quantum_minor(ctx, {I, J}, cutoff));
                             std::vector<int> Ic = qd::complement(I, n), Jc = qd::complement(J, n);
                             std::vector<int> Ifull = I, Jfull = J;
                             Ifull.insert(Ifull.end(), Ic.begin(), Ic.end());
                             Jfull.insert(Jfull.end(), Jc.begin(), Jc.end());
                             Rational eps(qd::relative_sign(Ifull, Jfull));
                             Series cshift = cfull.get().shift(Rational(-(n - d)));
                             Series minor = quantum_minor(ctx, {Jc, Ic}, cutoff)
                                                .shift(Rational(-(n - d)));
                             Series rhs = series_invert(cshift) * minor * eps;
                             return series_residual(lhs, rhs);
                         }});
                }
    }

    // Lemma gr: psi_m of a quantum minor, m+n <= 3
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; m + n <= 3; ++n) {
            auto src = AlgebraContext::yangian(n, spec.term_cap);
            auto dst = AlgebraContext::yangian(m + n, spec.term_cap);
            Shared<GenMap> psi([src, m, cutoff] { return make_psi(src, m, cutoff); });
            for (int d = 1; d <= std::min(2, n); ++d)
                for (const auto& I : qd::distinct_increasing(n, d))
                    for (const auto& J : qd::distinct_increasing(n, d))
                        cases.push_back(
                            {cat("gr:m=", m, ",n=", n, ":I=", qd::tup(I), ",J=", qd::tup(J)),
                             "Lemma gr", [src, dst, psi, I, J, m, cutoff]() {
                                 Series lhs =
                                     psi.get().apply(quantum_minor(src, {I, J}, cutoff));
                                 std::vector<int> Im, Jm;
                                 for (int v = 1; v <= m; ++v) {
                                     Im.push_back(v);
                                     Jm.push_back(v);
                                 }
                                 std::vector<int> Ifull = Im, Jfull = Jm;
                                 for (int v : I) Ifull.push_back(v + m);
                                 for (int v : J) Jfull.push_back(v + m);
                                 Series cm = quantum_minor(dst, {Im, Jm}, cutoff)
                                                 .shift(Rational(-m));
                                 Series minor = quantum_minor(dst, {Ifull, Jfull}, cutoff)
                                                    .shift(Rational(-m));
                                 Series rhs = series_invert(cm) * minor;
                                 return series_residual(lhs, rhs);
                             }});
        }

    // Theorem newd: Drinfeld generators through quantum minors
    for (int n : default_ns(spec, {2, 3})) {
        auto ctx = AlgebraContext::yangian(n, spec.term_cap);
        const int ncut = 3;
        SharedTable tab = shared_table(ctx, std::vector<int>(n, 1), ncut);
        for (int i = 1; i <= n; ++i) {
            cases.push_back(
                {cat("newd.D:n=", n, ":i=", i), "Theorem newd(i)", [ctx, tab, i, ncut]() {
                     std::vector<int> upto;
                     for (int v = 1; v < i; ++v) upto.push_back(v);
                     Series head = upto.empty()
                                       ? Series::one(ctx, ncut)
                                       : quantum_minor(ctx, {upto, upto}, ncut)
                                             .shift(Rational(-(i - 1)));
                     std::vector<int> full = upto;
                     full.push_back(i);
                     Series body = quantum_minor(ctx, {full, full}, ncut)
                                       .shift(Rational(-(i - 1)));
                     Series rhs = series_invert(head) * body;
                     return series_residual(tab.get().drinfeld_D(i), rhs);
                 }});
            if (i < n) {
                cases.push_back(
                    {cat("newd.E:n=", n, ":i=", i), "Theorem newd(ii)", [ctx, tab, i, ncut]() {
                         std::vector<int> upto;
                         for (int v = 1; v <= i; ++v) upto.push_back(v);
                         std::vector<int> swapped = upto;
                         swapped[i - 1] = i + 1;
                         Series a = quantum_minor(ctx, {upto, upto}, ncut)
                                        .shift(Rational(-(i - 1)));
                         Series b = quantum_minor(ctx, {upto, swapped}, ncut)
                                        .shift(Rational(-(i - 1)));
                         return series_residual(tab.get().drinfeld_E(i),
                                                series_invert(a) * b);
                     }});
                cases.push_back(
                    {cat("newd.F:n=", n, ":i=", i), "Theorem newd(iii)", [ctx, tab, i, ncut]() {
                         std::vector<int> upto;
                         for (int v = 1; v <= i; ++v) upto.push_back(v);
                         std::vector<int> swapped = upto;
                         swapped[i - 1] = i + 1;
                         Series a = quantum_minor(ctx, {upto, upto}, ncut)
                                        .shift(Rational(-(i - 1)));
                         Series c = quantum_minor(ctx, {swapped, upto}, ncut)
                                        .shift(Rational(-(i - 1)));
                         return series_residual(tab.get().drinfeld_F(i),
                                                c * series_invert(a));
                     }});
            }
        }
    }

    return cases;
}

}  // namespace yv::suites
