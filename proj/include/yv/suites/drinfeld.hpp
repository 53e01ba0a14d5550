/**
 * @file suites/drinfeld.hpp
 * @brief The Drinfeld presentation suite ((r0)-(r13), (r6b)/(r7b)) and the
 *        sl-type generator suite ((dr1)-(drn) plus quantum-minor forms).
 */
#pragma once

#include "yv/suites/helpers.hpp"

namespace yv::suites {

inline std::vector<Case> drinfeld_suite(const SuiteSpec& spec) {
    std::vector<Case> cases;
    const int B = 5;  // level-index sum bound of the acceptance configuration
    for (int n : default_ns(spec, {2, 3})) {
        const int cutoff = default_cutoff(spec, 5);
        auto ctx = AlgebraContext::yangian(n, spec.term_cap);
        SharedTable tab = shared_table(ctx, std::vector<int>(n, 1), cutoff);
        const std::string tag = cat("n=", n);
        auto add = [&](std::string id, const char* ref,
                       std::function<std::optional<std::string>()> run) {
            cases.push_back({std::move(id), ref, std::move(run)});
        };

        // (r0), (r1)
        for (int i = 1; i <= n; ++i) {
            add(cat("r0:", tag, ":i=", i), "Theorem drinpres (r0)",
                [tab, i]() -> std::optional<std::string> {
                    const auto& g = tab.get();
                    return zero_residual(g.drinfeld_D(i).at(0) - Element::one(g.ctx));
                });
            for (int r = 0; r <= std::min(cutoff, B); ++r)
                add(cat("r1:", tag, ":i=", i, ";r=", r), "Theorem drinpres (r1)",
                    [tab, i, r]() -> std::optional<std::string> {
                        const auto& g = tab.get();
                        Element acc(g.ctx);
                        for (int t = 0; t <= r; ++t)
                            acc += g.Dc(i, 1, 1, t) * g.Dtc(i, 1, 1, r - t);
                        if (r == 0) acc += Element::one(g.ctx);
                        return zero_residual(acc);
                    });
        }

        // (r2)
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                for (int r = 1; r < B; ++r)
                    for (int s = 1; r + s <= B; ++s)
                        add(cat("r2:", tag, ":i=", i, ",j=", j, ";r=", r, ",s=", s),
                            "Theorem drinpres (r2)", [tab, i, j, r, s] {
                                const auto& g = tab.get();
                                return zero_residual(
                                    elem_commutator(g.Dc(i, 1, 1, r), g.Dc(j, 1, 1, s)));
                            });

        // (r3)
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j)
                for (int r = 1; r < B; ++r)
                    for (int s = 1; r + s <= B; ++s)
                        add(cat("r3:", tag, ":i=", i, ",j=", j, ";r=", r, ",s=", s),
                            "Theorem drinpres (r3)", [tab, i, j, r, s] {
                                const auto& g = tab.get();
                                Element lhs = elem_commutator(g.Ec(i, 1, 1, r), g.Fc(j, 1, 1, s));
                                Element rhs(g.ctx);
                                if (i == j) {
                                    for (int t = 0; t <= r + s - 1; ++t)
                                        rhs += g.Dtc(i, 1, 1, t) * g.Dc(i + 1, 1, 1, r + s - 1 - t);
                                }
                                return zero_residual(lhs - rhs);
                            });

        // (r4), (r5)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j < n; ++j)
                for (int r = 1; r < B; ++r)
                    for (int s = 1; r + s <= B; ++s) {
                        add(cat("r4:", tag, ":i=", i, ",j=", j, ";r=", r, ",s=", s),
                            "Theorem drinpres (r4)", [tab, i, j, r, s] {
                                const auto& g = tab.get();
                                Element lhs = elem_commutator(g.Dc(i, 1, 1, r), g.Ec(j, 1, 1, s));
                                Element rhs(g.ctx);
                                int c = (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0);
                                if (c != 0) {
                                    for (int t = 0; t <= r - 1; ++t)
                                        rhs += g.Dc(i, 1, 1, t) * g.Ec(j, 1, 1, r + s - 1 - t) *
                                               Rational(c);
                                }
                                return zero_residual(lhs - rhs);
                            });
                        add(cat("r5:", tag, ":i=", i, ",j=", j, ";r=", r, ",s=", s),
                            "Theorem drinpres (r5)", [tab, i, j, r, s] {
                                const auto& g = tab.get();
                                Element lhs = elem_commutator(g.Dc(i, 1, 1, r), g.Fc(j, 1, 1, s));
                                Element rhs(g.ctx);
                                int c = (i == j + 1 ? 1 : 0) - (i == j ? 1 : 0);
                                if (c != 0) {
                                    for (int t = 0; t <= r - 1; ++t)
                                        rhs += g.Fc(j, 1, 1, r + s - 1 - t) * g.Dc(i, 1, 1, t) *
                                               Rational(c);
                                }
                                return zero_residual(lhs - rhs);
                            });
                    }

        // (r6), (r7), (r6b), (r7b)
        for (int i = 1; i < n; ++i) {
            for (int r = 1; r < B; ++r)
                for (int s = 1; r + s <= B; ++s) {
                    add(cat("r6:", tag, ":i=", i, ";r=", r, ",s=", s), "Theorem drinpres (r6)",
                        [tab, i, r, s] {
                            const auto& g = tab.get();
                            Element lhs = elem_commutator(g.Ec(i, 1, 1, r), g.Ec(i, 1, 1, s));
                            Element rhs(g.ctx);
                            for (int t = 1; t <= s - 1; ++t)
                                rhs += g.Ec(i, 1, 1, t) * g.Ec(i, 1, 1, r + s - 1 - t);
                            for (int t = 1; t <= r - 1; ++t)
                                rhs -= g.Ec(i, 1, 1, t) * g.Ec(i, 1, 1, r + s - 1 - t);
                            return zero_residual(lhs - rhs);
                        });
                    add(cat("r7:", tag, ":i=", i, ";r=", r, ",s=", s), "Theorem drinpres (r7)",
                        [tab, i, r, s] {
                            const auto& g = tab.get();
                            Element lhs = elem_commutator(g.Fc(i, 1, 1, r), g.Fc(i, 1, 1, s));
                            Element rhs(g.ctx);
                            for (int t = 1; t <= r - 1; ++t)
                                rhs += g.Fc(i, 1, 1, r + s - 1 - t) * g.Fc(i, 1, 1, t);
                            for (int t = 1; t <= s - 1; ++t)
                                rhs -= g.Fc(i, 1, 1, r + s - 1 - t) * g.Fc(i, 1, 1, t);
                            return zero_residual(lhs - rhs);
                        });
                }
            for (int r = 1; r + 1 <= std::min(cutoff, B); ++r)
                for (int s = 1; s + 1 <= std::min(cutoff, B) && r + s + 1 <= B; ++s) {
                    add(cat("r6b:", tag, ":i=", i, ";r=", r, ",s=", s),
                        "Theorem drinpres remark (r6b)", [tab, i, r, s] {
                            const auto& g = tab.get();
                            Element res =
                                elem_commutator(g.Ec(i, 1, 1, r), g.Ec(i, 1, 1, s + 1)) -
                                elem_commutator(g.Ec(i, 1, 1, r + 1), g.Ec(i, 1, 1, s)) -
                                g.Ec(i, 1, 1, r) * g.Ec(i, 1, 1, s) -
                                g.Ec(i, 1, 1, s) * g.Ec(i, 1, 1, r);
                            return zero_residual(res);
                        });
                    add(cat("r7b:", tag, ":i=", i, ";r=", r, ",s=", s),
                        "Theorem drinpres remark (r7b)", [tab, i, r, s] {
                            const auto& g = tab.get();
                            Element res =
                                elem_commutator(g.Fc(i, 1, 1, r + 1), g.Fc(i, 1, 1, s)) -
                                elem_commutator(g.Fc(i, 1, 1, r), g.Fc(i, 1, 1, s + 1)) -
                                g.Fc(i, 1, 1, r) * g.Fc(i, 1, 1, s) -
                                g.Fc(i, 1, 1, s) * g.Fc(i, 1, 1, r);
                            return zero_residual(res);
                        });
                }
        }

        // (r8), (r9)
        for (int i = 1; i + 1 < n; ++i)
            for (int r = 1; r + 1 <= std::min(cutoff, B); ++r)
                for (int s = 1; s + 1 <= std::min(cutoff, B) && r + s + 1 <= B; ++s) {
                    add(cat("r8:", tag, ":i=", i, ";r=", r, ",s=", s), "Theorem drinpres (r8)",
                        [tab, i, r, s] {
                            const auto& g = tab.get();
                            Element res =
                                elem_commutator(g.Ec(i, 1, 1, r), g.Ec(i + 1, 1, 1, s + 1)) -
                                elem_commutator(g.Ec(i, 1, 1, r + 1), g.Ec(i + 1, 1, 1, s)) +
                                g.Ec(i, 1, 1, r) * g.Ec(i + 1, 1, 1, s);
                            return zero_residual(res);
                        });
                    add(cat("r9:", tag, ":i=", i, ";r=", r, ",s=", s), "Theorem drinpres (r9)",
                        [tab, i, r, s] {
                            const auto& g = tab.get();
                            Element res =
                                elem_commutator(g.Fc(i, 1, 1, r + 1), g.Fc(i + 1, 1, 1, s)) -
                                elem_commutator(g.Fc(i, 1, 1, r), g.Fc(i + 1, 1, 1, s + 1)) +
                                g.Fc(i + 1, 1, 1, s) * g.Fc(i, 1, 1, r);
                            return zero_residual(res);
                        });
                }

        // (r10), (r11): nontrivial only for n >= 4
        for (int i = 1; i < n; ++i)
            for (int j = i + 2; j < n; ++j)
                for (int r = 1; r < B; ++r)
                    for (int s = 1; r + s <= B; ++s) {
                        add(cat("r10:", tag, ":i=", i, ",j=", j, ";r=", r, ",s=", s),
                            "Theorem drinpres (r10)", [tab, i, j, r, s] {
                                const auto& g = tab.get();
                                return zero_residual(
                                    elem_commutator(g.Ec(i, 1, 1, r), g.Ec(j, 1, 1, s)));
                            });
                        add(cat("r11:", tag, ":i=", i, ",j=", j, ";r=", r, ",s=", s),
                            "Theorem drinpres (r11)", [tab, i, j, r, s] {
                                const auto& g = tab.get();
                                return zero_residual(
                                    elem_commutator(g.Fc(i, 1, 1, r), g.Fc(j, 1, 1, s)));
                            });
                    }

        // (r12), (r13)
        for (int i = 1; i < n; ++i)
            for (int j : {i - 1, i + 1}) {
                if (j < 1 || j >= n) continue;
                for (int r = 1; r < B; ++r)
                    for (int s = r; s < B; ++s)
                        for (int t = 1; r + s + t <= B; ++t) {
                            add(cat("r12:", tag, ":i=", i, ",j=", j, ";r=", r, ",s=", s,
                                    ",t=", t),
                                "Theorem drinpres (r12)", [tab, i, j, r, s, t] {
                                    const auto& g = tab.get();
                                    Element in1 = nf_commutator(g.Ec(i, 1, 1, s), g.Ec(j, 1, 1, t));
                                    Element in2 = nf_commutator(g.Ec(i, 1, 1, r), g.Ec(j, 1, 1, t));
                                    return zero_residual(
                                        elem_commutator(g.Ec(i, 1, 1, r), in1) +
                                        elem_commutator(g.Ec(i, 1, 1, s), in2));
                                });
                            add(cat("r13:", tag, ":i=", i, ",j=", j, ";r=", r, ",s=", s,
                                    ",t=", t),
                                "Theorem drinpres (r13)", [tab, i, j, r, s, t] {
                                    const auto& g = tab.get();
                                    Element in1 = nf_commutator(g.Fc(i, 1, 1, s), g.Fc(j, 1, 1, t));
                                    Element in2 = nf_commutator(g.Fc(i, 1, 1, r), g.Fc(j, 1, 1, t));
                                    return zero_residual(
                                        elem_commutator(g.Fc(i, 1, 1, r), in1) +
                                        elem_commutator(g.Fc(i, 1, 1, s), in2));
                                });
                        }
            }
    }
    return cases;
}

// ---------------------------------------------------------------------------
// sl-type generators (Remark drinrem and the closing remark).

inline std::vector<Case> sl_suite(const SuiteSpec& spec) {
    std::vector<Case> cases;
    const int n = spec.n > 0 ? spec.n : 3;
    const int cutoff = default_cutoff(spec, 5);
    const int KL = 3;  // k+l bound of the acceptance configuration
    auto ctx = AlgebraContext::yangian(n, spec.term_cap);

    using SlTable = std::vector<SlGenerators>;
    Shared<SlTable> tab([ctx, n, cutoff] {
        ParabolicGenerators g = drinfeld_generators(ctx, cutoff);
        SlTable t;
        for (int i = 1; i < n; ++i) t.push_back(sl_generators(g, i));
        return t;
    });

    auto cartan = [n](int i, int j) -> int {
        if (i == j) return 2;
        if (i + 1 == j || j + 1 == i) return -1;
        return 0;
    };
    const std::string tag = cat("n=", n);

    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            for (int k = 0; k <= KL; ++k)
                for (int l = 0; k + l <= KL; ++l) {
                    cases.push_back({cat("dr1:", tag, ":i=", i, ",j=", j, ";k=", k, ",l=", l),
                                     "Remark drinrem (dr1)", [tab, i, j, k, l] {
                                         const auto& t = tab.get();
                                         return zero_residual(elem_commutator(
                                             t[i - 1].kappa_at(k), t[j - 1].kappa_at(l)));
                                     }});
                    cases.push_back(
                        {cat("dr2:", tag, ":i=", i, ",j=", j, ";k=", k, ",l=", l),
                         "Remark drinrem (dr2)", [tab, i, j, k, l]() {
                             const auto& t = tab.get();
                             Element lhs = elem_commutator(t[i - 1].xi_plus_at(k),
                                                           t[j - 1].xi_minus_at(l));
                             Element rhs = (i == j) ? t[i - 1].kappa_at(k + l)
                                                    : Element::zero(lhs.context());
                             return zero_residual(lhs - rhs);
                         }});
                }
            for (int l = 0; l <= KL; ++l)
                for (int sign : {+1, -1}) {
                    cases.push_back(
                        {cat("dr3:", tag, ":i=", i, ",j=", j, ";l=", l, ";sign=",
                             sign > 0 ? "+" : "-"),
                         "Remark drinrem (dr3)", [tab, i, j, l, sign, cartan] {
                             const auto& t = tab.get();
                             Element xi = sign > 0 ? t[j - 1].xi_plus_at(l)
                                                   : t[j - 1].xi_minus_at(l);
                             Element lhs = elem_commutator(t[i - 1].kappa_at(0), xi);
                             Element rhs = xi * Rational(sign * cartan(i, j));
                             return zero_residual(lhs - rhs);
                         }});
                }
            for (int k = 0; k <= KL; ++k)
                for (int l = 0; k + l <= KL; ++l)
                    for (int sign : {+1, -1}) {
                        cases.push_back(
                            {cat("dr4:", tag, ":i=", i, ",j=", j, ";k=", k, ",l=", l,
                                 ";sign=", sign > 0 ? "+" : "-"),
                             "Remark drinrem (dr4)", [tab, i, j, k, l, sign, cartan] {
                                 const auto& t = tab.get();
                                 auto xi = [&](int idx, int lev) {
                                     return sign > 0 ? t[idx - 1].xi_plus_at(lev)
                                                     : t[idx - 1].xi_minus_at(lev);
                                 };
                                 Element lhs =
                                     elem_commutator(t[i - 1].kappa_at(k), xi(j, l + 1)) -
                                     elem_commutator(t[i - 1].kappa_at(k + 1), xi(j, l));
                                 Element rhs = (t[i - 1].kappa_at(k) * xi(j, l) +
                                                xi(j, l) * t[i - 1].kappa_at(k)) *
                                               Rational(sign * cartan(i, j), 2);
                                 return zero_residual(lhs - rhs);
                             }});
                        cases.push_back(
                            {cat("eg:", tag, ":i=", i, ",j=", j, ";k=", k, ",l=", l,
                                 ";sign=", sign > 0 ? "+" : "-"),
                             "Remark drinrem (eg)", [tab, i, j, k, l, sign, cartan] {
                                 const auto& t = tab.get();
                                 auto xi = [&](int idx, int lev) {
                                     return sign > 0 ? t[idx - 1].xi_plus_at(lev)
                                                     : t[idx - 1].xi_minus_at(lev);
                                 };
                                 Element lhs = elem_commutator(xi(i, k), xi(j, l + 1)) -
                                               elem_commutator(xi(i, k + 1), xi(j, l));
                                 Element rhs = (xi(i, k) * xi(j, l) + xi(j, l) * xi(i, k)) *
                                               Rational(sign * cartan(i, j), 2);
                                 return zero_residual(lhs - rhs);
                             }});
                    }
        }

    // (drn): the Serre relation for |i-j| = 1, N = 2
    for (int i = 1; i < n; ++i)
        for (int j : {i - 1, i + 1}) {
            if (j < 1 || j >= n) continue;
            for (int k1 = 0; k1 <= 1; ++k1)
                for (int k2 = k1; k2 <= 1; ++k2)
                    for (int l = 0; k1 + k2 + l <= 2; ++l)
                        for (int sign : {+1, -1}) {
                            cases.push_back(
                                {cat("drn:", tag, ":i=", i, ",j=", j, ";k1=", k1, ",k2=", k2,
                                     ",l=", l, ";sign=", sign > 0 ? "+" : "-"),
                                 "Remark drinrem (drn)", [tab, i, j, k1, k2, l, sign] {
                                     const auto& t = tab.get();
                                     auto xi = [&](int idx, int lev) {
                                         return sign > 0 ? t[idx - 1].xi_plus_at(lev)
                                                         : t[idx - 1].xi_minus_at(lev);
                                     };
                                     Element in1 = nf_commutator(xi(i, k2), xi(j, l));
                                     Element in2 = nf_commutator(xi(i, k1), xi(j, l));
                                     return zero_residual(elem_commutator(xi(i, k1), in1) +
                                                          elem_commutator(xi(i, k2), in2));
                                 }});
                        }
        }

    // Closing-remark quantum-determinant forms.
    const int qbound = std::min(cutoff - 2, 3);
    for (int i = 1; i < n; ++i) {
        cases.push_back(
            {cat("xiqd:", tag, ":i=", i, ";side=+"), "closing remark: xi+ = a^{-1} b",
             [tab, i, qbound]() {
                 const auto& t = tab.get();
                 Series lhs = t[i - 1].xi_plus.truncate(qbound);
                 Series rhs = (series_invert(t[i - 1].a) * t[i - 1].b).truncate(qbound);
                 return series_residual(lhs, rhs);
             }});
        cases.push_back(
            {cat("xiqd:", tag, ":i=", i, ";side=-"), "closing remark: xi- = c a^{-1}",
             [tab, i, qbound]() {
                 const auto& t = tab.get();
                 Series lhs = t[i - 1].xi_minus.truncate(qbound);
                 Series rhs = (t[i - 1].c * series_invert(t[i - 1].a)).truncate(qbound);
                 return series_residual(lhs, rhs);
             }});
        cases.push_back(
            {cat("kappaqd:", tag, ":i=", i), "closing remark: kappa through minors",
             [tab, ctx, i, n, cutoff, qbound]() {
                 // kappa_i(u) = 1 - a_i(u)^{-1} a_i(u+1)^{-1}
                 //                  a_{i-1}(u+1/2) a_{i+1}(u+1/2)
                 const auto& t = tab.get();
                 auto a_of = [&](int d) {
                     if (d == 0) return Series::one(ctx, cutoff);
                     QuantumMinorIndex idx;
                     for (int v = 1; v <= d; ++v) {
                         idx.i.push_back(v);
                         idx.j.push_back(v);
                     }
                     return quantum_minor(ctx, idx, cutoff, MinorFormula::left, n)
                         .shift(Rational(-(d - 1), 2));
                 };
                 Series ai = a_of(i);
                 Series rhs = Series::one(ctx, cutoff) -
                              series_invert(ai) * series_invert(ai.shift(Rational(-1))) *
                                  a_of(i - 1).shift(Rational(-1, 2)) *
                                  a_of(i + 1).shift(Rational(-1, 2));
                 return series_residual(t[i - 1].kappa.truncate(qbound), rhs.truncate(qbound));
             }});
    }

    return cases;
}

}  // namespace yv::suites
