/**
 * @file suites/parabolic.hpp
 * @brief The Levi suite (levirel), the Theorem A suite (pr1)-(pr14) and
 *        the root-vector suite ((ter), (indofk), block quasi-determinant
 *        cross-checks).
 *
 * Level bounds per relation: with generator tables built to `cutoff`,
 * two-level relations run over r+s <= cutoff+1 (every referenced level
 * then stays within the table), the shifted relations (pr9)/(pr10) over
 * r+1, s+1 <= cutoff with (r+1)+(s+1) <= cutoff+1, and the Serre
 * relations over r+s+t <= cutoff+2 with each level <= cutoff.
 */
#pragma once

#include "yv/suites/helpers.hpp"

namespace yv::suites {

// --------------------------------------------------------------------------
// (levirel): the standard Levi subalgebra relations on the D-blocks.

inline std::optional<std::string> levirel_residual(const ParabolicGenerators& g, int a, int b,
                                                   int i, int j, int h, int k, int r, int s) {
    Element lhs = elem_commutator(g.Dc(a, i, j, r), g.Dc(b, h, k, s));
    Element rhs(g.ctx);
    if (a == b) {
        for (int t = 0; t <= std::min(r, s) - 1; ++t) {
            rhs += g.Dc(a, i, k, r + s - 1 - t) * g.Dc(a, h, j, t);
            rhs -= g.Dc(a, i, k, t) * g.Dc(a, h, j, r + s - 1 - t);
        }
    }
    return zero_residual(lhs - rhs);
}

inline std::vector<Case> levi_suite(const SuiteSpec& spec) {
    std::vector<Case> cases;
    SuiteSpec base = spec;
    if (base.cutoff == 0) base.cutoff = 4;
    for (const auto& cfg : parabolic_configs(base, /*include_n4_default=*/false)) {
        auto ctx = AlgebraContext::yangian(cfg.n, spec.term_cap);
        SharedTable tab = shared_table(ctx, cfg.nu, cfg.cutoff);
        const int m = static_cast<int>(cfg.nu.size());
        const std::string tag = cat("n=", cfg.n, ",nu=", nu_str(cfg.nu));
        for (int a = 1; a <= m; ++a)
            for (int b = a; b <= m; ++b)
                for (int i = 1; i <= cfg.nu[a - 1]; ++i)
                    for (int j = 1; j <= cfg.nu[a - 1]; ++j)
                        for (int h = 1; h <= cfg.nu[b - 1]; ++h)
                            for (int k = 1; k <= cfg.nu[b - 1]; ++k)
                                for (int r = 1; r <= cfg.cutoff; ++r)
                                    for (int s = 1; r + s <= cfg.cutoff + 1; ++s) {
                                        if (s > cfg.cutoff) continue;
                                        cases.push_back(
                                            {cat("levirel:", tag, ":a=", a, ",b=", b, ";i=", i,
                                                 ",j=", j, ",h=", h, ",k=", k, ";r=", r,
                                                 ",s=", s),
                                             "Eq. (levirel)", [tab, a, b, i, j, h, k, r, s] {
                                                 return levirel_residual(tab.get(), a, b, i, j,
                                                                         h, k, r, s);
                                             }});
                                    }
    }
    return cases;
}

// --------------------------------------------------------------------------
// Theorem A: (pr1)-(pr14).

namespace pr {

using G = ParabolicGenerators;

inline std::optional<std::string> pr1(const G& g, int a, int i, int j) {
    Element expect = (i == j) ? Element::one(g.ctx) : Element::zero(g.ctx);
    return zero_residual(g.Dc(a, i, j, 0) - expect);
}

inline std::optional<std::string> pr2(const G& g, int a, int i, int j, int r) {
    Element acc(g.ctx);
    for (int t = 0; t <= r; ++t)
        for (int p = 1; p <= g.nu[a - 1]; ++p) acc += g.Dc(a, i, p, t) * g.Dtc(a, p, j, r - t);
    if (r == 0 && i == j) acc += Element::one(g.ctx);
    return zero_residual(acc);
}

inline std::optional<std::string> pr3(const G& g, int a, int b, int i, int j, int h, int k,
                                      int r, int s) {
    Element lhs = elem_commutator(g.Dc(a, i, j, r), g.Dc(b, h, k, s));
    Element rhs(g.ctx);
    if (a == b) {
        for (int t = 0; t <= std::min(r, s) - 1; ++t) {
            rhs += g.Dc(a, i, k, r + s - 1 - t) * g.Dc(a, h, j, t);
            rhs -= g.Dc(a, i, k, t) * g.Dc(a, h, j, r + s - 1 - t);
        }
    }
    return zero_residual(lhs - rhs);
}

inline std::optional<std::string> pr4(const G& g, int a, int b, int i, int j, int h, int k,
                                      int r, int s) {
    Element lhs = elem_commutator(g.Dc(a, i, j, r), g.Ec(b, h, k, s));
    Element rhs(g.ctx);
    if (a == b && h == j) {
        for (int t = 0; t <= r - 1; ++t)
            for (int p = 1; p <= g.nu[a - 1]; ++p)
                rhs += g.Dc(a, i, p, t) * g.Ec(a, p, k, r + s - 1 - t);
    }
    if (a == b + 1) {
        for (int t = 0; t <= r - 1; ++t) rhs -= g.Dc(b + 1, i, k, t) * g.Ec(b, h, j, r + s - 1 - t);
    }
    return zero_residual(lhs - rhs);
}

inline std::optional<std::string> pr5(const G& g, int a, int b, int i, int j, int h, int k,
                                      int r, int s) {
    Element lhs = elem_commutator(g.Dc(a, i, j, r), g.Fc(b, h, k, s));
    Element rhs(g.ctx);
    if (a == b + 1) {
        for (int t = 0; t <= r - 1; ++t) rhs += g.Fc(b, i, k, r + s - 1 - t) * g.Dc(b + 1, h, j, t);
    }
    if (a == b && i == k) {
        for (int t = 0; t <= r - 1; ++t)
            for (int p = 1; p <= g.nu[a - 1]; ++p)
                rhs -= g.Fc(a, h, p, r + s - 1 - t) * g.Dc(a, p, j, t);
    }
    return zero_residual(lhs - rhs);
}

inline std::optional<std::string> pr6(const G& g, int a, int b, int i, int j, int h, int k,
                                      int r, int s) {
    Element lhs = elem_commutator(g.Ec(a, i, j, r), g.Fc(b, h, k, s));
    Element rhs(g.ctx);
    if (a == b) {
        for (int t = 0; t <= r + s - 1; ++t)
            rhs += g.Dtc(a, i, k, t) * g.Dc(a + 1, h, j, r + s - 1 - t);
    }
    return zero_residual(lhs - rhs);
}

inline std::optional<std::string> pr7(const G& g, int a, int i, int j, int h, int k, int r,
                                      int s) {
    Element lhs = elem_commutator(g.Ec(a, i, j, r), g.Ec(a, h, k, s));
    Element rhs(g.ctx);
    for (int t = 1; t <= s - 1; ++t) rhs += g.Ec(a, i, k, t) * g.Ec(a, h, j, r + s - 1 - t);
    for (int t = 1; t <= r - 1; ++t) rhs -= g.Ec(a, i, k, t) * g.Ec(a, h, j, r + s - 1 - t);
    return zero_residual(lhs - rhs);
}

inline std::optional<std::string> pr8(const G& g, int a, int i, int j, int h, int k, int r,
                                      int s) {
    Element lhs = elem_commutator(g.Fc(a, i, j, r), g.Fc(a, h, k, s));
    Element rhs(g.ctx);
    for (int t = 1; t <= r - 1; ++t) rhs += g.Fc(a, i, k, r + s - 1 - t) * g.Fc(a, h, j, t);
    for (int t = 1; t <= s - 1; ++t) rhs -= g.Fc(a, i, k, r + s - 1 - t) * g.Fc(a, h, j, t);
    return zero_residual(lhs - rhs);
}

inline std::optional<std::string> pr9(const G& g, int a, int i, int j, int h, int k, int r,
                                      int s) {
    Element res = elem_commutator(g.Ec(a, i, j, r), g.Ec(a + 1, h, k, s + 1)) -
                  elem_commutator(g.Ec(a, i, j, r + 1), g.Ec(a + 1, h, k, s));
    if (h == j) {
        for (int q = 1; q <= g.nu[a]; ++q) res += g.Ec(a, i, q, r) * g.Ec(a + 1, q, k, s);
    }
    return zero_residual(res);
}

inline std::optional<std::string> pr10(const G& g, int a, int i, int j, int h, int k, int r,
                                       int s) {
    Element res = elem_commutator(g.Fc(a, i, j, r + 1), g.Fc(a + 1, h, k, s)) -
                  elem_commutator(g.Fc(a, i, j, r), g.Fc(a + 1, h, k, s + 1));
    if (i == k) {
        for (int q = 1; q <= g.nu[a]; ++q) res += g.Fc(a + 1, h, q, s) * g.Fc(a, q, j, r);
    }
    return zero_residual(res);
}

inline std::optional<std::string> pr11(const G& g, int a, int b, int i, int j, int h, int k,
                                       int r, int s) {
    return zero_residual(elem_commutator(g.Ec(a, i, j, r), g.Ec(b, h, k, s)));
}

inline std::optional<std::string> pr12(const G& g, int a, int b, int i, int j, int h, int k,
                                       int r, int s) {
    return zero_residual(elem_commutator(g.Fc(a, i, j, r), g.Fc(b, h, k, s)));
}

inline std::optional<std::string> pr13(const G& g, int a, int b, int i, int j, int h, int k,
                                       int f, int e, int r, int s, int t) {
    Element inner1 = elem_commutator(g.Ec(a, h, k, s), g.Ec(b, f, e, t)).normal_form();
    Element inner2 = elem_commutator(g.Ec(a, h, k, r), g.Ec(b, f, e, t)).normal_form();
    Element res = elem_commutator(g.Ec(a, i, j, r), inner1) +
                  elem_commutator(g.Ec(a, i, j, s), inner2);
    return zero_residual(res);
}

inline std::optional<std::string> pr14(const G& g, int a, int b, int i, int j, int h, int k,
                                       int f, int e, int r, int s, int t) {
    Element inner1 = elem_commutator(g.Fc(a, h, k, s), g.Fc(b, f, e, t)).normal_form();
    Element inner2 = elem_commutator(g.Fc(a, h, k, r), g.Fc(b, f, e, t)).normal_form();
    Element res = elem_commutator(g.Fc(a, i, j, r), inner1) +
                  elem_commutator(g.Fc(a, i, j, s), inner2);
    return zero_residual(res);
}

}  // namespace pr

inline std::vector<Case> parabolic_suite(const SuiteSpec& spec) {
    std::vector<Case> cases;
    for (const auto& cfg : parabolic_configs(spec, /*include_n4_default=*/true)) {
        auto ctx = AlgebraContext::yangian(cfg.n, spec.term_cap);
        SharedTable tab = shared_table(ctx, cfg.nu, cfg.cutoff);
        const auto& nu = cfg.nu;
        const int m = static_cast<int>(nu.size());
        const int N = cfg.cutoff;
        const std::string tag = cat("n=", cfg.n, ",nu=", nu_str(nu));

        auto add = [&](std::string id, const char* ref,
                       std::function<std::optional<std::string>()> run) {
            cases.push_back({std::move(id), ref, std::move(run)});
        };

        // (pr1), (pr2)
        for (int a = 1; a <= m; ++a)
            for (int i = 1; i <= nu[a - 1]; ++i)
                for (int j = 1; j <= nu[a - 1]; ++j) {
                    add(cat("pr1:", tag, ":a=", a, ";i=", i, ",j=", j), "Theorem A (pr1)",
                        [tab, a, i, j] { return pr::pr1(tab.get(), a, i, j); });
                    for (int r = 0; r <= N; ++r)
                        add(cat("pr2:", tag, ":a=", a, ";i=", i, ",j=", j, ";r=", r),
                            "Theorem A (pr2)",
                            [tab, a, i, j, r] { return pr::pr2(tab.get(), a, i, j, r); });
                }

        // (pr3)
        for (int a = 1; a <= m; ++a)
            for (int b = a; b <= m; ++b)
                for (int i = 1; i <= nu[a - 1]; ++i)
                    for (int j = 1; j <= nu[a - 1]; ++j)
                        for (int h = 1; h <= nu[b - 1]; ++h)
                            for (int k = 1; k <= nu[b - 1]; ++k)
                                for (int r = 1; r <= N; ++r)
                                    for (int s = 1; s <= N && r + s <= N + 1; ++s)
                                        add(cat("pr3:", tag, ":a=", a, ",b=", b, ";i=", i,
                                                ",j=", j, ",h=", h, ",k=", k, ";r=", r, ",s=",
                                                s),
                                            "Theorem A (pr3)", [tab, a, b, i, j, h, k, r, s] {
                                                return pr::pr3(tab.get(), a, b, i, j, h, k, r,
                                                               s);
                                            });

        // (pr4), (pr5)
        for (int a = 1; a <= m; ++a)
            for (int b = 1; b < m; ++b)
                for (int i = 1; i <= nu[a - 1]; ++i)
                    for (int j = 1; j <= nu[a - 1]; ++j)
                        for (int r = 1; r <= N; ++r)
                            for (int s = 1; s <= N && r + s <= N + 1; ++s) {
                                for (int h = 1; h <= nu[b - 1]; ++h)
                                    for (int k = 1; k <= nu[b]; ++k)
                                        add(cat("pr4:", tag, ":a=", a, ",b=", b, ";i=", i,
                                                ",j=", j, ",h=", h, ",k=", k, ";r=", r, ",s=",
                                                s),
                                            "Theorem A (pr4)", [tab, a, b, i, j, h, k, r, s] {
                                                return pr::pr4(tab.get(), a, b, i, j, h, k, r,
                                                               s);
                                            });
                                for (int h = 1; h <= nu[b]; ++h)
                                    for (int k = 1; k <= nu[b - 1]; ++k)
                                        add(cat("pr5:", tag, ":a=", a, ",b=", b, ";i=", i,
                                                ",j=", j, ",h=", h, ",k=", k, ";r=", r, ",s=",
                                                s),
                                            "Theorem A (pr5)", [tab, a, b, i, j, h, k, r, s] {
                                                return pr::pr5(tab.get(), a, b, i, j, h, k, r,
                                                               s);
                                            });
                            }

        // (pr6)
        for (int a = 1; a < m; ++a)
            for (int b = 1; b < m; ++b)
                for (int i = 1; i <= nu[a - 1]; ++i)
                    for (int j = 1; j <= nu[a]; ++j)
                        for (int h = 1; h <= nu[b]; ++h)
                            for (int k = 1; k <= nu[b - 1]; ++k)
                                for (int r = 1; r <= N; ++r)
                                    for (int s = 1; s <= N && r + s <= N + 1; ++s)
                                        add(cat("pr6:", tag, ":a=", a, ",b=", b, ";i=", i,
                                                ",j=", j, ",h=", h, ",k=", k, ";r=", r, ",s=",
                                                s),
                                            "Theorem A (pr6)", [tab, a, b, i, j, h, k, r, s] {
                                                return pr::pr6(tab.get(), a, b, i, j, h, k, r,
                                                               s);
                                            });

        // (pr7), (pr8)
        for (int a = 1; a < m; ++a)
            for (int r = 1; r <= N; ++r)
                for (int s = 1; s <= N && r + s <= N + 1; ++s) {
                    for (int i = 1; i <= nu[a - 1]; ++i)
                        for (int j = 1; j <= nu[a]; ++j)
                            for (int h = 1; h <= nu[a - 1]; ++h)
                                for (int k = 1; k <= nu[a]; ++k)
                                    add(cat("pr7:", tag, ":a=", a, ";i=", i, ",j=", j, ",h=",
                                            h, ",k=", k, ";r=", r, ",s=", s),
                                        "Theorem A (pr7)", [tab, a, i, j, h, k, r, s] {
                                            return pr::pr7(tab.get(), a, i, j, h, k, r, s);
                                        });
                    for (int i = 1; i <= nu[a]; ++i)
                        for (int j = 1; j <= nu[a - 1]; ++j)
                            for (int h = 1; h <= nu[a]; ++h)
                                for (int k = 1; k <= nu[a - 1]; ++k)
                                    add(cat("pr8:", tag, ":a=", a, ";i=", i, ",j=", j, ",h=",
                                            h, ",k=", k, ";r=", r, ",s=", s),
                                        "Theorem A (pr8)", [tab, a, i, j, h, k, r, s] {
                                            return pr::pr8(tab.get(), a, i, j, h, k, r, s);
                                        });
                }

        // (pr9), (pr10)
        for (int a = 1; a + 2 <= m; ++a)
            for (int r = 1; r + 1 <= N; ++r)
                for (int s = 1; s + 1 <= N && (r + 1) + (s + 1) <= N + 1; ++s) {
                    for (int i = 1; i <= nu[a - 1]; ++i)
                        for (int j = 1; j <= nu[a]; ++j)
                            for (int h = 1; h <= nu[a]; ++h)
                                for (int k = 1; k <= nu[a + 1]; ++k)
                                    add(cat("pr9:", tag, ":a=", a, ";i=", i, ",j=", j, ",h=",
                                            h, ",k=", k, ";r=", r, ",s=", s),
                                        "Theorem A (pr9)", [tab, a, i, j, h, k, r, s] {
                                            return pr::pr9(tab.get(), a, i, j, h, k, r, s);
                                        });
                    for (int i = 1; i <= nu[a]; ++i)
                        for (int j = 1; j <= nu[a - 1]; ++j)
                            for (int h = 1; h <= nu[a + 1]; ++h)
                                for (int k = 1; k <= nu[a]; ++k)
                                    add(cat("pr10:", tag, ":a=", a, ";i=", i, ",j=", j, ",h=",
                                            h, ",k=", k, ";r=", r, ",s=", s),
                                        "Theorem A (pr10)", [tab, a, i, j, h, k, r, s] {
                                            return pr::pr10(tab.get(), a, i, j, h, k, r, s);
                                        });
                }

        // (pr11), (pr12)
        for (int a = 1; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                for (int r = 1; r <= N; ++r)
                    for (int s = 1; s <= N && r + s <= N + 1; ++s) {
                        for (int i = 1; i <= nu[a - 1]; ++i)
                            for (int j = 1; j <= nu[a]; ++j)
                                for (int h = 1; h <= nu[b - 1]; ++h)
                                    for (int k = 1; k <= nu[b]; ++k) {
                                        if (b == a + 1 && h == j) continue;
                                        add(cat("pr11:", tag, ":a=", a, ",b=", b, ";i=", i,
                                                ",j=", j, ",h=", h, ",k=", k, ";r=", r, ",s=",
                                                s),
                                            "Theorem A (pr11)", [tab, a, b, i, j, h, k, r, s] {
                                                return pr::pr11(tab.get(), a, b, i, j, h, k, r,
                                                                s);
                                            });
                                    }
                        for (int i = 1; i <= nu[a]; ++i)
                            for (int j = 1; j <= nu[a - 1]; ++j)
                                for (int h = 1; h <= nu[b]; ++h)
                                    for (int k = 1; k <= nu[b - 1]; ++k) {
                                        if (b == a + 1 && i == k) continue;
                                        add(cat("pr12:", tag, ":a=", a, ",b=", b, ";i=", i,
                                                ",j=", j, ",h=", h, ",k=", k, ";r=", r, ",s=",
                                                s),
                                            "Theorem A (pr12)", [tab, a, b, i, j, h, k, r, s] {
                                                return pr::pr12(tab.get(), a, b, i, j, h, k, r,
                                                                s);
                                            });
                                    }
                    }

        // (pr13), (pr14)
        for (int a = 1; a < m; ++a)
            for (int b : {a - 1, a + 1}) {
                if (b < 1 || b >= m) continue;
                for (int r = 1; r <= N; ++r)
                    for (int s = 1; s <= N; ++s)
                        for (int t = 1; t <= N && r + s + t <= N + 2; ++t) {
                            for (int i = 1; i <= nu[a - 1]; ++i)
                                for (int j = 1; j <= nu[a]; ++j)
                                    for (int h = 1; h <= nu[a - 1]; ++h)
                                        for (int k = 1; k <= nu[a]; ++k)
                                            for (int f = 1; f <= nu[b - 1]; ++f)
                                                for (int e = 1; e <= nu[b]; ++e)
                                                    add(cat("pr13:", tag, ":a=", a, ",b=", b,
                                                            ";i=", i, ",j=", j, ",h=", h,
                                                            ",k=", k, ",f=", f, ",g=", e,
                                                            ";r=", r, ",s=", s, ",t=", t),
                                                        "Theorem A (pr13)",
                                                        [tab, a, b, i, j, h, k, f, e, r, s, t] {
                                                            return pr::pr13(tab.get(), a, b, i,
                                                                            j, h, k, f, e, r,
                                                                            s, t);
                                                        });
                            for (int i = 1; i <= nu[a]; ++i)
                                for (int j = 1; j <= nu[a - 1]; ++j)
                                    for (int h = 1; h <= nu[a]; ++h)
                                        for (int k = 1; k <= nu[a - 1]; ++k)
                                            for (int f = 1; f <= nu[b]; ++f)
                                                for (int e = 1; e <= nu[b - 1]; ++e)
                                                    add(cat("pr14:", tag, ":a=", a, ",b=", b,
                                                            ";i=", i, ",j=", j, ",h=", h,
                                                            ",k=", k, ",f=", f, ",g=", e,
                                                            ";r=", r, ",s=", s, ",t=", t),
                                                        "Theorem A (pr14)",
                                                        [tab, a, b, i, j, h, k, f, e, r, s, t] {
                                                            return pr::pr14(tab.get(), a, b, i,
                                                                            j, h, k, f, e, r,
                                                                            s, t);
                                                        });
                        }
            }
    }
    return cases;
}

// --------------------------------------------------------------------------
// Root vectors: (ter)/(indofk) and the block quasi-determinant formulas.

inline std::vector<Case> root_vectors_suite(const SuiteSpec& spec) {
    std::vector<Case> cases;
    std::vector<ParabolicConfig> configs;
    if (spec.n > 0) {
        std::vector<std::vector<int>> nus =
            spec.nu.empty() ? compositions(spec.n) : std::vector<std::vector<int>>{spec.nu};
        for (auto& nu : nus) configs.push_back({spec.n, nu, default_cutoff(spec, 3)});
    } else {
        configs = {{3, {1, 1, 1}, default_cutoff(spec, 3)},
                   {4, {1, 2, 1}, default_cutoff(spec, 3)},
                   {4, {2, 2}, default_cutoff(spec, 3)}};
    }

    for (const auto& cfg : configs) {
        auto ctx = AlgebraContext::yangian(cfg.n, spec.term_cap);
        SharedTable tab = shared_table(ctx, cfg.nu, cfg.cutoff);
        const auto& nu = cfg.nu;
        const int m = static_cast<int>(nu.size());
        const int N = cfg.cutoff;
        const std::string tag = cat("n=", cfg.n, ",nu=", nu_str(nu));

        // (indofk): every admissible middle index gives the same element.
        for (int a = 1; a < m; ++a)
            for (int b = a + 2; b <= m; ++b)
                for (int k = 2; k <= nu[b - 2]; ++k)
                    for (int r = 1; r <= std::min(N, 3); ++r) {
                        for (int i = 1; i <= nu[a - 1]; ++i)
                            for (int j = 1; j <= nu[b - 1]; ++j) {
                                cases.push_back(
                                    {cat("indofk:", tag, ":E;a=", a, ",b=", b, ";i=", i, ",j=",
                                         j, ";r=", r, ";k=", k),
                                     "Eq. (indofk)", [tab, a, b, i, j, r, k] {
                                         Element e1 = root_vector(tab.get(), RootVectorKind::E,
                                                                  a, b, i, j, r, 1);
                                         Element ek = root_vector(tab.get(), RootVectorKind::E,
                                                                  a, b, i, j, r, k);
                                         return zero_residual(e1 - ek);
                                     }});
                                cases.push_back(
                                    {cat("indofk:", tag, ":F;a=", a, ",b=", b, ";i=", j, ",j=",
                                         i, ";r=", r, ";k=", k),
                                     "Eq. (indofk)", [tab, a, b, i, j, r, k] {
                                         Element f1 = root_vector(tab.get(), RootVectorKind::F,
                                                                  a, b, j, i, r, 1);
                                         Element fk = root_vector(tab.get(), RootVectorKind::F,
                                                                  a, b, j, i, r, k);
                                         return zero_residual(f1 - fk);
                                     }});
                            }
                    }

        // (ter) against the factorization: the stored k = 1 recursion must
        // reproduce the Gauss blocks.
        for (int a = 1; a < m; ++a)
            for (int b = a + 2; b <= m; ++b) {
                cases.push_back(
                    {cat("terblock:", tag, ":pair=", a, ",", b), "Eq. (ter) vs Eq. (gfact2)",
                     [tab, a, b]() -> std::optional<std::string> {
                         const auto& g = tab.get();
                         int ra = g.gf.block_offset(a), rb = g.gf.block_offset(b);
                         SeriesMatrix ge =
                             g.gf.E.block(ra, rb, g.nu[a - 1], g.nu[b - 1]);
                         SeriesMatrix gf =
                             g.gf.F.block(rb, ra, g.nu[b - 1], g.nu[a - 1]);
                         for (int i = 1; i <= g.nu[a - 1]; ++i)
                             for (int j = 1; j <= g.nu[b - 1]; ++j) {
                                 auto re = series_residual(g.E(a, b, i, j),
                                                           ge.at(i - 1, j - 1));
                                 if (re) return cat("E[", i, ",", j, "] ", *re);
                                 auto rf = series_residual(g.F(a, b, j, i),
                                                           gf.at(j - 1, i - 1));
                                 if (rf) return cat("F[", j, ",", i, "] ", *rf);
                             }
                         return std::nullopt;
                     }});
            }

        // Block quasi-determinant formulas for D_a, E_{a,b}, F_{a,b}.
        for (int a = 1; a <= m; ++a)
            for (int b = a; b <= m; ++b) {
                if (a == b && a > 1) {
                    cases.push_back(
                        {cat("qdblock:", tag, ":D;a=", a), "block quasi-determinants (qd1)",
                         [tab, a]() -> std::optional<std::string> {
                             const auto& g = tab.get();
                             SeriesMatrix t = SeriesMatrix::t_matrix(g.ctx, g.cutoff);
                             int off = g.gf.block_offset(a);
                             int d = g.nu[a - 1];
                             SeriesMatrix qd = quasi_det(
                                 t.block(0, 0, off, off), t.block(0, off, off, d),
                                 t.block(off, 0, d, off), t.block(off, off, d, d));
                             SeriesMatrix diff = qd - g.gf.Dblk[a - 1];
                             if (diff.is_zero()) return std::nullopt;
                             return std::string("quasi-determinant differs from D block");
                         }});
                }
                if (b > a) {
                    cases.push_back(
                        {cat("qdblock:", tag, ":EF;a=", a, ",b=", b),
                         "block quasi-determinants (qd2)/(qd3)",
                         [tab, a, b]() -> std::optional<std::string> {
                             const auto& g = tab.get();
                             SeriesMatrix t = SeriesMatrix::t_matrix(g.ctx, g.cutoff);
                             int offa = g.gf.block_offset(a), offb = g.gf.block_offset(b);
                             int da = g.nu[a - 1], db = g.nu[b - 1];
                             SeriesMatrix qe =
                                 (a == 1) ? t.block(0, offb, da, db)
                                          : quasi_det(t.block(0, 0, offa, offa),
                                                      t.block(0, offb, offa, db),
                                                      t.block(offa, 0, da, offa),
                                                      t.block(offa, offb, da, db));
                             SeriesMatrix e = g.gf.Dblk[a - 1].invert() * qe;
                             SeriesMatrix qf =
                                 (a == 1) ? t.block(offb, 0, db, da)
                                          : quasi_det(t.block(0, 0, offa, offa),
                                                      t.block(0, offa, offa, da),
                                                      t.block(offb, 0, db, offa),
                                                      t.block(offb, offa, db, da));
                             SeriesMatrix f = qf * g.gf.Dblk[a - 1].invert();
                             for (int i = 1; i <= da; ++i)
                                 for (int j = 1; j <= db; ++j) {
                                     auto re = series_residual(g.E(a, b, i, j),
                                                               e.at(i - 1, j - 1));
                                     if (re) return cat("E[", i, ",", j, "] ", *re);
                                     auto rf = series_residual(g.F(a, b, j, i),
                                                               f.at(j - 1, i - 1));
                                     if (rf) return cat("F[", j, ",", i, "] ", *rf);
                                 }
                             return std::nullopt;
                         }});
                }
            }
    }
    return cases;
}

}  // namespace yv::suites
