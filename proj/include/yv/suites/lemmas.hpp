/**
 * @file suites/lemmas.hpp
 * @brief Coefficient-wise verification of the generating-series lemmas:
 *        goody2/goody3/serre1/serre2, their parabolic analogues and the
 *        (todd) expansion identity.
 *
 * Two-variable identities are expanded in (u^{-r}, v^{-s}) and compared
 * for r+s below the stated bound; (u-v) prefactors act as exact Laurent
 * polynomials on the tables.
 */
#pragma once

#include "yv/suites/helpers.hpp"

namespace yv::suites {

namespace lem {

// Bound conventions: series tables at cutoff `cut`, two-variable
// comparisons to total degree `b2`, three-variable to `b3`.
struct Bounds {
    int cut, b2, b3;
};

inline VarSeries inj(const Series& s, int var, int tcap) {
    return VarSeries::inject(s, var).capped(tcap);
}

}  // namespace lem

inline std::vector<Case> drinfeld_lemmas_suite(const SuiteSpec& spec) {
    std::vector<Case> cases;
    for (int n : default_ns(spec, {2, 3})) {
        const lem::Bounds B{default_cutoff(spec, 6), 5, 6};
        auto ctx = AlgebraContext::yangian(n, spec.term_cap);
        SharedTable tab = shared_table(ctx, std::vector<int>(n, 1), B.cut);
        const std::string tag = cat("n=", n);
        auto add = [&](std::string id, const char* ref,
                       std::function<std::optional<std::string>()> run) {
            cases.push_back({std::move(id), ref, std::move(run)});
        };
        const int tc2 = B.b2 + 2, tc3 = B.b3 + 2;

        for (int i = 1; i < n; ++i) {
            add(cat("goody2.i:", tag, ":i=", i), "Lemma goody2(i)", [tab, i, B, tc2] {
                const auto& g = tab.get();
                auto D = lem::inj(g.drinfeld_D(i), 0, tc2);
                auto Ev = lem::inj(g.drinfeld_E(i), 1, tc2);
                auto Eu = lem::inj(g.drinfeld_E(i), 0, tc2);
                VarSeries lhs = VarSeries::var_diff(g.ctx, 0, 1) * comm(D, Ev);
                VarSeries rhs = D * (Ev - Eu);
                return varseries_residual(lhs - rhs, B.b2);
            });
            add(cat("goody2.ii:", tag, ":i=", i), "Lemma goody2(ii)", [tab, i, B, tc2] {
                const auto& g = tab.get();
                auto Eu = lem::inj(g.drinfeld_E(i), 0, tc2);
                auto Ev = lem::inj(g.drinfeld_E(i), 1, tc2);
                auto Dt = lem::inj(g.drinfeld_Dt(i + 1), 1, tc2);
                VarSeries lhs = VarSeries::var_diff(g.ctx, 0, 1) * comm(Eu, Dt);
                VarSeries rhs = (Eu - Ev) * Dt;
                return varseries_residual(lhs - rhs, B.b2);
            });
            add(cat("goody2.iii:", tag, ":i=", i), "Lemma goody2(iii)", [tab, i, B, tc2] {
                const auto& g = tab.get();
                auto Eu = lem::inj(g.drinfeld_E(i), 0, tc2);
                auto Fv = lem::inj(g.drinfeld_F(i), 1, tc2);
                VarSeries lhs = VarSeries::var_diff(g.ctx, 0, 1) * comm(Eu, Fv);
                VarSeries rhs = lem::inj(g.drinfeld_Dt(i), 1, tc2) *
                                    lem::inj(g.drinfeld_D(i + 1), 1, tc2) -
                                lem::inj(g.drinfeld_Dt(i), 0, tc2) *
                                    lem::inj(g.drinfeld_D(i + 1), 0, tc2);
                return varseries_residual(lhs - rhs, B.b2);
            });
            add(cat("goody2.iv:", tag, ":i=", i), "Lemma goody2(iv)", [tab, i, B, tc2] {
                const auto& g = tab.get();
                auto Eu = lem::inj(g.drinfeld_E(i), 0, tc2);
                auto Ev = lem::inj(g.drinfeld_E(i), 1, tc2);
                VarSeries lhs = VarSeries::var_diff(g.ctx, 0, 1) * comm(Eu, Ev);
                VarSeries rhs = (Ev - Eu) * (Ev - Eu);
                return varseries_residual(lhs - rhs, B.b2);
            });
            add(cat("todd:", tag, ":i=", i), "Eq. (todd)", [tab, i, B] {
                const auto& g = tab.get();
                // (u-v) sum_{r,s >= 1} E^{(r+s-1)} u^{-r} v^{-s} = E(v) - E(u)
                std::map<VarSeries::Exp, Element> coeffs;
                for (int r = 1; r <= B.cut; ++r)
                    for (int s = 1; r + s - 1 <= B.cut && r + s <= B.b2 + 2; ++s)
                        coeffs[{r, s, 0}] = g.drinfeld_E(i).at(r + s - 1);
                VarSeries table = VarSeries::from_coeffs(
                    g.ctx, coeffs, {B.cut, B.cut, VarSeries::kBig}, B.b2 + 2);
                VarSeries lhs = VarSeries::var_diff(g.ctx, 0, 1) * table;
                VarSeries rhs = lem::inj(g.drinfeld_E(i), 1, B.b2 + 2) -
                                lem::inj(g.drinfeld_E(i), 0, B.b2 + 2);
                return varseries_residual(lhs - rhs, B.b2);
            });
        }

        for (int a = 1; a + 2 <= n; ++a) {
            add(cat("goody3.i:", tag, ":a=", a), "Lemma goody3(i)", [tab, a, B, tc2] {
                const auto& g = tab.get();
                return varseries_residual(comm(lem::inj(g.drinfeld_E(a), 0, tc2),
                                               lem::inj(g.drinfeld_F(a + 1), 1, tc2)),
                                          B.b2);
            });
            add(cat("goody3.ii:", tag, ":a=", a), "Lemma goody3(ii)", [tab, a, B, tc2] {
                const auto& g = tab.get();
                auto E1u = lem::inj(g.drinfeld_E(a), 0, tc2);
                auto E1v = lem::inj(g.drinfeld_E(a), 1, tc2);
                auto E2v = lem::inj(g.drinfeld_E(a + 1), 1, tc2);
                auto E13u = lem::inj(g.drinfeld_E(a, a + 2), 0, tc2);
                auto E13v = lem::inj(g.drinfeld_E(a, a + 2), 1, tc2);
                VarSeries lhs = VarSeries::var_diff(g.ctx, 0, 1) * comm(E1u, E2v);
                VarSeries rhs = E1u * E2v - E1v * E2v - E13u + E13v;
                return varseries_residual(lhs - rhs, B.b2);
            });
            add(cat("goody3.iii:", tag, ":a=", a), "Lemma goody3(iii)", [tab, a, B, tc2] {
                const auto& g = tab.get();
                auto E13u = lem::inj(g.drinfeld_E(a, a + 2), 0, tc2);
                auto E1u = lem::inj(g.drinfeld_E(a), 0, tc2);
                auto E2v = lem::inj(g.drinfeld_E(a + 1), 1, tc2);
                VarSeries lhs = comm(E13u, E2v);
                VarSeries rhs = E2v * comm(E1u, E2v);
                return varseries_residual(lhs - rhs, B.b2);
            });
            add(cat("goody3.iv:", tag, ":a=", a), "Lemma goody3(iv)", [tab, a, B, tc2] {
                const auto& g = tab.get();
                auto E1u = lem::inj(g.drinfeld_E(a), 0, tc2);
                auto E1v = lem::inj(g.drinfeld_E(a), 1, tc2);
                auto E2v = lem::inj(g.drinfeld_E(a + 1), 1, tc2);
                auto E13v = lem::inj(g.drinfeld_E(a, a + 2), 1, tc2);
                VarSeries lhs = comm(E1u, E13v - E1v * E2v);
                VarSeries rhs = -(comm(E1u, E2v) * E1u);
                return varseries_residual(lhs - rhs, B.b2);
            });
            add(cat("serre1.i:", tag, ":a=", a), "Lemma serre1(i)", [tab, a, B, tc2] {
                const auto& g = tab.get();
                auto E1u = lem::inj(g.drinfeld_E(a), 0, tc2);
                auto E2v = lem::inj(g.drinfeld_E(a + 1), 1, tc2);
                return varseries_residual(comm(comm(E1u, E2v), E2v), B.b2);
            });
            add(cat("serre1.ii:", tag, ":a=", a), "Lemma serre1(ii)", [tab, a, B, tc2] {
                const auto& g = tab.get();
                auto E1u = lem::inj(g.drinfeld_E(a), 0, tc2);
                auto E2v = lem::inj(g.drinfeld_E(a + 1), 1, tc2);
                return varseries_residual(comm(E1u, comm(E1u, E2v)), B.b2);
            });
            add(cat("serre2.i:", tag, ":a=", a), "Lemma serre2(i)", [tab, a, B, tc3] {
                const auto& g = tab.get();
                auto E1u = lem::inj(g.drinfeld_E(a), 0, tc3);
                auto E2v = lem::inj(g.drinfeld_E(a + 1), 1, tc3);
                auto E2w = lem::inj(g.drinfeld_E(a + 1), 2, tc3);
                return varseries_residual(
                    comm(comm(E1u, E2v), E2w) + comm(comm(E1u, E2w), E2v), B.b3);
            });
            add(cat("serre2.ii:", tag, ":a=", a), "Lemma serre2(ii)", [tab, a, B, tc3] {
                const auto& g = tab.get();
                auto E1u = lem::inj(g.drinfeld_E(a), 0, tc3);
                auto E1v = lem::inj(g.drinfeld_E(a), 1, tc3);
                auto E2w = lem::inj(g.drinfeld_E(a + 1), 2, tc3);
                return varseries_residual(
                    comm(E1u, comm(E1v, E2w)) + comm(E1v, comm(E1u, E2w)), B.b3);
            });
        }
    }
    return cases;
}

// ---------------------------------------------------------------------------

inline std::vector<Case> parabolic_lemmas_suite(const SuiteSpec& spec) {
    std::vector<Case> cases;
    std::vector<ParabolicConfig> configs;
    if (spec.n > 0 && !spec.nu.empty()) {
        configs.push_back({spec.n, spec.nu, default_cutoff(spec, 7)});
    } else {
        configs = {{2, {1, 1}, default_cutoff(spec, 7)},
                   {3, {2, 1}, default_cutoff(spec, 7)},
                   {3, {1, 2}, default_cutoff(spec, 7)},
                   {3, {1, 1, 1}, default_cutoff(spec, 7)}};
    }
    const int b2 = 5, b3 = 6;

    for (const auto& cfg : configs) {
        auto ctx = AlgebraContext::yangian(cfg.n, spec.term_cap);
        SharedTable tab = shared_table(ctx, cfg.nu, cfg.cutoff);
        const auto& nu = cfg.nu;
        const int m = static_cast<int>(nu.size());
        const std::string tag = cat("n=", cfg.n, ",nu=", nu_str(nu));
        const int tc2 = b2 + 2, tc3 = b3 + 2;
        auto add = [&](std::string id, const char* ref,
                       std::function<std::optional<std::string>()> run) {
            cases.push_back({std::move(id), ref, std::move(run)});
        };

        if (m == 2) {
            for (int i = 1; i <= nu[0]; ++i)
                for (int j = 1; j <= nu[0]; ++j)
                    for (int h = 1; h <= nu[0]; ++h)
                        for (int k = 1; k <= nu[1]; ++k)
                            add(cat("pgoody2.i:", tag, ":i=", i, ",j=", j, ",h=", h, ",k=", k),
                                "Lemma pgoody2(i)", [tab, i, j, h, k, b2, tc2] {
                                    const auto& g = tab.get();
                                    VarSeries lhs =
                                        VarSeries::var_diff(g.ctx, 0, 1) *
                                        comm(lem::inj(g.D(1, i, j), 0, tc2),
                                             lem::inj(g.E(1, 2, h, k), 1, tc2));
                                    VarSeries rhs = VarSeries::zero(g.ctx);
                                    if (h == j) {
                                        for (int p = 1; p <= g.nu[0]; ++p)
                                            rhs = rhs + lem::inj(g.D(1, i, p), 0, tc2) *
                                                            (lem::inj(g.E(1, 2, p, k), 1, tc2) -
                                                             lem::inj(g.E(1, 2, p, k), 0, tc2));
                                    }
                                    return varseries_residual(lhs - rhs, b2);
                                });
            for (int i = 1; i <= nu[0]; ++i)
                for (int j = 1; j <= nu[1]; ++j)
                    for (int h = 1; h <= nu[1]; ++h)
                        for (int k = 1; k <= nu[1]; ++k)
                            add(cat("pgoody2.ii:", tag, ":i=", i, ",j=", j, ",h=", h, ",k=", k),
                                "Lemma pgoody2(ii)", [tab, i, j, h, k, b2, tc2] {
                                    const auto& g = tab.get();
                                    VarSeries lhs =
                                        VarSeries::var_diff(g.ctx, 0, 1) *
                                        comm(lem::inj(g.E(1, 2, i, j), 0, tc2),
                                             lem::inj(g.Dt(2, h, k), 1, tc2));
                                    VarSeries rhs = VarSeries::zero(g.ctx);
                                    if (h == j) {
                                        for (int q = 1; q <= g.nu[1]; ++q)
                                            rhs = rhs + (lem::inj(g.E(1, 2, i, q), 0, tc2) -
                                                         lem::inj(g.E(1, 2, i, q), 1, tc2)) *
                                                            lem::inj(g.Dt(2, q, k), 1, tc2);
                                    }
                                    return varseries_residual(lhs - rhs, b2);
                                });
            for (int i = 1; i <= nu[0]; ++i)
                for (int j = 1; j <= nu[1]; ++j)
                    for (int h = 1; h <= nu[1]; ++h)
                        for (int k = 1; k <= nu[0]; ++k)
                            add(cat("pgoody2.iii:", tag, ":i=", i, ",j=", j, ",h=", h, ",k=",
                                    k),
                                "Lemma pgoody2(iii)", [tab, i, j, h, k, b2, tc2] {
                                    const auto& g = tab.get();
                                    VarSeries lhs =
                                        VarSeries::var_diff(g.ctx, 0, 1) *
                                        comm(lem::inj(g.E(1, 2, i, j), 0, tc2),
                                             lem::inj(g.F(1, 2, h, k), 1, tc2));
                                    VarSeries rhs =
                                        lem::inj(g.Dt(1, i, k), 1, tc2) *
                                            lem::inj(g.D(2, h, j), 1, tc2) -
                                        lem::inj(g.Dt(1, i, k), 0, tc2) *
                                            lem::inj(g.D(2, h, j), 0, tc2);
                                    return varseries_residual(lhs - rhs, b2);
                                });
            for (int i = 1; i <= nu[0]; ++i)
                for (int j = 1; j <= nu[1]; ++j)
                    for (int h = 1; h <= nu[0]; ++h)
                        for (int k = 1; k <= nu[1]; ++k) {
                            add(cat("pgoody2.iv:", tag, ":i=", i, ",j=", j, ",h=", h, ",k=", k),
                                "Lemma pgoody2(iv)", [tab, i, j, h, k, b2, tc2] {
                                    const auto& g = tab.get();
                                    VarSeries lhs =
                                        VarSeries::var_diff(g.ctx, 0, 1) *
                                        comm(lem::inj(g.E(1, 2, i, j), 0, tc2),
                                             lem::inj(g.E(1, 2, h, k), 1, tc2));
                                    VarSeries rhs =
                                        (lem::inj(g.E(1, 2, i, k), 1, tc2) -
                                         lem::inj(g.E(1, 2, i, k), 0, tc2)) *
                                        (lem::inj(g.E(1, 2, h, j), 1, tc2) -
                                         lem::inj(g.E(1, 2, h, j), 0, tc2));
                                    return varseries_residual(lhs - rhs, b2);
                                });
                            add(cat("pgoody2.iv2:", tag, ":i=", i, ",j=", j, ",h=", h, ",k=",
                                    k),
                                "Lemma pgoody2 (iv)''", [tab, i, j, h, k, b2, tc2] {
                                    const auto& g = tab.get();
                                    auto E = [&](int a, int b, int var) {
                                        return lem::inj(g.E(1, 2, a, b), var, tc2);
                                    };
                                    VarSeries d = VarSeries::var_diff(g.ctx, 0, 1);
                                    VarSeries lhs = d * (d * comm(E(i, j, 0), E(h, k, 1)));
                                    VarSeries rhs =
                                        (E(i, j, 1) - E(i, j, 0)) * (E(h, k, 0) - E(h, k, 1)) +
                                        d * (E(h, j, 1) * (E(i, k, 1) - E(i, k, 0))) +
                                        d * ((E(i, k, 0) - E(i, k, 1)) * E(h, j, 0));
                                    return varseries_residual(lhs - rhs, b2);
                                });
                        }
        }

        if (m == 3) {
            for (int i = 1; i <= nu[0]; ++i)
                for (int j = 1; j <= nu[1]; ++j)
                    for (int h = 1; h <= nu[2]; ++h)
                        for (int k = 1; k <= nu[1]; ++k)
                            add(cat("pgoody3.i:", tag, ":i=", i, ",j=", j, ",h=", h, ",k=", k),
                                "Lemma pgoody3(i)", [tab, i, j, h, k, b2, tc2] {
                                    const auto& g = tab.get();
                                    return varseries_residual(
                                        comm(lem::inj(g.E(1, 2, i, j), 0, tc2),
                                             lem::inj(g.F(2, 3, h, k), 1, tc2)),
                                        b2);
                                });
            for (int i = 1; i <= nu[0]; ++i)
                for (int j = 1; j <= nu[1]; ++j)
                    for (int h = 1; h <= nu[1]; ++h)
                        for (int k = 1; k <= nu[2]; ++k)
                            add(cat("pgoody3.ii:", tag, ":i=", i, ",j=", j, ",h=", h, ",k=", k),
                                "Lemma pgoody3(ii)", [tab, i, j, h, k, b2, tc2] {
                                    const auto& g = tab.get();
                                    VarSeries lhs =
                                        VarSeries::var_diff(g.ctx, 0, 1) *
                                        comm(lem::inj(g.E(1, 2, i, j), 0, tc2),
                                             lem::inj(g.E(2, 3, h, k), 1, tc2));
                                    VarSeries rhs = VarSeries::zero(g.ctx);
                                    if (h == j) {
                                        for (int q = 1; q <= g.nu[1]; ++q)
                                            rhs = rhs +
                                                  lem::inj(g.E(1, 2, i, q), 0, tc2) *
                                                      lem::inj(g.E(2, 3, q, k), 1, tc2) -
                                                  lem::inj(g.E(1, 2, i, q), 1, tc2) *
                                                      lem::inj(g.E(2, 3, q, k), 1, tc2);
                                        rhs = rhs - lem::inj(g.E(1, 3, i, k), 0, tc2) +
                                              lem::inj(g.E(1, 3, i, k), 1, tc2);
                                    }
                                    return varseries_residual(lhs - rhs, b2);
                                });
            for (int i = 1; i <= nu[0]; ++i)
                for (int j = 1; j <= nu[2]; ++j)
                    for (int h = 1; h <= nu[1]; ++h)
                        for (int k = 1; k <= nu[2]; ++k)
                            add(cat("pgoody3.iii:", tag, ":i=", i, ",j=", j, ",h=", h, ",k=",
                                    k),
                                "Lemma pgoody3(iii)", [tab, i, j, h, k, b2, tc2] {
                                    const auto& g = tab.get();
                                    VarSeries lhs = comm(lem::inj(g.E(1, 3, i, j), 0, tc2),
                                                         lem::inj(g.E(2, 3, h, k), 1, tc2));
                                    VarSeries rhs = VarSeries::zero(g.ctx);
                                    for (int q = 1; q <= g.nu[1]; ++q)
                                        rhs = rhs + lem::inj(g.E(2, 3, h, j), 1, tc2) *
                                                        comm(lem::inj(g.E(1, 2, i, q), 0, tc2),
                                                             lem::inj(g.E(2, 3, q, k), 1, tc2));
                                    return varseries_residual(lhs - rhs, b2);
                                });
            for (int i = 1; i <= nu[0]; ++i)
                for (int j = 1; j <= nu[1]; ++j)
                    for (int h = 1; h <= nu[0]; ++h)
                        for (int k = 1; k <= nu[2]; ++k)
                            add(cat("pgoody3.iv:", tag, ":i=", i, ",j=", j, ",h=", h, ",k=", k),
                                "Lemma pgoody3(iv)", [tab, i, j, h, k, b2, tc2] {
                                    const auto& g = tab.get();
                                    VarSeries x = lem::inj(g.E(1, 3, h, k), 1, tc2);
                                    for (int q = 1; q <= g.nu[1]; ++q)
                                        x = x - lem::inj(g.E(1, 2, h, q), 1, tc2) *
                                                    lem::inj(g.E(2, 3, q, k), 1, tc2);
                                    VarSeries lhs =
                                        comm(lem::inj(g.E(1, 2, i, j), 0, tc2), x);
                                    VarSeries rhs = VarSeries::zero(g.ctx);
                                    for (int q = 1; q <= g.nu[1]; ++q)
                                        rhs = rhs - comm(lem::inj(g.E(1, 2, i, q), 0, tc2),
                                                         lem::inj(g.E(2, 3, q, k), 1, tc2)) *
                                                        lem::inj(g.E(1, 2, h, j), 0, tc2);
                                    return varseries_residual(lhs - rhs, b2);
                                });
            // pserre1 / pserre2
            for (int i = 1; i <= nu[0]; ++i)
                for (int j = 1; j <= nu[1]; ++j)
                    for (int h = 1; h <= nu[1]; ++h)
                        for (int k = 1; k <= nu[2]; ++k)
                            for (int f = 1; f <= nu[1]; ++f)
                                for (int e = 1; e <= nu[2]; ++e) {
                                    add(cat("pserre1.i:", tag, ":i=", i, ",j=", j, ",h=", h,
                                            ",k=", k, ",f=", f, ",g=", e),
                                        "Lemma pserre1(i)", [tab, i, j, h, k, f, e, b2, tc2] {
                                            const auto& g = tab.get();
                                            return varseries_residual(
                                                comm(comm(lem::inj(g.E(1, 2, i, j), 0, tc2),
                                                          lem::inj(g.E(2, 3, h, k), 1, tc2)),
                                                     lem::inj(g.E(2, 3, f, e), 1, tc2)),
                                                b2);
                                        });
                                    add(cat("pserre2.i:", tag, ":i=", i, ",j=", j, ",h=", h,
                                            ",k=", k, ",f=", f, ",g=", e),
                                        "Lemma pserre2(i)", [tab, i, j, h, k, f, e, b3, tc3] {
                                            const auto& g = tab.get();
                                            auto E1u = lem::inj(g.E(1, 2, i, j), 0, tc3);
                                            auto E2v = lem::inj(g.E(2, 3, h, k), 1, tc3);
                                            auto E2w = lem::inj(g.E(2, 3, f, e), 2, tc3);
                                            auto E2v2 = lem::inj(g.E(2, 3, f, e), 1, tc3);
                                            auto E2w2 = lem::inj(g.E(2, 3, h, k), 2, tc3);
                                            return varseries_residual(
                                                comm(comm(E1u, E2v), E2w) +
                                                    comm(comm(E1u, E2w2), E2v2),
                                                b3);
                                        });
                                }
            for (int i = 1; i <= nu[0]; ++i)
                for (int j = 1; j <= nu[1]; ++j)
                    for (int h = 1; h <= nu[0]; ++h)
                        for (int k = 1; k <= nu[1]; ++k)
                            for (int f = 1; f <= nu[1]; ++f)
                                for (int e = 1; e <= nu[2]; ++e) {
                                    add(cat("pserre1.ii:", tag, ":i=", i, ",j=", j, ",h=", h,
                                            ",k=", k, ",f=", f, ",g=", e),
                                        "Lemma pserre1(ii)", [tab, i, j, h, k, f, e, b2, tc2] {
                                            const auto& g = tab.get();
                                            return varseries_residual(
                                                comm(lem::inj(g.E(1, 2, i, j), 0, tc2),
                                                     comm(lem::inj(g.E(1, 2, h, k), 0, tc2),
                                                          lem::inj(g.E(2, 3, f, e), 1, tc2))),
                                                b2);
                                        });
                                    add(cat("pserre2.ii:", tag, ":i=", i, ",j=", j, ",h=", h,
                                            ",k=", k, ",f=", f, ",g=", e),
                                        "Lemma pserre2(ii)", [tab, i, j, h, k, f, e, b3, tc3] {
                                            const auto& g = tab.get();
                                            auto E1u = lem::inj(g.E(1, 2, i, j), 0, tc3);
                                            auto E1v = lem::inj(g.E(1, 2, h, k), 1, tc3);
                                            auto E1u2 = lem::inj(g.E(1, 2, h, k), 0, tc3);
                                            auto E1v2 = lem::inj(g.E(1, 2, i, j), 1, tc3);
                                            auto E2w = lem::inj(g.E(2, 3, f, e), 2, tc3);
                                            return varseries_residual(
                                                comm(E1u, comm(E1v, E2w)) +
                                                    comm(E1v2, comm(E1u2, E2w)),
                                                b3);
                                        });
                                }
        }
    }
    return cases;
}

}  // namespace yv::suites
