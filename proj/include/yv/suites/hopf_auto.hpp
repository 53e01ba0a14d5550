/**
 * @file suites/hopf_auto.hpp
 * @brief The automorphism suite (involutivity, S = omega.sigma, the S^2
 *        formula, homomorphy spot checks), the Hopf suite
 *        (coassociativity, counit, antipode axiom) and the psi suite
 *        (Lemma qdet vs (pdidef), Lemma cent, (comp), (unam)).
 */
#pragma once

#include "yv/suites/helpers.hpp"

#include <random>

namespace yv::suites {

inline Element random_word_element(std::mt19937_64& rng, const ContextPtr& ctx, int max_degree,
                                   int nterms) {
    Element e(ctx);
    std::uniform_int_distribution<int> idx(1, ctx->n());
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> more(0, 2);
    for (int t = 0; t < nterms; ++t) {
        Word w;
        int budget = max_degree;
        while (budget > 0 && more(rng) > 0) {
            std::uniform_int_distribution<int> lev(1, budget);
            int r = lev(rng);
            w.push_back(GenSym::yangian(1, idx(rng), idx(rng), r));
            budget -= r;
        }
        int c = coef(rng);
        e.add_term(std::move(w), Rational(c == 0 ? 1 : c));
    }
    return e;
}

inline std::vector<Case> automorphisms_suite(const SuiteSpec& spec) {
    std::vector<Case> cases;
    const int n = spec.n > 0 ? spec.n : 2;
    const int cutoff = default_cutoff(spec, 4);
    auto ctx = AlgebraContext::yangian(n, spec.term_cap);

    struct Maps {
        GenMap sigma, tau, omega, antipode;
    };
    Shared<Maps> maps([ctx, cutoff] {
        return Maps{make_sigma(ctx), make_tau(ctx), make_omega(ctx, cutoff),
                    make_antipode(ctx, cutoff)};
    });

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int r = 1; r <= cutoff; ++r) {
                Element g = Element::gen(ctx, GenSym::yangian(1, i, j, r));
                cases.push_back({cat("involution:sigma:n=", n, ":i=", i, ",j=", j, ",r=", r),
                                 "(A3) order 2", [maps, g] {
                                     return zero_residual(
                                         maps.get().sigma.apply(maps.get().sigma.apply(g)) - g);
                                 }});
                cases.push_back({cat("involution:tau:n=", n, ":i=", i, ",j=", j, ",r=", r),
                                 "(A4) order 2", [maps, g] {
                                     return zero_residual(
                                         maps.get().tau.apply(maps.get().tau.apply(g)) - g);
                                 }});
                cases.push_back({cat("involution:omega:n=", n, ":i=", i, ",j=", j, ",r=", r),
                                 "(A5) order 2", [maps, g] {
                                     return zero_residual(
                                         maps.get().omega.apply(maps.get().omega.apply(g)) - g);
                                 }});
                cases.push_back({cat("sws:n=", n, ":i=", i, ",j=", j, ",r=", r),
                                 "S = omega . sigma", [maps, g] {
                                     return zero_residual(
                                         maps.get().antipode.apply(g) -
                                         maps.get().omega.apply(maps.get().sigma.apply(g)));
                                 }});
            }

    // Corollary s2: S^2(T_{i,j}(u)) = C_n(u+n)^{-1} T_{i,j}(u+n) C_n(u+n-1)
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            cases.push_back(
                {cat("s2:n=", n, ":i=", i, ",j=", j), "Corollary s2",
                 [maps, ctx, i, j, n, cutoff]() {
                     Series t = Series::t_entry(ctx, 1, i, j, cutoff);
                     Series lhs = maps.get().antipode.apply(maps.get().antipode.apply(t));
                     Series c = center_series(ctx, cutoff, CenterMethod::minor);
                     Series rhs = series_invert(c.shift(Rational(-n))) *
                                  t.shift(Rational(-n)) * c.shift(Rational(-(n - 1)));
                     return series_residual(lhs, rhs);
                 }});
        }

    // homomorphy / anti-homomorphy on seeded random words
    struct HomCase {
        const char* name;
        bool anti;
    };
    for (HomCase hc : {HomCase{"eta", false}, HomCase{"mu", false}, HomCase{"sigma", true},
                       HomCase{"tau", true}, HomCase{"omega", false}}) {
        for (int trial = 1; trial <= 5; ++trial) {
            cases.push_back(
                {cat("homomorphy:", hc.name, ":n=", n, ":trial=", trial),
                 "multiplicativity of the (anti)automorphisms",
                 [ctx, cutoff, hc, trial, seed = spec.seed, n]() {
                     std::mt19937_64 rng(seed + trial * 977 + n);
                     Element x = random_word_element(rng, ctx, 3, 2);
                     Element y = random_word_element(rng, ctx, 3, 2);
                     GenMap map = [&]() -> GenMap {
                         if (std::string(hc.name) == "eta") return make_eta(ctx, Rational(3, 2));
                         if (std::string(hc.name) == "mu")
                             return make_mu(ctx, {Rational(1), Rational(1, 2), Rational(-2)});
                         if (std::string(hc.name) == "sigma") return make_sigma(ctx);
                         if (std::string(hc.name) == "tau") return make_tau(ctx);
                         return make_omega(ctx, 2 * cutoff);
                     }();
                     Element lhs = map.apply(x * y);
                     Element rhs = hc.anti ? (map.apply(y) * map.apply(x)).normal_form()
                                           : (map.apply(x) * map.apply(y)).normal_form();
                     return zero_residual(lhs - rhs);
                 }});
        }
    }
    return cases;
}

// ---------------------------------------------------------------------------

inline std::vector<Case> hopf_suite(const SuiteSpec& spec) {
    std::vector<Case> cases;
    const int n = spec.n > 0 ? spec.n : 2;
    const int cutoff = default_cutoff(spec, 4);
    auto ctx = AlgebraContext::yangian(n, spec.term_cap);
    auto two = AlgebraContext::tensor_yangian(n, 2, spec.term_cap);

    struct Maps {
        GenMap delta, left, right, eps1, eps2, S, idm;
    };
    Shared<Maps> maps([ctx, two, cutoff] {
        return Maps{make_coproduct(ctx),        make_coproduct_slot(two, 1),
                    make_coproduct_slot(two, 2), make_counit_slot(two, 1),
                    make_counit_slot(two, 2),    make_antipode(ctx, cutoff),
                    make_identity(ctx)};
    });

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int r = 1; r <= cutoff; ++r) {
                Element g = Element::gen(ctx, GenSym::yangian(1, i, j, r));
                std::string tgen = cat("T[", i, ",", j, ";", r, "]");
                cases.push_back({cat("coassoc:n=", n, ":", tgen), "coassociativity of Delta",
                                 [maps, g] {
                                     const Maps& m = maps.get();
                                     Element d = m.delta.apply(g);
                                     return zero_residual(m.left.apply(d) - m.right.apply(d));
                                 }});
                cases.push_back({cat("counit:n=", n, ":", tgen), "counit axioms", [maps, g] {
                                     const Maps& m = maps.get();
                                     Element d = m.delta.apply(g);
                                     Element l = m.eps1.apply(d);
                                     Element r2 = m.eps2.apply(d);
                                     auto res = zero_residual(l - g);
                                     if (res) return res;
                                     return zero_residual(r2 - g);
                                 }});
                cases.push_back({cat("antipode:n=", n, ":", tgen),
                                 "antipode axiom (truncated)", [maps, ctx, g] {
                                     const Maps& m = maps.get();
                                     Element d = m.delta.apply(g);
                                     Element want = Element::one(ctx) * counit(g);
                                     auto res = zero_residual(
                                         fold_two_slots(d, m.S, m.idm) - want);
                                     if (res) return res;
                                     return zero_residual(fold_two_slots(d, m.idm, m.S) - want);
                                 }});
            }
    return cases;
}

// ---------------------------------------------------------------------------

inline std::vector<Case> psi_suite(const SuiteSpec& spec) {
    std::vector<Case> cases;
    const int cutoff = default_cutoff(spec, 4);
    const int total = spec.n > 0 ? spec.n : 4;  // bound on m+n

    for (int m = 1; m < total; ++m)
        for (int n = 1; m + n <= total; ++n) {
            auto src = AlgebraContext::yangian(n, spec.term_cap);
            auto dst = AlgebraContext::yangian(m + n, spec.term_cap);
            Shared<GenMap> quasi(
                [src, m, cutoff] { return make_psi(src, m, cutoff, PsiMethod::via_quasidet); });
            Shared<GenMap> omega(
                [src, m, cutoff] { return make_psi(src, m, cutoff, PsiMethod::via_omega); });
            const std::string tag = cat("m=", m, ",n=", n);

            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    for (int r = 1; r <= cutoff; ++r) {
                        cases.push_back(
                            {cat("agree:", tag, ":i=", i, ",j=", j, ",r=", r),
                             "Lemma qdet vs Eq. (pdidef)", [quasi, omega, src, i, j, r] {
                                 Element g = Element::gen(src, GenSym::yangian(1, i, j, r));
                                 return zero_residual(quasi.get().apply(g) -
                                                      omega.get().apply(g));
                             }});
                    }

            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= m; ++j)
                    for (int h = 1; h <= n; ++h)
                        for (int k = 1; k <= n; ++k)
                            for (int r = 1; r <= 3; ++r)
                                for (int s = 1; s <= 3; ++s) {
                                    cases.push_back(
                                        {cat("cent:", tag, ":i=", i, ",j=", j, ",h=", h,
                                             ",k=", k, ";r=", r, ",s=", s),
                                         "Lemma cent", [quasi, src, dst, i, j, h, k, r, s] {
                                             Element a = Element::gen(
                                                 dst, GenSym::yangian(1, i, j, r));
                                             Element b = quasi.get().apply(Element::gen(
                                                 src, GenSym::yangian(1, h, k, s)));
                                             return zero_residual(elem_commutator(a, b));
                                         }});
                                }
        }

    // (comp): psi_m . psi_{m'} = psi_{m+m'}
    for (int m = 1; m < total; ++m)
        for (int mp = 1; m + mp < total; ++mp)
            for (int n = 1; m + mp + n <= total; ++n) {
                auto small = AlgebraContext::yangian(n, spec.term_cap);
                auto mid = AlgebraContext::yangian(mp + n, spec.term_cap);
                Shared<GenMap> inner([small, mp, cutoff] { return make_psi(small, mp, cutoff); });
                Shared<GenMap> outer([mid, m, cutoff] { return make_psi(mid, m, cutoff); });
                Shared<GenMap> direct(
                    [small, m, mp, cutoff] { return make_psi(small, m + mp, cutoff); });
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j)
                        for (int r = 1; r <= 3; ++r)
                            cases.push_back(
                                {cat("comp:m=", m, ",mp=", mp, ",n=", n, ":i=", i, ",j=", j,
                                     ",r=", r),
                                 "Eq. (comp)", [inner, outer, direct, small, i, j, r] {
                                     Element g =
                                         Element::gen(small, GenSym::yangian(1, i, j, r));
                                     return zero_residual(
                                         outer.get().apply(inner.get().apply(g)) -
                                         direct.get().apply(g));
                                 }});
            }

    // (unam): psi commutes with the standard embeddings
    for (int m = 1; m < total; ++m)
        for (int n = 1; m + n + 1 <= total; ++n) {
            auto small = AlgebraContext::yangian(n, spec.term_cap);
            auto embed1 = AlgebraContext::yangian(n + 1, spec.term_cap);
            auto big = AlgebraContext::yangian(m + n + 1, spec.term_cap);
            Shared<GenMap> psi_small([small, m, cutoff] { return make_psi(small, m, cutoff); });
            Shared<GenMap> psi_big([embed1, m, cutoff] { return make_psi(embed1, m, cutoff); });
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    for (int r = 1; r <= 3; ++r)
                        cases.push_back(
                            {cat("unam:m=", m, ",n=", n, ":i=", i, ",j=", j, ",r=", r),
                             "diagram (unam)",
                             [psi_small, psi_big, small, embed1, big, i, j, r] {
                                 Element g = Element::gen(small, GenSym::yangian(1, i, j, r));
                                 Element via_small =
                                     embed_standard(psi_small.get().apply(g), big);
                                 Element via_big =
                                     psi_big.get().apply(embed_standard(g, embed1));
                                 return zero_residual(via_small - via_big);
                             }});
        }

    return cases;
}

}  // namespace yv::suites
