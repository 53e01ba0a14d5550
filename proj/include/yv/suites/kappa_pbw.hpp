/**
 * @file suites/kappa_pbw.hpp
 * @brief The evaluation-oracle suite (kappa_l kills the defining
 *        relations; truncation; level-l independence) and the
 *        PBW-independence suite (Theorems triangular and B at bounded
 *        degree, by exact rank).
 */
#pragma once

#include "yv/suites/helpers.hpp"
#include "yv/suites/rtt.hpp"

namespace yv::suites {

/// Exact-rank check: pass iff the images are linearly independent.
inline std::optional<std::string> independence_residual(const std::vector<Element>& images) {
    std::map<Word, int, WordLess> columns;
    for (const auto& e : images)
        for (const auto& [w, c] : e.terms())
            columns.emplace(w, 0);
    int col = 0;
    for (auto& [w, idx] : columns) idx = col++;
    RatMatrix m(static_cast<int>(images.size()), std::max(col, 1));
    for (std::size_t row = 0; row < images.size(); ++row)
        for (const auto& [w, c] : images[row].terms()) m.at(static_cast<int>(row), columns[w]) = c;
    int rank = m.rank();
    if (rank == static_cast<int>(images.size())) return std::nullopt;
    return cat("rank ", rank, " < ", images.size(), " monomials");
}

/// All weakly increasing index sequences with total degree <= bound;
/// index k has degree degs[k].  Includes the empty monomial.
inline std::vector<std::vector<int>> ordered_monomials(const std::vector<int>& degs, int bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> go = [&](int start, int budget) {
        out.push_back(cur);
        for (int k = start; k < static_cast<int>(degs.size()); ++k) {
            if (degs[k] > budget) continue;
            cur.push_back(k);
            go(k, budget - degs[k]);
            cur.pop_back();
        }
    };
    go(0, bound);
    return out;
}

inline std::vector<Case> kappa_suite(const SuiteSpec& spec) {
    std::vector<Case> cases;
    const int n = spec.n > 0 ? spec.n : 2;
    const int bound = default_cutoff(spec, 5);
    auto ctx = AlgebraContext::yangian(n, spec.term_cap);

    // kappa_l annihilates every (mr) residual: an oracle for the
    // straightening engine that never touches the Yangian normal form.
    for (int l : {2, 3}) {
        Shared<GenMap> kap([ctx, l] { return make_kappa(ctx, l); });
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int h = 1; h <= n; ++h)
                    for (int k = 1; k <= n; ++k)
                        for (int r = 1; r < bound; ++r)
                            for (int s = 1; r + s <= bound; ++s)
                                cases.push_back(
                                    {cat("oracle:l=", l, ":n=", n, ":i=", i, ",j=", j, ",h=",
                                         h, ",k=", k, ";r=", r, ",s=", s),
                                     "kappa_l respects Eq. (mr)",
                                     [kap, ctx, i, j, h, k, r, s] {
                                         Element lhs = elem_commutator(
                                             Element::gen(ctx, GenSym::yangian(1, i, j, r)),
                                             Element::gen(ctx, GenSym::yangian(1, h, k, s)));
                                         Element residual = kap.get().apply(
                                             lhs - mr_rhs(ctx, i, j, h, k, r, s));
                                         return zero_residual(residual);
                                     }});
    }

    // Corollary trunccor containment: kappa_l(T^{(r)}) = 0 for r > l.
    for (int l : {1, 2, 3}) {
        Shared<GenMap> kap([ctx, l] { return make_kappa(ctx, l); });
        for (int r = l + 1; r <= l + 2; ++r)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    cases.push_back({cat("trunc:l=", l, ":n=", n, ":i=", i, ",j=", j, ",r=", r),
                                     "Corollary trunccor", [kap, ctx, i, j, r] {
                                         return zero_residual(kap.get().apply(
                                             Element::gen(ctx, GenSym::yangian(1, i, j, r))));
                                     }});
    }

    // Theorem truncthm: ordered monomials in the kappa_l(T^{(r)}) are
    // linearly independent, by exact rank.
    for (auto [l, deg] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}}) {
        cases.push_back(
            {cat("truncthm:l=", l, ":n=", n, ":deg=", deg), "Theorem truncthm",
             [ctx, n, l, deg]() {
                 GenMap kap = make_kappa(ctx, l);
                 std::vector<Element> gens;
                 std::vector<int> degs;
                 for (int i = 1; i <= n; ++i)
                     for (int j = 1; j <= n; ++j)
                         for (int r = 1; r <= std::min(l, deg); ++r) {
                             gens.push_back(
                                 kap.apply(Element::gen(ctx, GenSym::yangian(1, i, j, r))));
                             degs.push_back(r);
                         }
                 std::vector<Element> images;
                 for (const auto& mono : ordered_monomials(degs, deg)) {
                     Element prod = Element::one(kap.target());
                     for (int idx : mono) prod = (prod * gens[idx]).normal_form();
                     images.push_back(prod);
                 }
                 return independence_residual(images);
             }});
    }

    return cases;
}

// ---------------------------------------------------------------------------

inline std::vector<Case> pbw_suite(const SuiteSpec& spec) {
    std::vector<Case> cases;

    struct Config {
        int n;
        std::vector<int> nu;
        int degree;
        const char* ref;
    };
    std::vector<Config> configs;
    if (spec.n > 0) {
        std::vector<int> nu = spec.nu.empty() ? std::vector<int>(spec.n, 1) : spec.nu;
        configs.push_back({spec.n, nu, default_cutoff(spec, 3) > 3 ? 3 : default_cutoff(spec, 3),
                           "Theorem B"});
    } else {
        configs.push_back({2, {1, 1}, 3, "Theorem triangular"});
        configs.push_back({3, {2, 1}, 2, "Theorem B"});
    }

    for (const auto& cfg : configs) {
        auto ctx = AlgebraContext::yangian(cfg.n, spec.term_cap);
        const int cutoff = cfg.degree;
        SharedTable tab = shared_table(ctx, cfg.nu, cutoff);
        const std::string tag = cat("n=", cfg.n, ",nu=", nu_str(cfg.nu), ",deg=", cfg.degree);
        const bool drinfeld = static_cast<int>(cfg.nu.size()) == cfg.n;
        const std::string base = drinfeld && cfg.n == 2 ? "triangular" : "theoremB";

        enum class Part { D, E, F, All };
        struct PartDef {
            Part part;
            const char* name;
        };
        for (PartDef pd : {PartDef{Part::D, "i"}, PartDef{Part::E, "ii"}, PartDef{Part::F, "iii"},
                           PartDef{Part::All, "iv"}}) {
            cases.push_back(
                {cat(base, ".", pd.name, ":", tag), cfg.ref,
                 [tab, cfg, part = pd.part]() {
                     const auto& g = tab.get();
                     const int m = g.m();
                     // PBW generator list: F's, then D's, then E's, each
                     // family ordered by its indices; levels innermost.
                     std::vector<Element> gens;
                     std::vector<int> degs;
                     auto add_gen = [&](const Series& s, int r) {
                         gens.push_back(s.at(r));
                         degs.push_back(r);
                     };
                     if (part == Part::F || part == Part::All) {
                         for (int a = 1; a < m; ++a)
                             for (int b = a + 1; b <= m; ++b)
                                 for (int i = 1; i <= g.nu[b - 1]; ++i)
                                     for (int j = 1; j <= g.nu[a - 1]; ++j)
                                         for (int r = 1; r <= cfg.degree; ++r)
                                             add_gen(g.F(a, b, i, j), r);
                     }
                     if (part == Part::D || part == Part::All) {
                         for (int a = 1; a <= m; ++a)
                             for (int i = 1; i <= g.nu[a - 1]; ++i)
                                 for (int j = 1; j <= g.nu[a - 1]; ++j)
                                     for (int r = 1; r <= cfg.degree; ++r)
                                         add_gen(g.D(a, i, j), r);
                     }
                     if (part == Part::E || part == Part::All) {
                         for (int a = 1; a < m; ++a)
                             for (int b = a + 1; b <= m; ++b)
                                 for (int i = 1; i <= g.nu[a - 1]; ++i)
                                     for (int j = 1; j <= g.nu[b - 1]; ++j)
                                         for (int r = 1; r <= cfg.degree; ++r)
                                             add_gen(g.E(a, b, i, j), r);
                     }
                     std::vector<Element> images;
                     for (const auto& mono : ordered_monomials(degs, cfg.degree)) {
                         Element prod = Element::one(g.ctx);
                         for (int idx : mono) prod = (prod * gens[idx]).normal_form();
                         images.push_back(prod);
                     }
                     return independence_residual(images);
                 }});
        }
    }
    return cases;
}

}  // namespace yv::suites
