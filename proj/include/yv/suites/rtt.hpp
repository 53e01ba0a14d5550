/**
 * @file suites/rtt.hpp
 * @brief The RTT suite: defining-relation instances, the localized
 *        two-variable form, and the numeric QYBE check.
 */
#pragma once

#include "yv/suites/helpers.hpp"

#include <random>

namespace yv::suites {

/// Right-hand side of the coefficient-wise defining relation for
/// [T_{i,j}^{(r)}, T_{h,k}^{(s)}], assembled from raw words.
inline Element mr_rhs(const ContextPtr& ctx, int i, int j, int h, int k, int r, int s) {
    Element rhs(ctx);
    for (int t = 0; t <= std::min(r, s) - 1; ++t) {
        const int top = r + s - 1 - t;
        if (t == 0) {
            if (h == j) rhs += Element::gen(ctx, GenSym::yangian(1, i, k, top));
            if (i == k) rhs -= Element::gen(ctx, GenSym::yangian(1, h, j, top));
        } else {
            rhs += Element::word(ctx, Word{GenSym::yangian(1, i, k, top),
                                           GenSym::yangian(1, h, j, t)});
            rhs -= Element::word(ctx, Word{GenSym::yangian(1, i, k, t),
                                           GenSym::yangian(1, h, j, top)});
        }
    }
    return rhs;
}

inline std::vector<Case> rtt_suite(const SuiteSpec& spec) {
    std::vector<Case> cases;

    // gl_n degeneration at r = s = 1
    for (int n : default_ns(spec, {1, 2, 3, 4})) {
        auto ctx = AlgebraContext::yangian(n, spec.term_cap);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int h = 1; h <= n; ++h)
                    for (int k = 1; k <= n; ++k) {
                        cases.push_back(
                            {cat("glbracket:n=", n, ":i=", i, ",j=", j, ",h=", h, ",k=", k),
                             "Eq. (mr) at r=s=1",
                             [ctx, i, j, h, k] {
                                 auto G = [&](int a, int b) {
                                     return Element::gen(ctx, GenSym::yangian(1, a, b, 1));
                                 };
                                 Element lhs = elem_commutator(G(i, j), G(h, k));
                                 Element rhs(ctx);
                                 if (h == j) rhs += G(i, k);
                                 if (i == k) rhs -= G(h, j);
                                 return zero_residual(lhs - rhs);
                             }});
                    }
    }

    // (mr) internal consistency, r+s bounded
    const int bound = default_cutoff(spec, 6);
    for (int n : default_ns(spec, {2, 3})) {
        auto ctx = AlgebraContext::yangian(n, spec.term_cap);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int h = 1; h <= n; ++h)
                    for (int k = 1; k <= n; ++k)
                        for (int r = 1; r < bound; ++r)
                            for (int s = 1; r + s <= bound; ++s) {
                                cases.push_back({cat("mr:n=", n, ":i=", i, ",j=", j, ",h=", h,
                                                     ",k=", k, ",r=", r, ",s=", s),
                                                 "Eq. (mr)",
                                                 [ctx, i, j, h, k, r, s] {
                                                     Element lhs = elem_commutator(
                                                         Element::gen(ctx, GenSym::yangian(1, i, j, r)),
                                                         Element::gen(ctx, GenSym::yangian(1, h, k, s)));
                                                     return zero_residual(
                                                         lhs - mr_rhs(ctx, i, j, h, k, r, s));
                                                 }});
                            }
    }

    // (rmdef) through its coefficient form:
    // (u-v)[T_{i,j}(u), T_{h,k}(v)] = T_{h,j}(u)T_{i,k}(v) - T_{h,j}(v)T_{i,k}(u)
    for (int n : default_ns(spec, {2, 3})) {
        auto ctx = AlgebraContext::yangian(n, spec.term_cap);
        const int vbound = 5, vcut = 6;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int h = 1; h <= n; ++h)
                    for (int k = 1; k <= n; ++k) {
                        cases.push_back(
                            {cat("rmdef:n=", n, ":i=", i, ",j=", j, ",h=", h, ",k=", k),
                             "Eq. (rmdef) / (trel0)",
                             [ctx, i, j, h, k, vbound, vcut] {
                                 auto t = [&](int a, int b, int var) {
                                     return VarSeries::inject(
                                         Series::t_entry(ctx, 1, a, b, vcut), var);
                                 };
                                 VarSeries lhs = VarSeries::var_diff(ctx, 0, 1) *
                                                 comm(t(i, j, 0), t(h, k, 1));
                                 VarSeries rhs =
                                     t(h, j, 0) * t(i, k, 1) - t(h, j, 1) * t(i, k, 0);
                                 return varseries_residual(lhs - rhs, vbound);
                             }});
                    }
    }

    // QYBE at seeded rational spectral parameters
    for (int n : default_ns(spec, {1, 2, 3})) {
        std::mt19937_64 rng(spec.seed + n);
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 7);
        for (int pair = 1; pair <= 5; ++pair) {
            Rational u(num(rng), den(rng));
            Rational v(num(rng), den(rng));
            cases.push_back({cat("qybe:n=", n, ":pair=", pair, ":u=", u.str(), ",v=", v.str()),
                             "QYBE with spectral parameters",
                             [n, u, v]() -> std::optional<std::string> {
                                 RatMatrix r12 =
                                     embed_two_site(yang_r_matrix(n, u - v), n, 1, 2, 3);
                                 RatMatrix r13 = embed_two_site(yang_r_matrix(n, u), n, 1, 3, 3);
                                 RatMatrix r23 = embed_two_site(yang_r_matrix(n, v), n, 2, 3, 3);
                                 RatMatrix lhs = r12 * r13 * r23;
                                 RatMatrix rhs = r23 * r13 * r12;
                                 if ((lhs - rhs).is_zero()) return std::nullopt;
                                 return std::string("nonzero braid residual matrix");
                             }});
        }
    }

    return cases;
}

}  // namespace yv::suites
