/**
 * @file morphisms.hpp
 * @brief The algebra maps: the five (anti)automorphisms eta_c, mu_f,
 *        sigma, tau, omega, the embeddings phi_m and psi_m, the Hopf
 *        structure (coproduct, counit, antipode) and the evaluation
 *        homomorphisms kappa_l.
 *
 * Every map is realized as a GenMap: an (anti)homomorphism determined by
 * generator images, extended multiplicatively and normalized.  Maps are
 * stateless given their construction data; generator images are cached.
 */
#pragma once

#include "yv/series.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace yv {

enum class MorphismKind {
    eta_c,
    mu_f,
    sigma,
    tau,
    omega,
    phi_m,
    psi_m,
    coproduct,
    counit,
    antipode,
    kappa_l
};

enum class PsiMethod { via_omega, via_quasidet };

struct MorphismDescriptor {
    MorphismKind kind;
    Rational c;                    // eta_c
    std::vector<Rational> f;       // mu_f coefficients a_0 = 1, a_1, ...
    int m = 0;                     // phi_m / psi_m
    int l = 0;                     // kappa_l
    int cutoff = 0;                // omega / antipode / psi_m
    PsiMethod method = PsiMethod::via_quasidet;
};

/// A generator-wise algebra map or anti-map between contexts.
class GenMap {
public:
    GenMap(ContextPtr src, ContextPtr dst, bool anti, std::function<Element(GenSym)> image)
        : src_(std::move(src)),
          dst_(std::move(dst)),
          anti_(anti),
          image_(std::move(image)),
          cache_(std::make_shared<Cache>()) {}

    const ContextPtr& source() const { return src_; }
    const ContextPtr& target() const { return dst_; }
    bool is_anti() const { return anti_; }

    Element image_of(GenSym g) const {
        {
            std::shared_lock lock(cache_->mu);
            auto it = cache_->map.find(g.bits());
            if (it != cache_->map.end()) return it->second;
        }
        Element img = image_(g).normal_form();
        std::unique_lock lock(cache_->mu);
        return cache_->map.emplace(g.bits(), std::move(img)).first->second;
    }

    Element apply(const Element& x) const {
        if (x.context() && !x.context()->same_algebra(*src_))
            throw std::invalid_argument("GenMap: element not in source context");
        Element total(dst_);
        for (const auto& [w, c] : x.terms()) {
            Element prod = Element::scalar(dst_, c);
            if (!anti_) {
                for (GenSym g : w) prod = (prod * image_of(g)).normal_form();
            } else {
                for (auto it = w.rbegin(); it != w.rend(); ++it)
                    prod = (prod * image_of(*it)).normal_form();
            }
            total += prod;
        }
        return total;
    }

    Series apply(const Series& f) const {
        Series out(dst_, f.cutoff());
        for (int k = 0; k <= f.cutoff(); ++k) out.set(k, apply(f.at(k)));
        return out;
    }

private:
    struct Cache {
        std::shared_mutex mu;
        std::unordered_map<uint64_t, Element> map;
    };

    ContextPtr src_, dst_;
    bool anti_;
    std::function<Element(GenSym)> image_;
    std::shared_ptr<Cache> cache_;
};

namespace detail {

inline void require_plain_yangian(const ContextPtr& ctx, const char* who) {
    if (ctx->kind() != AlgebraKind::yangian || ctx->slots() != 1)
        throw std::invalid_argument(std::string(who) + ": context must be a plain Yangian");
}

/// Shared coefficient table of an inverted generating matrix, for omega
/// and the antipode.
inline std::shared_ptr<SeriesMatrix> inverted_t_matrix(const ContextPtr& ctx, int cutoff,
                                                       bool negate_u) {
    SeriesMatrix t = SeriesMatrix::t_matrix(ctx, cutoff);
    if (negate_u) {
        for (int i = 0; i < t.rows(); ++i)
            for (int j = 0; j < t.cols(); ++j) t.at(i, j) = t.at(i, j).eval_neg();
    }
    return std::make_shared<SeriesMatrix>(t.invert());
}

}  // namespace detail

/// (A1) translation: eta_c(T(u)) = T(u+c).
inline GenMap make_eta(const ContextPtr& src, const Rational& c) {
    detail::require_plain_yangian(src, "eta");
    return GenMap(src, src, false, [src, c](GenSym g) {
        Element out(src);
        const int r = g.level();
        for (int s = 0; s <= r - 1; ++s) {
            Rational w = Rational::binomial(r - 1, s) * (-c).pow(s);
            if (!w.is_zero()) out += Element::gen(src, GenSym::yangian(1, g.i(), g.j(), r - s)) * w;
        }
        return out;
    });
}

/// (A2) multiplication by a power series f(u) = 1 + a_1 u^{-1} + ...;
/// coefficients beyond the supplied list are zero.
inline GenMap make_mu(const ContextPtr& src, std::vector<Rational> coeffs) {
    detail::require_plain_yangian(src, "mu");
    if (coeffs.empty() || !coeffs[0].is_one())
        throw std::invalid_argument("mu: coefficient list must start with a_0 = 1");
    return GenMap(src, src, false, [src, coeffs = std::move(coeffs)](GenSym g) {
        Element out(src);
        const int r = g.level();
        for (int s = 0; s <= r; ++s) {
            if (s >= static_cast<int>(coeffs.size()) || coeffs[s].is_zero()) continue;
            if (s == r) {
                if (g.i() == g.j()) out += Element::scalar(src, coeffs[s]);
            } else {
                out += Element::gen(src, GenSym::yangian(1, g.i(), g.j(), r - s)) * coeffs[s];
            }
        }
        return out;
    });
}

/// (A3) sign change: the antiautomorphism T^{(r)} -> (-1)^r T^{(r)}.
inline GenMap make_sigma(const ContextPtr& src) {
    detail::require_plain_yangian(src, "sigma");
    return GenMap(src, src, true, [src](GenSym g) {
        Element e = Element::gen(src, g);
        return (g.level() % 2 == 0) ? e : -e;
    });
}

/// (A4) transposition: the antiautomorphism T_{i,j}^{(r)} -> T_{j,i}^{(r)}.
inline GenMap make_tau(const ContextPtr& src) {
    detail::require_plain_yangian(src, "tau");
    return GenMap(src, src, true, [src](GenSym g) {
        return Element::gen(src, GenSym::yangian(1, g.j(), g.i(), g.level()));
    });
}

/// (A5) inversion: omega(T(u)) = T(-u)^{-1}; generator images are read
/// off an inverted matrix truncated at the cutoff.
inline GenMap make_omega(const ContextPtr& src, int cutoff) {
    detail::require_plain_yangian(src, "omega");
    auto table = detail::inverted_t_matrix(src, cutoff, /*negate_u=*/true);
    return GenMap(src, src, false, [table, cutoff](GenSym g) {
        if (g.level() > cutoff)
            throw std::invalid_argument("omega: generator level exceeds cutoff");
        return table->entry(g.i(), g.j()).at(g.level());
    });
}

/// Antipode S(T(u)) = T(u)^{-1}, an anti-homomorphism.
inline GenMap make_antipode(const ContextPtr& src, int cutoff) {
    detail::require_plain_yangian(src, "antipode");
    auto table = detail::inverted_t_matrix(src, cutoff, /*negate_u=*/false);
    return GenMap(src, src, true, [table, cutoff](GenSym g) {
        if (g.level() > cutoff)
            throw std::invalid_argument("antipode: generator level exceeds cutoff");
        return table->entry(g.i(), g.j()).at(g.level());
    });
}

/// phi_m: Y_n -> Y_{m+n}, T_{i,j}^{(r)} -> T_{m+i,m+j}^{(r)}.
inline GenMap make_phi(const ContextPtr& src, int m) {
    detail::require_plain_yangian(src, "phi");
    if (m < 0) throw std::invalid_argument("phi: m must be >= 0");
    auto dst = AlgebraContext::yangian(src->n() + m, src->term_cap());
    return GenMap(src, dst, false, [dst, m](GenSym g) {
        return Element::gen(dst, GenSym::yangian(1, g.i() + m, g.j() + m, g.level()));
    });
}

/// psi_m: Y_n -> Y_{m+n}, either as omega_{m+n} . phi_m . omega_n or via
/// the bordered quasi-determinant description.
inline GenMap make_psi(const ContextPtr& src, int m, int cutoff,
                       PsiMethod method = PsiMethod::via_quasidet) {
    detail::require_plain_yangian(src, "psi");
    if (m < 0) throw std::invalid_argument("psi: m must be >= 0");
    const int n = src->n();
    auto dst = AlgebraContext::yangian(n + m, src->term_cap());
    if (m == 0) {
        return GenMap(src, dst, false, [dst](GenSym g) { return Element::gen(dst, g); });
    }
    if (method == PsiMethod::via_quasidet) {
        // psi_m(T_{i,j}(u)) = (D - C A^{-1} B)_{i,j} over the m | n block split.
        SeriesMatrix t = SeriesMatrix::t_matrix(dst, cutoff);
        auto schur = std::make_shared<SeriesMatrix>(
            quasi_det(t.block(0, 0, m, m), t.block(0, m, m, n), t.block(m, 0, n, m),
                      t.block(m, m, n, n)));
        return GenMap(src, dst, false, [schur, cutoff](GenSym g) {
            if (g.level() > cutoff)
                throw std::invalid_argument("psi: generator level exceeds cutoff");
            return schur->entry(g.i(), g.j()).at(g.level());
        });
    }
    auto om_n = std::make_shared<GenMap>(make_omega(src, cutoff));
    auto phi = std::make_shared<GenMap>(make_phi(src, m));
    auto om_mn = std::make_shared<GenMap>(make_omega(dst, cutoff));
    return GenMap(src, dst, false, [om_n, phi, om_mn, src](GenSym g) {
        return om_mn->apply(phi->apply(om_n->apply(Element::gen(src, g))));
    });
}

/// Coproduct on tensor slot `slot`: expands that slot into slots
/// (slot, slot+1) using Delta(T_{i,j}(u)) = sum_k T_{i,k}(u) @ T_{k,j}(u).
inline GenMap make_coproduct_slot(const ContextPtr& src, int slot = 1) {
    if (src->kind() != AlgebraKind::yangian)
        throw std::invalid_argument("coproduct: Yangian context required");
    if (slot < 1 || slot > src->slots()) throw std::invalid_argument("coproduct: bad slot");
    const int n = src->n();
    auto dst = AlgebraContext::tensor_yangian(n, src->slots() + 1, src->term_cap());
    return GenMap(src, dst, false, [dst, slot, n](GenSym g) {
        if (g.slot() < slot)
            return Element::gen(dst, GenSym::yangian(g.slot(), g.i(), g.j(), g.level()));
        if (g.slot() > slot)
            return Element::gen(dst, GenSym::yangian(g.slot() + 1, g.i(), g.j(), g.level()));
        Element out(dst);
        const int r = g.level();
        for (int k = 1; k <= n; ++k) {
            for (int s = 0; s <= r; ++s) {
                Word w;
                if (s > 0) w.push_back(GenSym::yangian(slot, g.i(), k, s));
                else if (g.i() != k) continue;
                if (r - s > 0) w.push_back(GenSym::yangian(slot + 1, k, g.j(), r - s));
                else if (k != g.j()) continue;
                out.add_term(std::move(w), Rational(1));
            }
        }
        return out;
    });
}

inline GenMap make_coproduct(const ContextPtr& src) { return make_coproduct_slot(src, 1); }

/// Counit on one tensor slot: kills the slot's positive-level generators
/// and renumbers the remaining slots downwards.
inline GenMap make_counit_slot(const ContextPtr& src, int slot) {
    if (src->kind() != AlgebraKind::yangian || src->slots() < 2)
        throw std::invalid_argument("counit_slot: tensor Yangian with >= 2 slots required");
    auto dst = AlgebraContext::tensor_yangian(src->n(), src->slots() - 1, src->term_cap());
    return GenMap(src, dst, false, [dst, slot](GenSym g) {
        if (g.slot() == slot) return Element::zero(dst);
        int s = g.slot() < slot ? g.slot() : g.slot() - 1;
        return Element::gen(dst, GenSym::yangian(s, g.i(), g.j(), g.level()));
    });
}

/// kappa_l: Y_n -> U(gl_n)^{tensor l};
/// T_{i,j}^{(r)} -> sum over 1 <= s_1 < ... < s_r <= l and paths
/// i = i_0, ..., i_r = j of e_{i_0,i_1}^{[s_1]} ... e_{i_{r-1},i_r}^{[s_r]}.
inline GenMap make_kappa(const ContextPtr& src, int l) {
    detail::require_plain_yangian(src, "kappa");
    if (l < 1) throw std::invalid_argument("kappa: l must be >= 1");
    const int n = src->n();
    auto dst = AlgebraContext::tensor_enveloping(n, l, src->term_cap());
    return GenMap(src, dst, false, [dst, l, n](GenSym g) {
        Element out(dst);
        const int r = g.level();
        if (r > l) return out;  // kappa_l kills levels above l
        std::vector<int> slots(r), path(r + 1);
        path[0] = g.i();
        path[r] = g.j();
        // enumerate increasing slot tuples
        std::function<void(int, int)> slot_rec = [&](int pos, int lo) {
            if (pos == r) {
                // enumerate interior path indices i_1 .. i_{r-1}
                std::function<void(int)> path_rec = [&](int p) {
                    if (p == r) {
                        Word w;
                        for (int t = 0; t < r; ++t)
                            w.push_back(GenSym::enveloping(slots[t], path[t], path[t + 1]));
                        out.add_term(std::move(w), Rational(1));
                        return;
                    }
                    for (int v = 1; v <= n; ++v) {
                        path[p] = v;
                        path_rec(p + 1);
                    }
                };
                path_rec(1);
                return;
            }
            for (int s = lo; s <= l - (r - pos - 1); ++s) {
                slots[pos] = s;
                slot_rec(pos + 1, s + 1);
            }
        };
        slot_rec(0, 1);
        return out;
    });
}

// ---------------------------------------------------------------------------
// Operation-style wrappers.

/// sigma, tau, eta_c and mu_f share a dispatcher.
inline Element apply_linear_auto(const MorphismDescriptor& desc, const Element& x) {
    const ContextPtr& ctx = x.context();
    switch (desc.kind) {
        case MorphismKind::eta_c:
            return make_eta(ctx, desc.c).apply(x);
        case MorphismKind::mu_f:
            return make_mu(ctx, desc.f).apply(x);
        case MorphismKind::sigma:
            return make_sigma(ctx).apply(x);
        case MorphismKind::tau:
            return make_tau(ctx).apply(x);
        default:
            throw std::invalid_argument("apply_linear_auto: kind is not a linear automorphism");
    }
}

inline Element apply_omega(const Element& x, int cutoff) {
    return make_omega(x.context(), cutoff).apply(x);
}

/// ~T(u) = -T(u)^{-1} as a matrix of normalized coefficients.
inline SeriesMatrix tilde_matrix(const ContextPtr& ctx, int cutoff) {
    detail::require_plain_yangian(ctx, "tilde_matrix");
    return -SeriesMatrix::t_matrix(ctx, cutoff).invert();
}

inline Element phi_shift(int m, const Element& x) { return make_phi(x.context(), m).apply(x); }

inline Element psi_embed(int m, const Element& x, int cutoff,
                         PsiMethod method = PsiMethod::via_quasidet) {
    return make_psi(x.context(), m, cutoff, method).apply(x);
}

inline Element coproduct(const Element& x) { return make_coproduct(x.context()).apply(x); }

inline Element antipode(const Element& x, int cutoff) {
    return make_antipode(x.context(), cutoff).apply(x);
}

inline Element kappa_l(int l, const Element& x) { return make_kappa(x.context(), l).apply(x); }

/// Counit: fixes scalars, kills every positive-level generator.
inline Rational counit(const Element& x) { return x.coefficient(Word{}); }

inline GenMap make_identity(const ContextPtr& ctx) {
    return GenMap(ctx, ctx, false, [ctx](GenSym g) { return Element::gen(ctx, g); });
}

/// The standard embedding Y_n -> Y_{n'} (n' >= n): identity on symbols.
inline Element embed_standard(const Element& x, const ContextPtr& bigger) {
    const ContextPtr& src = x.context();
    if (src->kind() != bigger->kind() || src->slots() != bigger->slots() ||
        bigger->n() < src->n())
        throw std::invalid_argument("embed_standard: incompatible contexts");
    Element out(bigger);
    for (const auto& [w, c] : x.terms()) out.add_term(w, c);
    return out;
}

/// For x in a two-slot tensor Yangian: computes
///   sum_terms c * L(word restricted to slot 1) * R(word restricted to slot 2)
/// with both restrictions read as plain-Yangian elements.  Realizes
/// m . (L @ R) on a coproduct value, e.g. the antipode axiom with L = S.
inline Element fold_two_slots(const Element& x, const GenMap& left_map,
                              const GenMap& right_map) {
    const ContextPtr& src = x.context();
    if (src->kind() != AlgebraKind::yangian || src->slots() != 2)
        throw std::invalid_argument("fold_two_slots: two-slot tensor Yangian required");
    auto yn = left_map.source();
    Element nf = x.normal_form();  // slot-1 symbols precede slot-2 symbols
    Element acc(left_map.target());
    for (const auto& [w, c] : nf.terms()) {
        Word w1, w2;
        for (GenSym g : w) {
            GenSym plain = GenSym::yangian(1, g.i(), g.j(), g.level());
            (g.slot() == 1 ? w1 : w2).push_back(plain);
        }
        Element part = left_map.apply(Element::word(yn, w1)) *
                       right_map.apply(Element::word(yn, w2));
        acc += part.normal_form() * c;
    }
    return acc.normal_form();
}

}  // namespace yv
