/**
 * @file element.hpp
 * @brief Sparse exact linear combinations of words, and the normal-form
 *        (straightening) engine.
 *
 * An Element maps words to nonzero rational coefficients.  normal_form
 * repeatedly replaces an adjacent out-of-order generator pair g h by
 * h g + [g, h]; the correction has strictly smaller canonical degree, so
 * rewriting terminates, and because ordered monomials form a basis the
 * result is independent of the rewriting strategy.
 */
#pragma once

#include "yv/context.hpp"
#include "yv/rational.hpp"
#include "yv/symbol.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

namespace yv {

enum class DegreeKind { canonical, loop };
enum class RewriteStrategy { leftmost_innermost, rightmost_outermost };

class Element {
public:
    using TermMap = std::map<Word, Rational, WordLess>;

    Element() = default;
    explicit Element(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static Element zero(ContextPtr ctx) { return Element(std::move(ctx)); }

    static Element scalar(ContextPtr ctx, const Rational& c) {
        Element e(std::move(ctx));
        e.add_term(Word{}, c);
        e.normal_ = true;
        return e;
    }

    static Element one(ContextPtr ctx) { return scalar(std::move(ctx), Rational(1)); }

    static Element gen(ContextPtr ctx, GenSym g) {
        ctx->validate(g);
        Element e(std::move(ctx));
        e.add_term(Word{g}, Rational(1));
        e.normal_ = true;
        return e;
    }

    static Element word(ContextPtr ctx, Word w, const Rational& c = Rational(1)) {
        for (GenSym g : w) ctx->validate(g);
        Element e(std::move(ctx));
        bool ordered = word_is_ordered(w);
        e.add_term(std::move(w), c);
        e.normal_ = ordered;
        return e;
    }

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_normal() const { return normal_; }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// For scalar elements (supported only on the empty word) returns the
    /// scalar; throws otherwise.
    Rational as_scalar() const {
        if (terms_.empty()) return Rational(0);
        if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
        throw std::invalid_argument("Element::as_scalar: element is not a scalar");
    }

    void add_term(Word w, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
        normal_ = false;
    }

    Element& operator+=(const Element& o) {
        require_same_context(o);
        const bool both_normal = normal_ && o.normal_;
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        normal_ = both_normal;
        return *this;
    }

    Element& operator-=(const Element& o) {
        require_same_context(o);
        const bool both_normal = normal_ && o.normal_;
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        normal_ = both_normal;
        return *this;
    }

    Element& operator*=(const Rational& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, v] : terms_) v *= c;
        return *this;
    }

    Element operator-() const {
        Element r(*this);
        for (auto& [w, v] : r.terms_) v = -v;
        return r;
    }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const Rational& c) { return a *= c; }
    friend Element operator*(const Rational& c, Element a) { return a *= c; }

    /// Free-algebra concatenation product; the result is not normalized.
    friend Element operator*(const Element& a, const Element& b) {
        a.require_same_context(b);
        Element r(a.ctx_ ? a.ctx_ : b.ctx_);
        for (const auto& [wa, ca] : a.terms_) {
            for (const auto& [wb, cb] : b.terms_) {
                Word w;
                w.reserve(wa.size() + wb.size());
                w.insert(w.end(), wa.begin(), wa.end());
                w.insert(w.end(), wb.begin(), wb.end());
                r.add_term(std::move(w), ca * cb);
            }
        }
        return r;
    }

    bool operator==(const Element& o) const {
        if (ctx_ && o.ctx_ && !ctx_->same_algebra(*o.ctx_)) return false;
        if (terms_.size() != o.terms_.size()) return false;
        auto it = terms_.begin();
        auto jt = o.terms_.begin();
        for (; it != terms_.end(); ++it, ++jt) {
            if (it->first != jt->first || !(it->second == jt->second)) return false;
        }
        return true;
    }

    /// Reduces to the canonical PBW normal form: a combination of ordered
    /// words equal to *this in the presented algebra.  Idempotent and
    /// strategy-independent.
    Element normal_form(RewriteStrategy strategy = RewriteStrategy::leftmost_innermost) const {
        if (normal_) return *this;
        if (!ctx_) throw std::invalid_argument("normal_form: element has no context");
        const AlgebraContext& ctx = *ctx_;
        const std::size_t cap = ctx.term_cap();

        TermMap done;
        TermMap work(terms_);
        while (!work.empty()) {
            auto it = std::prev(work.end());
            Word m = it->first;
            Rational c = std::move(it->second);
            work.erase(it);
            if (c.is_zero()) continue;

            int pos = -1;
            if (strategy == RewriteStrategy::leftmost_innermost) {
                for (std::size_t k = 0; k + 1 < m.size(); ++k) {
                    if (m[k + 1] < m[k]) {
                        pos = static_cast<int>(k);
                        break;
                    }
                }
            } else {
                for (std::size_t k = m.size(); k >= 2; --k) {
                    if (m[k - 1] < m[k - 2]) {
                        pos = static_cast<int>(k - 2);
                        break;
                    }
                }
            }

            if (pos < 0) {
                auto [dit, inserted] = done.emplace(std::move(m), c);
                if (!inserted) {
                    dit->second += c;
                    if (dit->second.is_zero()) done.erase(dit);
                }
                continue;
            }

            const GenSym g = m[pos], h = m[pos + 1];
            // g h = h g + [g, h]
            Word swapped = m;
            std::swap(swapped[pos], swapped[pos + 1]);
            add_into(work, std::move(swapped), c);

            const StraightenRule& rule = ctx.straighten(g, h);
            for (const auto& [mid, cm] : rule.terms) {
                Word w;
                w.reserve(m.size() - 2 + mid.size());
                w.insert(w.end(), m.begin(), m.begin() + pos);
                w.insert(w.end(), mid.begin(), mid.end());
                w.insert(w.end(), m.begin() + pos + 2, m.end());
                add_into(work, std::move(w), c * cm);
            }
            if (work.size() + done.size() > cap) throw TermCapError(cap);
        }

        Element r(ctx_);
        r.terms_ = std::move(done);
        r.normal_ = true;
        return r;
    }

    /// Canonical or loop filtration degree; the zero element has none
    /// (the mathematical value is minus infinity).
    std::optional<long> degree(DegreeKind kind) const {
        if (terms_.empty()) return std::nullopt;
        long best = 0;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            long d = 0;
            for (GenSym g : w)
                d += (kind == DegreeKind::canonical) ? ctx_->canonical_degree(g)
                                                     : ctx_->loop_degree(g);
            if (first || d > best) best = d;
            first = false;
        }
        return best;
    }

    /// Canonical printer; terms appear in monomial (shortlex) order.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            const bool neg = c.sign() < 0;
            if (first) {
                if (neg) os << '-';
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            Rational mag = neg ? -c : c;
            if (w.empty()) {
                os << mag.str();
            } else {
                bool printed = false;
                if (!mag.is_one()) {
                    os << mag.str();
                    printed = true;
                }
                for (GenSym g : w) {
                    if (printed) os << '*';
                    os << ctx_->print_symbol(g);
                    printed = true;
                }
            }
        }
        return os.str();
    }

private:
    static void add_into(TermMap& m, Word w, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = m.emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) m.erase(it);
        }
    }

    void require_same_context(const Element& o) const {
        if (ctx_ && o.ctx_ && !ctx_->same_algebra(*o.ctx_))
            throw std::invalid_argument("element context mismatch: " + ctx_->name() + " vs " +
                                        o.ctx_->name());
    }

    ContextPtr ctx_;
    TermMap terms_;
    bool normal_ = false;
};

// ---------------------------------------------------------------------------
// Operation-style wrappers.

inline Ordering compare_generators(const ContextPtr& ctx, GenSym g, GenSym h) {
    return ctx->compare(g, h);
}

/// [g, h] = gh - hg as an Element (pure; memoized inside the context).
inline Element straighten_pair(const ContextPtr& ctx, GenSym g, GenSym h) {
    const StraightenRule& rule = ctx->straighten(g, h);
    Element r(ctx);
    for (const auto& [w, c] : rule.terms) r.add_term(w, c);
    return r;
}

inline Element elem_mul(const Element& x, const Element& y) { return x * y; }

/// xy - yx, not normalized.
inline Element elem_commutator(const Element& x, const Element& y) { return x * y - y * x; }

inline Element normal_form(const ContextPtr&, const Element& x,
                           RewriteStrategy strategy = RewriteStrategy::leftmost_innermost) {
    return x.normal_form(strategy);
}

inline std::optional<long> degree(DegreeKind kind, const Element& x) { return x.degree(kind); }

/// nf([x, y]); the workhorse of every relation check.
inline Element nf_commutator(const Element& x, const Element& y) {
    return elem_commutator(x, y).normal_form();
}

}  // namespace yv
