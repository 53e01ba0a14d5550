/**
 * @file varseries.hpp
 * @brief Sparse tables of Element coefficients in up to three formal
 *        variables u, v, w: the device for checking two-variable
 *        identities coefficient-wise.
 *
 * A VarSeries holds coefficients of u^{-a} v^{-b} w^{-c} together with a
 * per-variable validity cutoff.  Exact polynomials such as (u - v) carry
 * unbounded validity and negative inverse-exponents; products propagate
 * validity so that a coefficient is only ever reported when it is fully
 * determined by the truncated inputs.
 */
#pragma once

#include "yv/series.hpp"

#include <array>
#include <map>
#include <optional>
#include <sstream>

namespace yv {

class VarSeries {
public:
    static constexpr int kBig = 1 << 20;
    using Exp = std::array<int, 3>;  // exponents of u^{-1}, v^{-1}, w^{-1}

    explicit VarSeries(ContextPtr ctx) : ctx_(std::move(ctx)) { cut_.fill(kBig); }

    static VarSeries zero(ContextPtr ctx) { return VarSeries(std::move(ctx)); }

    static VarSeries scalar(ContextPtr ctx, const Rational& v) {
        VarSeries s(std::move(ctx));
        s.add({0, 0, 0}, Element::scalar(s.ctx_, v));
        return s;
    }

    static VarSeries constant(const Element& e) {
        VarSeries s(e.context());
        s.add({0, 0, 0}, e.normal_form());
        return s;
    }

    /// Injects a one-variable truncated series as a series in variable
    /// `var` (0 = u, 1 = v, 2 = w).
    static VarSeries inject(const Series& f, int var) {
        check_var(var);
        VarSeries s(f.context());
        s.cut_[var] = f.cutoff();
        for (int k = 0; k <= f.cutoff(); ++k) {
            Exp e{0, 0, 0};
            e[var] = k;
            s.add(e, f.at(k));
        }
        return s;
    }

    /// The exact polynomial u_a - u_b (e.g. u - v).
    static VarSeries var_diff(ContextPtr ctx, int va, int vb) {
        check_var(va);
        check_var(vb);
        VarSeries s(std::move(ctx));
        Exp ea{0, 0, 0}, eb{0, 0, 0};
        ea[va] = -1;
        eb[vb] = -1;
        s.add(ea, Element::one(s.ctx_));
        s.add(eb, -Element::one(s.ctx_));
        return s;
    }

    /// A table built from explicit coefficients with explicit validity.
    static VarSeries from_coeffs(ContextPtr ctx, const std::map<Exp, Element>& coeffs,
                                 std::array<int, 3> cuts, int total_cap = kBig) {
        VarSeries s(std::move(ctx));
        s.cut_ = cuts;
        s.tcap_ = total_cap;
        for (const auto& [e, c] : coeffs) {
            if (!s.within(e)) continue;
            s.add(e, c.normal_form());
        }
        return s;
    }

    /// Restricts attention to coefficients of total inverse-degree <= cap;
    /// higher ones are discarded and treated as unknown.
    VarSeries capped(int cap) const {
        VarSeries r(ctx_);
        r.cut_ = cut_;
        r.tcap_ = std::min(tcap_, cap);
        for (const auto& [e, c] : c_)
            if (r.within(e)) r.add(e, c);
        return r;
    }

    const ContextPtr& context() const { return ctx_; }
    int cut(int var) const { return cut_[var]; }

    friend VarSeries operator+(const VarSeries& a, const VarSeries& b) {
        VarSeries r(a.ctx_ ? a.ctx_ : b.ctx_);
        for (int v = 0; v < 3; ++v) r.cut_[v] = std::min(a.cut_[v], b.cut_[v]);
        r.tcap_ = std::min(a.tcap_, b.tcap_);
        for (const auto& [e, c] : a.c_)
            if (r.within(e)) r.add(e, c);
        for (const auto& [e, c] : b.c_)
            if (r.within(e)) r.add(e, c);
        return r;
    }

    friend VarSeries operator-(const VarSeries& a, const VarSeries& b) { return a + (-b); }

    VarSeries operator-() const {
        VarSeries r(*this);
        for (auto& [e, c] : r.c_) c = -c;
        return r;
    }

    friend VarSeries operator*(const VarSeries& a, const VarSeries& b) {
        VarSeries r(a.ctx_ ? a.ctx_ : b.ctx_);
        for (int v = 0; v < 3; ++v) {
            long c1 = std::min<long>(kBig, long(a.cut_[v]) + b.minsupp(v));
            long c2 = std::min<long>(kBig, long(b.cut_[v]) + a.minsupp(v));
            r.cut_[v] = static_cast<int>(std::min({c1, c2, long(kBig)}));
        }
        {
            long t1 = std::min<long>(kBig, long(a.tcap_) + b.min_total());
            long t2 = std::min<long>(kBig, long(b.tcap_) + a.min_total());
            r.tcap_ = static_cast<int>(std::min({t1, t2, long(kBig)}));
        }
        std::map<Exp, Element> acc;
        for (const auto& [ea, ca] : a.c_) {
            for (const auto& [eb, cb] : b.c_) {
                Exp e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
                if (!r.within(e)) continue;
                auto [it, fresh] = acc.emplace(e, Element(r.ctx_));
                it->second += ca * cb;
            }
        }
        for (auto& [e, c] : acc) r.add(e, c.normal_form());
        return r;
    }

    friend VarSeries comm(const VarSeries& a, const VarSeries& b) { return a * b - b * a; }

    /// Coefficient of the given exponent; hard error outside validity.
    Element coefficient(const Exp& e) const {
        if (!within(e))
            throw std::out_of_range("VarSeries: coefficient beyond validity cutoff");
        auto it = c_.find(e);
        return it == c_.end() ? Element::zero(ctx_) : it->second;
    }

    /// First nonzero coefficient with total inverse-degree <= bound,
    /// scanning only within the validity region.  Throws if the requested
    /// bound is not fully covered by the validity cutoffs.
    std::optional<std::pair<Exp, Element>> first_nonzero(int total_bound) const {
        for (int v = 0; v < 3; ++v) {
            if (cut_[v] < total_bound && cut_[v] < kBig / 2)
                throw std::logic_error(
                    "VarSeries: validity cutoff too small for requested bound (increase the "
                    "series cutoff)");
        }
        if (tcap_ < total_bound)
            throw std::logic_error("VarSeries: total cap too small for requested bound");
        for (const auto& [e, c] : c_) {
            if (e[0] + e[1] + e[2] > total_bound) continue;
            if (!within(e)) continue;
            Element nf = c.normal_form();
            if (!nf.is_zero()) return std::make_pair(e, nf);
        }
        return std::nullopt;
    }

    static std::string exp_str(const Exp& e) {
        std::ostringstream os;
        const char* names[3] = {"u", "v", "w"};
        bool any = false;
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            os << (any ? " " : "") << names[v] << "^-" << e[v];
            any = true;
        }
        if (!any) os << "1";
        return os.str();
    }

private:
    static void check_var(int v) {
        if (v < 0 || v > 2) throw std::invalid_argument("VarSeries: variable index must be 0..2");
    }

    bool within(const Exp& e) const {
        return e[0] <= cut_[0] && e[1] <= cut_[1] && e[2] <= cut_[2] &&
               e[0] + e[1] + e[2] <= tcap_;
    }

    long minsupp(int var) const {
        long m = kBig;
        for (const auto& [e, c] : c_) m = std::min<long>(m, e[var]);
        return m;
    }

    long min_total() const {
        long m = kBig;
        for (const auto& [e, c] : c_) m = std::min<long>(m, e[0] + e[1] + e[2]);
        return m;
    }

    void add(const Exp& e, const Element& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = c_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    ContextPtr ctx_;
    std::array<int, 3> cut_;
    int tcap_ = kBig;
    std::map<Exp, Element> c_;
};

}  // namespace yv
