/**
 * @file series.hpp
 * @brief Truncated power series in u^{-1} with Element coefficients,
 *        matrices over them, inversion, recentering, quasi-determinants
 *        and block Gauss factorization.
 *
 * Cutoffs are explicit metadata: binary operations truncate to the
 * minimum cutoff, and reading a coefficient beyond the cutoff is a hard
 * error: "unknown" is never silently zero.  Coefficients are kept in
 * PBW normal form after every ring operation.
 */
#pragma once

#include "yv/element.hpp"
#include "yv/ratmatrix.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace yv {

class Series {
public:
    Series() = default;

    /// The zero series with the given cutoff.
    Series(ContextPtr ctx, int cutoff) : ctx_(std::move(ctx)), c_(check_cutoff(cutoff) + 1) {
        for (auto& e : c_) e = Element::zero(ctx_);
    }

    static Series scalar(ContextPtr ctx, const Rational& v, int cutoff) {
        Series s(std::move(ctx), cutoff);
        s.c_[0] = Element::scalar(s.ctx_, v);
        return s;
    }

    static Series one(ContextPtr ctx, int cutoff) {
        return scalar(std::move(ctx), Rational(1), cutoff);
    }

    /// A single Element placed at u^{-k}.
    static Series monomial(Element e, int k, int cutoff) {
        Series s(e.context(), cutoff);
        if (k < 0 || k > cutoff) throw std::invalid_argument("Series::monomial: bad exponent");
        s.c_[k] = e.normal_form();
        return s;
    }

    /// The generating series T_{i,j}(u) = delta_{i,j} + sum_{r>=1} T_{i,j}^{(r)} u^{-r}.
    static Series t_entry(const ContextPtr& ctx, int slot, int i, int j, int cutoff) {
        Series s(ctx, cutoff);
        if (i == j) s.c_[0] = Element::one(ctx);
        for (int r = 1; r <= cutoff; ++r) s.c_[r] = Element::gen(ctx, GenSym::yangian(slot, i, j, r));
        return s;
    }

    const ContextPtr& context() const { return ctx_; }
    int cutoff() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of u^{-k}; reading beyond the cutoff is an error.
    const Element& at(int k) const {
        if (k < 0 || k > cutoff())
            throw std::out_of_range("Series: coefficient " + std::to_string(k) +
                                    " beyond cutoff " + std::to_string(cutoff()));
        return c_[k];
    }

    void set(int k, const Element& e) {
        if (k < 0 || k > cutoff()) throw std::out_of_range("Series::set: beyond cutoff");
        c_[k] = e.normal_form();
    }

    bool is_zero() const {
        for (const auto& e : c_)
            if (!e.is_zero()) return false;
        return true;
    }

    Series truncate(int new_cutoff) const {
        if (new_cutoff > cutoff()) throw std::invalid_argument("Series::truncate: cannot extend");
        Series s(ctx_, new_cutoff);
        for (int k = 0; k <= new_cutoff; ++k) s.c_[k] = c_[k];
        return s;
    }

    friend Series operator+(const Series& f, const Series& g) {
        int n = std::min(f.cutoff(), g.cutoff());
        Series s(f.ctx_ ? f.ctx_ : g.ctx_, n);
        for (int k = 0; k <= n; ++k) s.c_[k] = (f.c_[k] + g.c_[k]).normal_form();
        return s;
    }

    friend Series operator-(const Series& f, const Series& g) {
        int n = std::min(f.cutoff(), g.cutoff());
        Series s(f.ctx_ ? f.ctx_ : g.ctx_, n);
        for (int k = 0; k <= n; ++k) s.c_[k] = (f.c_[k] - g.c_[k]).normal_form();
        return s;
    }

    Series operator-() const {
        Series s(*this);
        for (auto& e : s.c_) e = -e;
        return s;
    }

    friend Series operator*(const Series& f, const Rational& v) {
        Series s(f);
        for (auto& e : s.c_) e *= v;
        return s;
    }

    friend Series operator*(const Rational& v, const Series& f) { return f * v; }

    /// Cauchy product, noncommutative order preserved (f left of g).
    friend Series operator*(const Series& f, const Series& g) {
        int n = std::min(f.cutoff(), g.cutoff());
        Series s(f.ctx_ ? f.ctx_ : g.ctx_, n);
        for (int k = 0; k <= n; ++k) {
            Element acc(s.ctx_);
            for (int a = 0; a <= k; ++a) {
                if (f.c_[a].is_zero() || g.c_[k - a].is_zero()) continue;
                acc += f.c_[a] * g.c_[k - a];
            }
            s.c_[k] = acc.normal_form();
        }
        return s;
    }

    /// Multiplicative inverse.  Requires an invertible scalar constant
    /// term; the result is checked to be a two-sided inverse.
    Series invert() const {
        Rational c0;
        try {
            c0 = c_[0].as_scalar();
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Series::invert: constant term is not a scalar");
        }
        if (c0.is_zero())
            throw std::invalid_argument("Series::invert: non-invertible constant term");
        const Rational c0inv = c0.inverse();
        Series g(ctx_, cutoff());
        g.c_[0] = Element::scalar(ctx_, c0inv);
        for (int k = 1; k <= cutoff(); ++k) {
            Element acc(ctx_);
            for (int a = 1; a <= k; ++a) {
                if (c_[a].is_zero() || g.c_[k - a].is_zero()) continue;
                acc += c_[a] * g.c_[k - a];
            }
            g.c_[k] = (acc * (-c0inv)).normal_form();
        }
        // By construction f*g = 1; the reverse product must agree.
        Series check = g * (*this);
        for (int k = 0; k <= cutoff(); ++k) {
            Element expect = (k == 0) ? Element::one(ctx_) : Element::zero(ctx_);
            if (!(check.c_[k] == expect))
                throw std::logic_error("Series::invert: left and right inverses differ");
        }
        return g;
    }

    /// Recentering f(u) -> f(u - c) via (u-c)^{-r} = sum binom(r+k-1,k) c^k u^{-r-k}.
    Series shift(const Rational& c) const {
        if (c.is_zero()) return *this;
        Series g(ctx_, cutoff());
        g.c_[0] = c_[0];
        for (int k = 1; k <= cutoff(); ++k) {
            Element acc(ctx_);
            for (int r = 1; r <= k; ++r) {
                if (c_[r].is_zero()) continue;
                Rational w = Rational::binomial(k - 1, k - r) * c.pow(k - r);
                if (!w.is_zero()) acc += c_[r] * w;
            }
            g.c_[k] = acc.normal_form();
        }
        return g;
    }

    /// f(-u): flips the sign of each odd coefficient.
    Series eval_neg() const {
        Series g(*this);
        for (int k = 1; k <= cutoff(); k += 2) g.c_[k] = -g.c_[k];
        return g;
    }

    /// Print format: "c0 + (c1)u^-1 + ... + (cN)u^-N (cutoff N)".
    std::string str() const {
        std::ostringstream os;
        os << c_[0].str();
        for (int k = 1; k <= cutoff(); ++k) {
            if (c_[k].is_zero()) continue;
            os << " + (" << c_[k].str() << ")u^-" << k;
        }
        os << " (cutoff " << cutoff() << ")";
        return os.str();
    }

private:
    static int check_cutoff(int n) {
        if (n < 0) throw std::invalid_argument("Series: cutoff must be >= 0");
        return n;
    }

    ContextPtr ctx_;
    std::vector<Element> c_;
};

inline Series series_mul(const Series& f, const Series& g) { return f * g; }
inline Series series_invert(const Series& f) { return f.invert(); }
inline Series series_shift(const Series& f, const Rational& c) { return f.shift(c); }

// ---------------------------------------------------------------------------

class SeriesMatrix {
public:
    SeriesMatrix() = default;

    SeriesMatrix(ContextPtr ctx, int rows, int cols, int cutoff)
        : ctx_(std::move(ctx)), rows_(rows), cols_(cols), cutoff_(cutoff) {
        if (rows < 1 || cols < 1) throw std::invalid_argument("SeriesMatrix: bad shape");
        m_.assign(std::size_t(rows) * cols, Series(ctx_, cutoff));
    }

    static SeriesMatrix identity(const ContextPtr& ctx, int n, int cutoff) {
        SeriesMatrix m(ctx, n, n, cutoff);
        for (int i = 0; i < n; ++i) m.at(i, i) = Series::one(ctx, cutoff);
        return m;
    }

    /// The symbolic generating matrix T(u) of Y(gl_n), n = ctx->n().
    static SeriesMatrix t_matrix(const ContextPtr& ctx, int cutoff, int slot = 1) {
        const int n = ctx->n();
        SeriesMatrix m(ctx, n, n, cutoff);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                m.at(i - 1, j - 1) = Series::t_entry(ctx, slot, i, j, cutoff);
        return m;
    }

    const ContextPtr& context() const { return ctx_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int cutoff() const { return cutoff_; }

    Series& at(int i, int j) { return m_[idx(i, j)]; }
    const Series& at(int i, int j) const { return m_[idx(i, j)]; }

    /// 1-based entry access (matching the generating-matrix index conventions).
    const Series& entry(int i, int j) const { return at(i - 1, j - 1); }

    SeriesMatrix block(int r0, int c0, int nr, int nc) const {
        if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_)
            throw std::invalid_argument("SeriesMatrix::block: out of range");
        SeriesMatrix b(ctx_, nr, nc, cutoff_);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) b.at(i, j) = at(r0 + i, c0 + j);
        return b;
    }

    void set_block(int r0, int c0, const SeriesMatrix& b) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) at(r0 + i, c0 + j) = b.at(i, j);
    }

    friend SeriesMatrix operator+(const SeriesMatrix& x, const SeriesMatrix& y) {
        x.require_shape(y);
        SeriesMatrix r(x.ctx_, x.rows_, x.cols_, std::min(x.cutoff_, y.cutoff_));
        for (int i = 0; i < x.rows_; ++i)
            for (int j = 0; j < x.cols_; ++j) r.at(i, j) = x.at(i, j) + y.at(i, j);
        return r;
    }

    friend SeriesMatrix operator-(const SeriesMatrix& x, const SeriesMatrix& y) {
        x.require_shape(y);
        SeriesMatrix r(x.ctx_, x.rows_, x.cols_, std::min(x.cutoff_, y.cutoff_));
        for (int i = 0; i < x.rows_; ++i)
            for (int j = 0; j < x.cols_; ++j) r.at(i, j) = x.at(i, j) - y.at(i, j);
        return r;
    }

    SeriesMatrix operator-() const {
        SeriesMatrix r(*this);
        for (auto& s : r.m_) s = -s;
        return r;
    }

    friend SeriesMatrix operator*(const SeriesMatrix& x, const SeriesMatrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("SeriesMatrix: shape mismatch");
        SeriesMatrix r(x.ctx_ ? x.ctx_ : y.ctx_, x.rows_, y.cols_,
                       std::min(x.cutoff_, y.cutoff_));
        for (int i = 0; i < x.rows_; ++i)
            for (int j = 0; j < y.cols_; ++j) {
                Series acc(r.ctx_, r.cutoff_);
                for (int k = 0; k < x.cols_; ++k) {
                    if (x.at(i, k).is_zero() || y.at(k, j).is_zero()) continue;
                    acc = acc + x.at(i, k) * y.at(k, j);
                }
                r.at(i, j) = acc;
            }
        return r;
    }

    bool is_zero() const {
        for (const auto& s : m_)
            if (!s.is_zero()) return false;
        return true;
    }

    /// Two-sided inverse via Gauss-Jordan elimination without pivot
    /// search; every pivot must have an invertible scalar constant term
    /// (always true in the identity-constant-term case needed here).
    SeriesMatrix invert(bool verify_two_sided = false) const {
        if (rows_ != cols_) throw std::invalid_argument("SeriesMatrix::invert: not square");
        SeriesMatrix a(*this);
        SeriesMatrix inv = identity(ctx_, rows_, cutoff_);
        for (int col = 0; col < cols_; ++col) {
            Series pinv = a.at(col, col).invert();
            for (int j = 0; j < cols_; ++j) {
                a.at(col, j) = pinv * a.at(col, j);
                inv.at(col, j) = pinv * inv.at(col, j);
            }
            for (int i = 0; i < rows_; ++i) {
                if (i == col) continue;
                Series f = a.at(i, col);
                if (f.is_zero()) continue;
                for (int j = 0; j < cols_; ++j) {
                    a.at(i, j) = a.at(i, j) - f * a.at(col, j);
                    inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
                }
            }
        }
        if (verify_two_sided) {
            SeriesMatrix prod = (*this) * inv;
            if (!(prod - identity(ctx_, rows_, cutoff_)).is_zero())
                throw std::logic_error("SeriesMatrix::invert: not a two-sided inverse");
        }
        return inv;
    }

    std::string str(const std::vector<int>* nu = nullptr) const {
        std::ostringstream os;
        std::vector<bool> cut(cols_, false);
        if (nu) {
            int off = 0;
            for (std::size_t a = 0; a + 1 < nu->size(); ++a) {
                off += (*nu)[a];
                if (off < cols_) cut[off] = true;
            }
        }
        int roff = 0;
        std::vector<bool> rcut(rows_, false);
        if (nu) {
            for (std::size_t a = 0; a + 1 < nu->size(); ++a) {
                roff += (*nu)[a];
                if (roff < rows_) rcut[roff] = true;
            }
        }
        for (int i = 0; i < rows_; ++i) {
            if (rcut[i]) os << std::string(8, '-') << '\n';
            for (int j = 0; j < cols_; ++j) {
                if (cut[j]) os << "| ";
                os << '[' << at(i, j).str() << ']';
                if (j + 1 < cols_) os << ' ';
            }
            os << '\n';
        }
        return os.str();
    }

private:
    std::size_t idx(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("SeriesMatrix: index out of range");
        return std::size_t(i) * cols_ + j;
    }

    void require_shape(const SeriesMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("SeriesMatrix: shape mismatch");
    }

    ContextPtr ctx_;
    int rows_ = 0, cols_ = 0, cutoff_ = 0;
    std::vector<Series> m_;
};

inline SeriesMatrix matrix_invert(const SeriesMatrix& m, bool verify_two_sided = false) {
    return m.invert(verify_two_sided);
}

/// The Gelfand-Retakh quasi-determinant |A B; C [D]| = D - C A^{-1} B.
inline SeriesMatrix quasi_det(const SeriesMatrix& A, const SeriesMatrix& B,
                              const SeriesMatrix& C, const SeriesMatrix& D) {
    if (A.rows() != A.cols() || B.rows() != A.rows() || C.cols() != A.cols() ||
        D.rows() != C.rows() || D.cols() != B.cols())
        throw std::invalid_argument("quasi_det: dimension mismatch");
    return D - C * A.invert() * B;
}

// ---------------------------------------------------------------------------

/// The block Gauss (LDU) factorization T = F D E attached to a composition.
struct GaussFactors {
    std::vector<int> nu;
    SeriesMatrix F;                   // unit lower block triangular
    SeriesMatrix D;                   // block diagonal
    SeriesMatrix E;                   // unit upper block triangular
    std::vector<SeriesMatrix> Dblk;   // diagonal blocks D_a
    std::vector<SeriesMatrix> Dtil;   // ~D_a = -D_a^{-1}

    int block_offset(int a) const {  // 1-based block index
        int off = 0;
        for (int b = 0; b + 1 < a; ++b) off += nu[b];
        return off;
    }
};

namespace detail {

inline void gauss_rec(const SeriesMatrix& M, const std::vector<int>& nu, std::size_t a0,
                      int offset, GaussFactors& out) {
    const int d = nu[a0];
    const int k = M.rows();
    SeriesMatrix A = M.block(0, 0, d, d);
    out.Dblk.push_back(A);
    out.D.set_block(offset, offset, A);
    if (a0 + 1 == nu.size()) return;

    SeriesMatrix Ainv = A.invert();
    SeriesMatrix B = M.block(0, d, d, k - d);
    SeriesMatrix C = M.block(d, 0, k - d, d);
    out.E.set_block(offset, offset + d, Ainv * B);
    out.F.set_block(offset + d, offset, C * Ainv);
    SeriesMatrix schur = M.block(d, d, k - d, k - d) - C * Ainv * B;
    gauss_rec(schur, nu, a0 + 1, offset + d, out);
}

}  // namespace detail

/// Factors a square series matrix with identity constant term as
/// T = F D E for the given composition; also fills the inverse diagonal
/// blocks ~D_a := -D_a^{-1}.  Verifies F*D*E == T to the cutoff.
inline GaussFactors gauss_factorize(const SeriesMatrix& T, const std::vector<int>& nu,
                                    bool verify = true) {
    if (T.rows() != T.cols()) throw std::invalid_argument("gauss_factorize: not square");
    int total = 0;
    for (int v : nu) {
        if (v < 1) throw std::invalid_argument("gauss_factorize: composition parts must be >= 1");
        total += v;
    }
    if (total != T.rows())
        throw std::invalid_argument("gauss_factorize: composition does not sum to matrix size");

    GaussFactors out;
    out.nu = nu;
    const auto& ctx = T.context();
    out.F = SeriesMatrix::identity(ctx, T.rows(), T.cutoff());
    out.D = SeriesMatrix(ctx, T.rows(), T.cols(), T.cutoff());
    out.E = SeriesMatrix::identity(ctx, T.rows(), T.cutoff());
    detail::gauss_rec(T, nu, 0, 0, out);

    for (const auto& blk : out.Dblk) out.Dtil.push_back(-blk.invert(true));

    if (verify) {
        SeriesMatrix prod = out.F * out.D * out.E;
        if (!(prod - T).is_zero())
            throw std::logic_error("gauss_factorize: F*D*E does not reproduce the input");
    }
    return out;
}

/// Yang's R-matrix R(u) = u - P acting on (C^n)^{x2}, with u specialized
/// to a rational; row index (i-1)*n + (h-1) is the basis vector e_i @ e_h.
inline RatMatrix yang_r_matrix(int n, const Rational& u) {
    RatMatrix m(n * n, n * n);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                for (int d = 1; d <= n; ++d) {
                    Rational v(0);
                    if (a == c && b == d) v += u;
                    if (a == d && b == c) v -= Rational(1);
                    if (!v.is_zero()) m.at((a - 1) * n + (b - 1), (c - 1) * n + (d - 1)) = v;
                }
    return m;
}

/// Embeds a two-site operator R on (C^n)^{x2} into tensor positions
/// (p, q) of (C^n)^{x k}, identity elsewhere; p, q are 1-based, p != q.
inline RatMatrix embed_two_site(const RatMatrix& R, int n, int p, int q, int k) {
    if (p < 1 || q < 1 || p > k || q > k || p == q)
        throw std::invalid_argument("embed_two_site: bad positions");
    int dim = 1;
    for (int t = 0; t < k; ++t) dim *= n;
    RatMatrix m(dim, dim);
    std::vector<int> ri(k), ci(k);
    for (int row = 0; row < dim; ++row) {
        int x = row;
        for (int t = k - 1; t >= 0; --t) {
            ri[t] = x % n;
            x /= n;
        }
        for (int col = 0; col < dim; ++col) {
            int y = col;
            for (int t = k - 1; t >= 0; --t) {
                ci[t] = y % n;
                y /= n;
            }
            bool diag = true;
            for (int t = 0; t < k && diag; ++t) {
                if (t == p - 1 || t == q - 1) continue;
                diag = (ri[t] == ci[t]);
            }
            if (!diag) continue;
            const Rational& v =
                R.at(ri[p - 1] * n + ri[q - 1], ci[p - 1] * n + ci[q - 1]);
            if (!v.is_zero()) m.at(row, col) = v;
        }
    }
    return m;
}

}  // namespace yv
