/**
 * @file ratmatrix.hpp
 * @brief Dense rational matrices: arithmetic and exact rank.
 *
 * Used for the numeric QYBE check and for the exact-rank linear
 * independence tests.
 */
#pragma once

#include "yv/rational.hpp"

#include <stdexcept>
#include <vector>

namespace yv {

class RatMatrix {
public:
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("RatMatrix: bad shape");
    }

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("RatMatrix: shape mismatch");
        RatMatrix r(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const Rational& v = x.at(i, k);
                if (v.is_zero()) continue;
                for (int j = 0; j < y.cols_; ++j) {
                    if (!y.at(k, j).is_zero()) r.at(i, j) += v * y.at(k, j);
                }
            }
        return r;
    }

    friend RatMatrix operator-(const RatMatrix& x, const RatMatrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw std::invalid_argument("RatMatrix: shape mismatch");
        RatMatrix r(x.rows_, x.cols_);
        for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] - y.a_[k];
        return r;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    /// Exact rank by rational Gaussian elimination (destroys a copy).
    int rank() const {
        RatMatrix m(*this);
        int rank = 0;
        for (int col = 0; col < cols_ && rank < rows_; ++col) {
            int pivot = -1;
            for (int i = rank; i < rows_; ++i) {
                if (!m.at(i, col).is_zero()) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) continue;
            if (pivot != rank) {
                for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
            }
            Rational inv = m.at(rank, col).inverse();
            for (int j = col; j < cols_; ++j) m.at(rank, j) *= inv;
            for (int i = rank + 1; i < rows_; ++i) {
                Rational f = m.at(i, col);
                if (f.is_zero()) continue;
                for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(rank, j);
            }
            ++rank;
        }
        return rank;
    }

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

}  // namespace yv
