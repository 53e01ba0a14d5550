/**
 * @file rational.hpp
 * @brief Exact rational scalars (GMP-backed).
 *
 * Every coefficient in the library is a Rational; there is no floating
 * point anywhere.  Values are kept canonical (reduced, positive
 * denominator) by construction.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace yv {

class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {}
    Rational(long num, long den) : q_(static_cast<signed long>(num), static_cast<signed long>(den)) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p", "-p" or "p/q" (no whitespace).
    static Rational parse(std::string_view text) {
        if (text.empty()) throw std::invalid_argument("Rational::parse: empty literal");
        try {
            mpq_class q(std::string(text), 10);
            if (q.get_den() == 0) throw std::invalid_argument("Rational::parse: zero denominator");
            q.canonicalize();
            return Rational(std::move(q));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational::parse: bad literal '" + std::string(text) + "'");
        }
    }

    static Rational binomial(unsigned long n, unsigned long k) {
        if (k > n) return Rational(0);
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), n, k);
        return Rational(mpq_class(b));
    }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

    Rational inverse() const {
        if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
        return Rational(mpq_class(1) / q_);
    }

    Rational pow(unsigned long e) const {
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), e);
        mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), e);
        mpq_class r(num, den);
        r.canonicalize();
        return Rational(std::move(r));
    }

    std::string str() const { return q_.get_str(); }

    const mpq_class& raw() const { return q_; }

private:
    explicit Rational(mpq_class&& q) : q_(std::move(q)) {}
    mpq_class q_;
};

}  // namespace yv
