#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "cvf/errors.hpp"

namespace cvf {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Thin wrapper over GMP's mpq_class; the wrapper owns the
// canonicalization invariant (mpq_class does not canonicalize two-argument
// construction on its own).
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(static_cast<signed long>(v)) {}
    Rational(long long v) { q_ = from_ll(v); }

    Rational(long long num, long long den) {
        if (den == 0) throw NonInvertible("rational with zero denominator");
        q_ = mpq_class(from_ll(num), from_ll(den));
        q_.canonicalize();
    }

    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rational(const mpz_class& z) : q_(z) {}
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw NonInvertible("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    const mpz_class& numerator() const { return q_.get_num(); }
    const mpz_class& denominator() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw NonInvertible("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.q_ = -q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const { Rational r; r.q_ = ::abs(q_); return r; }

    Rational inverse() const {
        if (is_zero()) throw NonInvertible("inverse of zero");
        Rational r;
        r.q_ = 1 / q_;
        return r;
    }

    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        Rational base = e > 0 ? *this : inverse();
        unsigned long n = e > 0 ? static_cast<unsigned long>(e)
                                : static_cast<unsigned long>(-e);
        Rational acc(1);
        while (n > 0) {
            if (n & 1) acc *= base;
            base *= base;
            n >>= 1;
        }
        return acc;
    }

    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    static mpz_class from_ll(long long v) {
        // construction-time only; goes through decimal to stay obviously exact
        return mpz_class(std::to_string(v));
    }

    mpq_class q_;
};

// Binomial coefficient as an exact rational (used by symmetric-power
// expansions and basis conversions).
inline Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return Rational(r);
}

} // namespace cvf
