#pragma once

#include <map>
#include <sstream>
#include <string>

#include "cvf/rational.hpp"

namespace cvf {

// Laurent polynomial in one variable with exact rational coefficients.
// Zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly monomial(int k, const Rational& c = Rational(1)) {
        LaurentPoly p;
        if (!c.is_zero()) p.c_[k] = c;
        return p;
    }

    static LaurentPoly constant(const Rational& c) { return monomial(0, c); }

    const std::map<int, Rational>& coeffs() const { return c_; }

    Rational coeff(int k) const {
        auto it = c_.find(k);
        return it == c_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const { return c_.empty(); }

    int min_degree() const { return c_.empty() ? 0 : c_.begin()->first; }
    int max_degree() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    void add_term(int k, const Rational& c) {
        if (c.is_zero()) return;
        auto it = c_.find(k);
        if (it == c_.end()) {
            c_[k] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [k, c] : o.c_) add_term(k, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [k, c] : o.c_) add_term(k, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ka, ca] : a.c_)
            for (const auto& [kb, cb] : b.c_) r.add_term(ka + kb, ca * cb);
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [k, c] : c_) r.c_[k] = -c;
        return r;
    }

    LaurentPoly scaled(const Rational& q) const {
        LaurentPoly r;
        if (q.is_zero()) return r;
        for (const auto& [k, c] : c_) r.c_[k] = q * c;
        return r;
    }

    // d/dx.
    LaurentPoly derivative() const {
        LaurentPoly r;
        for (const auto& [k, c] : c_)
            if (k != 0) r.add_term(k - 1, Rational(k) * c);
        return r;
    }

    // theta = x d/dx, the degree operator.
    LaurentPoly theta() const {
        LaurentPoly r;
        for (const auto& [k, c] : c_)
            if (k != 0) r.c_[k] = Rational(k) * c;
        return r;
    }

    // Substitution x -> 1/x.
    LaurentPoly inverted() const {
        LaurentPoly r;
        for (const auto& [k, c] : c_) r.c_[-k] = c;
        return r;
    }

    bool is_symmetric() const { return inverted() == *this; }

    Rational evaluate(const Rational& x) const {
        Rational acc(0);
        for (const auto& [k, c] : c_) acc += c * x.pow(k);
        return acc;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
        return !(a == b);
    }

    std::string str(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            const auto& [k, c] = *it;
            Rational a = c.abs();
            if (first) {
                if (c.sign() < 0) os << "-";
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            bool unit = (a == Rational(1));
            if (k == 0) {
                os << a.str();
            } else {
                if (!unit) os << a.str() << "*";
                os << var;
                if (k != 1) os << "^" << k;
            }
        }
        return os.str();
    }

private:
    std::map<int, Rational> c_;
};

} // namespace cvf
