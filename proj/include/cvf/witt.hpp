#pragma once

#include <map>

#include "cvf/laurent.hpp"

namespace cvf {

// Invariant vector field on the complexified one-sphere C^*: a Laurent
// polynomial f(x) read as f(x) d/dx in the trivialization of the circle
// example. Basis f_n(x) = x^n.
class CircleField {
public:
    CircleField() = default;
    explicit CircleField(LaurentPoly p) : p_(std::move(p)) {}

    static CircleField f(int n) { return CircleField(LaurentPoly::monomial(n)); }
    // k_n = f_n - f_{-n}
    static CircleField k(int n) {
        return CircleField(LaurentPoly::monomial(n) - LaurentPoly::monomial(-n));
    }
    // p_n = f_n + f_{-n}
    static CircleField p(int n) {
        return CircleField(LaurentPoly::monomial(n) + LaurentPoly::monomial(-n));
    }

    const LaurentPoly& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }

    friend CircleField operator+(const CircleField& a, const CircleField& b) {
        return CircleField(a.p_ + b.p_);
    }
    friend CircleField operator-(const CircleField& a, const CircleField& b) {
        return CircleField(a.p_ - b.p_);
    }
    CircleField scaled(const Rational& c) const { return CircleField(p_.scaled(c)); }

    friend bool operator==(const CircleField& a, const CircleField& b) {
        return a.p_ == b.p_;
    }
    friend bool operator!=(const CircleField& a, const CircleField& b) {
        return !(a == b);
    }

    // In the k_j basis (valid when the polynomial is odd under x -> 1/x).
    std::map<int, Rational> k_components() const {
        if (p_.inverted() != -p_)
            throw Error("circle field is not in the span of the k_j");
        std::map<int, Rational> out;
        for (const auto& [deg, c] : p_.coeffs())
            if (deg >= 1) out[deg] = c;
        return out;
    }

    // In the p_j basis (valid when the polynomial is even under x -> 1/x);
    // index 0 means p_0 = 2.
    std::map<int, Rational> p_components() const {
        if (p_.inverted() != p_)
            throw Error("circle field is not in the span of the p_j");
        std::map<int, Rational> out;
        for (const auto& [deg, c] : p_.coeffs()) {
            if (deg >= 1) out[deg] = c;
            if (deg == 0) out[0] = c / Rational(2);
        }
        return out;
    }

    bool in_k_span() const { return p_.inverted() == -p_; }
    bool in_p_span() const { return p_.inverted() == p_; }

private:
    LaurentPoly p_;
};

// Definitional commutator a (*) b = (db)(x a(x)) - (da)(x b(x)); the closed
// form f_n (*) f_m = (m-n) f_{n+m} is what the tests check, not what this
// computes.
inline CircleField circle_commutator(const CircleField& a, const CircleField& b) {
    LaurentPoly x = LaurentPoly::monomial(1);
    LaurentPoly lhs = x * a.poly() * b.poly().derivative();
    LaurentPoly rhs = x * b.poly() * a.poly().derivative();
    return CircleField(lhs - rhs);
}

} // namespace cvf
