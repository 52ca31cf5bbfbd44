#pragma once

#include <ostream>

#include "cvf/rational.hpp"

namespace cvf {

template <class R> class Jet2;

// Uniform access to ring structure for the scalar towers the evaluators run
// over: Rational, Jet2<Rational>, Jet2<Jet2<Rational>>, ...
template <class R> struct RingTraits;

template <> struct RingTraits<Rational> {
    static constexpr int jet_depth = 0;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_rational(const Rational& q) { return q; }
};

inline bool ring_is_zero(const Rational& a) { return a.is_zero(); }
inline Rational ring_invert(const Rational& a) { return a.inverse(); }

// Element of R[e1,e2]/(e1^2, e2^2): c00 + c10*e1 + c01*e2 + c11*e1*e2.
// Two independent nilpotents: the e1 slot carries a first derivative, the
// e1*e2 slot a mixed second derivative, with the same extraction rule
// whether the two differentiations come from one operator applied twice or
// from two different ones. Coefficients may themselves be jets.
template <class R>
class Jet2 {
public:
    R c00, c10, c01, c11;

    Jet2()
        : c00(RingTraits<R>::zero()), c10(RingTraits<R>::zero()),
          c01(RingTraits<R>::zero()), c11(RingTraits<R>::zero()) {}
    explicit Jet2(const R& value)
        : c00(value), c10(RingTraits<R>::zero()),
          c01(RingTraits<R>::zero()), c11(RingTraits<R>::zero()) {}
    Jet2(const R& a00, const R& a10, const R& a01, const R& a11)
        : c00(a00), c10(a10), c01(a01), c11(a11) {}

    const R& value() const { return c00; }
    const R& eps1() const { return c10; }
    const R& eps2() const { return c01; }
    const R& eps12() const { return c11; }

    Jet2& operator+=(const Jet2& o) {
        c00 = c00 + o.c00;
        c10 = c10 + o.c10;
        c01 = c01 + o.c01;
        c11 = c11 + o.c11;
        return *this;
    }
    Jet2& operator-=(const Jet2& o) {
        c00 = c00 - o.c00;
        c10 = c10 - o.c10;
        c01 = c01 - o.c01;
        c11 = c11 - o.c11;
        return *this;
    }
    Jet2& operator*=(const Jet2& o) {
        // e1^2 = e2^2 = 0 is enforced here: products that would carry a
        // square of either nilpotent are simply dropped.
        R n00 = c00 * o.c00;
        R n10 = c00 * o.c10 + c10 * o.c00;
        R n01 = c00 * o.c01 + c01 * o.c00;
        R n11 = c00 * o.c11 + c10 * o.c01 + c01 * o.c10 + c11 * o.c00;
        c00 = n00;
        c10 = n10;
        c01 = n01;
        c11 = n11;
        return *this;
    }

    friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
    friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
    friend Jet2 operator*(Jet2 a, const Jet2& b) { return a *= b; }
    Jet2 operator-() const { return Jet2(-c00, -c10, -c01, -c11); }

    friend bool operator==(const Jet2& a, const Jet2& b) {
        return a.c00 == b.c00 && a.c10 == b.c10 && a.c01 == b.c01 && a.c11 == b.c11;
    }
    friend bool operator!=(const Jet2& a, const Jet2& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Jet2& j) {
        return os << "(" << j.c00 << ") + (" << j.c10 << ")e1 + (" << j.c01
                  << ")e2 + (" << j.c11 << ")e1e2";
    }
};

template <class R> struct RingTraits<Jet2<R>> {
    static constexpr int jet_depth = RingTraits<R>::jet_depth + 1;
    static Jet2<R> zero() { return Jet2<R>(); }
    static Jet2<R> one() { return Jet2<R>(RingTraits<R>::one()); }
    static Jet2<R> from_rational(const Rational& q) {
        return Jet2<R>(RingTraits<R>::from_rational(q));
    }
};

template <class R> bool ring_is_zero(const Jet2<R>& a) {
    return ring_is_zero(a.c00) && ring_is_zero(a.c10) && ring_is_zero(a.c01) &&
           ring_is_zero(a.c11);
}

// A jet is a unit iff its body is: (c00 + N)^-1 = b - b^2 N + b^3 N^2 with
// b = c00^-1 and N^3 = 0 (N^2 = 2 c10 c01 e1e2).
template <class R> Jet2<R> ring_invert(const Jet2<R>& a) {
    if (ring_is_zero(a.c00)) throw NonInvertible("jet with zero body");
    R b = ring_invert(a.c00);
    R b2 = b * b;
    R two = RingTraits<R>::from_rational(Rational(2));
    return Jet2<R>(b, -(a.c10 * b2), -(a.c01 * b2),
                   -(a.c11 * b2) + two * a.c10 * a.c01 * b2 * b);
}

// a * jet_invert(a) = 1 exactly; requires an invertible body.
template <class R> Jet2<R> jet_invert(const Jet2<R>& a) { return ring_invert(a); }

// Derivative seed: x + 1*e_slot.
inline Jet2<Rational> jet_lift(const Rational& x, int slot) {
    if (slot == 1) return Jet2<Rational>(x, Rational(1), Rational(0), Rational(0));
    if (slot == 2) return Jet2<Rational>(x, Rational(0), Rational(1), Rational(0));
    throw Error("jet_lift: slot must be 1 or 2");
}

// Ring-generic form used when stacking jet levels.
template <class R> Jet2<R> jet_lift_ring(const R& x, int slot) {
    if (slot == 1)
        return Jet2<R>(x, RingTraits<R>::one(), RingTraits<R>::zero(),
                       RingTraits<R>::zero());
    if (slot == 2)
        return Jet2<R>(x, RingTraits<R>::zero(), RingTraits<R>::one(),
                       RingTraits<R>::zero());
    throw Error("jet_lift_ring: slot must be 1 or 2");
}

} // namespace cvf
