#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cvf/jet.hpp"
#include "cvf/sampling.hpp"

using namespace cvf;

namespace {

using QJet = Jet2<Rational>;

// Test-side symbolic polynomial: the independent derivative oracle the jet
// coefficients are checked against.
struct Poly {
    std::vector<Rational> c; // ascending

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }

    template <class R> R eval_ring(const R& x) const {
        R acc = RingTraits<R>::zero();
        for (std::size_t i = c.size(); i-- > 0;)
            acc = acc * x + RingTraits<R>::from_rational(c[i]);
        return acc;
    }

    Poly derivative() const {
        Poly d;
        for (std::size_t i = 1; i < c.size(); ++i)
            d.c.push_back(Rational(static_cast<long>(i)) * c[i]);
        return d;
    }
};

Poly random_poly(detail::Stream& st, int degree) {
    Poly p;
    for (int i = 0; i <= degree; ++i) p.c.push_back(st.rational(6));
    return p;
}

QJet random_jet(detail::Stream& st) {
    return QJet(st.rational(5), st.rational(5), st.rational(5), st.rational(5));
}

} // namespace

TEST_CASE("rational canonical form") {
    Rational a(4, 6);
    CHECK(a.numerator() == 2);
    CHECK(a.denominator() == 3);
    Rational b(3, -9);
    CHECK(b.numerator() == -1);
    CHECK(b.denominator() == 3);
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(7, 1).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), NonInvertible);
    CHECK_THROWS_AS(Rational(1) / Rational(0), NonInvertible);
    CHECK(Rational(-3, 4).str() == "-3/4");
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("rational arithmetic stays canonical under random ops") {
    detail::Stream st(7, "rat", 0);
    for (int i = 0; i < 300; ++i) {
        Rational a = st.rational(20);
        Rational b = st.nonzero_rational(20);
        Rational sum = a + b, prod = a * b, quot = a / b;
        for (const Rational& r : {sum, prod, quot}) {
            CHECK(r.denominator() > 0);
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(),
                    r.denominator().get_mpz_t());
            CHECK(g == 1);
        }
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
    }
}

TEST_CASE("jet_lift seeds") {
    CHECK(jet_lift(Rational(0), 1) == QJet(Rational(0), Rational(1), Rational(0), Rational(0)));
    CHECK(jet_lift(Rational(3, 2), 2) ==
          QJet(Rational(3, 2), Rational(0), Rational(1), Rational(0)));
    // nilpotency kills the square: (1 + e1)^2 = 1 + 2 e1
    QJet one_eps = jet_lift(Rational(1), 1);
    CHECK(one_eps * one_eps == QJet(Rational(1), Rational(2), Rational(0), Rational(0)));
    CHECK_THROWS_AS(jet_lift(Rational(1), 3), Error);
}

TEST_CASE("jet inversion") {
    QJet a = jet_lift(Rational(1), 1); // 1 + e1
    CHECK(ring_invert(a) == QJet(Rational(1), Rational(-1), Rational(0), Rational(0)));
    CHECK(ring_invert(QJet(Rational(2))) == QJet(Rational(1, 2)));
    // 1 + e1 + e2 inverts to 1 - e1 - e2 + 2 e1e2; confirmed by multiplying back
    QJet b(Rational(1), Rational(1), Rational(1), Rational(0));
    QJet binv = ring_invert(b);
    CHECK(binv == QJet(Rational(1), Rational(-1), Rational(-1), Rational(2)));
    CHECK(b * binv == QJet(Rational(1)));
    CHECK_THROWS_AS(ring_invert(QJet(Rational(0), Rational(1), Rational(0), Rational(0))),
                    NonInvertible);
}

TEST_CASE("jet ring axioms at random elements") {
    detail::Stream st(11, "jet", 0);
    for (int i = 0; i < 200; ++i) {
        QJet a = random_jet(st), b = random_jet(st), c = random_jet(st);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + (b + c) == (a + b) + c);
        if (!a.value().is_zero()) CHECK(a * ring_invert(a) == QJet(Rational(1)));
    }
}

TEST_CASE("first derivative equals the symbolic oracle") {
    detail::Stream st(13, "poly", 0);
    for (int i = 0; i < 60; ++i) {
        Poly p = random_poly(st, 1 + static_cast<int>(st.below(7)));
        Rational x = st.rational(5);
        QJet px = p.eval_ring(jet_lift(x, 1));
        CHECK(px.value() == p.eval(x));
        CHECK(px.eps1() == p.derivative().eval(x));
    }
}

TEST_CASE("mixed e1e2 coefficient equals the second derivative") {
    detail::Stream st(17, "poly2", 0);
    for (int i = 0; i < 60; ++i) {
        Poly p = random_poly(st, 2 + static_cast<int>(st.below(6)));
        Rational x = st.rational(5);
        QJet seed(x, Rational(1), Rational(1), Rational(0)); // x + e1 + e2
        QJet px = p.eval_ring(seed);
        CHECK(px.eps12() == p.derivative().derivative().eval(x));
    }
}

TEST_CASE("nested jets: two stacked first-order lifts give the mixed term") {
    using QQ = Jet2<QJet>;
    detail::Stream st(19, "nest", 0);
    for (int i = 0; i < 40; ++i) {
        Poly p = random_poly(st, 2 + static_cast<int>(st.below(5)));
        Rational x = st.rational(5);
        // inner level seeds slot 1, outer level seeds slot 1 of the outer ring
        QQ seed = jet_lift_ring<QJet>(jet_lift(x, 1), 1);
        QQ px = p.eval_ring(seed);
        CHECK(px.value().value() == p.eval(x));
        CHECK(px.eps1().value() == p.derivative().eval(x));
        CHECK(px.value().eps1() == p.derivative().eval(x));
        CHECK(px.eps1().eps1() == p.derivative().derivative().eval(x));
    }
}
