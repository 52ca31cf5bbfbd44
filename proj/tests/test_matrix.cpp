#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cvf/matrix.hpp"
#include "cvf/sampling.hpp"

using namespace cvf;

namespace {
using QMat = SquareMatrix<Rational>;

QMat q2(long a, long b, long c, long d) {
    return QMat::of(2, {Rational(a), Rational(b), Rational(c), Rational(d)});
}
} // namespace

TEST_CASE("power basics") {
    CHECK(power(QMat::identity(2), 5) == QMat::identity(2));
    CHECK(power(q2(1, 1, 0, 1), -1) == q2(1, -1, 0, 1));
    // oracle: direct multiplication
    QMat g = q2(2, 1, 3, 2);
    CHECK(power(g, 2) == g * g);
    CHECK(power(g, 2) == q2(7, 4, 12, 7));
}

TEST_CASE("trace basics") {
    CHECK(trace(QMat::identity(2)) == Rational(2));
    QMat u = q2(1, 1, 0, 1);
    CHECK(trace(power(u, 2)) == Rational(2));
    // tr(diag(x,1/x)^m) = x^m + x^-m
    Rational x(5, 3);
    for (int m = 1; m <= 5; ++m) {
        QMat h = power(torus_point(x), m);
        CHECK(trace(h) == x.pow(m) + x.pow(-m));
    }
}

TEST_CASE("adjugate inverse round trips on SL(3) samples") {
    SamplePlan plan;
    plan.count = 6;
    CHECK(inverse_adjugate(QMat::identity(3)) == QMat::identity(3));
    Rational x(7, 2);
    CHECK(inverse_adjugate(torus_point(x)) == torus_point(x.inverse()));
    for (const auto& g : sample_slg(plan, 3)) {
        CHECK(g * inverse_adjugate(g) == QMat::identity(3));
        CHECK(determinant(g) == Rational(1));
    }
    CHECK_THROWS_AS(inverse_adjugate(q2(1, 2, 2, 4)), NonInvertible);
}

TEST_CASE("power law g^k g^l = g^(k+l) at random SL(n) points") {
    for (int n : {2, 3, 4}) {
        SamplePlan plan;
        plan.count = 3;
        plan.seed = 100 + static_cast<unsigned>(n);
        for (const auto& g : sample_slg(plan, n)) {
            for (int k = -4; k <= 4; ++k)
                for (int l = -4; l <= 4; ++l)
                    CHECK(power(g, k) * power(g, l) == power(g, k + l));
        }
    }
}

TEST_CASE("SL(2) Cayley-Hamilton: g^n + g^-n = tr(g^n) 1") {
    SamplePlan plan;
    plan.count = 5;
    for (const auto& g : sample_slg(plan, 2)) {
        for (int n = 1; n <= 6; ++n) {
            QMat lhs = power(g, n) + power(g, -n);
            CHECK(lhs == trace(power(g, n)) * QMat::identity(2));
        }
        CHECK(trace(power(g, 2)) == trace(g) * trace(g) - Rational(2));
    }
}

TEST_CASE("matrix inverse works over jet rings") {
    using JMat = SquareMatrix<Jet2<Rational>>;
    SamplePlan plan;
    plan.count = 3;
    for (const auto& g : sample_slg(plan, 3)) {
        // displace along a traceless direction; determinant body stays 1
        auto x = sample_direction(plan, 3)[0];
        JMat gj(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                gj(i, j) = Jet2<Rational>(g(i, j), (g * x)(i, j), Rational(0), Rational(0));
        CHECK(determinant(gj).value() == Rational(1));
        CHECK(gj * inverse_adjugate(gj) == JMat::identity(3));
    }
}

TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(QMat::identity(2) * QMat::identity(3), Error);
    CHECK_THROWS_AS(QMat(0), Error);
}
