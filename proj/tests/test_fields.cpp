#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cvf/regular_function.hpp"
#include "cvf/sampling.hpp"

using namespace cvf;

namespace {

using QMat = SquareMatrix<Rational>;

std::vector<QMat> samples(int n, int count = 6, std::uint64_t seed = 42) {
    SamplePlan plan;
    plan.count = count;
    plan.seed = seed;
    return sample_slg(plan, n);
}

// (Zf)(g) for the pointwise direction matrix z = Z(g): seeds the same jet the
// field application would, but from an externally supplied value.
Rational apply_value_field(const QMat& g, const QMat& z, const RegularFunction& f) {
    auto gj = jet_displace(g, g * z);
    return evaluate_function(f, gj).eps1();
}

} // namespace

TEST_CASE("phi_0 is the zero map") {
    auto phi0 = FieldMapSpec::phi(3, 0);
    for (const auto& g : samples(3)) CHECK(phi0.evaluate(g).is_zero());
}

TEST_CASE("phi_1 at the unipotent point") {
    auto phi1 = FieldMapSpec::phi(2, 1);
    auto u = QMat::of(2, {Rational(1), Rational(1), Rational(0), Rational(1)});
    CHECK(phi1.evaluate(u) == QMat::of(2, {Rational(0), Rational(1), Rational(0), Rational(0)}));
}

TEST_CASE("phi evaluations are traceless") {
    for (int n : {2, 3, 4})
        for (int k : {-3, -1, 2, 3}) {
            auto phi = FieldMapSpec::phi(n, k);
            for (const auto& g : samples(n, 4))
                CHECK(trace(phi.evaluate(g)) == Rational(0));
        }
}

TEST_CASE("psi values") {
    auto psi1 = FieldMapSpec::psi(1);
    Rational x(3, 2);
    auto h = torus_point(x);
    auto val = psi1.evaluate(h);
    CHECK(val(0, 0) == x - x.inverse());
    CHECK(val(1, 1) == x.inverse() - x);
    CHECK(val(0, 1) == Rational(0));
    auto u = QMat::of(2, {Rational(1), Rational(1), Rational(0), Rational(1)});
    CHECK(psi1.evaluate(u) == QMat::of(2, {Rational(0), Rational(2), Rational(0), Rational(0)}));
    CHECK(FieldMapSpec::psi_signed(0).is_zero());
    CHECK_THROWS_AS(FieldMapSpec::psi(0), Error);
}

TEST_CASE("psi recurrence Psi_{k+1} = chi_k Psi_1") {
    for (int k = 1; k <= 6; ++k) {
        auto lhs = FieldMapSpec::psi(k + 1);
        auto rhs = FieldMapSpec::psi(1).multiplied(InvariantPoly::chi_symbol(k));
        for (const auto& g : samples(2, 10))
            CHECK(lhs.evaluate(g) == rhs.evaluate(g));
    }
}

TEST_CASE("eval_map is linear in the spec") {
    auto a = FieldMapSpec::phi(3, 1);
    auto b = FieldMapSpec::phi(3, 2);
    for (const auto& g : samples(3, 4))
        CHECK((a + b).evaluate(g) == a.evaluate(g) + b.evaluate(g));
}

TEST_CASE("differential closed form: linear map and identity point") {
    SamplePlan plan;
    plan.count = 4;
    for (int n : {2, 3}) {
        auto dirs = sample_direction(plan, n);
        auto phi1 = FieldMapSpec::phi(n, 1);
        for (const auto& x : dirs) {
            for (const auto& g : samples(n, 3))
                CHECK(differential(phi1, g, x) == x);
            for (int k = 2; k <= 3; ++k) {
                auto phik = FieldMapSpec::phi(n, k);
                CHECK(differential(phik, QMat::identity(n), x) == Rational(k) * x);
            }
        }
    }
}

TEST_CASE("jet route equals closed-form route at random points") {
    SamplePlan plan;
    plan.count = 10;
    for (int n : {2, 3}) {
        auto gs = samples(n, 10, 7);
        auto xs = sample_direction(plan, n);
        for (std::size_t i = 0; i < gs.size(); ++i) {
            for (int k = -3; k <= 3; ++k) {
                auto phi = FieldMapSpec::phi(n, k);
                // z need not be traceless: exercise the ambient derivative
                auto z = gs[i] * xs[i % xs.size()];
                CHECK(differential_jet(phi, gs[i], z) == differential_closed(phi, gs[i], z));
            }
        }
    }
    // fields with invariant coefficients hit the product rule path
    auto psi_scaled = FieldMapSpec::psi(2).multiplied(InvariantPoly::chi_symbol(3));
    auto xs = sample_direction(plan, 2);
    for (const auto& g : samples(2, 6))
        CHECK(differential_jet(psi_scaled, g, g * xs[0]) ==
              differential_closed(psi_scaled, g, g * xs[0]));
}

TEST_CASE("star commutator is antisymmetric") {
    auto phi = FieldMapSpec::phi(3, 2);
    for (const auto& g : samples(3, 4))
        CHECK(star_commutator(phi, phi, g).is_zero());
}

TEST_CASE("psi_1 (*) psi_2 = psi_3 - 3 psi_1") {
    auto p1 = FieldMapSpec::psi(1);
    auto p2 = FieldMapSpec::psi(2);
    auto expect = FieldMapSpec::psi(3) - FieldMapSpec::psi(1).scaled(Rational(3));
    for (const auto& g : samples(2, 10))
        CHECK(star_commutator(p1, p2, g) == expect.evaluate(g));
}

TEST_CASE("phi_1 (*) phi_-1 = (tr(g) phi_-1 + tr(g^-1) phi_1)/n") {
    const int n = 3;
    auto p = FieldMapSpec::phi(n, 1);
    auto q = FieldMapSpec::phi(n, -1);
    for (const auto& g : samples(n, 8)) {
        auto lhs = star_commutator(p, q, g);
        auto rhs = (trace(power(g, 1)) * q.evaluate(g) + trace(power(g, -1)) * p.evaluate(g))
                       .scaled(Rational(1, n));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("curvature term vanishes and sharp equals star on the conjugation action") {
    for (int n : {2, 3}) {
        for (int k : {-2, 1, 3})
            for (int l : {-1, 2}) {
                auto a = FieldMapSpec::phi(n, k);
                auto b = FieldMapSpec::phi(n, l);
                for (const auto& y : samples(n, 5)) {
                    CHECK(commutator(a.evaluate(y), b.evaluate(y)).is_zero());
                    CHECK(sharp_commutator(a, b, y) == star_commutator(a, b, y));
                }
            }
    }
    auto a = FieldMapSpec::psi(2);
    for (const auto& y : samples(2, 4)) CHECK(sharp_commutator(a, a, y).is_zero());
}

TEST_CASE("flatness of the phi and psi families, and a counterexample") {
    for (int n : {2, 3, 4}) {
        auto pts = samples(n, 6);
        for (int k = -4; k <= 4; ++k) {
            auto res = is_flat(FieldMapSpec::phi(n, k), pts);
            CHECK(res.flat);
        }
    }
    auto pts2 = samples(2, 6);
    for (int k = 1; k <= 6; ++k) CHECK(is_flat(FieldMapSpec::psi(k), pts2).flat);

    // constant map g |-> E_12 is not equivariant and fails at a generic point
    auto constant_e12 = [](const QMat&) { return unit_matrix<Rational>(2, 0, 1); };
    auto res = is_flat_map(constant_e12, pts2);
    CHECK_FALSE(res.flat);
    REQUIRE(res.witness.has_value());
    const auto& w = *res.witness;
    auto v = constant_e12(w.point);
    CHECK(w.point * v != v * w.point);
}

TEST_CASE("apply_field kills constants") {
    auto one = RegularFunction::constant(Rational(1));
    auto xf = apply_field(FieldMapSpec::psi(1), one);
    for (const auto& g : samples(2, 5))
        CHECK(evaluate_function(xf, g) == Rational(0));
}

TEST_CASE("apply_field matches the action on invariants pointwise") {
    auto psi1 = FieldMapSpec::psi(1);
    auto i2 = RegularFunction::trace_power(2);
    auto expect_i = Rational(2) * (RegularFunction::trace_power(3) - RegularFunction::trace_power(1));
    auto j3 = RegularFunction::trace_pow(3);
    auto expect_j = Rational(3) * (RegularFunction::trace_pow(4) -
                                   Rational(4) * RegularFunction::trace_pow(2));
    for (const auto& g : samples(2, 8)) {
        CHECK(apply_field_at(psi1, i2, g) == evaluate_function(expect_i, g));
        CHECK(apply_field_at(psi1, j3, g) == evaluate_function(expect_j, g));
    }
}

TEST_CASE("commutator realization: star map realizes X(Yf) - Y(Xf)") {
    struct Pair {
        int n;
        FieldMapSpec a, b;
    };
    std::vector<Pair> pairs = {
        {2, FieldMapSpec::psi(1), FieldMapSpec::psi(2)},
        {2, FieldMapSpec::psi(2), FieldMapSpec::psi(3)},
        {3, FieldMapSpec::phi(3, 1), FieldMapSpec::phi(3, 2)},
        {3, FieldMapSpec::phi(3, -1), FieldMapSpec::phi(3, 2)},
    };
    for (const auto& pr : pairs) {
        std::vector<RegularFunction> fns = {
            RegularFunction::trace_power(2),
            RegularFunction::trace_power(1) * RegularFunction::trace_power(1),
            RegularFunction::entry(0, 0) * RegularFunction::entry(1, 1),
        };
        for (const auto& f : fns) {
            auto xyf = apply_field(pr.a, apply_field(pr.b, f));
            auto yxf = apply_field(pr.b, apply_field(pr.a, f));
            for (const auto& g : samples(pr.n, 4)) {
                Rational nested = evaluate_function(xyf, g) - evaluate_function(yxf, g);
                Rational via_star = apply_value_field(g, star_commutator(pr.a, pr.b, g), f);
                CHECK(nested == via_star);
            }
        }
    }
}

TEST_CASE("jacobi identity for (*) at sample points") {
    MapExpr a(FieldMapSpec::psi(1));
    MapExpr b(FieldMapSpec::psi(2));
    MapExpr c(FieldMapSpec::psi(3));
    auto lhs = [&](const QMat& g) {
        auto t1 = MapExpr::star(MapExpr::star(a, b), c).evaluate(g);
        auto t2 = MapExpr::star(MapExpr::star(b, c), a).evaluate(g);
        auto t3 = MapExpr::star(MapExpr::star(c, a), b).evaluate(g);
        return t1 + t2 + t3;
    };
    for (const auto& g : samples(2, 4)) CHECK(lhs(g).is_zero());
}

TEST_CASE("differential transforms covariantly under conjugation") {
    SamplePlan plan;
    plan.count = 4;
    for (int n : {2, 3}) {
        auto gs = samples(n, 4, 5);
        auto hs = samples(n, 4, 9);
        auto xs = sample_direction(plan, n);
        for (int k : {-2, 1, 3}) {
            auto phi = FieldMapSpec::phi(n, k);
            for (std::size_t i = 0; i < gs.size(); ++i) {
                const auto& g = gs[i];
                const auto& h = hs[i];
                const auto& x = xs[i % xs.size()];
                auto hinv = inverse_adjugate(h);
                auto y = h * g * hinv;
                auto lhs = differential_jet(phi, y, h * (g * x) * hinv);
                auto rhs = h * differential_jet(phi, g, g * x) * hinv;
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("evaluation at jet points: equivariance survives the ring extension") {
    // Phi evaluated at g(1 + e X) has jet entries; its trace is still zero.
    auto phi = FieldMapSpec::phi(2, 2);
    SamplePlan plan;
    plan.count = 3;
    auto xs = sample_direction(plan, 2);
    for (const auto& g : samples(2, 3)) {
        auto gj = jet_displace(g, g * xs[0]);
        auto val = phi.evaluate(gj);
        CHECK(ring_is_zero(trace(val)));
    }
}

TEST_CASE("field maps with negative powers refuse singular points") {
    auto psi = FieldMapSpec::psi(1);
    auto singular = QMat::of(2, {Rational(1), Rational(0), Rational(0), Rational(0)});
    CHECK_THROWS_AS(psi.evaluate(singular), NonInvertible);
}
