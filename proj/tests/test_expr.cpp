#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cvf/class_forms.hpp"
#include "cvf/expr.hpp"

using namespace cvf;

namespace {

std::string apply_to_string(const std::string& op_text, const std::string& fn_text,
                            ClassBasis basis = ClassBasis::I) {
    auto op = parse_operator(op_text);
    auto fn = parse_function(fn_text);
    auto image = op.op.apply(fn.fn);
    int bound = fn.tr_degree + op.degree_raise + 2;
    if (fn.weight == 0) return restrict_to_torus(image, bound).str(basis);
    return reconstruct_borel(image, fn.weight, bound).str();
}

} // namespace

TEST_CASE("function atoms and arithmetic") {
    auto f = parse_function("I(2) - 2");
    CHECK(f.weight == 0);
    CHECK(f.tr_degree == 2);
    auto g = torus_point(Rational(3));
    CHECK(evaluate_function(f.fn, g) == Rational(9) + Rational(1, 9) - Rational(2));

    auto h = parse_function("3/2 * beta^2");
    CHECK(h.weight == 2);
    auto pt = BorelPoint{Rational(2), Rational(5)}.matrix();
    CHECK(evaluate_function(h.fn, pt) == Rational(3, 2) * Rational(25));

    auto chi = parse_function("chi(3)");
    auto j = parse_function("J(3) - 2*J(1)");
    for (const auto& x : {Rational(2), Rational(5, 3)})
        CHECK(evaluate_function(chi.fn, torus_point(x)) ==
              evaluate_function(j.fn, torus_point(x)));
}

TEST_CASE("whitespace insensitivity") {
    auto a = parse_function("J(2)+4");
    auto b = parse_function("  J( 2 ) +   4 ");
    auto g = torus_point(Rational(7, 2));
    CHECK(evaluate_function(a.fn, g) == evaluate_function(b.fn, g));
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_function("I(2) + + 3");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 7);
    }
    CHECK_THROWS_AS(parse_function("Psi(1)"), ParseError); // operator in function slot
    CHECK_THROWS_AS(parse_function("I(2"), ParseError);
    CHECK_THROWS_AS(parse_function("bogus"), ParseError);
    CHECK_THROWS_AS(parse_function("beta + I(1)"), ParseError); // mixed weights
    CHECK_THROWS_AS(parse_operator("Psi(1) ^ 0"), ParseError);
}

TEST_CASE("operator expressions reproduce the action on invariants") {
    CHECK(apply_to_string("Psi(1)", "I(2)") == "2*I(3) - 2*I(1)");
    CHECK(apply_to_string("Psi(1)", "1") == "0");
    CHECK(apply_to_string("D", "beta^2") == "0");
    CHECK(apply_to_string("Psi(1)", "J(3)", ClassBasis::J) == "3*J(4) - 12*J(2)");
    CHECK(apply_to_string("Delta", "beta^3") == "beta^3 * (15)");
    CHECK(apply_to_string("Delta", "J(2)", ClassBasis::J) == "8*J(2) - 8");
}

TEST_CASE("the separation operator equals its defining combination") {
    auto built = parse_operator("-J(3)*Delta + J(1)*Psi(1)^2 + (J(2)+4)*Psi(1)");
    auto direct = separation_operator();
    for (int m = 0; m <= 4; ++m) {
        auto f = RegularFunction::j_mn(m, 1);
        auto a = reconstruct_borel(built.op.apply(f), 1, m + 3);
        auto b = reconstruct_borel(direct.apply(f), 1, m + 3);
        CHECK(a == b);
    }
}

TEST_CASE("phi on SL(2) is half of psi") {
    auto phi = parse_operator("Phi(2)");
    auto psi = parse_operator("Psi(2)");
    auto f = RegularFunction::trace_power(2);
    auto a = restrict_to_torus(phi.op.apply(f), 5);
    auto b = restrict_to_torus(psi.op.apply(f), 5);
    CHECK(a.laurent().scaled(Rational(2)) == b.laurent());
}

TEST_CASE("negative indices parse inside parens") {
    auto psi_neg = parse_operator("Psi(-2)");
    auto psi_pos = parse_operator("Psi(2)");
    auto f = RegularFunction::trace_power(1);
    auto a = restrict_to_torus(psi_neg.op.apply(f), 4);
    auto b = restrict_to_torus(psi_pos.op.apply(f), 4);
    CHECK(a.laurent() == b.laurent().scaled(Rational(-1)));
    CHECK(evaluate_function(parse_function("I(-2)").fn, torus_point(Rational(2))) ==
          Rational(2).pow(2) + Rational(2).pow(-2));
}
