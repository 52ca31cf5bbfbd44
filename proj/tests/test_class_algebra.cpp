#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cvf/class_forms.hpp"
#include "cvf/nullspace.hpp"

using namespace cvf;

namespace {

LaurentPoly i_m(int m) { return basis_restriction(ClassBasis::I, m); }

ClassForm restrict_psi1_on(const RegularFunction& f, int bound) {
    return restrict_to_torus(apply_field(FieldMapSpec::psi(1), f), bound);
}

} // namespace

TEST_CASE("interpolation reproduces random polynomials exactly") {
    detail::Stream st(23, "interp", 0);
    for (int iter = 0; iter < 25; ++iter) {
        int deg = static_cast<int>(st.below(8));
        std::vector<Rational> coeffs;
        for (int i = 0; i <= deg; ++i) coeffs.push_back(st.rational(9));
        auto nodes = prime_nodes(deg + 1);
        std::vector<std::pair<Rational, Rational>> pts;
        for (const auto& x : nodes) pts.emplace_back(x, eval_poly(coeffs, x));
        while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
        if (coeffs.empty()) coeffs.push_back(Rational(0));
        auto got = interpolate_poly(pts);
        if (got.empty()) got.push_back(Rational(0));
        CHECK(got == coeffs);
    }
}

TEST_CASE("torus restriction of the basic invariants") {
    for (int m = 1; m <= 6; ++m) {
        auto form = restrict_to_torus(RegularFunction::trace_power(m), m);
        CHECK(form.laurent() == i_m(m));
    }
    auto chi3 = restrict_to_torus(RegularFunction::chi(3), 3);
    CHECK(chi3.laurent() == i_m(3) + i_m(1));
    auto one = restrict_to_torus(RegularFunction::constant(Rational(1)), 0);
    CHECK(one.laurent() == LaurentPoly::constant(Rational(1)));
}

TEST_CASE("torus restriction error contracts") {
    // g_{11} restricts to x: not symmetric
    CHECK_THROWS_AS(restrict_to_torus(RegularFunction::entry(0, 0), 3), NotSymmetric);
    // bound too small for I_6
    CHECK_THROWS_AS(restrict_to_torus(RegularFunction::trace_power(6), 3), DegreeOverflow);
}

TEST_CASE("basis conversion examples") {
    auto chi3 = ClassForm::from_laurent(basis_restriction(ClassBasis::Chi, 3));
    auto in_j = chi3.to_basis(ClassBasis::J);
    CHECK(in_j == std::vector<Rational>{Rational(0), Rational(-2), Rational(0), Rational(1)});

    auto i2 = ClassForm::from_laurent(i_m(2));
    CHECK(i2.to_basis(ClassBasis::J) ==
          std::vector<Rational>{Rational(-2), Rational(0), Rational(1)});

    auto j1 = ClassForm::from_laurent(basis_restriction(ClassBasis::J, 1));
    CHECK(j1.to_basis(ClassBasis::I) == std::vector<Rational>{Rational(0), Rational(1)});
}

TEST_CASE("chi in the J basis follows the alternating binomial formula") {
    // tr|_{S^m V} = sum_k (-1)^k C(m-k, k) tr^{m-2k}
    for (int m = 0; m <= 8; ++m) {
        auto chi = ClassForm::from_laurent(basis_restriction(ClassBasis::Chi, m));
        auto got = chi.to_basis(ClassBasis::J);
        std::vector<Rational> expect(static_cast<std::size_t>(m) + 1, Rational(0));
        for (int k = 0; 2 * k <= m; ++k) {
            Rational c = binomial(m - k, k);
            expect[static_cast<std::size_t>(m - 2 * k)] = (k % 2 == 0) ? c : -c;
        }
        CHECK(got == expect);
    }
}

TEST_CASE("basis round trips on random coefficient vectors") {
    detail::Stream st(29, "basis", 0);
    for (ClassBasis basis : {ClassBasis::I, ClassBasis::J, ClassBasis::Chi}) {
        for (int iter = 0; iter < 20; ++iter) {
            int deg = static_cast<int>(st.below(13));
            std::vector<Rational> coeffs;
            for (int i = 0; i <= deg; ++i) coeffs.push_back(st.rational(7));
            while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
            if (coeffs.empty()) coeffs.push_back(Rational(1));
            auto form = ClassForm::from_basis(basis, coeffs);
            CHECK(form.to_basis(basis) == coeffs);
        }
    }
}

TEST_CASE("sl2-invariants identities as exact Laurent identities") {
    LaurentPoly shear = LaurentPoly::monomial(1) - LaurentPoly::monomial(-1); // x - 1/x
    for (int k = 1; k <= 10; ++k) {
        auto chi_k = basis_restriction(ClassBasis::Chi, k);
        LaurentPoly lhs = chi_k * shear;
        LaurentPoly rhs = LaurentPoly::monomial(k + 1) - LaurentPoly::monomial(-(k + 1));
        CHECK(lhs == rhs);
        // chi_k = I_k + I_{k-2} + ... (+1 or +I_1)
        LaurentPoly sum;
        for (int j = k; j >= 1; j -= 2) sum += i_m(j);
        if (k % 2 == 0) sum += LaurentPoly::constant(Rational(1));
        CHECK(chi_k == sum);
    }
}

TEST_CASE("borel reconstruction basics") {
    auto b2 = reconstruct_borel(RegularFunction::pow(RegularFunction::beta(), 2), 2, 2);
    CHECK(b2 == BorelForm(2, {Rational(1)}));

    auto bt3 = reconstruct_borel(RegularFunction::beta() * RegularFunction::trace_pow(3), 1, 4);
    CHECK(bt3 == BorelForm(1, {Rational(0), Rational(0), Rational(0), Rational(1)}));

    // f_{2,1} = beta (tr^2 - 2/3): the m(1-m)/(n+m) coefficient with m=2, n=1
    auto f21 = reconstruct_borel(RegularFunction::sym_tensor(2, 1), 1, 3);
    CHECK(f21 == BorelForm(1, {Rational(-2, 3), Rational(0), Rational(1)}));
}

TEST_CASE("borel reconstruction error contracts") {
    auto beta2 = RegularFunction::pow(RegularFunction::beta(), 2);
    CHECK_THROWS_AS(reconstruct_borel(beta2, 1, 3), WeightMismatch);
    auto bt3 = RegularFunction::beta() * RegularFunction::trace_pow(3);
    CHECK_THROWS_AS(reconstruct_borel(bt3, 1, 2), DegreeOverflow);
}

TEST_CASE("borel form printing") {
    CHECK(BorelForm(1, {Rational(-2, 3), Rational(0), Rational(1)}).str() ==
          "beta * (tr^2 - 2/3)");
    CHECK(BorelForm(0, {Rational(5)}).str() == "5");
    CHECK(BorelForm(3, {}).str() == "0");
}

TEST_CASE("class form printing") {
    auto form = ClassForm::from_basis(
        ClassBasis::I, {Rational(0), Rational(-2), Rational(0), Rational(2)});
    CHECK(form.str(ClassBasis::I) == "2*I(3) - 2*I(1)");
    CHECK(ClassForm::zero().str() == "0");
}

TEST_CASE("psi action lands in the expected class forms") {
    auto got = restrict_psi1_on(RegularFunction::trace_power(2), 3);
    auto expect = ClassForm::from_laurent((i_m(3) - i_m(1)).scaled(Rational(2)));
    CHECK(got == expect);
}

namespace {

// I-basis coordinate vector of a class form on the window [0, dim).
std::vector<Rational> window_vec(const ClassForm& form, int dim) {
    auto coeffs = form.to_basis(ClassBasis::I);
    if (static_cast<int>(coeffs.size()) > dim)
        throw Error("window too small for form");
    coeffs.resize(static_cast<std::size_t>(dim), Rational(0));
    return coeffs;
}

bool in_span(const std::vector<std::vector<Rational>>& span_vecs,
             const std::vector<Rational>& v) {
    QMatrix cols;
    const std::size_t dim = v.size();
    cols.assign(dim, {});
    for (std::size_t r = 0; r < dim; ++r) {
        for (const auto& s : span_vecs) cols[r].push_back(s[r]);
    }
    std::size_t base_rank = matrix_rank(cols);
    for (std::size_t r = 0; r < dim; ++r) cols[r].push_back(v[r]);
    return matrix_rank(cols) == base_rank;
}

} // namespace

TEST_CASE("V1 is invariant while V2 leaks into V1 (m = 2 window)") {
    const int m = 2;
    const int window = 13; // I-degree <= 12
    // spanning set of V1: I_{m +- 2j} and the differences I_{m+1 +- 2j} - I_{m-1 +- 2j}
    std::vector<std::vector<Rational>> v1;
    auto push_form = [&](const LaurentPoly& p) {
        v1.push_back(window_vec(ClassForm::from_laurent(p), window));
    };
    for (int d = m % 2; d <= 12; d += 2) push_form(i_m(d));
    for (int j = -5; j <= 5; ++j) {
        int hi = m + 1 + 2 * j, lo = m - 1 + 2 * j;
        if (std::abs(hi) > 12 || std::abs(lo) > 12) continue;
        LaurentPoly diff = i_m(std::abs(hi)) - i_m(std::abs(lo));
        if (!diff.is_zero()) push_form(diff);
    }

    for (int k = 1; k <= 4; ++k) {
        auto psi_k = FieldMapSpec::psi(k);
        auto image1 = restrict_to_torus(apply_field(psi_k, RegularFunction::trace_power(m)), m + k);
        CHECK(in_span(v1, window_vec(image1, window)));
        auto diff_fn = RegularFunction::trace_power(m + 1) - RegularFunction::trace_power(m - 1);
        auto image2 = restrict_to_torus(apply_field(psi_k, diff_fn), m + 1 + k);
        CHECK(in_span(v1, window_vec(image2, window)));
    }

    // Psi_1 maps the V2 generator I_{m+1} + I_{m-1} into V1 (nonzero image)
    auto sum_fn = RegularFunction::trace_power(m + 1) + RegularFunction::trace_power(m - 1);
    auto image = restrict_to_torus(apply_field(FieldMapSpec::psi(1), sum_fn), m + 2);
    CHECK_FALSE(image.is_zero());
    CHECK(in_span(v1, window_vec(image, window)));
}
