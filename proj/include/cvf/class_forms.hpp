#pragma once

#include <utility>
#include <vector>

#include "cvf/laurent.hpp"
#include "cvf/regular_function.hpp"
#include "cvf/sampling.hpp"

namespace cvf {

// Exact Newton interpolation through distinct nodes; returns monomial
// coefficients in ascending order.
inline std::vector<Rational>
interpolate_poly(const std::vector<std::pair<Rational, Rational>>& points) {
    const std::size_t n = points.size();
    if (n == 0) return {};
    std::vector<Rational> dd;
    dd.reserve(n);
    for (const auto& p : points) dd.push_back(p.second);
    // divided differences, in place: dd[i] becomes f[x_0..x_i]
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            Rational dx = points[i].first - points[i - level].first;
            if (dx.is_zero()) throw DuplicateNode("interpolation nodes coincide");
            dd[i] = (dd[i] - dd[i - 1]) / dx;
        }
    // Horner expansion of the Newton form
    std::vector<Rational> poly{dd[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        poly.insert(poly.begin(), Rational(0));
        for (std::size_t k = 0; k + 1 < poly.size(); ++k)
            poly[k] -= points[i].first * poly[k + 1];
        // poly = poly * (x - x_i), then + dd[i]
        poly[0] += dd[i];
    }
    while (poly.size() > 1 && poly.back().is_zero()) poly.pop_back();
    return poly;
}

inline Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

enum class ClassBasis { I, J, Chi };

inline const char* basis_name(ClassBasis b) {
    switch (b) {
    case ClassBasis::I: return "I";
    case ClassBasis::J: return "J";
    case ClassBasis::Chi: return "chi";
    }
    return "?";
}

// Torus restriction of the m-th basis invariant: I_m = x^m + x^{-m},
// J_m = (x + 1/x)^m, chi_m = x^m + x^{m-2} + ... + x^{-m}; index 0 is the
// constant 1 in every basis.
inline LaurentPoly basis_restriction(ClassBasis basis, int m) {
    if (m == 0) return LaurentPoly::constant(Rational(1));
    switch (basis) {
    case ClassBasis::I: {
        LaurentPoly p = LaurentPoly::monomial(m);
        p += LaurentPoly::monomial(-m);
        return p;
    }
    case ClassBasis::J: {
        LaurentPoly base = LaurentPoly::monomial(1) + LaurentPoly::monomial(-1);
        LaurentPoly acc = LaurentPoly::constant(Rational(1));
        for (int i = 0; i < m; ++i) acc = acc * base;
        return acc;
    }
    case ClassBasis::Chi: {
        LaurentPoly p;
        for (int j = m; j >= -m; j -= 2) p += LaurentPoly::monomial(j);
        return p;
    }
    }
    throw Error("unreachable basis");
}

// Symmetric Laurent polynomial on the torus: the canonical form of an SL(2)
// class function. Carries exact coefficient views in the I, J and chi bases;
// all conversions are triangular and exact.
class ClassForm {
public:
    static ClassForm from_laurent(LaurentPoly p) {
        if (!p.is_symmetric())
            throw NotSymmetric("class form is not x <-> 1/x symmetric: " + p.str());
        return ClassForm(std::move(p));
    }

    static ClassForm from_basis(ClassBasis basis, const std::vector<Rational>& coeffs) {
        LaurentPoly p;
        for (std::size_t m = 0; m < coeffs.size(); ++m)
            p += basis_restriction(basis, static_cast<int>(m)).scaled(coeffs[m]);
        return ClassForm(std::move(p));
    }

    static ClassForm zero() { return ClassForm(LaurentPoly()); }

    const LaurentPoly& laurent() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }
    int degree() const { return p_.is_zero() ? 0 : p_.max_degree(); }

    // Exact coefficients in the requested basis, index m = coefficient of the
    // m-th basis element (index 0 = the constant function 1).
    std::vector<Rational> to_basis(ClassBasis basis) const {
        const int deg = degree();
        std::vector<Rational> out(static_cast<std::size_t>(deg) + 1, Rational(0));
        LaurentPoly rest = p_;
        for (int m = deg; m >= 1; --m) {
            Rational c = rest.coeff(m);
            if (c.is_zero()) continue;
            out[static_cast<std::size_t>(m)] = c;
            rest -= basis_restriction(basis, m).scaled(c);
        }
        out[0] = rest.coeff(0);
        rest -= LaurentPoly::constant(out[0]);
        if (!rest.is_zero())
            throw Error("basis conversion left a nonzero remainder");
        return out;
    }

    friend bool operator==(const ClassForm& a, const ClassForm& b) {
        return a.p_ == b.p_;
    }
    friend bool operator!=(const ClassForm& a, const ClassForm& b) { return !(a == b); }

    std::string str(ClassBasis basis = ClassBasis::I) const {
        auto coeffs = to_basis(basis);
        std::ostringstream os;
        bool first = true;
        for (std::size_t m = coeffs.size(); m-- > 0;) {
            const Rational& c = coeffs[m];
            if (c.is_zero()) continue;
            Rational a = c.abs();
            if (first) {
                if (c.sign() < 0) os << "-";
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            if (m == 0) {
                os << a.str();
            } else {
                if (a != Rational(1)) os << a.str() << "*";
                os << basis_name(basis) << "(" << m << ")";
            }
        }
        return first ? "0" : os.str();
    }

private:
    explicit ClassForm(LaurentPoly p) : p_(std::move(p)) {}
    LaurentPoly p_;
};

// beta^n times a polynomial in tr(g): canonical form of a weight-n Ad N
// invariant on SL(2). Coefficients ascending in powers of tr, trimmed.
class BorelForm {
public:
    BorelForm(int weight, std::vector<Rational> tr_coeffs)
        : weight_(weight), c_(std::move(tr_coeffs)) {
        if (weight < 0) throw Error("borel form weight must be >= 0");
        trim();
    }

    int weight() const { return weight_; }
    const std::vector<Rational>& tr_coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int tr_degree() const { return c_.empty() ? -1 : static_cast<int>(c_.size()) - 1; }

    Rational coeff(int m) const {
        if (m < 0 || m >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<std::size_t>(m)];
    }

    Rational leading_coeff() const {
        return c_.empty() ? Rational(0) : c_.back();
    }

    friend bool operator==(const BorelForm& a, const BorelForm& b) {
        return a.weight_ == b.weight_ && a.c_ == b.c_;
    }
    friend bool operator!=(const BorelForm& a, const BorelForm& b) { return !(a == b); }

    std::string str() const {
        if (c_.empty()) return "0";
        LaurentPoly p;
        for (std::size_t m = 0; m < c_.size(); ++m)
            p += LaurentPoly::monomial(static_cast<int>(m), c_[m]);
        std::string poly = p.str("tr");
        if (weight_ == 0) return poly;
        std::string head = weight_ == 1 ? "beta" : "beta^" + std::to_string(weight_);
        return head + " * (" + poly + ")";
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    int weight_;
    std::vector<Rational> c_;
};

// Restrict an invariant function to the torus and read off its exact Laurent
// form. Two spare nodes guard the degree bound; interpolation nodes are
// distinct primes so x <-> 1/x never identifies two of them.
inline ClassForm restrict_to_torus(const RegularFunction& f, int degree_bound) {
    if (degree_bound < 0) throw Error("restrict_to_torus: negative degree bound");
    const int d = degree_bound;
    const int fit = 2 * d + 1;
    auto nodes = prime_nodes(fit + 2);
    std::vector<Rational> values;
    values.reserve(nodes.size());
    for (const auto& x : nodes)
        values.push_back(evaluate_function(f, torus_point(x)));

    std::vector<std::pair<Rational, Rational>> pts;
    pts.reserve(static_cast<std::size_t>(fit));
    for (int i = 0; i < fit; ++i)
        pts.emplace_back(nodes[static_cast<std::size_t>(i)],
                         nodes[static_cast<std::size_t>(i)].pow(d) *
                             values[static_cast<std::size_t>(i)]);
    auto poly = interpolate_poly(pts); // x^d * f(x), degree <= 2d if bound holds

    for (std::size_t i = static_cast<std::size_t>(fit); i < nodes.size(); ++i) {
        if (eval_poly(poly, nodes[i]) != nodes[i].pow(d) * values[i])
            throw DegreeOverflow("torus restriction exceeds degree bound " +
                                 std::to_string(degree_bound));
    }

    LaurentPoly laurent;
    for (std::size_t k = 0; k < poly.size(); ++k)
        laurent += LaurentPoly::monomial(static_cast<int>(k) - d, poly[k]);
    return ClassForm::from_laurent(std::move(laurent));
}

// Reconstruct a weight-n Ad N invariant as beta^n p(tr) by exact
// interpolation on the Borel slice b = 1. The b-dependence is verified on a
// second slice (b = 2 must scale values by 2^n); leftover grid nodes verify
// the tr-degree bound.
inline BorelForm reconstruct_borel(const RegularFunction& f, int weight,
                                   int tr_degree_bound) {
    if (weight < 0) throw Error("reconstruct_borel: negative weight");
    if (tr_degree_bound < 0) throw Error("reconstruct_borel: negative degree bound");
    const int node_count = 2 * (tr_degree_bound + weight + 2) + 1;
    auto xs = prime_nodes(node_count);
    auto grid1 = borel_grid(xs, Rational(1));
    auto grid2 = borel_grid(xs, Rational(2));

    std::vector<Rational> v1, v2;
    v1.reserve(xs.size());
    v2.reserve(xs.size());
    for (int i = 0; i < node_count; ++i) {
        v1.push_back(evaluate_function(f, grid1[static_cast<std::size_t>(i)].matrix()));
        v2.push_back(evaluate_function(f, grid2[static_cast<std::size_t>(i)].matrix()));
    }

    const Rational scale = Rational(2).pow(weight);
    for (int i = 0; i < node_count; ++i)
        if (v2[static_cast<std::size_t>(i)] != scale * v1[static_cast<std::size_t>(i)])
            throw WeightMismatch("values do not scale like b^" + std::to_string(weight) +
                                 " across Borel slices");

    std::vector<std::pair<Rational, Rational>> pts;
    const int fit = tr_degree_bound + 1;
    pts.reserve(static_cast<std::size_t>(fit));
    for (int i = 0; i < fit; ++i) {
        Rational t = xs[static_cast<std::size_t>(i)] +
                     xs[static_cast<std::size_t>(i)].inverse();
        pts.emplace_back(t, v1[static_cast<std::size_t>(i)]);
    }
    auto poly = interpolate_poly(pts);

    for (int i = fit; i < node_count; ++i) {
        Rational t = xs[static_cast<std::size_t>(i)] +
                     xs[static_cast<std::size_t>(i)].inverse();
        if (eval_poly(poly, t) != v1[static_cast<std::size_t>(i)])
            throw DegreeOverflow("Borel reconstruction exceeds tr-degree bound " +
                                 std::to_string(tr_degree_bound));
    }

    return BorelForm(weight, std::move(poly));
}

} // namespace cvf
