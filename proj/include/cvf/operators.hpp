#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cvf/class_forms.hpp"
#include "cvf/nullspace.hpp"

namespace cvf {

// Left-invariant vector field on SL(n): acts by X^ f(g) = d/dt f(g(1+tX))|_0,
// the same trivialization the equivariant maps use with a constant direction.
class LeftInvariantField {
public:
    explicit LeftInvariantField(SquareMatrix<Rational> direction)
        : x_(std::move(direction)) {}

    const SquareMatrix<Rational>& direction() const { return x_; }

    RegularFunction apply(const RegularFunction& f) const {
        return apply_left_field(x_, f);
    }

private:
    SquareMatrix<Rational> x_;
};

inline SquareMatrix<Rational> sl2_H() {
    return SquareMatrix<Rational>::of(2, {Rational(1), Rational(0), Rational(0), Rational(-1)});
}
inline SquareMatrix<Rational> sl2_E() { return unit_matrix<Rational>(2, 0, 1); }
inline SquareMatrix<Rational> sl2_F() { return unit_matrix<Rational>(2, 1, 0); }

// Formal composition tree of derivations and multiplications. Application to
// a RegularFunction is a structural rewrite; evaluation of the result runs
// through nested jets.
class InvariantOperator {
    struct Node;
    using Ptr = std::shared_ptr<const Node>;

public:
    static InvariantOperator field(FieldMapSpec spec) {
        Node n{Kind::FieldApp};
        n.spec = std::make_shared<const FieldMapSpec>(std::move(spec));
        return make(std::move(n));
    }

    static InvariantOperator left(SquareMatrix<Rational> direction) {
        Node n{Kind::LeftApp};
        n.direction = std::make_shared<const SquareMatrix<Rational>>(std::move(direction));
        return make(std::move(n));
    }

    // Multiplication operator f |-> h * f.
    static InvariantOperator mul(RegularFunction h) {
        Node n{Kind::Mul};
        n.factor = std::make_shared<const RegularFunction>(std::move(h));
        return make(std::move(n));
    }

    // a after b: (a o b) f = a(b(f)).
    static InvariantOperator compose(const InvariantOperator& a, const InvariantOperator& b) {
        Node n{Kind::Compose};
        n.a = a.node_;
        n.b = b.node_;
        return make(std::move(n));
    }

    InvariantOperator scaled(const Rational& c) const {
        Node n{Kind::Sum};
        n.sum = {{c, node_}};
        return make(std::move(n));
    }

    friend InvariantOperator operator+(const InvariantOperator& a, const InvariantOperator& b) {
        Node n{Kind::Sum};
        n.sum = {{Rational(1), a.node_}, {Rational(1), b.node_}};
        return make(std::move(n));
    }
    friend InvariantOperator operator-(const InvariantOperator& a, const InvariantOperator& b) {
        Node n{Kind::Sum};
        n.sum = {{Rational(1), a.node_}, {Rational(-1), b.node_}};
        return make(std::move(n));
    }
    friend InvariantOperator operator*(const InvariantOperator& a, const InvariantOperator& b) {
        return compose(a, b);
    }

    InvariantOperator power(int k) const {
        if (k < 1) throw Error("operator power must be >= 1");
        InvariantOperator acc = *this;
        for (int i = 1; i < k; ++i) acc = compose(acc, *this);
        return acc;
    }

    RegularFunction apply(const RegularFunction& f) const { return apply_node(*node_, f); }

private:
    enum class Kind { FieldApp, LeftApp, Mul, Compose, Sum };

    struct Node {
        explicit Node(Kind k) : kind(k) {}

        Kind kind;
        std::shared_ptr<const FieldMapSpec> spec;
        std::shared_ptr<const SquareMatrix<Rational>> direction;
        std::shared_ptr<const RegularFunction> factor;
        Ptr a, b;
        std::vector<std::pair<Rational, Ptr>> sum;
    };

    static InvariantOperator make(Node n) {
        InvariantOperator op;
        op.node_ = std::make_shared<const Node>(std::move(n));
        return op;
    }

    static RegularFunction apply_node(const Node& node, const RegularFunction& f) {
        switch (node.kind) {
        case Kind::FieldApp:
            return apply_field(*node.spec, f);
        case Kind::LeftApp:
            return apply_left_field(*node.direction, f);
        case Kind::Mul:
            return (*node.factor) * f;
        case Kind::Compose:
            return apply_node(*node.a, apply_node(*node.b, f));
        case Kind::Sum: {
            RegularFunction acc = RegularFunction::constant(Rational(0));
            for (const auto& [c, op] : node.sum) acc = acc + c * apply_node(*op, f);
            return acc;
        }
        }
        throw Error("unreachable operator node kind");
    }

    InvariantOperator() = default;
    Ptr node_;
};

inline RegularFunction apply_operator(const InvariantOperator& op, const RegularFunction& f) {
    return op.apply(f);
}

// The normalization gate: a Casimir candidate must satisfy
// Delta beta^d = d(d+2) beta^d for d <= 4 at generic points, or it would
// silently corrupt every downstream eigenvalue and kernel computation.
inline void validate_casimir_normalization(const InvariantOperator& candidate) {
    SamplePlan plan;
    plan.seed = 0x5eedcafeULL;
    plan.count = 24;
    plan.height_bound = 3;
    auto samples = sample_slg(plan, 2);
    for (int d = 1; d <= 4; ++d) {
        auto beta_d = RegularFunction::pow(RegularFunction::beta(), d);
        auto image = candidate.apply(beta_d);
        const Rational eigen(d * (d + 2));
        for (const auto& g : samples) {
            if (evaluate_function(image, g) != eigen * evaluate_function(beta_d, g))
                throw NormalizationError(
                    "Casimir candidate violates Delta beta^" + std::to_string(d) +
                    " = " + eigen.str() + " beta^" + std::to_string(d));
        }
    }
}

// Casimir candidate H^H^ + 2E^F^ + 2F^E^ in the left-invariant trivialization.
// The scale is pinned by the eigenvalue on highest weight functions, so the
// constructor self-validates and refuses to hand out a mis-scaled operator.
inline InvariantOperator casimir() {
    auto H = InvariantOperator::left(sl2_H());
    auto E = InvariantOperator::left(sl2_E());
    auto F = InvariantOperator::left(sl2_F());
    InvariantOperator delta = H * H + (E * F + F * E).scaled(Rational(2));
    validate_casimir_normalization(delta);
    return delta;
}

// D = -tr^3 Delta + tr Psi^2 + (tr^2 + 4) Psi with Psi = Psi_1.
inline InvariantOperator separation_operator() {
    auto delta = casimir();
    auto psi = InvariantOperator::field(FieldMapSpec::psi(1));
    auto j1 = RegularFunction::trace_pow(1);
    auto j2 = RegularFunction::trace_pow(2);
    auto j3 = RegularFunction::trace_pow(3);
    auto four = RegularFunction::constant(Rational(4));
    return InvariantOperator::compose(InvariantOperator::mul(j3), delta).scaled(Rational(-1)) +
           InvariantOperator::compose(InvariantOperator::mul(j1), psi.power(2)) +
           InvariantOperator::compose(InvariantOperator::mul(j2 + four), psi);
}

struct KernelScan {
    int weight = 0;
    int max_tr_degree = 0;
    std::vector<BorelForm> images; // op(beta^n tr^m) for m = 0..M
    QMatrix matrix;                // (M+4) x (M+1), rows = tr-degree
    std::size_t rank = 0;
    std::vector<std::vector<Rational>> kernel_coeffs;
    std::vector<BorelForm> kernel; // beta^n p(tr) spanning ker(op) on the window
};

// Apply op to each beta^n tr^m, m <= M, reconstruct exactly on the Borel
// slice with bound M+3, and compute the exact nullspace of the assembled
// matrix. DegreeOverflow from reconstruction propagates.
inline KernelScan kernel_scan(const InvariantOperator& op, int weight, int max_tr_degree) {
    const int M = max_tr_degree;
    KernelScan scan;
    scan.weight = weight;
    scan.max_tr_degree = M;
    const int out_rows = M + 4;
    scan.matrix.assign(static_cast<std::size_t>(out_rows),
                       std::vector<Rational>(static_cast<std::size_t>(M) + 1, Rational(0)));
    for (int m = 0; m <= M; ++m) {
        auto image = op.apply(RegularFunction::j_mn(m, weight));
        BorelForm bf = reconstruct_borel(image, weight, M + 3);
        for (int r = 0; r < out_rows; ++r)
            scan.matrix[static_cast<std::size_t>(r)][static_cast<std::size_t>(m)] =
                bf.coeff(r);
        scan.images.push_back(std::move(bf));
    }
    scan.kernel_coeffs = nullspace(scan.matrix);
    scan.rank = static_cast<std::size_t>(M + 1) - scan.kernel_coeffs.size();
    for (const auto& v : scan.kernel_coeffs) scan.kernel.emplace_back(weight, v);
    return scan;
}

struct RtildeRow {
    int m = 0;
    int n = 0;
    bool vanishes = false;
    BorelForm remainder{0, {}};
};

struct RtildeTable {
    int max_m = 0;
    int max_n = 0;
    std::vector<RtildeRow> rows;
};

// Exact remainder R~ = Delta(beta^n tr^m) - (n+m)(n+m+2) beta^n tr^m
// - 4m(1-m) beta^n tr^{m-2}. The outcome is recorded, never asserted: whether
// R~ vanishes in general is an open conjecture.
inline RtildeTable rtilde_probe(const InvariantOperator& delta, int max_m, int max_n) {
    RtildeTable table;
    table.max_m = max_m;
    table.max_n = max_n;
    for (int n = 0; n <= max_n; ++n) {
        for (int m = 0; m <= max_m; ++m) {
            auto image = delta.apply(RegularFunction::j_mn(m, n));
            BorelForm got = reconstruct_borel(image, n, m + 2);
            std::vector<Rational> expect(static_cast<std::size_t>(m) + 1, Rational(0));
            expect[static_cast<std::size_t>(m)] = Rational((n + m) * (n + m + 2));
            if (m >= 2)
                expect[static_cast<std::size_t>(m - 2)] += Rational(4 * m * (1 - m));
            std::vector<Rational> rem(std::max(expect.size(), got.tr_coeffs().size()),
                                      Rational(0));
            for (std::size_t i = 0; i < got.tr_coeffs().size(); ++i)
                rem[i] += got.tr_coeffs()[i];
            for (std::size_t i = 0; i < expect.size(); ++i) rem[i] -= expect[i];
            BorelForm remainder(n, std::move(rem));
            table.rows.push_back(RtildeRow{m, n, remainder.is_zero(), remainder});
        }
    }
    return table;
}

// Operator (t - t^-1) theta + sign (t + t^-1) theta^2 on Laurent polynomials
// in t = e^z (theta = t d/dt = d/dz). Both signs exist so the kernel claim
// can be tested against each; see resolve_weyl_sign.
class WeylTorusOperator {
public:
    explicit WeylTorusOperator(int sign) : sign_(sign) {
        if (sign != 1 && sign != -1) throw Error("weyl operator sign must be +-1");
    }

    int sign() const { return sign_; }

    LaurentPoly apply(const LaurentPoly& f) const {
        LaurentPoly t = LaurentPoly::monomial(1);
        LaurentPoly tinv = LaurentPoly::monomial(-1);
        LaurentPoly first = (t - tinv) * f.theta();
        LaurentPoly second = (t + tinv) * f.theta().theta();
        return sign_ == 1 ? first + second : first - second;
    }

    // Matrix of the operator from span{t^-W..t^W} into span{t^-(W+1)..t^(W+1)}.
    QMatrix window_matrix(int window) const {
        const int in_dim = 2 * window + 1;
        const int out_dim = 2 * window + 3;
        QMatrix m(static_cast<std::size_t>(out_dim),
                  std::vector<Rational>(static_cast<std::size_t>(in_dim), Rational(0)));
        for (int k = -window; k <= window; ++k) {
            LaurentPoly image = apply(LaurentPoly::monomial(k));
            for (const auto& [deg, c] : image.coeffs())
                m[static_cast<std::size_t>(deg + window + 1)]
                 [static_cast<std::size_t>(k + window)] = c;
        }
        return m;
    }

    std::vector<LaurentPoly> kernel_window(int window) const {
        auto basis = nullspace(window_matrix(window));
        std::vector<LaurentPoly> out;
        for (const auto& v : basis) {
            LaurentPoly p;
            for (int k = -window; k <= window; ++k)
                p += LaurentPoly::monomial(k, v[static_cast<std::size_t>(k + window)]);
            out.push_back(std::move(p));
        }
        return out;
    }

private:
    int sign_;
};

struct WeylSignResolution {
    int resolved_sign = 0;       // the sign whose kernel contains t - 1/t
    bool printed_sign_works = false; // whether +1 (the printed sign) does
};

// Decide the sign by direct computation on t - 1/t; exactly one choice may
// annihilate it.
inline WeylSignResolution resolve_weyl_sign() {
    LaurentPoly probe = LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);
    bool plus = WeylTorusOperator(1).apply(probe).is_zero();
    bool minus = WeylTorusOperator(-1).apply(probe).is_zero();
    if (plus == minus)
        throw Error("Weyl torus operator: sign resolution is not unique");
    WeylSignResolution res;
    res.resolved_sign = plus ? 1 : -1;
    res.printed_sign_works = plus;
    return res;
}

} // namespace cvf
