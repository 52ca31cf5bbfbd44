#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "cvf/field_map.hpp"

namespace cvf {

namespace detail {

struct FnNode {
    enum class Kind {
        Const,       // rational constant
        Entry,       // matrix entry g_{ij}
        TracePower,  // I_m = tr(g^m), m in Z (m = 0 gives the dimension)
        Sum,         // rational-weighted sum of functions
        Product,     // pointwise product
        IntPower,    // f^m, m >= 0
        SymTensor,   // matrix coefficient of (uy)^n (ux+vy)^m, SL(2) only
        FieldApplied, // X_Phi f for an equivariant map Phi
        LeftApplied,  // X^ f for a constant direction X
    };

    explicit FnNode(Kind k) : kind(k) {}

    Kind kind;
    Rational cval;
    int i = 0, j = 0;
    int m = 0, n = 0;
    std::vector<std::pair<Rational, std::shared_ptr<const FnNode>>> sum;
    std::shared_ptr<const FnNode> a, b;
    std::shared_ptr<const FieldMapSpec> field;
    std::shared_ptr<const SquareMatrix<Rational>> direction;
};

} // namespace detail

// Scalar function on the group, evaluable over any coefficient ring of the
// tower. Applying a vector field or operator wraps the expression in a new
// node rather than computing anything, so fields and operators compose; all
// differentiation happens at evaluation time through nested jets.
class RegularFunction {
    using Node = detail::FnNode;
    using Ptr = std::shared_ptr<const Node>;

public:
    static RegularFunction constant(const Rational& c) {
        Node node{Node::Kind::Const};
        node.cval = c;
        return make(std::move(node));
    }

    static RegularFunction entry(int i, int j) {
        Node node{Node::Kind::Entry};
        node.i = i;
        node.j = j;
        return make(std::move(node));
    }

    // I_m = tr(g^m).
    static RegularFunction trace_power(int m) {
        Node node{Node::Kind::TracePower};
        node.m = m;
        return make(std::move(node));
    }

    // J_m = tr(g)^m.
    static RegularFunction trace_pow(int m) {
        if (m < 0) throw Error("trace_pow: exponent must be >= 0");
        return pow(trace_power(1), m);
    }

    // chi_m = tr on S^m V = I_m + I_{m-2} + ... (+1 for even m).
    static RegularFunction chi(int m) {
        if (m < 0) throw Error("chi: index must be >= 0");
        RegularFunction acc = constant(Rational(m % 2 == 0 ? 1 : 0));
        if (m % 2 == 1) acc = trace_power(1);
        for (int j = (m % 2 == 0) ? 2 : 3; j <= m; j += 2) acc = acc + trace_power(j);
        return acc;
    }

    // beta = g_{12}, the SL(2) highest weight function.
    static RegularFunction beta() { return entry(0, 1); }

    // J_{m,n} = tr(g)^m g_{12}^n.
    static RegularFunction j_mn(int m, int n) {
        return trace_pow(m) * pow(beta(), n);
    }

    // The function on SL(2) corresponding to the tensor (uy)^n (ux+vy)^m in
    // S^{n+m} V (x) (S^{n+m} V)^*.
    static RegularFunction sym_tensor(int m, int n) {
        if (m < 0 || n < 0) throw Error("sym_tensor: indices must be >= 0");
        Node node{Node::Kind::SymTensor};
        node.m = m;
        node.n = n;
        return make(std::move(node));
    }

    static RegularFunction pow(const RegularFunction& f, int m) {
        if (m < 0) throw Error("pow: exponent must be >= 0");
        Node node{Node::Kind::IntPower};
        node.m = m;
        node.a = f.node_;
        return make(std::move(node));
    }

    friend RegularFunction operator+(const RegularFunction& f, const RegularFunction& g) {
        Node node{Node::Kind::Sum};
        node.sum = {{Rational(1), f.node_}, {Rational(1), g.node_}};
        return make(std::move(node));
    }
    friend RegularFunction operator-(const RegularFunction& f, const RegularFunction& g) {
        Node node{Node::Kind::Sum};
        node.sum = {{Rational(1), f.node_}, {Rational(-1), g.node_}};
        return make(std::move(node));
    }
    friend RegularFunction operator*(const Rational& c, const RegularFunction& f) {
        Node node{Node::Kind::Sum};
        node.sum = {{c, f.node_}};
        return make(std::move(node));
    }
    friend RegularFunction operator*(const RegularFunction& f, const RegularFunction& g) {
        Node node{Node::Kind::Product};
        node.a = f.node_;
        node.b = g.node_;
        return make(std::move(node));
    }
    RegularFunction operator-() const { return Rational(-1) * (*this); }

    const Node& node() const { return *node_; }

private:
    static RegularFunction make(Node node) {
        RegularFunction f;
        f.node_ = std::make_shared<const Node>(std::move(node));
        return f;
    }

    friend RegularFunction apply_field(const FieldMapSpec&, const RegularFunction&);
    friend RegularFunction apply_left_field(const SquareMatrix<Rational>&,
                                            const RegularFunction&);

    RegularFunction() = default;
    Ptr node_;
};

// X_Phi f as an unevaluated expression: Xf(g) = d/dt f(g(1 + t Phi(g)))|_0.
inline RegularFunction apply_field(const FieldMapSpec& spec, const RegularFunction& f) {
    detail::FnNode node{detail::FnNode::Kind::FieldApplied};
    node.field = std::make_shared<const FieldMapSpec>(spec);
    node.a = f.node_;
    return RegularFunction::make(std::move(node));
}

// Left-invariant field X^ f(g) = d/dt f(g(1 + tX))|_0 for a constant direction.
inline RegularFunction apply_left_field(const SquareMatrix<Rational>& x,
                                        const RegularFunction& f) {
    detail::FnNode node{detail::FnNode::Kind::LeftApplied};
    node.direction = std::make_shared<const SquareMatrix<Rational>>(x);
    node.a = f.node_;
    return RegularFunction::make(std::move(node));
}

namespace detail {

template <class R> R ring_pow(R base, int e) {
    R acc = RingTraits<R>::one();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

template <class R, int Depth>
class FunctionEvaluator {
public:
    explicit FunctionEvaluator(const SquareMatrix<R>& g) : cache_(g) {}

    R eval(const FnNode& node) {
        using K = FnNode::Kind;
        switch (node.kind) {
        case K::Const:
            return RingTraits<R>::from_rational(node.cval);
        case K::Entry:
            return cache_.base()(node.i, node.j);
        case K::TracePower:
            return cache_.get_trace(node.m);
        case K::Sum: {
            R acc = RingTraits<R>::zero();
            for (const auto& [c, f] : node.sum)
                acc = acc + RingTraits<R>::from_rational(c) * eval(*f);
            return acc;
        }
        case K::Product:
            return eval(*node.a) * eval(*node.b);
        case K::IntPower:
            return ring_pow(eval(*node.a), node.m);
        case K::SymTensor:
            return eval_sym_tensor(node.m, node.n);
        case K::FieldApplied: {
            auto phi = node.field->evaluate(cache_);
            return differentiate(*node.a, cache_.base() * phi);
        }
        case K::LeftApplied:
            return differentiate(*node.a, cache_.base() * lift_matrix<R>(*node.direction));
        }
        throw Error("unreachable function node kind");
    }

private:
    R differentiate(const FnNode& inner, const SquareMatrix<R>& z) {
        if constexpr (Depth <= 0) {
            (void)inner;
            (void)z;
            throw EvalDepthExceeded("expression nests derivatives deeper than the jet tower");
        } else {
            auto gj = jet_displace(cache_.base(), z);
            FunctionEvaluator<Jet2<R>, Depth - 1> sub(gj);
            return sub.eval(inner).eps1();
        }
    }

    // f(g) = sum_j C(m,j)/C(n+m,j) * [u^j v^{n+m-j}] (au+bv)^{n+j} (cu+dv)^{m-j}
    // with (a,b,c,d) the entries of g; the bracket picks the pairing with the
    // dual basis vector x^j y^{n+m-j}.
    R eval_sym_tensor(int m, int n) {
        if (cache_.dim() != 2) throw Error("sym_tensor needs a 2x2 point");
        const auto& g = cache_.base();
        const int top = n + m;
        auto pow_table = [&](const R& v) {
            std::vector<R> t(static_cast<std::size_t>(top) + 1);
            t[0] = RingTraits<R>::one();
            for (int e = 1; e <= top; ++e) t[e] = t[e - 1] * v;
            return t;
        };
        auto pa = pow_table(g(0, 0));
        auto pb = pow_table(g(0, 1));
        auto pc = pow_table(g(1, 0));
        auto pd = pow_table(g(1, 1));
        R total = RingTraits<R>::zero();
        for (int j = 0; j <= m; ++j) {
            R inner = RingTraits<R>::zero();
            for (int a = 0; a <= j; ++a) {
                int b = j - a;
                if (a > n + j || b > m - j) continue;
                Rational c = binomial(n + j, a) * binomial(m - j, b);
                inner = inner + RingTraits<R>::from_rational(c) * pa[a] *
                                    pb[n + j - a] * pc[b] * pd[m - j - b];
            }
            Rational w = binomial(m, j) / binomial(n + m, j);
            total = total + RingTraits<R>::from_rational(w) * inner;
        }
        return total;
    }

    PowerCache<R> cache_;
};

} // namespace detail

template <class R, int Depth = kMaxJetDepth>
R evaluate_function(const RegularFunction& f, const SquareMatrix<R>& g) {
    detail::FunctionEvaluator<R, Depth> ev(g);
    return ev.eval(f.node());
}

// (X_Phi f)(g), evaluated exactly.
template <class R>
R apply_field_at(const FieldMapSpec& spec, const RegularFunction& f,
                 const SquareMatrix<R>& g) {
    return evaluate_function(apply_field(spec, f), g);
}

} // namespace cvf
