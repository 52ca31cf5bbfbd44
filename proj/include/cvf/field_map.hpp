#pragma once

#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "cvf/invariant_poly.hpp"

namespace cvf {

// Compiled jet-tower height. Evaluating a derivative operator consumes one
// level; expressions nesting deeper than this throw EvalDepthExceeded.
inline constexpr int kMaxJetDepth = 4;

template <class R>
SquareMatrix<R> jet_value(const SquareMatrix<Jet2<R>>& m) {
    SquareMatrix<R> out(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out(i, j) = m(i, j).value();
    return out;
}

template <class R>
SquareMatrix<R> jet_eps1(const SquareMatrix<Jet2<R>>& m) {
    SquareMatrix<R> out(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out(i, j) = m(i, j).eps1();
    return out;
}

// Seed a first-order displacement: g + e1 * z, entrywise in Jet2<R>.
template <class R>
SquareMatrix<Jet2<R>> jet_displace(const SquareMatrix<R>& g, const SquareMatrix<R>& z) {
    SquareMatrix<Jet2<R>> out(g.dim());
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j)
            out(i, j) = Jet2<R>(g(i, j), z(i, j), RingTraits<R>::zero(),
                                RingTraits<R>::zero());
    return out;
}

// Equivariant map G -> g written as a Laurent matrix polynomial
//     Phi(g) = sum_k c_k(g) g^k + s(g) * 1
// with class-function coefficients c_k and s. The laurent() constructor
// subtracts the trace part, so evaluation is traceless at every SL(n) point;
// conjugation equivariance is automatic for this shape of map.
class FieldMapSpec {
public:
    static FieldMapSpec zero(int n) { return FieldMapSpec(n); }

    // Traceless-enforcing constructor: s is set to -(1/n) sum_k c_k tr(g^k).
    static FieldMapSpec laurent(int n, const std::map<int, InvariantPoly>& terms) {
        FieldMapSpec spec(n);
        for (const auto& [k, c] : terms) {
            if (c.is_zero()) continue;
            spec.terms_[k] = c;
            InvariantPoly tr_k = (k == 0) ? InvariantPoly::constant(Rational(n))
                                          : InvariantPoly::trace_symbol(k);
            spec.scalar_ -= (c * tr_k).scaled(Rational(1, n));
        }
        return spec;
    }

    // Phi_k(g) = g^k - (1/n) tr(g^k) 1.
    static FieldMapSpec phi(int n, int k) {
        return laurent(n, {{k, InvariantPoly::one()}});
    }

    // Psi_k(g) = g^k - g^{-k} on SL(2); requires k >= 1.
    static FieldMapSpec psi(int k) {
        if (k < 1) throw Error("psi: index must be >= 1");
        return psi_signed(k);
    }

    // Convention for the commutation law: Psi_0 = 0 and Psi_{-k} = -Psi_k.
    static FieldMapSpec psi_signed(int k) {
        if (k == 0) return zero(2);
        return laurent(2, {{k, InvariantPoly::one()},
                           {-k, -InvariantPoly::one()}});
    }

    int dim() const { return n_; }
    const std::map<int, InvariantPoly>& terms() const { return terms_; }
    const InvariantPoly& scalar_term() const { return scalar_; }

    bool is_zero() const { return terms_.empty() && scalar_.is_zero(); }

    bool has_negative_power() const {
        return !terms_.empty() && terms_.begin()->first < 0;
    }

    FieldMapSpec& operator+=(const FieldMapSpec& o) {
        check_dim(o);
        for (const auto& [k, c] : o.terms_) {
            terms_[k] += c;
            if (terms_[k].is_zero()) terms_.erase(k);
        }
        scalar_ += o.scalar_;
        return *this;
    }
    FieldMapSpec& operator-=(const FieldMapSpec& o) { return *this += -o; }

    friend FieldMapSpec operator+(FieldMapSpec a, const FieldMapSpec& b) { return a += b; }
    friend FieldMapSpec operator-(FieldMapSpec a, const FieldMapSpec& b) { return a -= b; }

    FieldMapSpec operator-() const {
        FieldMapSpec r(n_);
        for (const auto& [k, c] : terms_) r.terms_[k] = -c;
        r.scalar_ = -scalar_;
        return r;
    }

    FieldMapSpec scaled(const Rational& q) const {
        FieldMapSpec r(n_);
        if (q.is_zero()) return r;
        for (const auto& [k, c] : terms_) r.terms_[k] = c.scaled(q);
        r.scalar_ = scalar_.scaled(q);
        return r;
    }

    // Multiplication by an invariant function (the J-module structure).
    FieldMapSpec multiplied(const InvariantPoly& f) const {
        FieldMapSpec r(n_);
        if (f.is_zero()) return r;
        for (const auto& [k, c] : terms_) {
            r.terms_[k] = c * f;
            if (r.terms_[k].is_zero()) r.terms_.erase(k);
        }
        r.scalar_ = scalar_ * f;
        return r;
    }

    template <class R>
    SquareMatrix<R> evaluate(PowerCache<R>& cache) const {
        if (cache.dim() != n_) throw Error("field map evaluated at wrong dimension");
        SquareMatrix<R> acc(n_);
        for (const auto& [k, c] : terms_) {
            R coeff = c.template evaluate<R>(cache);
            acc += coeff * cache.get_power(k);
        }
        if (!scalar_.is_zero()) {
            R s = scalar_.template evaluate<R>(cache);
            acc += s * SquareMatrix<R>::identity(n_);
        }
        return acc;
    }

    template <class R>
    SquareMatrix<R> evaluate(const SquareMatrix<R>& g) const {
        PowerCache<R> cache(g);
        return evaluate(cache);
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")*g^" << k;
        }
        if (!scalar_.is_zero()) {
            if (!first) os << " + ";
            os << "(" << scalar_.str() << ")*1";
            first = false;
        }
        return first ? "0" : os.str();
    }

private:
    explicit FieldMapSpec(int n) : n_(n) {
        if (n < 1) throw Error("field map dimension must be >= 1");
    }

    void check_dim(const FieldMapSpec& o) const {
        if (n_ != o.n_) throw Error("field map dimension mismatch");
    }

    int n_;
    std::map<int, InvariantPoly> terms_;
    InvariantPoly scalar_;
};

// Ambient directional derivative d Phi_g(z) = d/dt Phi(g + t z)|_0 computed
// by a first-order jet displacement.
template <class R>
SquareMatrix<R> differential_jet(const FieldMapSpec& spec, const SquareMatrix<R>& g,
                                 const SquareMatrix<R>& z) {
    auto gj = jet_displace(g, z);
    return jet_eps1(spec.evaluate(gj));
}

namespace detail {

// sum_{i=0}^{k-1} g^i z g^{k-1-i} for k >= 1.
template <class R>
SquareMatrix<R> power_rule(PowerCache<R>& cache, const SquareMatrix<R>& z, int k) {
    SquareMatrix<R> acc(cache.dim());
    for (int i = 0; i < k; ++i)
        acc += cache.get_power(i) * z * cache.get_power(k - 1 - i);
    return acc;
}

// d tr(g^j)(z) = j tr(g^{j-1} z), valid for every j in Z.
template <class R>
R trace_symbol_derivative(PowerCache<R>& cache, const SquareMatrix<R>& z, int j) {
    return RingTraits<R>::from_rational(Rational(j)) *
           trace(cache.get_power(j - 1) * z);
}

template <class R>
R invariant_poly_derivative(const InvariantPoly& p, PowerCache<R>& cache,
                            const SquareMatrix<R>& z) {
    R acc = RingTraits<R>::zero();
    for (const auto& [mono, c] : p.terms()) {
        for (const auto& [j, e] : mono) {
            // derivative hitting one tr(g^j) factor of the monomial
            R term = RingTraits<R>::from_rational(c * Rational(e));
            for (const auto& [j2, e2] : mono) {
                int reps = (j2 == j) ? e2 - 1 : e2;
                for (int i = 0; i < reps; ++i) term = term * cache.get_trace(j2);
            }
            acc = acc + term * trace_symbol_derivative(cache, z, j);
        }
    }
    return acc;
}

} // namespace detail

// Closed-form route for the same differential, term by term:
//   d(c_k g^k)(z) = dc_k(z) g^k + c_k (z g^{k-1} + g z g^{k-2} + ... + g^{k-1} z)
// with d(g^{-m}) = -g^{-m} d(g^m) g^{-m} for negative exponents.
template <class R>
SquareMatrix<R> differential_closed(const FieldMapSpec& spec,
                                    const SquareMatrix<R>& g,
                                    const SquareMatrix<R>& z) {
    PowerCache<R> cache(g);
    const int n = spec.dim();
    SquareMatrix<R> acc(n);
    for (const auto& [k, c] : spec.terms()) {
        R cv = c.template evaluate<R>(cache);
        if (k > 0) {
            acc += cv * detail::power_rule(cache, z, k);
        } else if (k < 0) {
            auto inner = detail::power_rule(cache, z, -k);
            acc -= cv * (cache.get_power(k) * inner * cache.get_power(k));
        }
        R dc = detail::invariant_poly_derivative(c, cache, z);
        acc += dc * cache.get_power(k);
    }
    if (!spec.scalar_term().is_zero()) {
        R ds = detail::invariant_poly_derivative(spec.scalar_term(), cache, z);
        acc += ds * SquareMatrix<R>::identity(n);
    }
    return acc;
}

// Public differential: both routes must agree exactly; a mismatch would mean
// an arithmetic bug, not bad input.
template <class R>
SquareMatrix<R> differential(const FieldMapSpec& spec, const SquareMatrix<R>& g,
                             const SquareMatrix<R>& z) {
    auto via_jet = differential_jet(spec, g, z);
    auto via_sum = differential_closed(spec, g, z);
    if (!(via_jet == via_sum))
        throw Error("differential: jet route and closed-form route disagree");
    return via_jet;
}

// Phi (*) Psi (g) = dPsi_g(g Phi(g)) - dPhi_g(g Psi(g)),
// the bracket of the corresponding invariant vector fields.
template <class R>
SquareMatrix<R> star_commutator(const FieldMapSpec& phi, const FieldMapSpec& psi,
                                const SquareMatrix<R>& g) {
    auto phi_g = phi.evaluate(g);
    auto psi_g = psi.evaluate(g);
    return differential_jet(psi, g, g * phi_g) - differential_jet(phi, g, g * psi_g);
}

// Phi # Psi (y) = dPsi_y({y,Phi(y)}) - dPhi_y({y,Psi(y)}) + [Phi(y),Psi(y)]/2.
// The last summand is the curvature term; on the conjugation action it
// vanishes pointwise and # collapses to (*).
template <class R>
SquareMatrix<R> sharp_commutator(const FieldMapSpec& phi, const FieldMapSpec& psi,
                                 const SquareMatrix<R>& y) {
    auto phi_y = phi.evaluate(y);
    auto psi_y = psi.evaluate(y);
    auto d1 = differential_jet(psi, y, anticommutator(y, phi_y));
    auto d2 = differential_jet(phi, y, anticommutator(y, psi_y));
    return d1 - d2 + commutator(phi_y, psi_y).scaled(Rational(1, 2));
}

struct FlatnessWitness {
    std::size_t sample_index;
    SquareMatrix<Rational> point;
    FlatnessWitness(std::size_t i, SquareMatrix<Rational> p)
        : sample_index(i), point(std::move(p)) {}
};

struct FlatnessResult {
    bool flat = true;
    std::optional<FlatnessWitness> witness;
};

// Ad(y) Phi(y) = Phi(y) at every sample; a failing point is returned as witness.
inline FlatnessResult is_flat(const FieldMapSpec& spec,
                              const std::vector<SquareMatrix<Rational>>& samples) {
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& y = samples[i];
        auto val = spec.evaluate(y);
        if (!(y * val == val * y)) return {false, FlatnessWitness{i, y}};
    }
    return {};
}

// Same check for an arbitrary pointwise map (used for the deliberate
// non-equivariant counterexample).
template <class MapFn>
FlatnessResult is_flat_map(MapFn&& map, const std::vector<SquareMatrix<Rational>>& samples) {
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& y = samples[i];
        SquareMatrix<Rational> val = map(y);
        if (!(y * val == val * y)) return {false, FlatnessWitness{i, y}};
    }
    return {};
}

// Composite equivariant map: either a FieldMapSpec leaf or a star bracket of
// two composites. Star nodes are evaluable at jet-valued points, which is
// what makes iterated brackets (Jacobi identity) computable.
class MapExpr {
public:
    MapExpr(FieldMapSpec spec)
        : node_(std::make_shared<Node>(Node{std::move(spec), nullptr, nullptr})) {}

    static MapExpr star(const MapExpr& a, const MapExpr& b) {
        if (a.dim() != b.dim()) throw Error("star of maps with different dimensions");
        return MapExpr(std::make_shared<Node>(Node{FieldMapSpec::zero(a.dim()), a.node_, b.node_}));
    }

    int dim() const {
        const Node* n = node_.get();
        while (n->left) n = n->left.get();
        return n->spec.dim();
    }

    template <class R, int Depth = kMaxJetDepth>
    SquareMatrix<R> evaluate(const SquareMatrix<R>& g) const {
        return eval_node<R, Depth>(*node_, g);
    }

private:
    struct Node {
        FieldMapSpec spec; // leaf payload when left == nullptr
        std::shared_ptr<const Node> left, right;
    };

    explicit MapExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    template <class R, int Depth>
    static SquareMatrix<R> eval_node(const Node& node, const SquareMatrix<R>& g) {
        if (!node.left) return node.spec.evaluate(g);
        auto a = eval_node<R, Depth>(*node.left, g);
        auto b = eval_node<R, Depth>(*node.right, g);
        return diff_node<R, Depth>(*node.right, g, g * a) -
               diff_node<R, Depth>(*node.left, g, g * b);
    }

    template <class R, int Depth>
    static SquareMatrix<R> diff_node(const Node& node, const SquareMatrix<R>& g,
                                     const SquareMatrix<R>& z) {
        if constexpr (Depth <= 0) {
            throw EvalDepthExceeded("map bracket nested deeper than the jet tower");
        } else {
            auto gj = jet_displace(g, z);
            return jet_eps1(eval_node<Jet2<R>, Depth - 1>(node, gj));
        }
    }

    std::shared_ptr<const Node> node_;
};

} // namespace cvf
