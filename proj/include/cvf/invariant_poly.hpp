#pragma once

#include <map>
#include <sstream>
#include <string>

#include "cvf/matrix.hpp"

namespace cvf {

// Shared cache of matrix powers g^k and their traces over a fixed base point.
// Negative powers go through the adjugate inverse once.
template <class R>
class PowerCache {
public:
    explicit PowerCache(const SquareMatrix<R>& g) : g_(g) {
        powers_.emplace(0, SquareMatrix<R>::identity(g.dim()));
        powers_.emplace(1, g);
    }

    const SquareMatrix<R>& base() const { return g_; }
    int dim() const { return g_.dim(); }

    const SquareMatrix<R>& get_power(int k) {
        auto it = powers_.find(k);
        if (it != powers_.end()) return it->second;
        SquareMatrix<R> value = (k > 0) ? get_power(k - 1) * g_
                                        : get_power(k + 1) * inverse();
        return powers_.emplace(k, std::move(value)).first->second;
    }

    const R& get_trace(int k) {
        auto it = traces_.find(k);
        if (it != traces_.end()) return it->second;
        return traces_.emplace(k, trace(get_power(k))).first->second;
    }

private:
    const SquareMatrix<R>& inverse() {
        auto it = powers_.find(-1);
        if (it != powers_.end()) return it->second;
        return powers_.emplace(-1, inverse_adjugate(g_)).first->second;
    }

    SquareMatrix<R> g_;
    std::map<int, SquareMatrix<R>> powers_;
    std::map<int, R> traces_;
};

// Polynomial with rational coefficients in the symbols tr(g^j), j in Z \ {0}.
// tr(g^0) never appears as a symbol; it is folded into the constant as the
// dimension at construction sites that need it.
class InvariantPoly {
public:
    // monomial: exponent of tr(g^j) keyed by j
    using Monomial = std::map<int, int>;

    InvariantPoly() = default;

    static InvariantPoly constant(const Rational& c) {
        InvariantPoly p;
        if (!c.is_zero()) p.terms_[Monomial{}] = c;
        return p;
    }

    static InvariantPoly zero() { return InvariantPoly(); }
    static InvariantPoly one() { return constant(Rational(1)); }

    // The symbol tr(g^j); j = 0 is rejected (a constant, dimension-dependent).
    static InvariantPoly trace_symbol(int j) {
        if (j == 0) throw Error("trace_symbol: j = 0 is not a symbol");
        InvariantPoly p;
        p.terms_[Monomial{{j, 1}}] = Rational(1);
        return p;
    }

    // tr(g)|_{S^k V} = tr(g^k) + tr(g^{k-2}) + ... + (1 or tr(g)), n = 2 only.
    static InvariantPoly chi_symbol(int k) {
        if (k < 0) throw Error("chi_symbol: k must be >= 0");
        InvariantPoly p;
        for (int j = k; j >= 1; j -= 2) p += trace_symbol(j);
        if (k % 2 == 0) p += one();
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    InvariantPoly& operator+=(const InvariantPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    InvariantPoly& operator-=(const InvariantPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend InvariantPoly operator+(InvariantPoly a, const InvariantPoly& b) { return a += b; }
    friend InvariantPoly operator-(InvariantPoly a, const InvariantPoly& b) { return a -= b; }

    friend InvariantPoly operator*(const InvariantPoly& a, const InvariantPoly& b) {
        InvariantPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (const auto& [j, e] : mb) m[j] += e;
                r.add_term(m, ca * cb);
            }
        return r;
    }

    InvariantPoly operator-() const {
        InvariantPoly r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    InvariantPoly scaled(const Rational& q) const {
        InvariantPoly r;
        if (q.is_zero()) return r;
        for (const auto& [m, c] : terms_) r.terms_[m] = q * c;
        return r;
    }

    friend bool operator==(const InvariantPoly& a, const InvariantPoly& b) {
        return a.terms_ == b.terms_;
    }

    template <class R>
    R evaluate(PowerCache<R>& cache) const {
        R acc = RingTraits<R>::zero();
        for (const auto& [m, c] : terms_) {
            R term = RingTraits<R>::from_rational(c);
            for (const auto& [j, e] : m)
                for (int i = 0; i < e; ++i) term = term * cache.get_trace(j);
            acc = acc + term;
        }
        return acc;
    }

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.str();
            for (const auto& [j, e] : m) {
                os << "*tr(g^" << j << ")";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<Monomial, Rational> terms_;
};

} // namespace cvf
