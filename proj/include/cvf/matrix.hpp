#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "cvf/jet.hpp"

namespace cvf {

// Square matrix over a commutative ring R (Rational or a jet tower).
// Dimension is fixed at construction; all binary operations require equal
// dimensions. Intended for n <= 8.
template <class R>
class SquareMatrix {
public:
    explicit SquareMatrix(int n)
        : n_(n), e_(static_cast<std::size_t>(n) * n, RingTraits<R>::zero()) {
        if (n < 1) throw Error("matrix dimension must be >= 1");
        if (n > 8) throw Error("matrix dimension > 8 is unsupported");
    }

    static SquareMatrix identity(int n) {
        SquareMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = RingTraits<R>::one();
        return m;
    }

    static SquareMatrix zero(int n) { return SquareMatrix(n); }

    // Row-major initializer, e.g. SquareMatrix<Rational>::of(2, {1,1,0,1}).
    static SquareMatrix of(int n, std::initializer_list<R> entries) {
        SquareMatrix m(n);
        if (entries.size() != static_cast<std::size_t>(n) * n)
            throw Error("matrix initializer size mismatch");
        std::size_t i = 0;
        for (const R& v : entries) m.e_[i++] = v;
        return m;
    }

    int dim() const { return n_; }

    R& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const R& operator()(int i, int j) const {
        return e_[static_cast<std::size_t>(i) * n_ + j];
    }

    SquareMatrix& operator+=(const SquareMatrix& o) {
        check_dim(o);
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] = e_[i] + o.e_[i];
        return *this;
    }
    SquareMatrix& operator-=(const SquareMatrix& o) {
        check_dim(o);
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] = e_[i] - o.e_[i];
        return *this;
    }

    friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
    friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }

    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        a.check_dim(b);
        const int n = a.n_;
        SquareMatrix c(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const R& aik = a(i, k);
                if (ring_is_zero(aik)) continue;
                for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    SquareMatrix operator-() const {
        SquareMatrix m(n_);
        for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
        return m;
    }

    friend SquareMatrix operator*(const R& s, SquareMatrix m) {
        for (auto& v : m.e_) v = s * v;
        return m;
    }

    SquareMatrix scaled(const Rational& q) const {
        return RingTraits<R>::from_rational(q) * (*this);
    }

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const SquareMatrix& a, const SquareMatrix& b) {
        return !(a == b);
    }

    bool is_zero() const {
        for (const auto& v : e_)
            if (!ring_is_zero(v)) return false;
        return true;
    }

    friend std::ostream& operator<<(std::ostream& os, const SquareMatrix& m) {
        os << "[";
        for (int i = 0; i < m.n_; ++i) {
            os << (i ? "; " : "");
            for (int j = 0; j < m.n_; ++j) os << (j ? ", " : "") << m(i, j);
        }
        return os << "]";
    }

private:
    void check_dim(const SquareMatrix& o) const {
        if (n_ != o.n_) throw Error("matrix dimension mismatch");
    }

    int n_;
    std::vector<R> e_;
};

template <class R> R trace(const SquareMatrix<R>& m) {
    R t = RingTraits<R>::zero();
    for (int i = 0; i < m.dim(); ++i) t = t + m(i, i);
    return t;
}

// Laplace expansion. Division-free, so it works verbatim over jet rings;
// fine for the n <= 4 sizes this project evaluates at.
template <class R> R determinant(const SquareMatrix<R>& m) {
    const int n = m.dim();
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    R det = RingTraits<R>::zero();
    for (int j = 0; j < n; ++j) {
        if (ring_is_zero(m(0, j))) continue;
        SquareMatrix<R> minor(n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        R term = m(0, j) * determinant(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

template <class R> SquareMatrix<R> adjugate(const SquareMatrix<R>& m) {
    const int n = m.dim();
    SquareMatrix<R> adj(n);
    if (n == 1) {
        adj(0, 0) = RingTraits<R>::one();
        return adj;
    }
    SquareMatrix<R> minor(n - 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int rr = 0;
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                int cc = 0;
                for (int c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(rr, cc++) = m(r, c);
                }
                ++rr;
            }
            R cof = determinant(minor);
            adj(j, i) = ((i + j) % 2 == 0) ? cof : -cof; // transposed cofactor
        }
    }
    return adj;
}

// Inverse as adjugate over determinant: needs only that det is a unit in R,
// which holds for jet-valued SL(n) points (the body of det is 1).
template <class R> SquareMatrix<R> inverse_adjugate(const SquareMatrix<R>& m) {
    R det = determinant(m);
    if (ring_is_zero(det)) throw NonInvertible("singular matrix");
    return ring_invert(det) * adjugate(m);
}

template <class R> SquareMatrix<R> power(const SquareMatrix<R>& g, long k) {
    if (k == 0) return SquareMatrix<R>::identity(g.dim());
    SquareMatrix<R> base = k > 0 ? g : inverse_adjugate(g);
    unsigned long e = k > 0 ? static_cast<unsigned long>(k)
                            : static_cast<unsigned long>(-k);
    SquareMatrix<R> acc = SquareMatrix<R>::identity(g.dim());
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

template <class R>
SquareMatrix<R> commutator(const SquareMatrix<R>& a, const SquareMatrix<R>& b) {
    return a * b - b * a;
}

// Normalized anti-commutator {a,b} = (ab + ba)/2.
template <class R>
SquareMatrix<R> anticommutator(const SquareMatrix<R>& a, const SquareMatrix<R>& b) {
    return (a * b + b * a).scaled(Rational(1, 2));
}

// Entrywise lift of a rational matrix into a jet ring (or identity for R = Rational).
template <class R>
SquareMatrix<R> lift_matrix(const SquareMatrix<Rational>& m) {
    SquareMatrix<R> out(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            out(i, j) = RingTraits<R>::from_rational(m(i, j));
    return out;
}

// e_{ij} elementary matrix.
template <class R> SquareMatrix<R> unit_matrix(int n, int i, int j) {
    SquareMatrix<R> m(n);
    m(i, j) = RingTraits<R>::one();
    return m;
}

} // namespace cvf
