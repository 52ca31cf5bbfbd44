#pragma once

#include <vector>

#include "cvf/rational.hpp"

namespace cvf {

// Rectangular matrix of exact rationals, row major.
using QMatrix = std::vector<std::vector<Rational>>;

namespace detail {

inline mpz_class vec_den_lcm(const std::vector<Rational>& row) {
    mpz_class l(1);
    for (const auto& v : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.denominator().get_mpz_t());
    return l;
}

} // namespace detail

// Exact nullspace basis via fraction-free (Bareiss) elimination. Rows are
// scaled integral first; the two-term update keeps intermediate entries
// integral, and the back substitution is plain rational arithmetic.
inline std::vector<std::vector<Rational>> nullspace(const QMatrix& input) {
    const std::size_t rows = input.size();
    const std::size_t cols = rows == 0 ? 0 : input[0].size();
    for (const auto& r : input)
        if (r.size() != cols) throw Error("nullspace: ragged matrix");

    QMatrix m = input;
    for (auto& row : m) {
        Rational scale{detail::vec_den_lcm(row)};
        for (auto& v : row) v *= scale;
    }

    std::vector<std::size_t> pivot_col;
    Rational prev(1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        const Rational p = m[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = (p * m[i][j] - m[i][col] * m[rank][j]) / prev;
            m[i][col] = Rational(0);
        }
        prev = p;
        pivot_col.push_back(col);
        ++rank;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free_col] = Rational(1);
        for (std::size_t r = rank; r-- > 0;) {
            std::size_t pc = pivot_col[r];
            Rational s(0);
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (!v[j].is_zero()) s += m[r][j] * v[j];
            v[pc] = -s / m[r][pc];
        }
        // canonical scaling: integral, coprime, first nonzero entry positive
        mpz_class den_lcm(1), num_gcd(0);
        for (const auto& x : v) {
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.denominator().get_mpz_t());
        }
        for (auto& x : v) x *= Rational(den_lcm);
        for (const auto& x : v)
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.numerator().get_mpz_t());
        if (num_gcd != 0)
            for (auto& x : v) x /= Rational(num_gcd);
        for (const auto& x : v) {
            if (x.is_zero()) continue;
            if (x.sign() < 0)
                for (auto& y : v) y = -y;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::size_t matrix_rank(const QMatrix& input) {
    const std::size_t cols = input.empty() ? 0 : input[0].size();
    return cols - nullspace(input).size();
}

} // namespace cvf
