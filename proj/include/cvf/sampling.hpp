#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "cvf/matrix.hpp"

namespace cvf {

// Reproducible sample request: identical plans yield identical sequences.
struct SamplePlan {
    std::uint64_t seed = 42;
    int count = 10;
    int height_bound = 5; // max |numerator| and denominator of drawn parameters
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Small counter-based stream: the state is a pure function of
// (seed, tag, index), so samples can be generated independently and in any
// order with identical results.
class Stream {
public:
    Stream(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
        std::uint64_t h = seed;
        for (char c : tag) h = splitmix64(h ^ static_cast<std::uint64_t>(c));
        state_ = splitmix64(h ^ (0x517cc1b727220a95ULL * (index + 1)));
    }

    std::uint64_t next() { return state_ = splitmix64(state_); }

    // Uniform-ish draw in [0, m); m is tiny so modulo bias is irrelevant here.
    long below(long m) { return static_cast<long>(next() % static_cast<std::uint64_t>(m)); }

    long int_in(long lo, long hi) { return lo + below(hi - lo + 1); }

    Rational nonzero_rational(int height) {
        long num = 0;
        while (num == 0) num = int_in(-height, height);
        long den = int_in(1, height);
        return Rational(num, den);
    }

    Rational rational(int height) {
        return Rational(int_in(-height, height), int_in(1, height));
    }

private:
    std::uint64_t state_;
};

} // namespace detail

// SL(n,Q) sample: product of 2n elementary transvections 1 + c*E_{ij}, i != j.
// Determinant is exactly 1 by construction and entries stay height-controlled.
inline std::vector<SquareMatrix<Rational>> sample_slg(const SamplePlan& plan, int n) {
    if (n < 2) throw Error("sample_slg: dimension must be >= 2");
    std::vector<SquareMatrix<Rational>> out;
    out.reserve(static_cast<std::size_t>(plan.count));
    for (int s = 0; s < plan.count; ++s) {
        detail::Stream st(plan.seed, "slg", (static_cast<std::uint64_t>(n) << 32) + s);
        SquareMatrix<Rational> g = SquareMatrix<Rational>::identity(n);
        for (int t = 0; t < 2 * n; ++t) {
            int i = static_cast<int>(st.below(n));
            int j = static_cast<int>(st.below(n - 1));
            if (j >= i) ++j;
            SquareMatrix<Rational> tv = SquareMatrix<Rational>::identity(n);
            tv(i, j) = st.nonzero_rational(plan.height_bound);
            g = g * tv;
        }
        out.push_back(g);
    }
    return out;
}

// Traceless rational directions: random combinations of E_{ij} (i != j) and
// E_{ii} - E_{i+1,i+1}.
inline std::vector<SquareMatrix<Rational>> sample_direction(const SamplePlan& plan, int n) {
    if (n < 2) throw Error("sample_direction: dimension must be >= 2");
    std::vector<SquareMatrix<Rational>> out;
    out.reserve(static_cast<std::size_t>(plan.count));
    for (int s = 0; s < plan.count; ++s) {
        detail::Stream st(plan.seed, "dir", (static_cast<std::uint64_t>(n) << 32) + s);
        SquareMatrix<Rational> x(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                x(i, j) = st.rational(plan.height_bound);
            }
        for (int i = 0; i + 1 < n; ++i) {
            Rational c = st.rational(plan.height_bound);
            x(i, i) += c;
            x(i + 1, i + 1) -= c;
        }
        out.push_back(x);
    }
    return out;
}

// Point [[x, b], [0, 1/x]] of the SL(2) Borel subgroup; b = 0 lands on the torus.
struct BorelPoint {
    Rational x;
    Rational b;

    SquareMatrix<Rational> matrix() const {
        SquareMatrix<Rational> m(2);
        m(0, 0) = x;
        m(0, 1) = b;
        m(1, 1) = x.inverse();
        return m;
    }
};

inline SquareMatrix<Rational> torus_point(const Rational& x) {
    return BorelPoint{x, Rational(0)}.matrix();
}

inline std::vector<BorelPoint> borel_grid(const std::vector<Rational>& x_values,
                                          const Rational& b) {
    for (std::size_t i = 0; i < x_values.size(); ++i) {
        if (x_values[i].is_zero())
            throw Error("borel_grid: torus coordinate must be nonzero");
        for (std::size_t j = i + 1; j < x_values.size(); ++j)
            if (x_values[i] == x_values[j])
                throw DuplicateNode("borel_grid: repeated x value " + x_values[i].str());
    }
    std::vector<BorelPoint> out;
    out.reserve(x_values.size());
    for (const auto& x : x_values) out.push_back(BorelPoint{x, b});
    return out;
}

// First `count` primes, used as interpolation nodes: distinct primes > 1 can
// never collide under x <-> 1/x and give pairwise distinct traces x + 1/x.
inline std::vector<long> first_primes(int count) {
    std::vector<long> primes;
    primes.reserve(static_cast<std::size_t>(count));
    long candidate = 2;
    while (static_cast<int>(primes.size()) < count) {
        bool is_prime = true;
        for (long p : primes) {
            if (p * p > candidate) break;
            if (candidate % p == 0) {
                is_prime = false;
                break;
            }
        }
        if (is_prime) primes.push_back(candidate);
        ++candidate;
    }
    return primes;
}

inline std::vector<Rational> prime_nodes(int count) {
    std::vector<Rational> out;
    for (long p : first_primes(count)) out.push_back(Rational(p));
    return out;
}

} // namespace cvf
