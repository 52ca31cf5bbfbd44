#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cvf/sampling.hpp"

using namespace cvf;

TEST_CASE("SL(n) samples have determinant exactly 1") {
    for (int n : {2, 3, 4}) {
        SamplePlan plan;
        plan.count = 8;
        plan.seed = 42;
        for (const auto& g : sample_slg(plan, n)) {
            CHECK(g.dim() == n);
            CHECK(determinant(g) == Rational(1));
        }
    }
}

TEST_CASE("transvection product example") {
    auto t1 = SquareMatrix<Rational>::of(2, {Rational(1), Rational(2), Rational(0), Rational(1)});
    auto t2 = SquareMatrix<Rational>::of(2, {Rational(1), Rational(0), Rational(3), Rational(1)});
    auto prod = t1 * t2;
    CHECK(prod == SquareMatrix<Rational>::of(2, {Rational(7), Rational(2), Rational(3), Rational(1)}));
    CHECK(determinant(prod) == Rational(1));
}

TEST_CASE("same plan yields identical sequences") {
    SamplePlan plan;
    plan.seed = 777;
    plan.count = 5;
    CHECK(sample_slg(plan, 3) == sample_slg(plan, 3));
    CHECK(sample_direction(plan, 3) == sample_direction(plan, 3));
    SamplePlan other = plan;
    other.seed = 778;
    CHECK(sample_slg(other, 3) != sample_slg(plan, 3));
}

TEST_CASE("directions are traceless") {
    for (int n : {2, 3, 4}) {
        SamplePlan plan;
        plan.count = 8;
        for (const auto& x : sample_direction(plan, n))
            CHECK(trace(x) == Rational(0));
    }
}

TEST_CASE("borel points") {
    CHECK(BorelPoint{Rational(1), Rational(0)}.matrix() == SquareMatrix<Rational>::identity(2));
    auto m = BorelPoint{Rational(2), Rational(1)}.matrix();
    CHECK(m == SquareMatrix<Rational>::of(2, {Rational(2), Rational(1), Rational(0), Rational(1, 2)}));
    CHECK(determinant(m) == Rational(1));
}

TEST_CASE("borel grid rejects duplicates and zero") {
    CHECK_THROWS_AS(borel_grid({Rational(2), Rational(2)}, Rational(1)), DuplicateNode);
    CHECK_THROWS_AS(borel_grid({Rational(0)}, Rational(1)), Error);
}

TEST_CASE("grid of distinct x gives distinct traces away from x <-> 1/x") {
    auto grid = borel_grid({Rational(2), Rational(3), Rational(5), Rational(7), Rational(1, 2)},
                           Rational(1));
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = i + 1; j < grid.size(); ++j) {
            Rational ti = trace(grid[i].matrix());
            Rational tj = trace(grid[j].matrix());
            bool mirror = grid[i].x == grid[j].x.inverse();
            if (mirror)
                CHECK(ti == tj);
            else
                CHECK(ti != tj);
        }
}

TEST_CASE("prime nodes are pairwise distinct primes") {
    auto primes = first_primes(30);
    CHECK(primes[0] == 2);
    CHECK(primes[9] == 29);
    for (std::size_t i = 0; i + 1 < primes.size(); ++i) CHECK(primes[i] < primes[i + 1]);
}
