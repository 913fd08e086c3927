#include "nwvoa/matrix.hpp"

#include <doctest.h>

#include <random>

using namespace nwvoa;

TEST_CASE("kernel of the identity is trivial") {
    MatrixQ m(2, 2);
    m.at(0, 0) = Rational(1);
    m.at(1, 1) = Rational(1);
    CHECK(m.kernel_basis().empty());
    CHECK(m.rank() == 2);
}

TEST_CASE("kernel of the zero map is everything") {
    MatrixQ m(2, 3);
    CHECK(m.kernel_basis().size() == 3);
    CHECK(m.rank() == 0);
}

TEST_CASE("the 2x2 singular-vector system at (x,y) = (0,1)") {
    // [[2y, x-2],[x, 0]] at (0,1): solve 2a - 2b = 0 by hand -> span{(1,1)}
    MatrixQ m(2, 2);
    m.at(0, 0) = Rational(2);
    m.at(0, 1) = Rational(-2);
    auto k = m.kernel_basis();
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == k[0][1]);
    CHECK(!k[0][0].is_zero());
}

TEST_CASE("rank plus nullity equals the column count") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> entry(-4, 4), dim(1, 6);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r = dim(rng), c = dim(rng);
        MatrixQ m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(entry(rng), 1 + (trial % 3));
        auto kernel = m.kernel_basis();
        CHECK(m.rank() + kernel.size() == c);
        for (auto& v : kernel) {
            VectorQ img = m.apply(v);
            for (auto& e : img) CHECK(e.is_zero());
        }
    }
}

TEST_CASE("solve returns an exact solution or reports inconsistency") {
    MatrixQ m(2, 2);
    m.at(0, 0) = Rational(2);
    m.at(0, 1) = Rational(1);
    m.at(1, 0) = Rational(1);
    m.at(1, 1) = Rational(1);
    auto x = m.solve({Rational(5), Rational(3)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rational(2));
    CHECK((*x)[1] == Rational(1));

    MatrixQ s(2, 1);
    s.at(0, 0) = Rational(1);
    s.at(1, 0) = Rational(1);
    CHECK(!s.solve({Rational(1), Rational(2)}).has_value());
}

TEST_CASE("deterministic pivoting gives reproducible kernels") {
    MatrixQ m(1, 3);
    m.at(0, 1) = Rational(1);
    auto k1 = m.kernel_basis();
    auto k2 = m.kernel_basis();
    CHECK(k1 == k2);
    REQUIRE(k1.size() == 2);
    CHECK(k1[0][0] == Rational(1)); // free columns visited in increasing order
    CHECK(k1[1][2] == Rational(1));
}
