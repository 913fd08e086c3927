#include "nwvoa/series.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace nwvoa;

namespace {

/* Independent oracle: the number of pairs of partitions (p1, p2) with
 * |p1| + |p2| = n, by direct enumeration. */
long count_partitions(long n, long max_part) {
    if (n == 0) return 1;
    long total = 0;
    for (long p = std::min(n, max_part); p >= 1; --p) total += count_partitions(n - p, p);
    return total;
}

long partition_pairs(long n) {
    long total = 0;
    for (long a = 0; a <= n; ++a)
        total += count_partitions(a, a == 0 ? 1 : a) * count_partitions(n - a, n - a == 0 ? 1 : n - a);
    return total;
}

BigradedSeries random_series(std::mt19937& rng, long max_h) {
    std::uniform_int_distribution<int> coef(-3, 3), charge(-2, 2);
    BigradedSeries s(max_h);
    for (long h = 0; h <= max_h; ++h)
        for (int t = 0; t < 2; ++t) s.add(h, charge(rng), coef(rng));
    return s;
}

} // namespace

TEST_CASE("polynomial square") {
    BigradedSeries one_q(5);
    one_q.set(0, 0, 1);
    one_q.set(1, 0, 1);
    BigradedSeries sq = one_q * one_q;
    CHECK(sq.coeff(0, 0) == 1);
    CHECK(sq.coeff(1, 0) == 2);
    CHECK(sq.coeff(2, 0) == 1);
}

TEST_CASE("two-colored partition series against the brute-force count") {
    // oracle first: freeze the counts, then compare the series machinery
    std::vector<long> expect;
    for (long n = 0; n <= 6; ++n) expect.push_back(partition_pairs(n));
    CHECK(expect[0] == 1);
    CHECK(expect[1] == 2);
    CHECK(expect[2] == 5);
    CHECK(expect[3] == 10);

    BigradedSeries s = partition_series(2, 6);
    for (long n = 0; n <= 6; ++n) CHECK(s.coeff(n, 0) == Int(expect[n]));
}

TEST_CASE("(1-q) times the partition-pair series") {
    BigradedSeries s = times_one_minus_qp(partition_series(2, 2), 1);
    CHECK(s.coeff(0, 0) == 1);
    CHECK(s.coeff(1, 0) == 1);
    CHECK(s.coeff(2, 0) == 3);
}

TEST_CASE("product truncates to the smaller bound and adds offsets") {
    BigradedSeries a(4, Rational(1, 3));
    a.set(0, 0, 1);
    a.set(4, 1, 7);
    BigradedSeries b(2, Rational(1, 6));
    b.set(0, 0, 1);
    BigradedSeries p = a * b;
    CHECK(p.max_h() == 2);
    CHECK(p.offset() == Rational(1, 2));
    CHECK(p.coeff(4, 1) == 0);
}

TEST_CASE("multiplication is commutative and associative up to truncation") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 20; ++trial) {
        BigradedSeries a = random_series(rng, 5);
        BigradedSeries b = random_series(rng, 5);
        BigradedSeries c = random_series(rng, 5);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("addition requires matching offsets") {
    BigradedSeries a(3, Rational(1, 2));
    BigradedSeries b(3, Rational(1, 3));
    CHECK_THROWS_AS(a += b, std::invalid_argument);
}
