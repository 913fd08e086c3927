#ifndef NWVOA_SERIES_HPP
#define NWVOA_SERIES_HPP

#include "nwvoa/rational.hpp"

#include <map>
#include <utility>

namespace nwvoa {

/* Truncated character series  q^{offset} * sum_{h,j} c_{h,j} q^h z^j  with
 * exact integer coefficients, h a nonnegative integer, j an integer charge.
 * The truncation bound max_h travels with the value; equality and arithmetic
 * only ever consult coefficients with h <= max_h. */
class BigradedSeries {
public:
    using Key = std::pair<long, long>; // (h, j)

    explicit BigradedSeries(long max_h, Rational offset = Rational(0))
        : offset_(std::move(offset)), max_h_(max_h) {}

    static BigradedSeries one(long max_h, Rational offset = Rational(0));

    long max_h() const { return max_h_; }
    const Rational& offset() const { return offset_; }
    const std::map<Key, Int>& terms() const { return terms_; }

    Int coeff(long h, long j = 0) const;
    void set(long h, long j, Int c);
    void add(long h, long j, const Int& c);

    /* Sum of coefficients over j at fixed h (the single-variable character). */
    Int coeff_q(long h) const;

    BigradedSeries& operator+=(const BigradedSeries& o);
    friend BigradedSeries operator+(BigradedSeries a, const BigradedSeries& b) { return a += b; }

    /* Convolution; offsets add, bound is the min of the input bounds. */
    friend BigradedSeries operator*(const BigradedSeries& a, const BigradedSeries& b);

    /* Truncated equality up to min(max_h) of the two sides. */
    friend bool operator==(const BigradedSeries& a, const BigradedSeries& b);

private:
    Rational offset_;
    long max_h_;
    std::map<Key, Int> terms_;
};

/* prod_{j>=1} (1 - q^j)^{-k}, truncated: the k-colored partition series. */
BigradedSeries partition_series(int colors, long max_h);

/* (1 - q^p) * s, truncated at s.max_h(). */
BigradedSeries times_one_minus_qp(const BigradedSeries& s, long p);

} // namespace nwvoa

#endif
