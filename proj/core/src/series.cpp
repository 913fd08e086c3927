#include "nwvoa/series.hpp"

#include <stdexcept>

namespace nwvoa {

BigradedSeries BigradedSeries::one(long max_h, Rational offset) {
    BigradedSeries s(max_h, std::move(offset));
    s.set(0, 0, 1);
    return s;
}

Int BigradedSeries::coeff(long h, long j) const {
    auto it = terms_.find({h, j});
    return it == terms_.end() ? Int(0) : it->second;
}

void BigradedSeries::set(long h, long j, Int c) {
    if (h < 0) throw std::invalid_argument("BigradedSeries: negative h");
    if (h > max_h_) return;
    if (c == 0)
        terms_.erase({h, j});
    else
        terms_[{h, j}] = std::move(c);
}

void BigradedSeries::add(long h, long j, const Int& c) { set(h, j, coeff(h, j) + c); }

Int BigradedSeries::coeff_q(long h) const {
    Int total = 0;
    for (auto it = terms_.lower_bound({h, std::numeric_limits<long>::min()});
         it != terms_.end() && it->first.first == h; ++it)
        total += it->second;
    return total;
}

BigradedSeries& BigradedSeries::operator+=(const BigradedSeries& o) {
    if (!(offset_ == o.offset_))
        throw std::invalid_argument("BigradedSeries: offset mismatch in addition");
    max_h_ = std::min(max_h_, o.max_h_);
    std::map<Key, Int> kept;
    for (auto& [k, c] : terms_)
        if (k.first <= max_h_) kept.emplace(k, c);
    terms_ = std::move(kept);
    for (auto& [k, c] : o.terms_)
        if (k.first <= max_h_) add(k.first, k.second, c);
    return *this;
}

BigradedSeries operator*(const BigradedSeries& a, const BigradedSeries& b) {
    BigradedSeries out(std::min(a.max_h_, b.max_h_), a.offset_ + b.offset_);
    for (auto& [ka, ca] : a.terms_) {
        if (ka.first > out.max_h_) continue;
        for (auto& [kb, cb] : b.terms_) {
            long h = ka.first + kb.first;
            if (h > out.max_h_) continue;
            out.add(h, ka.second + kb.second, ca * cb);
        }
    }
    return out;
}

bool operator==(const BigradedSeries& a, const BigradedSeries& b) {
    if (!(a.offset_ == b.offset_)) return false;
    long bound = std::min(a.max_h_, b.max_h_);
    for (auto& [k, c] : a.terms_)
        if (k.first <= bound && !(b.coeff(k.first, k.second) == c)) return false;
    for (auto& [k, c] : b.terms_)
        if (k.first <= bound && !(a.coeff(k.first, k.second) == c)) return false;
    return true;
}

BigradedSeries partition_series(int colors, long max_h) {
    BigradedSeries s = BigradedSeries::one(max_h);
    // multiply by (1-q^j)^{-1} = 1 + q^j + q^{2j} + ... one color at a time
    for (int c = 0; c < colors; ++c) {
        for (long j = 1; j <= max_h; ++j) {
            BigradedSeries geo(max_h);
            for (long k = 0; j * k <= max_h; ++k) geo.set(j * k, 0, 1);
            s = s * geo;
        }
    }
    return s;
}

BigradedSeries times_one_minus_qp(const BigradedSeries& s, long p) {
    BigradedSeries factor(s.max_h(), Rational(0));
    factor.set(0, 0, 1);
    if (p <= s.max_h()) factor.set(p, 0, -1);
    return s * factor;
}

} // namespace nwvoa
