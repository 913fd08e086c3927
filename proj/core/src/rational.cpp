#include "nwvoa/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace nwvoa {

void Rational::normalize() {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    if (num_ == 0) { den_ = 1; return; }
    Int g = gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
}

Int Rational::floor() const {
    Int q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
}

Rational& Rational::operator+=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) { // integer fast path, no gcd needed
        num_ += o.num_;
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
        num_ -= o.num_;
        return *this;
    }
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    if (num_ == 0) return *this;
    if (o.num_ == 0) { num_ = 0; den_ = 1; return *this; }
    if (den_ == 1 && o.den_ == 1) {
        num_ *= o.num_;
        return *this;
    }
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

Rational Rational::inverse() const {
    if (num_ == 0) throw std::invalid_argument("Rational: inverse of zero");
    return Rational(den_, num_);
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        return Rational(n, d);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
}

Int binomial(const Int& top, long k) {
    if (k < 0) return 0;
    Int num = 1, den = 1;
    for (long s = 0; s < k; ++s) {
        num *= top - s;
        den *= s + 1;
    }
    return num / den; // always exact
}

long to_long(const Int& v) {
    if (v > std::numeric_limits<long>::max() || v < std::numeric_limits<long>::min())
        throw std::overflow_error("Int does not fit in long");
    return static_cast<long>(v);
}

} // namespace nwvoa
