#ifndef NWVOA_RATIONAL_HPP
#define NWVOA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace nwvoa {

using Int = boost::multiprecision::cpp_int;

/* Exact rational scalar.  Always stored reduced with positive denominator;
 * every coefficient, eigenvalue and central charge in the library is one of
 * these.  No floating point anywhere. */
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    /* Floor, fractional part in [0,1), and integrality tests used by the
     * congruence predicates lambda = y/(x-1) mod Z. */
    Int floor() const;
    Rational frac() const { return *this - Rational(floor()); }

    Rational operator-() const { return Rational(-num_, den_, no_normalize{}); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.den_ == b.den_) // reduced forms with equal denominators
            return a.num_ < b.num_   ? std::strong_ordering::less
                   : a.num_ > b.num_ ? std::strong_ordering::greater
                                     : std::strong_ordering::equal;
        Int lhs = a.num_ * b.den_, rhs = b.num_ * a.den_;
        return lhs < rhs ? std::strong_ordering::less
             : lhs > rhs ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
    }

    Rational inverse() const;

    /* Canonical form "p" or "p/q" with q > 1; parse accepts both. */
    std::string str() const;
    static Rational parse(const std::string& s);

private:
    struct no_normalize {};
    Rational(Int n, Int d, no_normalize) : num_(std::move(n)), den_(std::move(d)) {}
    void normalize();

    Int num_;
    Int den_;
};

inline Rational operator*(int a, const Rational& b) { return Rational(a) * b; }

/* binom(t, k) for integer t (possibly negative), k >= 0. */
Int binomial(const Int& top, long k);

/* gcd-reduced long cast that throws if the value does not fit. */
long to_long(const Int& v);

} // namespace nwvoa

#endif
