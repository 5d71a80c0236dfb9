#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace zscheme {

/// Exact rational number, always reduced, denominator > 0, zero is 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d) : q_(n, d) { q_.canonicalize(); }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p" or "p/q" (arbitrary precision).
    static Rational parse(const std::string& s);

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

    Rational inverse() const;
    Rational pow(unsigned long e) const;
    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    bool is_integer() const { return q_.get_den() == 1; }
    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    /// Larger of the numerator/denominator bit lengths; used for report stats.
    std::size_t bit_size() const;

    std::string str() const;

private:
    mpq_class q_;
};

/// gcd of numerators over lcm of denominators; gcd(0, x) = |x|.
Rational rational_gcd(const Rational& a, const Rational& b);

} // namespace zscheme
