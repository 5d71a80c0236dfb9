#pragma once

#include <string>

#include "zscheme/upoly.hpp"

namespace zscheme {

/// Element of Q(v): quotient of univariate polynomials, gcd-normalized,
/// monic denominator. Zero is 0/1.
class RatFunc {
public:
    RatFunc() : num_(), den_(UPoly::one()) {}
    RatFunc(Rational c) : num_(UPoly(std::move(c))), den_(UPoly::one()) {}
    RatFunc(long n) : RatFunc(Rational(n)) {}
    RatFunc(UPoly num) : num_(std::move(num)), den_(UPoly::one()) {}
    RatFunc(UPoly num, UPoly den);

    static RatFunc v() { return RatFunc(UPoly::term(Rational(1), 1)); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.degree() == 0 && num_ == den_; }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_polynomial() const { return den_.degree() == 0; }
    /// The numerator as a polynomial; valid only when is_polynomial().
    UPoly poly() const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
    RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inverse() const;
    Rational eval(const Rational& v0) const; // throws SINGULAR_J_AT_FIBER-free BadInput on pole

    std::string str(const std::string& var = "v") const;

private:
    void normalize();
    UPoly num_, den_;
};

} // namespace zscheme
