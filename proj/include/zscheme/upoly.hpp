#pragma once

#include <string>
#include <vector>

#include "zscheme/rational.hpp"

namespace zscheme {

/// Dense univariate polynomial over the rationals. Coefficient i belongs to
/// t^i; no trailing zeros are stored, so the zero polynomial has no terms.
class UPoly {
public:
    UPoly() = default;
    UPoly(Rational c) { c_.push_back(std::move(c)); trim(); }
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly zero() { return UPoly(); }
    static UPoly one() { return UPoly(Rational(1)); }
    /// c * t^k
    static UPoly term(Rational c, int k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const Rational& leading() const { return c_.back(); }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly& operator*=(const UPoly& o) { *this = *this * o; return *this; }

    UPoly scaled(const Rational& c) const;
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    /// Quotient and remainder; divisor must be nonzero.
    static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
    /// Exact quotient; throws if the division leaves a remainder.
    UPoly div_exact(const UPoly& b) const;
    bool divides(const UPoly& a) const;

    /// Monic gcd; gcd(0, 0) = 0.
    static UPoly gcd(const UPoly& a, const UPoly& b);
    static UPoly lcm(const UPoly& a, const UPoly& b);

    UPoly derivative() const;
    UPoly monic() const;
    /// p / gcd(p, p'); degree counts distinct roots over the algebraic closure.
    UPoly squarefree_part() const;

    Rational eval(const Rational& x) const;
    UPoly pow(unsigned e) const;

    /// Substitute t -> t^k (k >= 1).
    UPoly inflate(int k) const;

    std::string str(const std::string& var = "t") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

} // namespace zscheme
