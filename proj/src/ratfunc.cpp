#include "zscheme/ratfunc.hpp"

#include "zscheme/error.hpp"

namespace zscheme {

RatFunc::RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(Errc::BadInput, "rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = UPoly::one();
        return;
    }
    UPoly g = UPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.div_exact(g);
        den_ = den_.div_exact(g);
    }
    const Rational lc = den_.leading();
    if (!lc.is_one()) {
        const Rational inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

UPoly RatFunc::poly() const {
    if (!is_polynomial())
        throw Error(Errc::NonpolynomialTrace, "denominator did not clear: " + str());
    return num_.scaled(den_.leading().inverse());
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw Error(Errc::BadInput, "rational function division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw Error(Errc::BadInput, "inverse of zero rational function");
    return RatFunc(den_, num_);
}

Rational RatFunc::eval(const Rational& v0) const {
    const Rational d = den_.eval(v0);
    if (d.is_zero()) throw Error(Errc::BadInput, "pole of rational function at v = " + v0.str());
    return num_.eval(v0) / d;
}

std::string RatFunc::str(const std::string& var) const {
    if (is_polynomial()) return poly().str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

} // namespace zscheme
