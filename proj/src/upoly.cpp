#include "zscheme/upoly.hpp"

#include <sstream>

#include "zscheme/error.hpp"

namespace zscheme {

UPoly UPoly::term(Rational c, int k) {
    UPoly p;
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<std::size_t>(k) + 1, Rational(0));
    p.c_[static_cast<std::size_t>(k)] = std::move(c);
    return p;
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
}

UPoly UPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return UPoly();
    UPoly r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) throw Error(Errc::BadInput, "univariate division by zero");
    const UPoly divisor = b; // alias-safe: q or r may be a or b
    UPoly quot;
    UPoly rem = a;
    const int db = divisor.degree();
    const Rational lb = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= db) {
        const int k = rem.degree() - db;
        const Rational c = rem.leading() / lb;
        quot += term(c, k);
        rem -= divisor.scaled(c) * term(Rational(1), k);
    }
    q = std::move(quot);
    r = std::move(rem);
}

UPoly UPoly::div_exact(const UPoly& b) const {
    UPoly q, r;
    divmod(*this, b, q, r);
    if (!r.is_zero()) throw Error(Errc::BadInput, "inexact univariate division");
    return q;
}

bool UPoly::divides(const UPoly& a) const {
    if (is_zero()) return a.is_zero();
    UPoly q, r;
    divmod(a, *this, q, r);
    return r.is_zero();
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly q, r;
        divmod(x, y, q, r);
        x = y;
        y = r.is_zero() ? r : r.monic(); // keep coefficients small
    }
    return x.is_zero() ? x : x.monic();
}

UPoly UPoly::lcm(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    return (a * b).div_exact(gcd(a, b)).monic();
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Rational> r(c_.size() - 1, Rational(0));
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

UPoly UPoly::squarefree_part() const {
    if (is_zero()) return *this;
    UPoly g = gcd(*this, derivative());
    return div_exact(g).monic();
}

Rational UPoly::eval(const Rational& x) const {
    Rational r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

UPoly UPoly::pow(unsigned e) const {
    UPoly r = one();
    UPoly base = *this;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

UPoly UPoly::inflate(int k) const {
    if (is_zero() || k == 1) return *this;
    std::vector<Rational> r(static_cast<std::size_t>(degree() * k) + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * static_cast<std::size_t>(k)] = c_[i];
    return UPoly(std::move(r));
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        Rational c = c_[i];
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        if (i == 0) {
            os << c.str();
        } else {
            if (!c.is_one()) os << c.str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace zscheme
