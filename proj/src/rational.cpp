#include "zscheme/rational.hpp"

#include "zscheme/error.hpp"

namespace zscheme {

Rational Rational::parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw Error(Errc::BadInput, "not a rational literal: '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(Errc::BadInput, "rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error(Errc::BadInput, "inverse of zero");
    return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(unsigned long e) const {
    mpq_class r(1);
    mpq_class base = q_;
    unsigned long k = e;
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return Rational(r);
}

std::size_t Rational::bit_size() const {
    std::size_t n = mpz_sizeinbase(q_.get_num().get_mpz_t(), 2);
    std::size_t d = mpz_sizeinbase(q_.get_den().get_mpz_t(), 2);
    return n > d ? n : d;
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpz_class n, d;
    mpz_gcd(n.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
    mpz_lcm(d.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
    return Rational(mpq_class(n, d));
}

} // namespace zscheme
