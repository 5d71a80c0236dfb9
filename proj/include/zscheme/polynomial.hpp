#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "zscheme/error.hpp"
#include "zscheme/ratfunc.hpp"
#include "zscheme/rational.hpp"
#include "zscheme/ring.hpp"

namespace zscheme {

enum class DegreeKind { ZeroPoly, Homogeneous, Mixed };

struct DegreeInfo {
    DegreeKind kind;
    long long degree = 0; // meaningful only when kind == Homogeneous
    bool homogeneous_of(long long d) const { return kind == DegreeKind::Homogeneous && degree == d; }
};

namespace detail {
inline std::string coeff_str(const Rational& c) { return c.str(); }
inline std::string coeff_str(const RatFunc& c) {
    if (c.is_polynomial() && c.num().degree() <= 0) return c.poly().str("v");
    return "(" + c.str("v") + ")";
}
inline bool coeff_is_pm_one(const Rational& c) { return c.is_one() || (-c).is_one(); }
inline bool coeff_is_pm_one(const RatFunc& c) { return c.is_one() || (-c).is_one(); }
inline bool coeff_negative(const Rational& c) { return c.sign() < 0; }
inline bool coeff_negative(const RatFunc& c) {
    return c.num().is_zero() ? false : c.num().leading().sign() < 0;
}
} // namespace detail

/// Sparse multivariate polynomial over K (Q or Q(v)) in a weighted ring.
/// Terms are kept sorted descending under the ring's weighted grevlex order
/// and never store zero coefficients.
template <class K>
class Poly {
public:
    using Term = std::pair<Monomial, K>;

    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, K c) {
        Poly p(std::move(ring));
        if (!c.is_zero()) p.t_.emplace_back(Monomial::unit(p.ring_->nvars()), std::move(c));
        return p;
    }
    static Poly variable(RingPtr ring, int i) {
        Poly p(ring);
        p.t_.emplace_back(Monomial::var(ring->nvars(), i), K(1));
        return p;
    }
    static Poly term(RingPtr ring, Monomial m, K c) {
        Poly p(ring);
        if (!c.is_zero()) p.t_.emplace_back(std::move(m), std::move(c));
        return p;
    }
    /// From unsorted/unmerged terms.
    static Poly from_terms(RingPtr ring, std::vector<Term> terms) {
        Poly p(std::move(ring));
        std::map<Monomial, K, MonoLess> acc{MonoLess{p.ring_.get()}};
        for (auto& [m, c] : terms) {
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), std::move(c));
            else
                it->second += c;
        }
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (!it->second.is_zero()) p.t_.emplace_back(it->first, it->second);
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t nterms() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }

    /// Leading term under the ring's canonical grevlex order.
    const Term& leading_term() const { return t_.front(); }

    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_unit()); }
    K constant_value() const {
        if (t_.empty()) return K(0);
        return t_[0].first.is_unit() ? t_[0].second : throw Error(Errc::BadInput, "not a constant");
    }

    DegreeInfo weighted_degree() const {
        if (t_.empty()) return {DegreeKind::ZeroPoly, 0};
        const long long d0 = t_.front().first.weighted_degree(*ring_);
        for (const auto& [m, c] : t_)
            if (m.weighted_degree(*ring_) != d0) return {DegreeKind::Mixed, 0};
        return {DegreeKind::Homogeneous, d0};
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return merged(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return merged(a, b, true); }
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same_ring(b);
        Poly r(a.ring_);
        std::map<Monomial, K, MonoLess> acc{MonoLess{a.ring_.get()}};
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) {
                Monomial m = ma * mb;
                K c = ca * cb;
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(std::move(m), std::move(c));
                else
                    it->second += c;
            }
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (!it->second.is_zero()) r.t_.emplace_back(it->first, it->second);
        return r;
    }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly scaled(const K& c) const {
        if (c.is_zero()) return Poly(ring_);
        Poly r = *this;
        for (auto& [m, k] : r.t_) k *= c;
        return r;
    }
    Poly mul_term(const Monomial& m, const K& c) const {
        if (c.is_zero()) return Poly(ring_);
        Poly r = *this;
        for (auto& [mm, k] : r.t_) {
            mm = mm * m;
            k *= c;
        }
        return r;
    }

    Poly pow(unsigned e) const {
        Poly r = constant(ring_, K(1));
        Poly base = *this;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return *a.ring_ == *b.ring_ && a.t_ == b.t_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative(int var) const {
        if (var < 0 || var >= ring_->nvars()) throw Error(Errc::BadInput, "no such variable");
        std::vector<Term> out;
        for (const auto& [m, c] : t_) {
            const int32_t e = m.e[static_cast<std::size_t>(var)];
            if (!e) continue;
            Monomial mm = m;
            mm.e[static_cast<std::size_t>(var)] = e - 1;
            out.emplace_back(std::move(mm), c * K(e));
        }
        return from_terms(ring_, std::move(out));
    }

    /// Simultaneous substitution of the given variables; values must live in
    /// this polynomial's ring.
    Poly substitute(const std::vector<std::pair<int, Poly>>& assignment) const {
        std::vector<std::optional<Poly>> sub(static_cast<std::size_t>(ring_->nvars()));
        for (const auto& [i, val] : assignment) {
            if (i < 0 || i >= ring_->nvars()) throw Error(Errc::BadInput, "no such variable");
            if (*val.ring_ != *ring_)
                throw Error(Errc::RingMismatch, "substitution value lives in " + val.ring_->describe() +
                                                    ", expected " + ring_->describe());
            sub[static_cast<std::size_t>(i)] = val;
        }
        Poly result(ring_);
        for (const auto& [m, c] : t_) {
            Poly term_val = constant(ring_, c);
            Monomial rest = Monomial::unit(ring_->nvars());
            for (std::size_t i = 0; i < m.e.size(); ++i) {
                if (!m.e[i]) continue;
                if (sub[i])
                    term_val *= sub[i]->pow(static_cast<unsigned>(m.e[i]));
                else
                    rest.e[i] = m.e[i];
            }
            result += term_val.mul_term(rest, K(1));
        }
        return result;
    }

    /// Reinterprets this polynomial in `target`, matching variables by name.
    /// Exponents of variables absent from `target` must vanish.
    Poly in_ring(const RingPtr& target) const {
        std::vector<int> map(static_cast<std::size_t>(ring_->nvars()), -1);
        for (int i = 0; i < ring_->nvars(); ++i)
            map[static_cast<std::size_t>(i)] = target->var_index(ring_->var_name(i));
        std::vector<Term> out;
        for (const auto& [m, c] : t_) {
            Monomial mm = Monomial::unit(target->nvars());
            for (std::size_t i = 0; i < m.e.size(); ++i) {
                if (!m.e[i]) continue;
                if (map[i] < 0)
                    throw Error(Errc::RingMismatch,
                                "variable " + ring_->var_name(static_cast<int>(i)) +
                                    " does not exist in " + target->describe());
                mm.e[static_cast<std::size_t>(map[i])] = m.e[i];
            }
            out.emplace_back(std::move(mm), c);
        }
        return from_terms(target, std::move(out));
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : t_) {
            K cc = c;
            if (first) {
                if (detail::coeff_negative(cc)) { os << "-"; cc = -cc; }
            } else {
                const bool neg = detail::coeff_negative(cc);
                os << (neg ? " - " : " + ");
                if (neg) cc = -cc;
            }
            first = false;
            if (m.is_unit()) {
                os << detail::coeff_str(cc);
            } else {
                if (!cc.is_one()) os << detail::coeff_str(cc) << "*";
                os << m.str(*ring_);
            }
        }
        return os.str();
    }

    void check_same_ring(const Poly& o) const {
        if (*ring_ != *o.ring_)
            throw Error(Errc::RingMismatch,
                        ring_->describe() + " vs " + o.ring_->describe());
    }

private:
    struct MonoLess {
        const WeightedRing* ring;
        bool operator()(const Monomial& a, const Monomial& b) const {
            return grevlex_less(a, b, *ring);
        }
    };

    static Poly merged(const Poly& a, const Poly& b, bool subtract) {
        a.check_same_ring(b);
        Poly r(a.ring_);
        r.t_.reserve(a.t_.size() + b.t_.size());
        std::size_t i = 0, j = 0;
        while (i < a.t_.size() || j < b.t_.size()) {
            if (j == b.t_.size() ||
                (i < a.t_.size() && grevlex_less(b.t_[j].first, a.t_[i].first, *a.ring_))) {
                r.t_.push_back(a.t_[i++]);
            } else if (i == a.t_.size() ||
                       grevlex_less(a.t_[i].first, b.t_[j].first, *a.ring_)) {
                K c = subtract ? -b.t_[j].second : b.t_[j].second;
                if (!c.is_zero()) r.t_.emplace_back(b.t_[j].first, std::move(c));
                ++j;
            } else {
                K c = subtract ? a.t_[i].second - b.t_[j].second : a.t_[i].second + b.t_[j].second;
                if (!c.is_zero()) r.t_.emplace_back(a.t_[i].first, std::move(c));
                ++i;
                ++j;
            }
        }
        return r;
    }

    RingPtr ring_;
    std::vector<Term> t_;
};

using PolyQ = Poly<Rational>;
using PolyF = Poly<RatFunc>;

/// Moves v from the variables into the coefficient field Q(v).
PolyF to_param_field(const PolyQ& p);
/// Inverse of to_param_field; every coefficient must be a polynomial in v.
PolyQ from_param_field(const PolyF& p, const RingPtr& xv_ring);

/// Determinant of the Jacobian matrix (d polys[i] / d vars[j]); vars distinct.
PolyQ jacobian_determinant(const std::vector<PolyQ>& polys, const std::vector<int>& vars);

/// Determinant of a square polynomial matrix: Bareiss fraction-free
/// elimination, cofactor expansion for n <= 4.
PolyQ poly_matrix_determinant(std::vector<std::vector<PolyQ>> m);

/// Exact polynomial quotient; throws on inexact division.
PolyQ poly_div_exact(const PolyQ& a, const PolyQ& b);

} // namespace zscheme
