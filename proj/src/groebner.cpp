#include "zscheme/groebner.hpp"

#include <algorithm>
#include <sstream>

namespace zscheme {

bool MonomialOrder::less(const Monomial& a, const Monomial& b, const WeightedRing& ring) const {
    if (kind == Kind::WeightedGrevlex) {
        const long long da = a.weighted_degree(ring);
        const long long db = b.weighted_degree(ring);
        if (da != db) return da < db;
        if (priority.empty()) {
            for (std::size_t i = a.e.size(); i-- > 0;) {
                const int32_t d = a.e[i] - b.e[i];
                if (d) return d > 0;
            }
            return false;
        }
        for (std::size_t i = priority.size(); i-- > 0;) {
            const auto p = static_cast<std::size_t>(priority[i]);
            const int32_t d = a.e[p] - b.e[p];
            if (d) return d > 0;
        }
        return false;
    }
    // Lex.
    if (priority.empty()) {
        for (std::size_t i = 0; i < a.e.size(); ++i) {
            const int32_t d = a.e[i] - b.e[i];
            if (d) return d < 0;
        }
        return false;
    }
    for (int p : priority) {
        const int32_t d = a.e[static_cast<std::size_t>(p)] - b.e[static_cast<std::size_t>(p)];
        if (d) return d < 0;
    }
    return false;
}

std::string MonomialOrder::describe(const WeightedRing& ring) const {
    std::ostringstream os;
    os << (kind == Kind::WeightedGrevlex ? "grevlex" : "lex");
    if (!priority.empty()) {
        os << "(";
        for (std::size_t i = 0; i < priority.size(); ++i) {
            if (i) os << ">";
            os << ring.var_name(priority[i]);
        }
        os << ")";
    }
    return os.str();
}

namespace gbdetail {

void normalize_content(std::vector<Term<Rational>>& terms) {
    if (terms.empty()) return;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& [m, c] : terms) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
    }
    Rational f{mpq_class(den_lcm, num_gcd)};
    if (terms.front().second.sign() < 0) f = -f;
    for (auto& [m, c] : terms) c *= f;
}

void normalize_content(std::vector<Term<RatFunc>>& terms) {
    if (terms.empty()) return;
    UPoly den_lcm = UPoly::one();
    for (const auto& [m, c] : terms) den_lcm = UPoly::lcm(den_lcm, c.den());
    std::vector<UPoly> nums;
    nums.reserve(terms.size());
    for (const auto& [m, c] : terms)
        nums.push_back(c.num() * den_lcm.div_exact(c.den()));
    UPoly g;
    for (const auto& n : nums) g = UPoly::gcd(g, n);
    if (g.degree() > 0)
        for (auto& n : nums) n = n.div_exact(g);
    Rational content(0);
    for (const auto& n : nums)
        for (const auto& c : n.coeffs()) content = rational_gcd(content, c);
    if (!content.is_zero() && !content.is_one()) {
        const Rational inv = content.inverse();
        for (auto& n : nums) n = n.scaled(inv);
    }
    if (nums.front().leading().sign() < 0)
        for (auto& n : nums) n = -n;
    for (std::size_t i = 0; i < terms.size(); ++i) terms[i].second = RatFunc(std::move(nums[i]));
}

} // namespace gbdetail

GroebnerBasis<Rational> saturate_wrt_last_variable(std::vector<PolyQ> gens, bool* changed_out) {
    if (gens.empty()) throw Error(Errc::BadInput, "no generators");
    const RingPtr ring = gens[0].ring();
    const int v = ring->nvars() - 1;
    if (changed_out) *changed_out = false;
    for (;;) {
        GroebnerBasis<Rational> gb = buchberger(gens, MonomialOrder::grevlex());
        bool changed = false;
        std::vector<PolyQ> next;
        next.reserve(gb.size());
        for (const auto& g : gb.elements()) {
            // Homogeneous + grevlex: if v divides the leading monomial it
            // divides every monomial, so g/v is still a polynomial.
            std::vector<PolyQ::Term> t(g.terms().begin(), g.terms().end());
            while (!t.empty() && std::all_of(t.begin(), t.end(), [&](const PolyQ::Term& x) {
                       return x.first.e[static_cast<std::size_t>(v)] > 0;
                   })) {
                for (auto& [m, c] : t) --m.e[static_cast<std::size_t>(v)];
                changed = true;
            }
            next.push_back(PolyQ::from_terms(ring, std::move(t)));
        }
        if (!changed) return gb;
        if (changed_out) *changed_out = true;
        gens = std::move(next);
    }
}

UPoly HilbertSeries::denominator_expanded() const {
    UPoly d = UPoly::one();
    for (int w : denominator_weights)
        d *= UPoly::one() - UPoly::term(Rational(1), w);
    return d;
}

UPoly HilbertSeries::expand(int upto) const {
    std::vector<Rational> c(static_cast<std::size_t>(upto) + 1, Rational(0));
    for (int i = 0; i <= std::min(upto, numerator.degree()); ++i)
        c[static_cast<std::size_t>(i)] = numerator.coeff(i);
    for (int w : denominator_weights)
        for (int k = w; k <= upto; ++k)
            c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - w)];
    return UPoly(std::move(c));
}

std::optional<UPoly> HilbertSeries::as_polynomial() const {
    UPoly q = numerator, r;
    for (int w : denominator_weights) {
        UPoly::divmod(q, UPoly::one() - UPoly::term(Rational(1), w), q, r);
        if (!r.is_zero()) return std::nullopt;
    }
    return q;
}

bool HilbertSeries::series_equal(const HilbertSeries& a, const HilbertSeries& b) {
    return a.numerator * b.denominator_expanded() == b.numerator * a.denominator_expanded();
}

std::string HilbertSeries::str() const {
    std::ostringstream os;
    os << "(" << numerator.str("t") << ")";
    if (!denominator_weights.empty()) {
        os << " / (";
        for (std::size_t i = 0; i < denominator_weights.size(); ++i) {
            if (i) os << "*";
            os << "(1 - t^" << denominator_weights[i] << ")";
        }
        os << ")";
    }
    return os.str();
}

namespace {

UPoly monomial_numerator_rec(std::vector<Monomial> gens, const WeightedRing& ring) {
    // Minimalize.
    std::vector<Monomial> min;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j) continue;
            if (gens[j].divides(gens[i]) && (gens[j] != gens[i] || j < i)) redundant = true;
        }
        if (!redundant) min.push_back(gens[i]);
    }
    if (min.empty()) return UPoly::one();
    for (const auto& m : min)
        if (m.is_unit()) return UPoly::zero();

    bool coprime = true;
    for (std::size_t i = 0; i < min.size() && coprime; ++i)
        for (std::size_t j = i + 1; j < min.size() && coprime; ++j)
            if (!Monomial::coprime(min[i], min[j])) coprime = false;
    if (coprime) {
        UPoly p = UPoly::one();
        for (const auto& m : min)
            p *= UPoly::one() - UPoly::term(Rational(1), static_cast<int>(m.weighted_degree(ring)));
        return p;
    }

    // Pivot on the most shared variable.
    const int n = ring.nvars();
    int pivot = -1, best = 0;
    for (int i = 0; i < n; ++i) {
        int count = 0;
        for (const auto& m : min)
            if (m.e[static_cast<std::size_t>(i)] > 0) ++count;
        if (count > best) {
            best = count;
            pivot = i;
        }
    }

    std::vector<Monomial> plus; // I + (x): generators without x, plus x itself
    for (const auto& m : min)
        if (m.e[static_cast<std::size_t>(pivot)] == 0) plus.push_back(m);
    plus.push_back(Monomial::var(n, pivot));

    std::vector<Monomial> colon; // I : x
    for (const auto& m : min) {
        Monomial q = m;
        if (q.e[static_cast<std::size_t>(pivot)] > 0) --q.e[static_cast<std::size_t>(pivot)];
        colon.push_back(std::move(q));
    }

    return monomial_numerator_rec(std::move(plus), ring) +
           UPoly::term(Rational(1), ring.weight(pivot)) *
               monomial_numerator_rec(std::move(colon), ring);
}

} // namespace

UPoly monomial_ideal_numerator(std::vector<Monomial> gens, const WeightedRing& ring) {
    return monomial_numerator_rec(std::move(gens), ring);
}

HilbertSeries hilbert_series(const std::vector<PolyQ>& gens, MonomialOrder order,
                             RingPtr ring) {
    if (!ring) {
        if (gens.empty())
            throw Error(Errc::BadInput, "hilbert_series on an empty list needs an explicit ring");
        ring = gens[0].ring();
    }
    std::vector<PolyQ> nonzero;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.weighted_degree().kind != DegreeKind::Homogeneous)
            throw Error(Errc::NotHomogeneous, "generator is not weighted-homogeneous: " + g.str());
        nonzero.push_back(g);
    }
    std::vector<Monomial> lms;
    if (!nonzero.empty()) {
        GroebnerBasis<Rational> gb = buchberger(nonzero, order);
        for (std::size_t i = 0; i < gb.size(); ++i) lms.push_back(gb.leading_monomial(i));
    }
    return HilbertSeries{monomial_ideal_numerator(std::move(lms), *ring), ring->weights()};
}

RegSeqCertificate is_regular_sequence(const std::vector<PolyQ>& gens) {
    RegSeqCertificate cert;
    if (gens.empty()) {
        cert.ok = true;
        cert.expected_numerator = UPoly::one();
        cert.computed = HilbertSeries{UPoly::one(), {}};
        return cert;
    }
    cert.expected_numerator = UPoly::one();
    for (const auto& g : gens) {
        const DegreeInfo d = g.weighted_degree();
        if (d.kind == DegreeKind::ZeroPoly) {
            cert.ok = false;
            cert.computed = hilbert_series(gens);
            return cert;
        }
        if (d.kind != DegreeKind::Homogeneous)
            throw Error(Errc::NotHomogeneous, "generator is not weighted-homogeneous: " + g.str());
        cert.generator_degrees.push_back(d.degree);
        cert.expected_numerator *=
            UPoly::one() - UPoly::term(Rational(1), static_cast<int>(d.degree));
    }
    cert.computed = hilbert_series(gens);
    cert.ok = (cert.computed.numerator == cert.expected_numerator);
    return cert;
}

// Explicit instantiations keep the heavy templates out of every TU.
template class GroebnerBasis<Rational>;
template class GroebnerBasis<RatFunc>;
template GroebnerBasis<Rational> buchberger(const std::vector<PolyQ>&, MonomialOrder, RingPtr);
template GroebnerBasis<RatFunc> buchberger(const std::vector<PolyF>&, MonomialOrder, RingPtr);
template PolyQ normal_form(const PolyQ&, const GroebnerBasis<Rational>&);
template PolyF normal_form(const PolyF&, const GroebnerBasis<RatFunc>&);
template std::vector<Monomial> standard_monomials(const GroebnerBasis<Rational>&);
template std::vector<Monomial> standard_monomials(const GroebnerBasis<RatFunc>&);
template Matrix<Rational> multiplication_matrix(const PolyQ&, const GroebnerBasis<Rational>&,
                                                const std::vector<Monomial>&);
template Matrix<RatFunc> multiplication_matrix(const PolyF&, const GroebnerBasis<RatFunc>&,
                                               const std::vector<Monomial>&);
template Rational trace_form_determinant(const GroebnerBasis<Rational>&);
template RatFunc trace_form_determinant(const GroebnerBasis<RatFunc>&);

} // namespace zscheme
