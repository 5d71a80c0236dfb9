#include "zscheme/hessenberg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace zscheme {

HessenbergIdeal hessenberg_ideal(int rank, const HessenbergSpace& omega) {
    const HessenbergValidation val = validate_hessenberg(omega);
    if (!val.ok)
        throw Error(Errc::InvalidHessenberg,
                    "Omega is not B-closed: " + val.alpha->str() + " + a" +
                        std::to_string(val.simple_index) + " gives the missing root " +
                        val.missing->str());

    RegularModel flag = flag_model_a(rank);
    const RootSystemA rs = build_type_a(rank);

    HessenbergIdeal h;
    h.rank = rank;
    h.omega = omega;
    h.u_ring = flag.ring;
    h.xv_ring = flag.ring->extended_with_v();
    h.flag_generators = canonical_generators(flag, h.xv_ring);
    h.raw_generators = h.flag_generators;
    for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) {
        const Root beta = rs.positive_roots[k].negated();
        if (!omega.contains(beta))
            h.raw_generators.push_back(flag.flag->v_alpha[k].in_ring(h.xv_ring));
    }

    h.gb = saturate_wrt_last_variable(h.raw_generators, &h.saturation_was_needed);

    // Containment replay: I(Z) reduces to zero inside I(Z_Y), so the quotient
    // map C[Z] -> C[Z_Y] is well defined and surjective.
    for (const auto& f : h.flag_generators)
        if (!normal_form(f, h.gb).is_zero())
            throw Error(Errc::CertificateFailed, "I(Z) is not contained in I(Z_Y)");
    return h;
}

ProductFormulaResult product_formula(const HessenbergSpace& omega) {
    ProductFormulaResult out;
    UPoly num = UPoly::one(), den = UPoly::one();
    std::string num_s, den_s;
    for (const Root& alpha : omega.omega) {
        const int ht = alpha.height();
        num *= UPoly::one() - UPoly::term(Rational(1), ht + 1);
        den *= UPoly::one() - UPoly::term(Rational(1), ht);
        num_s += "(1 - q^" + std::to_string(ht + 1) + ")";
        den_s += "(1 - q^" + std::to_string(ht) + ")";
    }
    out.ratio = num_s.empty() ? "1" : num_s + " / " + den_s;
    UPoly q, r;
    UPoly::divmod(num, den, q, r);
    if (!r.is_zero()) {
        out.is_polynomial = false;
        return out;
    }
    out.is_polynomial = true;
    out.value_q = q;
    out.nonnegative = true;
    for (const auto& c : q.coeffs())
        if (c.sign() < 0) out.nonnegative = false;
    return out;
}

PoincareComparison hessenberg_poincare(const HessenbergIdeal& h) {
    PoincareComparison out;
    std::vector<PolyQ> gens(h.gb.elements());
    gens.push_back(PolyQ::variable(h.xv_ring, h.xv_ring->v_index()));
    out.series = hilbert_series(gens);
    const auto p = out.series.as_polynomial();
    if (!p) throw Error(Errc::Mismatch, "Hessenberg Artinian quotient has an infinite series");
    out.poincare_t = *p;

    const ProductFormulaResult pf = product_formula(h.omega);
    if (pf.is_polynomial) out.product_t = pf.value_q.inflate(2); // q = t^2
    out.match = pf.is_polynomial && out.poincare_t == out.product_t;

    out.euler = static_cast<int>(out.poincare_t.eval(Rational(1)).numerator().get_si());
    out.fixed_points = static_cast<int>(hessenberg_fixed_points(h.omega).size());
    out.euler_match = (out.euler == out.fixed_points);

    if (!out.match || !out.euler_match)
        throw Error(Errc::Mismatch,
                    "Poincare polynomial " + out.poincare_t.str() + " vs product formula " +
                        (pf.is_polynomial ? out.product_t.str() : pf.ratio) + "; euler " +
                        std::to_string(out.euler) + " vs " + std::to_string(out.fixed_points) +
                        " fixed points (possible non-radical generated ideal)");
    return out;
}

CICertificate complete_intersection_check(const HessenbergIdeal& h) {
    CICertificate out;
    out.series = hilbert_series(h.gb.elements(), MonomialOrder::grevlex(), h.xv_ring);
    // The numerator is already the series times the full ambient denominator.
    UPoly n = out.series.numerator;
    const int codim = h.u_ring->nvars(); // (#coordinates + 1) - 1, Z_Y is a curve
    while (!(n.degree() == 0 && n.coeff(0).is_one())) {
        const UPoly defect = UPoly::one() - n;
        if (defect.is_zero()) break;
        int e = 0;
        while (defect.coeff(e).is_zero()) ++e;
        if (e == 0 || e > n.degree()) {
            out.detail = "numerator " + out.series.numerator.str() + " is not a product of (1 - t^e)";
            return out;
        }
        const UPoly factor = UPoly::one() - UPoly::term(Rational(1), e);
        UPoly q, r;
        UPoly::divmod(n, factor, q, r);
        if (!r.is_zero()) {
            out.detail = "factor (1 - t^" + std::to_string(e) + ") does not divide " + n.str();
            return out;
        }
        out.degrees.push_back(e);
        n = q;
    }
    std::sort(out.degrees.begin(), out.degrees.end());
    if (static_cast<int>(out.degrees.size()) != codim) {
        out.detail = "numerator has " + std::to_string(out.degrees.size()) +
                     " factors, codimension is " + std::to_string(codim);
        return out;
    }
    out.pass = true;
    return out;
}

namespace {

DualityCertificate duality_on_artinian(const GroebnerBasis<Rational>& gb) {
    DualityCertificate out;
    const std::vector<Monomial> basis = standard_monomials(gb);
    const WeightedRing& R = *gb.ring();

    std::map<long long, std::vector<std::size_t>> by_degree;
    for (std::size_t i = 0; i < basis.size(); ++i)
        by_degree[basis[i].weighted_degree(R)].push_back(i);
    const long long top = by_degree.rbegin()->first;
    out.socle_degree = static_cast<int>(top);
    if (by_degree.rbegin()->second.size() != 1) {
        out.degenerate_degree = static_cast<int>(top);
        out.detail = "top graded piece has dimension " +
                     std::to_string(by_degree.rbegin()->second.size());
        return out;
    }
    const Monomial socle = basis[by_degree.rbegin()->second.front()];

    for (const auto& [deg, rows] : by_degree) {
        const auto it = by_degree.find(top - deg);
        if (it == by_degree.end() || it->second.size() != rows.size()) {
            out.degenerate_degree = static_cast<int>(deg);
            out.detail = "graded dimensions are not symmetric at degree " + std::to_string(deg);
            return out;
        }
        if (deg > top - deg) continue;
        const auto& cols = it->second;
        Matrix<Rational> pairing(rows.size(), cols.size());
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = 0; b < cols.size(); ++b) {
                const PolyQ prod = normal_form(
                    PolyQ::term(gb.ring(), basis[rows[a]] * basis[cols[b]], Rational(1)), gb);
                for (const auto& [mono, c] : prod.terms())
                    if (mono == socle) pairing(a, b) = c;
            }
        if (pairing.rank() != rows.size()) {
            out.degenerate_degree = static_cast<int>(deg);
            out.detail = "pairing A_" + std::to_string(deg) + " x A_" + std::to_string(top - deg) +
                         " is degenerate";
            return out;
        }
    }
    out.pass = true;
    return out;
}

} // namespace

DualityCertificate poincare_duality_check_ideal(const std::vector<PolyQ>& gens,
                                                const RingPtr& ring) {
    GroebnerBasis<Rational> gb = buchberger(gens, MonomialOrder::grevlex(), ring);
    DualityCertificate out = duality_on_artinian(gb);
    if (!out.pass) throw Error(Errc::CheckFailed, "Poincare duality failed: " + out.detail);
    return out;
}

DualityCertificate poincare_duality_check(const HessenbergIdeal& h) {
    // Specialize the saturated basis at v = 0 and work in the u-ring.
    const int vi = h.xv_ring->v_index();
    std::vector<PolyQ> gens;
    for (const auto& g : h.gb.elements())
        gens.push_back(g.substitute({{vi, PolyQ::zero(h.xv_ring)}}).in_ring(h.u_ring));
    return poincare_duality_check_ideal(gens, h.u_ring);
}

} // namespace zscheme
