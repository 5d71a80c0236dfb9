#include "zscheme/cohomology.hpp"

#include <sstream>

namespace zscheme {

PresentationReport equivariant_presentation(const RegularModel& m) {
    ZSchemeIdeal z = zscheme_ideal(m);
    PresentationReport rep;
    rep.equivariant = true;
    rep.ring_description = z.xv_ring()->describe();
    rep.provenance = m.provenance_str();
    for (const auto& g : z.generators()) rep.generators.push_back(g.str());
    const ZSeries s = hilbert_series_Z(z);
    rep.series = s.equivariant;
    rep.series_consistent = s.consistent;
    const RegSeqCertificate cert = certify_regular_sequence(z);
    rep.regular_sequence_ok = cert.ok;
    rep.generator_degrees.assign(cert.generator_degrees.begin(),
                                 cert.generator_degrees.end() - 1); // drop the final v
    rep.flat_deg = flat_degree(z);
    rep.euler = rep.flat_deg;
    return rep;
}

PresentationReport ordinary_presentation(const RegularModel& m) {
    ZSchemeIdeal z = zscheme_ideal(m);
    PresentationReport rep;
    rep.equivariant = false;
    rep.ring_description = m.ring->describe();
    rep.provenance = m.provenance_str();
    const GroebnerBasis<Rational>& gb = buchberger(z.ordinary_generators(),
                                                   MonomialOrder::grevlex(), m.ring);
    for (const auto& g : z.ordinary_generators()) {
        // Monic display normalization; scaling does not change the ideal.
        const Rational lc = g.leading_term().second;
        rep.generators.push_back(g.scaled(lc.inverse()).str());
    }
    const ZSeries s = hilbert_series_Z(z);
    rep.series = s.ordinary;
    rep.series_consistent = s.consistent;
    rep.euler = static_cast<int>(standard_monomials(gb).size());
    rep.flat_deg = rep.euler;
    for (const auto& g : z.ordinary_generators())
        rep.generator_degrees.push_back(g.weighted_degree().degree);
    rep.regular_sequence_ok = is_regular_sequence(z.ordinary_generators()).ok;
    return rep;
}

int euler_characteristic(const RegularModel& m) {
    const ModelCertificate cert = validate_regular(m);
    if (!cert.ok()) throw Error(Errc::NotIsolatedZero, "model did not validate");
    return cert.dimension;
}

ClosedFormCheck pn_closed_form_check(int n) {
    ClosedFormCheck out;
    out.n = n;
    RegularModel m = projective_space_model(n);
    ZSchemeIdeal z = zscheme_ideal(std::move(m));
    const RingPtr& xv = z.xv_ring();
    const int vi = xv->v_index();
    const PolyQ x1 = PolyQ::variable(xv, 0);
    const PolyQ v = PolyQ::variable(xv, vi);

    // Elimination chain pi_1 = x1, pi_{j+1} = pi_j (x1 + j v); also the product.
    std::vector<PolyQ> chain{x1};
    for (int j = 1; j < n; ++j)
        chain.push_back(chain.back() * (x1 + v.scaled(Rational(j))));
    PolyQ product = x1;
    for (int k = 1; k <= n; ++k) product *= x1 + v.scaled(Rational(k));
    out.product = product.str();

    std::vector<std::pair<int, PolyQ>> assignment;
    for (int j = 2; j <= n; ++j)
        assignment.emplace_back(j - 1, chain[static_cast<std::size_t>(j - 1)]);

    out.chain_maps_into_product_ideal = true;
    out.last_generator_unit_multiple = false;
    for (std::size_t i = 0; i < z.generators().size(); ++i) {
        const PolyQ image = z.generators()[i].substitute(assignment);
        out.generator_images.push_back(image.str());
        if (i + 1 < z.generators().size()) {
            if (!image.is_zero()) out.chain_maps_into_product_ideal = false;
        } else {
            // Last generator: must be a unit multiple of the product.
            if (!image.is_zero() && image == product.scaled(image.leading_term().second /
                                                            product.leading_term().second)) {
                out.last_generator_unit_multiple = true;
            } else {
                out.chain_maps_into_product_ideal = false;
            }
        }
    }

    // Series of both presentations agree.
    RingPtr small = WeightedRing::make({"x1", "v"}, {2, 2});
    const PolyQ product_small = product.in_ring(small);
    const HilbertSeries closed = hilbert_series({product_small});
    const HilbertSeries full = hilbert_series(z.generators());
    out.series_match = HilbertSeries::series_equal(closed, full);

    out.pass = out.chain_maps_into_product_ideal && out.last_generator_unit_multiple &&
               out.series_match;
    if (!out.pass) {
        std::ostringstream os;
        os << "closed-form check failed for n=" << n << ":";
        if (!out.chain_maps_into_product_ideal) os << " a generator image left the product ideal;";
        if (!out.last_generator_unit_multiple) os << " last image is not a unit multiple;";
        if (!out.series_match) os << " series differ;";
        out.detail = os.str();
        throw Error(Errc::CheckFailed, out.detail);
    }
    return out;
}

ChernCheck chern_line_bundle_image(int n) {
    ChernCheck out;
    out.n = n;
    ZSchemeIdeal z = zscheme_ideal(projective_space_model(n));
    const RingPtr& xv = z.xv_ring();
    const int vi = xv->v_index();
    const PolyQ v = PolyQ::variable(xv, vi);
    const GroebnerBasis<Rational>& gb = z.gb_xv();

    // s(x) = (1, x1, .., xn); xi(v) = v h' - 2 e' with h' = -diag(n, n-2, ..., -n)
    // and e' the shift matrix, the pair whose chart vector fields are W and V.
    auto s_of = [&](int k) {
        return k == 0 ? PolyQ::constant(xv, Rational(1)) : PolyQ::variable(xv, k - 1);
    };
    auto xi_s = [&](int k) {
        PolyQ r = (v * s_of(k)).scaled(Rational(-(n - 2 * k)));
        if (k + 1 <= n) r -= s_of(k + 1).scaled(Rational(2));
        return r;
    };

    out.scalar = xi_s(0); // c(x, v) = -n v - 2 x1
    out.congruences_ok = true;
    for (int k = 1; k <= n; ++k) {
        const PolyQ residue = normal_form(xi_s(k) - out.scalar * s_of(k), gb);
        if (!residue.is_zero()) {
            out.congruences_ok = false;
            out.failures.push_back("k=" + std::to_string(k) + ": " + residue.str());
        }
    }
    out.discrepancy = normal_form(out.scalar + PolyQ::variable(xv, 0), gb);
    if (!out.congruences_ok)
        throw Error(Errc::CongruenceFailed, "eigenvector congruence failed: " + out.failures[0]);
    return out;
}

} // namespace zscheme
