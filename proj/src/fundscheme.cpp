#include "zscheme/fundscheme.hpp"

#include <mutex>

namespace zscheme {

struct ZSchemeIdeal::Caches {
    std::mutex m;
    std::optional<GroebnerBasis<Rational>> xv;
    std::optional<GroebnerBasis<Rational>> ordinary;
    std::optional<GroebnerBasis<RatFunc>> param;
    std::optional<std::vector<Monomial>> param_basis;
};

std::vector<PolyQ> canonical_generators(const RegularModel& m, const RingPtr& xv_ring) {
    const int vi = xv_ring->v_index();
    std::vector<PolyQ> gens;
    const PolyQ v = PolyQ::variable(xv_ring, vi);
    if (m.provenance == Provenance::FlagA) {
        const FlagModelData& fd = *m.flag;
        for (std::size_t k = 0; k < fd.v_alpha.size(); ++k) {
            const PolyQ va = fd.v_alpha[k].in_ring(xv_ring);
            const PolyQ wa = fd.w_alpha[k].in_ring(xv_ring);
            gens.push_back(va.scaled(Rational(2)) - v * wa); // F_alpha = 2 v_alpha - v w_alpha
        }
    } else {
        for (int i = 0; i < m.ring->nvars(); ++i) {
            const PolyQ xi = PolyQ::variable(xv_ring, xv_ring->var_index(m.ring->var_name(i)));
            const PolyQ vi_img = m.v_images[static_cast<std::size_t>(i)].in_ring(xv_ring);
            gens.push_back((v * xi).scaled(Rational(m.ring->weight(i))) -
                           vi_img.scaled(Rational(2)));
        }
    }
    // Degree contract: deg g_i = a_i + 2.
    for (int i = 0; i < m.ring->nvars(); ++i) {
        const DegreeInfo d = gens[static_cast<std::size_t>(i)].weighted_degree();
        if (!d.homogeneous_of(m.ring->weight(i) + 2))
            throw Error(Errc::CertificateFailed,
                        "generator " + std::to_string(i + 1) + " is not homogeneous of degree " +
                            std::to_string(m.ring->weight(i) + 2));
    }
    return gens;
}

ZSchemeIdeal::ZSchemeIdeal(RegularModel model)
    : model_(std::move(model)),
      xv_ring_(model_.ring->extended_with_v()),
      gens_(canonical_generators(model_, xv_ring_)),
      caches_(std::make_shared<Caches>()) {}

ZSchemeIdeal ZSchemeIdeal::with_scaled_generator(RegularModel model, std::size_t index,
                                                 Rational c) {
    ZSchemeIdeal z(std::move(model));
    if (index >= z.gens_.size()) throw Error(Errc::BadInput, "no such generator");
    z.gens_[index] = z.gens_[index].scaled(std::move(c));
    return z;
}

std::vector<PolyQ> ZSchemeIdeal::ordinary_generators() const {
    const int vi = xv_ring_->v_index();
    std::vector<PolyQ> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) {
        const PolyQ at0 = g.substitute({{vi, PolyQ::zero(xv_ring_)}});
        out.push_back(at0.in_ring(model_.ring));
    }
    return out;
}

const GroebnerBasis<Rational>& ZSchemeIdeal::gb_xv() const {
    std::lock_guard<std::mutex> lock(caches_->m);
    if (!caches_->xv) caches_->xv = buchberger(gens_, MonomialOrder::grevlex());
    return *caches_->xv;
}

const GroebnerBasis<Rational>& ZSchemeIdeal::gb_ordinary() const {
    std::lock_guard<std::mutex> lock(caches_->m);
    if (!caches_->ordinary)
        caches_->ordinary = buchberger(ordinary_generators(), MonomialOrder::grevlex(), model_.ring);
    return *caches_->ordinary;
}

const GroebnerBasis<RatFunc>& ZSchemeIdeal::gb_param() const {
    std::lock_guard<std::mutex> lock(caches_->m);
    if (!caches_->param) {
        std::vector<PolyF> pgens;
        pgens.reserve(gens_.size());
        for (const auto& g : gens_) pgens.push_back(to_param_field(g));
        caches_->param = buchberger(pgens, MonomialOrder::grevlex());
    }
    return *caches_->param;
}

const std::vector<Monomial>& ZSchemeIdeal::param_basis() const {
    const auto& gb = gb_param();
    std::lock_guard<std::mutex> lock(caches_->m);
    if (!caches_->param_basis) caches_->param_basis = standard_monomials(gb);
    return *caches_->param_basis;
}

ZSchemeIdeal zscheme_ideal(RegularModel m) {
    const ModelCertificate cert = validate_regular(m);
    if (!cert.ok()) {
        std::string msg;
        for (const auto& s : cert.issues) msg += (msg.empty() ? "" : "; ") + s;
        if (msg.find("DEGREE_MISMATCH") != std::string::npos) throw Error(Errc::DegreeMismatch, msg);
        if (msg.find("NOT_HOMOGENEOUS") != std::string::npos) throw Error(Errc::NotHomogeneous, msg);
        throw Error(Errc::NotIsolatedZero, msg);
    }
    return ZSchemeIdeal(std::move(m));
}

int flat_degree(const ZSchemeIdeal& z) {
    const int r = static_cast<int>(z.param_basis().size());
    const int r0 = static_cast<int>(standard_monomials(z.gb_ordinary()).size());
    if (r != r0)
        throw Error(Errc::CertificateFailed,
                    "C[v]-rank " + std::to_string(r) + " disagrees with the v=0 fiber dimension " +
                        std::to_string(r0));
    return r;
}

RegSeqCertificate certify_regular_sequence(const ZSchemeIdeal& z) {
    std::vector<PolyQ> gens = z.generators();
    gens.push_back(PolyQ::variable(z.xv_ring(), z.xv_ring()->v_index()));
    RegSeqCertificate cert = is_regular_sequence(gens);
    if (!cert.ok)
        throw Error(Errc::CertificateFailed,
                    "not a regular sequence: Hilbert numerator " + cert.computed.numerator.str() +
                        " != expected " + cert.expected_numerator.str());
    return cert;
}

FiberDecomposition fiber(const ZSchemeIdeal& z, const Rational& v0) {
    const RingPtr& xv = z.xv_ring();
    const int vi = xv->v_index();
    std::vector<PolyQ> fgens;
    fgens.reserve(z.generators().size());
    for (const auto& g : z.generators())
        fgens.push_back(g.substitute({{vi, PolyQ::constant(xv, v0)}}).in_ring(z.x_ring()));
    GroebnerBasis<Rational> gb = buchberger(fgens, MonomialOrder::grevlex(), z.x_ring());

    FiberDecomposition fd;
    fd.v0 = v0;
    const std::vector<Monomial> basis = standard_monomials(gb);
    fd.dimension = static_cast<int>(basis.size());
    fd.trace_form_det = trace_form_determinant(gb);
    fd.reduced = !fd.trace_form_det.is_zero();
    for (int i = 0; i < z.n(); ++i) {
        const Matrix<Rational> mi =
            multiplication_matrix(PolyQ::variable(z.x_ring(), i), gb, basis);
        fd.char_polys.push_back(UPoly(mi.characteristic_polynomial()));
    }
    return fd;
}

ZSeries hilbert_series_Z(const ZSchemeIdeal& z) {
    ZSeries s;
    s.equivariant = hilbert_series(z.generators());
    s.ordinary = hilbert_series(z.ordinary_generators(), MonomialOrder::grevlex(), z.x_ring());
    const auto p = s.ordinary.as_polynomial();
    if (!p)
        throw Error(Errc::CertificateFailed, "ordinary quotient is not finite-dimensional");
    s.p_polynomial = *p;
    // F(t)(1-t^2) = P(t) reduces to equality of the two numerators, since the
    // equivariant denominator is the ordinary one times (1-t^2).
    s.consistent = (s.equivariant.numerator == s.ordinary.numerator);
    return s;
}

std::vector<UPoly> component_chain(const ZSchemeIdeal& z, int m) {
    if (z.model().provenance != Provenance::ProjectiveSpace)
        throw Error(Errc::WrongProvenance, "components are materialized for pn models only");
    const int n = z.n();
    if (m < 0 || m > n)
        throw Error(Errc::BadInput, "component index must lie in 0.." + std::to_string(n));
    std::vector<UPoly> vals;
    vals.reserve(static_cast<std::size_t>(n));
    const UPoly v = UPoly::term(Rational(1), 1);
    UPoly x1 = UPoly::term(Rational(-m), 1);
    vals.push_back(x1);
    for (int j = 1; j < n; ++j)
        vals.push_back(vals.back() * (x1 + v.scaled(Rational(j))));

    // Every generator must vanish under the chain.
    for (const auto& g : z.generators()) {
        UPoly acc;
        for (const auto& [mono, c] : g.terms()) {
            UPoly t(c);
            for (int i = 0; i < n; ++i)
                for (int32_t e = 0; e < mono.e[static_cast<std::size_t>(i)]; ++e)
                    t *= vals[static_cast<std::size_t>(i)];
            t = t * UPoly::term(Rational(1), mono.e[static_cast<std::size_t>(n)]); // v exponent
            acc += t;
        }
        if (!acc.is_zero())
            throw Error(Errc::CertificateFailed,
                        "component chain does not annihilate generator " + g.str());
    }
    return vals;
}

UPoly component_restriction(const ZSchemeIdeal& z, const PolyQ& f, int m) {
    const std::vector<UPoly> vals = component_chain(z, m);
    if (*f.ring() != *z.xv_ring())
        throw Error(Errc::RingMismatch, "class must live in " + z.xv_ring()->describe());
    const int n = z.n();
    UPoly acc;
    for (const auto& [mono, c] : f.terms()) {
        UPoly t(c);
        for (int i = 0; i < n; ++i)
            for (int32_t e = 0; e < mono.e[static_cast<std::size_t>(i)]; ++e)
                t *= vals[static_cast<std::size_t>(i)];
        t = t * UPoly::term(Rational(1), mono.e[static_cast<std::size_t>(n)]);
        acc += t;
    }
    return acc;
}

} // namespace zscheme
