#include "zscheme/pushforward.hpp"

namespace zscheme {

PolyQ jacobian_class(const ZSchemeIdeal& z) {
    std::vector<int> vars(static_cast<std::size_t>(z.n()));
    for (int i = 0; i < z.n(); ++i) vars[static_cast<std::size_t>(i)] = i;
    PolyQ j = jacobian_determinant(z.generators(), vars);
    if (!j.weighted_degree().homogeneous_of(2LL * z.n()))
        throw Error(Errc::CertificateFailed,
                    "Jacobian class is not homogeneous of degree " + std::to_string(2 * z.n()));
    return j;
}

NondivisibilityCertificate jacobian_nondivisibility(const ZSchemeIdeal& z) {
    const PolyQ j = jacobian_class(z);
    const int vi = z.xv_ring()->v_index();
    const PolyQ j0 = j.substitute({{vi, PolyQ::zero(z.xv_ring())}}).in_ring(z.x_ring());
    NondivisibilityCertificate cert;
    cert.witness = normal_form(j0, z.gb_ordinary());
    cert.pass = !cert.witness.is_zero();
    if (!cert.pass)
        throw Error(Errc::CertificateFailed,
                    "Jacobian class reduced to zero modulo I(Z) + (v)");
    return cert;
}

UPoly pf_trace(const ZSchemeIdeal& z, const PolyQ& f) {
    const auto& gb = z.gb_param();
    const auto& basis = z.param_basis();
    const Matrix<RatFunc> mf = multiplication_matrix(to_param_field(f), gb, basis);
    const RatFunc tr = mf.trace();
    if (!tr.is_polynomial())
        throw Error(Errc::NonpolynomialTrace,
                    "trace has a nontrivial denominator: " + tr.str());
    return tr.poly();
}

IntegralResult equivariant_integral(const ZSchemeIdeal& z, const PolyQ& f) {
    const auto& gb = z.gb_param();
    const auto& basis = z.param_basis();
    const PolyQ j = jacobian_class(z);
    const Matrix<RatFunc> mj = multiplication_matrix(to_param_field(j), gb, basis);
    Matrix<RatFunc> mj_inv;
    try {
        mj_inv = mj.inverse();
    } catch (const Error& e) {
        if (e.code() != Errc::JNotInvertible) throw;
        throw Error(Errc::JNotInvertible,
                    "J is not invertible over Q(v); model or normalization failure");
    }
    const Matrix<RatFunc> mf = multiplication_matrix(to_param_field(f), gb, basis);
    const RatFunc tr = (mf * mj_inv).trace();
    if (!tr.is_polynomial())
        throw Error(Errc::NonpolynomialTrace,
                    "integral is not a polynomial in v: " + tr.str());

    IntegralResult out;
    out.value = tr.poly();
    out.class_degree = f.weighted_degree();
    out.method = "TRACE";

    // Degree contract for homogeneous classes: deg f < 2n forces 0, otherwise
    // the value is the single monomial c v^{(deg f - 2n)/2}.
    if (out.class_degree.kind == DegreeKind::Homogeneous) {
        const long long d = out.class_degree.degree - 2LL * z.n();
        if (d < 0 && !out.value.is_zero())
            throw Error(Errc::CertificateFailed,
                        "integral of a class of degree " + std::to_string(out.class_degree.degree) +
                            " must vanish, got " + out.value.str("v"));
        if (d >= 0 && !out.value.is_zero()) {
            const int k = static_cast<int>(d / 2);
            if (out.value.degree() != k || !(out.value - UPoly::term(out.value.coeff(k), k)).is_zero())
                throw Error(Errc::CertificateFailed,
                            "integral violates the degree contract: " + out.value.str("v"));
        }
    }
    return out;
}

Rational fiber_sum_oracle(const ZSchemeIdeal& z, const PolyQ& f, const Rational& v0) {
    if (v0.is_zero()) throw Error(Errc::BadInput, "fiber sum needs v0 != 0");
    const RingPtr& xv = z.xv_ring();
    const int vi = xv->v_index();
    const PolyQ v0c = PolyQ::constant(xv, v0);

    std::vector<PolyQ> fgens;
    for (const auto& g : z.generators())
        fgens.push_back(g.substitute({{vi, v0c}}).in_ring(z.x_ring()));
    GroebnerBasis<Rational> gb = buchberger(fgens, MonomialOrder::grevlex(), z.x_ring());
    const std::vector<Monomial> basis = standard_monomials(gb);

    const PolyQ fj = jacobian_class(z).substitute({{vi, v0c}}).in_ring(z.x_ring());
    const Matrix<Rational> mj = multiplication_matrix(fj, gb, basis);
    Matrix<Rational> mj_inv;
    try {
        mj_inv = mj.inverse();
    } catch (const Error& e) {
        if (e.code() != Errc::JNotInvertible) throw;
        throw Error(Errc::SingularJAtFiber, "J vanishes on the fiber at v = " + v0.str());
    }
    const PolyQ ff = f.substitute({{vi, v0c}}).in_ring(z.x_ring());
    return (multiplication_matrix(ff, gb, basis) * mj_inv).trace();
}

} // namespace zscheme
