#include <doctest.h>

#include "zscheme/fundscheme.hpp"
#include "zscheme/parser.hpp"

using namespace zscheme;

TEST_CASE("canonical generators carry the +a_i v x_i normalization") {
    ZSchemeIdeal z2(projective_space_model(2));
    REQUIRE(z2.generators().size() == 2);
    CHECK(z2.generators()[0] == parse_polynomial("2*v*x1 - 2*x2 + 2*x1^2", z2.xv_ring()));
    CHECK(z2.generators()[1] == parse_polynomial("4*v*x2 + 2*x1*x2", z2.xv_ring()));

    ZSchemeIdeal z1(projective_space_model(1));
    CHECK(z1.generators()[0] == parse_polynomial("2*v*x1 + 2*x1^2", z1.xv_ring()));

    // Flag generators F_alpha of degrees (4, 4, 6).
    ZSchemeIdeal zf(flag_model_a(2));
    REQUIRE(zf.generators().size() == 3);
    CHECK(zf.generators()[0].weighted_degree().homogeneous_of(4));
    CHECK(zf.generators()[1].weighted_degree().homogeneous_of(4));
    CHECK(zf.generators()[2].weighted_degree().homogeneous_of(6));
    CHECK(zf.generators()[0] ==
          parse_polynomial("2*(u31 - u21^2) + 2*u21*v", zf.xv_ring()));
}

TEST_CASE("flat_degree") {
    for (int n = 1; n <= 3; ++n) {
        ZSchemeIdeal z(projective_space_model(n));
        CHECK(flat_degree(z) == n + 1);
    }
    ZSchemeIdeal zf(flag_model_a(2));
    CHECK(flat_degree(zf) == 6);
}

TEST_CASE("certify_regular_sequence") {
    ZSchemeIdeal z3(projective_space_model(3));
    const RegSeqCertificate c = certify_regular_sequence(z3);
    CHECK(c.ok);
    CHECK(c.generator_degrees == std::vector<long long>{4, 6, 8, 2});

    ZSchemeIdeal zf(flag_model_a(2));
    CHECK(certify_regular_sequence(zf).ok);

    // Adversarial model skipping validation: V(x1) = 0 is not isolated, so
    // {g_1, v} = {2 v x1, v} fails the Hilbert-series criterion.
    RegularModel broken;
    broken.ring = WeightedRing::make({"x1"}, {2});
    broken.v_images = {PolyQ::zero(broken.ring)};
    ZSchemeIdeal zb(broken);
    CHECK_THROWS_AS(certify_regular_sequence(zb), Error);
}

TEST_CASE("fiber decompositions") {
    ZSchemeIdeal z2(projective_space_model(2));
    const FiberDecomposition f1 = fiber(z2, Rational(1));
    CHECK(f1.dimension == 3);
    CHECK(f1.reduced);
    // Closed form: the fiber points have x1 in {0, -1, -2}.
    UPoly expected = UPoly::term(Rational(1), 1);
    expected = expected * UPoly(std::vector<Rational>{Rational(1), Rational(1)}); // x (x + 1)
    expected = expected * UPoly(std::vector<Rational>{Rational(2), Rational(1)}); // ... (x + 2)
    CHECK(f1.char_polys[0] == expected);

    const FiberDecomposition f0 = fiber(z2, Rational(0));
    CHECK(f0.dimension == 3);
    CHECK(!f0.reduced); // fat point at the origin
    CHECK(f0.trace_form_det.is_zero());

    ZSchemeIdeal z1(projective_space_model(1));
    const FiberDecomposition f2 = fiber(z1, Rational(2));
    CHECK(f2.char_polys[0] == UPoly::term(Rational(1), 1) * UPoly(std::vector<Rational>{Rational(2), Rational(1)}));

    // Trace form vs distinct points: nonzero exactly when the squarefree
    // part of the separating characteristic polynomial has full degree.
    CHECK(f1.char_polys[0].squarefree_part().degree() == 3);
    CHECK(f2.char_polys[0].squarefree_part().degree() == 2);
    CHECK(f0.char_polys[0].squarefree_part().degree() < 3); // fat point at v0 = 0
}

TEST_CASE("hilbert_series_Z") {
    ZSchemeIdeal z1(projective_space_model(1));
    const ZSeries s1 = hilbert_series_Z(z1);
    CHECK(s1.p_polynomial == UPoly::one() + UPoly::term(Rational(1), 2));
    CHECK(s1.consistent);

    ZSchemeIdeal z2(projective_space_model(2));
    const ZSeries s2 = hilbert_series_Z(z2);
    CHECK(s2.p_polynomial ==
          UPoly::one() + UPoly::term(Rational(1), 2) + UPoly::term(Rational(1), 4));

    ZSchemeIdeal zf(flag_model_a(2));
    const ZSeries sf = hilbert_series_Z(zf);
    const UPoly onePlus = UPoly::one() + UPoly::term(Rational(1), 2);
    CHECK(sf.p_polynomial == onePlus * (onePlus + UPoly::term(Rational(1), 4)));
    CHECK(sf.consistent);

    // P(1) = flat degree.
    CHECK(sf.p_polynomial.eval(Rational(1)) == Rational(6));
}

TEST_CASE("component restriction") {
    ZSchemeIdeal z(projective_space_model(2));
    const PolyQ x1 = PolyQ::variable(z.xv_ring(), 0);
    const PolyQ v = PolyQ::variable(z.xv_ring(), 2);
    for (int m = 0; m <= 2; ++m) {
        CHECK(component_restriction(z, x1, m) == UPoly::term(Rational(-m), 1));
        CHECK(component_restriction(z, v, m) == UPoly::term(Rational(1), 1));
        for (const auto& g : z.generators()) CHECK(component_restriction(z, g, m).is_zero());
    }
    CHECK_THROWS_AS(component_restriction(z, x1, 3), Error);

    ZSchemeIdeal zf(flag_model_a(1));
    CHECK_THROWS_AS(component_restriction(zf, PolyQ::variable(zf.xv_ring(), 0), 0), Error);
    try {
        component_chain(zf, 0);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::WrongProvenance);
    }
}

TEST_CASE("fiber dimension equals the flat degree at sampled values") {
    for (const char* id : {"pn:2", "flag:2"}) {
        RegularModel m = id[0] == 'p' ? projective_space_model(2) : flag_model_a(2);
        ZSchemeIdeal z(std::move(m));
        const int r = flat_degree(z);
        for (long v0 : {1L, 2L, -1L}) CHECK(fiber(z, Rational(v0)).dimension == r);
    }
}
