#include <doctest.h>

#include "zscheme/cohomology.hpp"
#include "zscheme/hessenberg.hpp"
#include "zscheme/parser.hpp"

using namespace zscheme;

namespace {
UPoly t2_geometric(int n) {
    UPoly p;
    for (int i = 0; i <= n; ++i) p += UPoly::term(Rational(1), 2 * i);
    return p;
}
} // namespace

TEST_CASE("equivariant_presentation") {
    const PresentationReport p1 = equivariant_presentation(projective_space_model(1));
    CHECK(p1.euler == 2);
    CHECK(p1.regular_sequence_ok);
    CHECK(p1.series_consistent);
    CHECK(HilbertSeries::series_equal(p1.series, HilbertSeries{t2_geometric(1), {2}}));
    CHECK(p1.generators == std::vector<std::string>{"2*x1^2 + 2*x1*v"});

    const PresentationReport p2 = equivariant_presentation(projective_space_model(2));
    CHECK(p2.euler == 3);
    CHECK(p2.generators ==
          std::vector<std::string>{"2*x1^2 - 2*x2 + 2*x1*v", "2*x1*x2 + 4*x2*v"});

    // SL2/B is P^1: the two models share one series.
    const PresentationReport f1 = equivariant_presentation(flag_model_a(1));
    CHECK(HilbertSeries::series_equal(f1.series, p1.series));
}

TEST_CASE("ordinary_presentation") {
    const PresentationReport p2 = ordinary_presentation(projective_space_model(2));
    CHECK(*p2.series.as_polynomial() == t2_geometric(2));
    CHECK(p2.euler == 3);

    const PresentationReport f2 = ordinary_presentation(flag_model_a(2));
    const UPoly onePlus = UPoly::one() + UPoly::term(Rational(1), 2);
    CHECK(*f2.series.as_polynomial() == onePlus * (onePlus + UPoly::term(Rational(1), 4)));

    CHECK(*ordinary_presentation(projective_space_model(1)).series.as_polynomial() ==
          t2_geometric(1));
}

TEST_CASE("euler_characteristic") {
    CHECK(euler_characteristic(projective_space_model(4)) == 5);
    CHECK(euler_characteristic(flag_model_a(1)) == 2);
    CHECK(euler_characteristic(flag_model_a(3)) == 24); // |S_4|
}

TEST_CASE("pn_closed_form_check") {
    const ClosedFormCheck c1 = pn_closed_form_check(1);
    CHECK(c1.pass);
    CHECK(c1.product == "x1^2 + x1*v");

    const ClosedFormCheck c2 = pn_closed_form_check(2);
    CHECK(c2.pass);
    CHECK(c2.generator_images[0] == "0");

    CHECK(pn_closed_form_check(4).pass);

    // Independent witness: the product itself lies in I(Z).
    ZSchemeIdeal z(projective_space_model(2));
    const PolyQ x1 = PolyQ::variable(z.xv_ring(), 0);
    const PolyQ v = PolyQ::variable(z.xv_ring(), 2);
    const PolyQ product = x1 * (x1 + v) * (x1 + v.scaled(Rational(2)));
    CHECK(normal_form(product, z.gb_xv()).is_zero());
}

TEST_CASE("chern_line_bundle_image") {
    for (int n = 1; n <= 3; ++n) {
        const ChernCheck c = chern_line_bundle_image(n);
        CHECK(c.congruences_ok);
        CHECK(!c.discrepancy.is_zero()); // x1 = -c fails by the class -(x1 + n v)
    }
    const ChernCheck c1 = chern_line_bundle_image(1);
    ZSchemeIdeal z1(projective_space_model(1));
    CHECK(c1.scalar == parse_polynomial("-v - 2*x1", z1.xv_ring()));
    CHECK(c1.discrepancy == parse_polynomial("-x1 - v", z1.xv_ring()));

    // The scalar restricts linearly (2m - n) v on the m-th component.
    const ChernCheck c2 = chern_line_bundle_image(2);
    ZSchemeIdeal z2(projective_space_model(2));
    for (int m = 0; m <= 2; ++m)
        CHECK(component_restriction(z2, c2.scalar, m) == UPoly::term(Rational(2 * m - 2), 1));
}

TEST_CASE("equivariant series times (1 - t^2) is the ordinary series") {
    for (const auto& m : {projective_space_model(1), projective_space_model(2),
                          projective_space_model(3), flag_model_a(1), flag_model_a(2)}) {
        ZSchemeIdeal z(m);
        const ZSeries s = hilbert_series_Z(z);
        CHECK(s.consistent);
        // Betti numbers: non-negative, zero in odd degrees.
        const UPoly p = s.p_polynomial;
        for (int i = 0; i <= p.degree(); ++i) {
            CHECK(p.coeff(i).sign() >= 0);
            if (i % 2 == 1) CHECK(p.coeff(i).is_zero());
        }
    }
}

TEST_CASE("Poincare duality of smooth ordinary quotients") {
    for (const auto& m : {projective_space_model(2), projective_space_model(3), flag_model_a(2)}) {
        ZSchemeIdeal z(m);
        const DualityCertificate d = poincare_duality_check_ideal(z.ordinary_generators(),
                                                                  z.x_ring());
        CHECK(d.pass);
    }
    // P^2 socle degree is 4 = its real dimension.
    ZSchemeIdeal z(projective_space_model(2));
    CHECK(poincare_duality_check_ideal(z.ordinary_generators(), z.x_ring()).socle_degree == 4);
}
