#include <doctest.h>

#include "zscheme/fundscheme.hpp"
#include "zscheme/parser.hpp"

using namespace zscheme;

TEST_CASE("projective_space_model") {
    const RegularModel m2 = projective_space_model(2);
    CHECK(m2.ring->vars() == std::vector<std::string>{"x1", "x2"});
    CHECK(m2.ring->weights() == std::vector<int>{2, 4});
    CHECK(m2.v_images[0] == parse_polynomial("x2 - x1^2", m2.ring));
    CHECK(m2.v_images[1] == parse_polynomial("-x1*x2", m2.ring));

    const RegularModel m1 = projective_space_model(1);
    CHECK(m1.v_images[0] == parse_polynomial("-x1^2", m1.ring));

    CHECK(projective_space_model(3).ring->weights() == std::vector<int>{2, 4, 6});
    CHECK_THROWS_AS(projective_space_model(0), Error);
}

TEST_CASE("flag_model_a: symbolic conjugation") {
    const RegularModel f2 = flag_model_a(2);
    // Coordinates sorted by weight, then row-major: u21, u32 (weight 2), u31 (4).
    CHECK(f2.ring->vars() == std::vector<std::string>{"u21", "u32", "u31"});
    CHECK(f2.ring->weights() == std::vector<int>{2, 2, 4});
    REQUIRE(f2.flag.has_value());
    // Hand 3x3 matrix products: u^-1 e u and u^-1 h u - h with h = diag(2,0,-2).
    CHECK(f2.flag->v_alpha[0] == parse_polynomial("u31 - u21^2", f2.ring));
    CHECK(f2.flag->w_alpha[0] == parse_polynomial("-2*u21", f2.ring));
    CHECK(f2.flag->v_alpha[1] == parse_polynomial("u21*u32 - u31 - u32^2", f2.ring));
    CHECK(f2.flag->w_alpha[1] == parse_polynomial("-2*u32", f2.ring));
    CHECK(f2.flag->v_alpha[2] == parse_polynomial("u21^2*u32 - u21*u31 - u31*u32", f2.ring));
    CHECK(f2.flag->w_alpha[2] == parse_polynomial("2*u21*u32 - 4*u31", f2.ring));

    const RegularModel f1 = flag_model_a(1);
    CHECK(f1.ring->vars() == std::vector<std::string>{"u21"});
    CHECK(f1.flag->v_alpha[0] == parse_polynomial("-u21^2", f1.ring));
    CHECK(f1.flag->w_alpha[0] == parse_polynomial("-2*u21", f1.ring));
}

TEST_CASE("custom_model") {
    const RegularModel p2 = projective_space_model(2);
    const RegularModel again = custom_model(p2.ring, p2.v_images);
    CHECK(models_equal(again, p2));
    CHECK(again.provenance == Provenance::Custom);

    const RingPtr rx = WeightedRing::make({"x1"}, {2});
    CHECK_THROWS_AS(custom_model(rx, {PolyQ::zero(rx)}), Error); // V vanishes on a line
    try {
        custom_model(rx, {PolyQ::zero(rx)});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotIsolatedZero);
    }
    try {
        custom_model(rx, {PolyQ::variable(rx, 0).pow(3)}); // degree 6 != 4
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DegreeMismatch);
    }
    try {
        custom_model(rx, {parse_polynomial("x1^2 + x1^3", rx)});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotHomogeneous);
    }
}

TEST_CASE("validate_regular") {
    const ModelCertificate p3 = validate_regular(projective_space_model(3));
    CHECK(p3.ok());
    CHECK(p3.dimension == 4); // dim H*(P^3)

    const ModelCertificate f2 = validate_regular(flag_model_a(2));
    CHECK(f2.ok());
    CHECK(f2.dimension == 6); // |S_3|

    RegularModel broken;
    broken.ring = WeightedRing::make({"x1"}, {2});
    broken.v_images = {PolyQ::zero(broken.ring)};
    const ModelCertificate bad = validate_regular(broken);
    CHECK(!bad.finite);
    CHECK(!bad.ok());
}

TEST_CASE("degree contract and the complete-intersection dimension formula") {
    for (int n = 1; n <= 3; ++n) {
        const RegularModel m = projective_space_model(n);
        for (int i = 0; i < m.ring->nvars(); ++i)
            CHECK(m.v_images[static_cast<std::size_t>(i)].weighted_degree().homogeneous_of(
                m.ring->weight(i) + 2));
    }
    for (int l = 1; l <= 2; ++l) {
        const RegularModel m = flag_model_a(l);
        for (int i = 0; i < m.ring->nvars(); ++i)
            CHECK(m.v_images[static_cast<std::size_t>(i)].weighted_degree().homogeneous_of(
                m.ring->weight(i) + 2));
    }
    // dim = prod (a_i + 2)/a_i at every built-in model.
    for (const auto& m : {projective_space_model(2), projective_space_model(3), flag_model_a(2)}) {
        Rational expected(1);
        for (int i = 0; i < m.ring->nvars(); ++i)
            expected *= Rational(m.ring->weight(i) + 2, m.ring->weight(i));
        CHECK(Rational(validate_regular(m).dimension) == expected);
    }
}

TEST_CASE("flag:1 and pn:1 present the same curve") {
    ZSchemeIdeal zf(flag_model_a(1));
    ZSchemeIdeal zp(projective_space_model(1));
    const HilbertSeries a = hilbert_series(zf.generators());
    const HilbertSeries b = hilbert_series(zp.generators());
    CHECK(a.numerator == b.numerator);
    CHECK(flat_degree(zf) == 2);
    CHECK(flat_degree(zp) == 2);
}
