#include <doctest.h>

#include "zscheme/parser.hpp"
#include "zscheme/pushforward.hpp"
#include "zscheme/verify.hpp"

using namespace zscheme;

TEST_CASE("jacobian_class") {
    ZSchemeIdeal z1(projective_space_model(1));
    CHECK(jacobian_class(z1) == parse_polynomial("2*v + 4*x1", z1.xv_ring()));

    // Hand cofactor expansion of the 2x2 partial matrix.
    ZSchemeIdeal z2(projective_space_model(2));
    const PolyQ j2 = jacobian_class(z2);
    CHECK(j2 == parse_polynomial("8*v^2 + 20*x1*v + 8*x1^2 + 4*x2", z2.xv_ring()));
    CHECK(j2.weighted_degree().homogeneous_of(4));

    // J vanishes at the origin (it has positive degree) but not on Z.
    std::vector<std::pair<int, PolyQ>> origin;
    for (int i = 0; i < z2.xv_ring()->nvars(); ++i)
        origin.emplace_back(i, PolyQ::zero(z2.xv_ring()));
    CHECK(j2.substitute(origin).is_zero());

    ZSchemeIdeal zf(flag_model_a(2));
    CHECK(jacobian_class(zf).weighted_degree().homogeneous_of(6));

    // Six coordinates: the Jacobian goes through Bareiss elimination.
    ZSchemeIdeal zf3(flag_model_a(3));
    CHECK(jacobian_class(zf3).weighted_degree().homogeneous_of(12));
    CHECK(jacobian_nondivisibility(zf3).pass);
}

TEST_CASE("jacobian_nondivisibility") {
    for (int n = 1; n <= 3; ++n) {
        ZSchemeIdeal z(projective_space_model(n));
        CHECK(jacobian_nondivisibility(z).pass);
    }
    ZSchemeIdeal z2(projective_space_model(2));
    CHECK(jacobian_nondivisibility(z2).witness == parse_polynomial("12*x2", z2.x_ring()));

    ZSchemeIdeal zf(flag_model_a(2));
    CHECK(jacobian_nondivisibility(zf).pass);

    // A non-isolated system has vanishing Jacobian, the degenerate signal.
    const RingPtr r = WeightedRing::make({"x1", "x2"}, {2, 2});
    const PolyQ p = PolyQ::variable(r, 0) * PolyQ::variable(r, 1);
    CHECK(jacobian_determinant({p, p}, {0, 1}).is_zero());
}

TEST_CASE("trace") {
    ZSchemeIdeal z2(projective_space_model(2));
    CHECK(pf_trace(z2, PolyQ::constant(z2.xv_ring(), Rational(1))) == UPoly(Rational(3)));
    CHECK(pf_trace(z2, PolyQ::variable(z2.xv_ring(), 0)) == UPoly::term(Rational(-3), 1));

    ZSchemeIdeal z1(projective_space_model(1));
    CHECK(pf_trace(z1, PolyQ::variable(z1.xv_ring(), 0)) == UPoly::term(Rational(-1), 1));
}

TEST_CASE("equivariant_integral") {
    for (const auto& m : {projective_space_model(1), projective_space_model(2),
                          projective_space_model(3), flag_model_a(1), flag_model_a(2)}) {
        ZSchemeIdeal z(m);
        const int r = flat_degree(z);
        CHECK(equivariant_integral(z, jacobian_class(z)).value == UPoly(Rational(r)));
        CHECK(equivariant_integral(z, PolyQ::constant(z.xv_ring(), Rational(1))).value.is_zero());
    }
    ZSchemeIdeal z1(projective_space_model(1));
    CHECK(equivariant_integral(z1, PolyQ::variable(z1.xv_ring(), 0)).value ==
          UPoly(Rational(1, 2)));
}

TEST_CASE("integrals against hand fiber sums on pn:2") {
    // Components m = 0,1,2 carry x1 = -m v, x2 = m(m-1) v^2 and
    // J = 8v^2 + 20 x1 v + 8 x1^2 + 4 x2 evaluates to {8, -4, 8} v^2.
    ZSchemeIdeal z(projective_space_model(2));
    const PolyQ x1 = PolyQ::variable(z.xv_ring(), 0);
    const PolyQ x2 = PolyQ::variable(z.xv_ring(), 1);
    CHECK(equivariant_integral(z, x1 * x1).value == UPoly(Rational(1, 4)));
    CHECK(equivariant_integral(z, x2).value == UPoly(Rational(1, 4)));
    CHECK(equivariant_integral(z, x1 * x2).value == UPoly::term(Rational(-1, 2), 1));
    CHECK(equivariant_integral(z, x2 * x2).value == UPoly::term(Rational(1, 2), 2));
}

TEST_CASE("fiber_sum_oracle") {
    ZSchemeIdeal z3(projective_space_model(3));
    CHECK(fiber_sum_oracle(z3, jacobian_class(z3), Rational(1)) == Rational(4));

    ZSchemeIdeal z1(projective_space_model(1));
    const PolyQ x1 = PolyQ::variable(z1.xv_ring(), 0);
    const PolyQ v = PolyQ::variable(z1.xv_ring(), 1);
    CHECK(fiber_sum_oracle(z1, x1, Rational(2)) == Rational(1, 2));
    CHECK(fiber_sum_oracle(z1, v * x1, Rational(3)) == Rational(3, 2));
    CHECK_THROWS_AS(fiber_sum_oracle(z1, x1, Rational(0)), Error);
}

TEST_CASE("trace agrees with the specialized fiber trace") {
    ZSchemeIdeal z(projective_space_model(2));
    const RingPtr& xv = z.xv_ring();
    Rng rng(55);
    for (int t = 0; t < 6; ++t) {
        std::vector<PolyQ::Term> terms;
        for (const Monomial& m : monomials_of_weighted_degree(xv, 2 * rng.range(0, 4)))
            terms.emplace_back(m, Rational(rng.range(-3, 3)));
        const PolyQ f = PolyQ::from_terms(xv, std::move(terms));
        const UPoly tr = pf_trace(z, f);
        for (long v0 : {1L, 2L, -1L}) {
            const PolyQ fv = f.substitute({{xv->v_index(), PolyQ::constant(xv, Rational(v0))}})
                                 .in_ring(z.x_ring());
            std::vector<PolyQ> fgens;
            for (const auto& g : z.generators())
                fgens.push_back(
                    g.substitute({{xv->v_index(), PolyQ::constant(xv, Rational(v0))}})
                        .in_ring(z.x_ring()));
            const GroebnerBasis<Rational> gb =
                buchberger(fgens, MonomialOrder::grevlex(), z.x_ring());
            CHECK(multiplication_matrix(fv, gb).trace() == tr.eval(Rational(v0)));
        }
    }
}

TEST_CASE("linearity and degree contract") {
    ZSchemeIdeal z(projective_space_model(2));
    const PolyQ v = PolyQ::variable(z.xv_ring(), 2);
    Rng rng(99);
    for (int t = 0; t < 8; ++t) {
        std::vector<PolyQ::Term> terms;
        for (const Monomial& m : monomials_of_weighted_degree(z.xv_ring(), 2 * rng.range(1, 5)))
            terms.emplace_back(m, Rational(rng.range(-3, 3)));
        const PolyQ f = PolyQ::from_terms(z.xv_ring(), std::move(terms));
        const UPoly base = equivariant_integral(z, f).value;
        CHECK(equivariant_integral(z, v * f).value == UPoly::term(Rational(1), 1) * base);
        const PolyQ g = PolyQ::variable(z.xv_ring(), 0).pow(2 * static_cast<unsigned>(t % 3));
        CHECK(equivariant_integral(z, f + g).value ==
              base + equivariant_integral(z, g).value);
    }
    // deg f < 2n forces a vanishing integral.
    CHECK(equivariant_integral(z, PolyQ::variable(z.xv_ring(), 0)).value.is_zero());
}

TEST_CASE("oracle agreement on random classes") {
    ZSchemeIdeal z(projective_space_model(2));
    Rng rng(7);
    for (int t = 0; t < 10; ++t) {
        std::vector<PolyQ::Term> terms;
        for (const Monomial& m : monomials_of_weighted_degree(z.xv_ring(), 2 * rng.range(0, 5)))
            terms.emplace_back(m, Rational(rng.range(-3, 3)));
        const PolyQ f = PolyQ::from_terms(z.xv_ring(), std::move(terms));
        const UPoly value = equivariant_integral(z, f).value;
        for (long v0 : {1L, 2L})
            CHECK(fiber_sum_oracle(z, f, Rational(v0)) == value.eval(Rational(v0)));
    }
}

TEST_CASE("normalization guard: scaling a generator scales the integral") {
    ZSchemeIdeal clean(projective_space_model(2));
    const PolyQ j = jacobian_class(clean);
    ZSchemeIdeal scaled =
        ZSchemeIdeal::with_scaled_generator(projective_space_model(2), 0, Rational(3));
    const UPoly got = equivariant_integral(scaled, j).value;
    CHECK(got == UPoly(Rational(1))); // r/3 with r = 3
    CHECK(got != UPoly(Rational(3)));
}
