#include <doctest.h>

#include "zscheme/hessenberg.hpp"
#include "zscheme/parser.hpp"

using namespace zscheme;

namespace {
const UPoly one_t2 = UPoly::one() + UPoly::term(Rational(1), 2);
HessenbergSpace full_omega(int rank) {
    return make_hessenberg_space(rank, build_type_a(rank).negative_roots());
}
} // namespace

TEST_CASE("hessenberg_ideal") {
    // Omega = Phi^-: no v_beta generators; the ideal is I(Z) and is already
    // v-saturated, so saturation is a no-op.
    HessenbergIdeal full = hessenberg_ideal(2, full_omega(2));
    CHECK(full.raw_generators.size() == 3);
    CHECK(!full.saturation_was_needed);
    ZSchemeIdeal z(flag_model_a(2));
    CHECK(full.gb.elements() == z.gb_xv().elements());

    // Peterson: adds v_{-theta}, the (3,1) entry of u^-1 e u.
    HessenbergIdeal pet = hessenberg_ideal(2, peterson_omega(2));
    REQUIRE(pet.raw_generators.size() == 4);
    CHECK(pet.raw_generators[3] ==
          parse_polynomial("u21^2*u32 - u21*u31 - u31*u32", pet.xv_ring));
    CHECK(pet.saturation_was_needed);

    // Omega = {}: Z_Y is the component through o, the line V(u21, u32, u31).
    HessenbergIdeal point = hessenberg_ideal(2, make_hessenberg_space(2, {}));
    CHECK(point.raw_generators.size() == 6);
    std::vector<std::string> names;
    for (const auto& e : point.gb.elements()) names.push_back(e.str());
    CHECK(names == std::vector<std::string>{"u32", "u21", "u31"}); // ascending grevlex

    CHECK_THROWS_AS(hessenberg_ideal(2, make_hessenberg_space(2, {Root{3, 1}})), Error);
}

TEST_CASE("hessenberg_poincare") {
    const PoincareComparison full = hessenberg_poincare(hessenberg_ideal(2, full_omega(2)));
    CHECK(full.poincare_t == one_t2 * (one_t2 + UPoly::term(Rational(1), 4)));
    CHECK(full.euler == 6);
    CHECK(full.match);

    const PoincareComparison pet = hessenberg_poincare(hessenberg_ideal(2, peterson_omega(2)));
    CHECK(pet.poincare_t == one_t2 * one_t2);
    CHECK(pet.fixed_points == 4);

    const PoincareComparison single =
        hessenberg_poincare(hessenberg_ideal(2, make_hessenberg_space(2, {Root{2, 1}})));
    CHECK(single.poincare_t == one_t2);
    CHECK(single.fixed_points == 2);

    const PoincareComparison empty =
        hessenberg_poincare(hessenberg_ideal(2, make_hessenberg_space(2, {})));
    CHECK(empty.poincare_t == UPoly::one());
    CHECK(empty.euler == 1);
}

TEST_CASE("product_formula") {
    const ProductFormulaResult full = product_formula(full_omega(2));
    REQUIRE(full.is_polynomial);
    const UPoly oneq = UPoly::one() + UPoly::term(Rational(1), 1);
    CHECK(full.value_q == oneq * (oneq + UPoly::term(Rational(1), 2)));
    CHECK(full.nonnegative);

    const ProductFormulaResult pet = product_formula(peterson_omega(2));
    CHECK(pet.value_q == oneq * oneq);

    // Forced evaluation on the non-closed {-theta}: (1-q^3)/(1-q^2) is not
    // a polynomial: the documented discrepancy of the printed condition.
    const ProductFormulaResult theta = product_formula(HessenbergSpace{2, {Root{3, 1}}});
    CHECK(!theta.is_polynomial);
    CHECK(theta.ratio == "(1 - q^3) / (1 - q^2)");

    CHECK(product_formula(HessenbergSpace{2, {}}).value_q == UPoly::one());
}

TEST_CASE("complete_intersection_check") {
    const CICertificate pet = complete_intersection_check(hessenberg_ideal(2, peterson_omega(2)));
    CHECK(pet.pass);
    CHECK(pet.degrees == std::vector<int>{4, 4, 4});
    // Oracle: the numerator must be exactly (1 - t^4)^3.
    const UPoly f4 = UPoly::one() - UPoly::term(Rational(1), 4);
    CHECK(pet.series.numerator == f4 * f4 * f4);

    const CICertificate full = complete_intersection_check(hessenberg_ideal(2, full_omega(2)));
    CHECK(full.pass);
    CHECK(full.degrees == std::vector<int>{4, 4, 6});

    const CICertificate empty =
        complete_intersection_check(hessenberg_ideal(2, make_hessenberg_space(2, {})));
    CHECK(empty.pass);
    CHECK(empty.degrees == std::vector<int>{2, 2, 4});
}

TEST_CASE("poincare_duality_check") {
    CHECK(poincare_duality_check(hessenberg_ideal(2, peterson_omega(2))).socle_degree == 4);
    CHECK(poincare_duality_check(hessenberg_ideal(2, full_omega(2))).socle_degree == 6);
    CHECK(poincare_duality_check(hessenberg_ideal(2, make_hessenberg_space(2, {}))).pass);
}

TEST_CASE("A2 sweep: product formula, euler, monotonicity") {
    const auto omegas = enumerate_valid_omegas(2);
    REQUIRE(omegas.size() == 5);
    UPoly previous; // collect poincare(omega) along a chain for monotonicity
    for (const auto& omega : omegas) {
        const PoincareComparison pc = hessenberg_poincare(hessenberg_ideal(2, omega));
        CHECK(pc.match);
        CHECK(pc.euler_match);
    }
    // Coefficientwise monotone over every nested pair of valid spaces.
    std::vector<UPoly> polys;
    for (const auto& omega : omegas)
        polys.push_back(hessenberg_poincare(hessenberg_ideal(2, omega)).poincare_t);
    for (std::size_t a = 0; a < omegas.size(); ++a)
        for (std::size_t b = 0; b < omegas.size(); ++b) {
            bool subset = true;
            for (const Root& r : omegas[a].omega)
                if (!omegas[b].contains(r)) subset = false;
            if (!subset) continue;
            for (int i = 0; i <= polys[b].degree(); ++i)
                CHECK(!(polys[b].coeff(i) < polys[a].coeff(i)));
        }
}

TEST_CASE("fibers of the saturated curve count the fixed points") {
    // Independent of any Hilbert series: at v0 != 0 the curve over Y meets
    // the fiber in exactly the fixed-point translates, reduced.
    for (const auto& omega : enumerate_valid_omegas(2)) {
        HessenbergIdeal h = hessenberg_ideal(2, omega);
        const std::size_t expected = hessenberg_fixed_points(omega).size();
        for (long v0 : {1L, 2L}) {
            std::vector<PolyQ> fgens;
            for (const auto& g : h.gb.elements())
                fgens.push_back(
                    g.substitute({{h.xv_ring->v_index(),
                                   PolyQ::constant(h.xv_ring, Rational(v0))}})
                        .in_ring(h.u_ring));
            const GroebnerBasis<Rational> gb =
                buchberger(fgens, MonomialOrder::grevlex(), h.u_ring);
            CHECK(standard_monomials(gb).size() == expected);
            CHECK(!trace_form_determinant(gb).is_zero());
        }
    }
}

TEST_CASE("A3 Peterson") {
    HessenbergIdeal h = hessenberg_ideal(3, peterson_omega(3));
    const PoincareComparison pc = hessenberg_poincare(h);
    CHECK(pc.poincare_t == one_t2 * one_t2 * one_t2);
    CHECK(pc.fixed_points == 8);

    // Fiber count at v0 = 1, series-free.
    std::vector<PolyQ> fgens;
    for (const auto& g : h.gb.elements())
        fgens.push_back(
            g.substitute({{h.xv_ring->v_index(), PolyQ::constant(h.xv_ring, Rational(1))}})
                .in_ring(h.u_ring));
    const GroebnerBasis<Rational> gb = buchberger(fgens, MonomialOrder::grevlex(), h.u_ring);
    CHECK(standard_monomials(gb).size() == 8);
}

TEST_CASE("CI degrees are stable under generator permutation") {
    HessenbergIdeal h = hessenberg_ideal(2, peterson_omega(2));
    std::vector<PolyQ> permuted{h.raw_generators[3], h.raw_generators[1], h.raw_generators[0],
                                h.raw_generators[2]};
    const GroebnerBasis<Rational> sat = saturate_wrt_last_variable(permuted);
    const HilbertSeries hs = hilbert_series(sat.elements(), MonomialOrder::grevlex(), h.xv_ring);
    CHECK(hs.numerator == complete_intersection_check(h).series.numerator);
}

TEST_CASE("containment I(Z) in I(Z_Y) holds by normal forms") {
    ZSchemeIdeal z(flag_model_a(2));
    for (const auto& omega : enumerate_valid_omegas(2)) {
        HessenbergIdeal h = hessenberg_ideal(2, omega);
        for (const auto& f : z.generators()) CHECK(normal_form(f, h.gb).is_zero());
    }
}
