#include <doctest.h>

#include "zscheme/hessenberg.hpp"
#include "zscheme/rootsys.hpp"

using namespace zscheme;

TEST_CASE("build_type_a") {
    const RootSystemA a2 = build_type_a(2);
    REQUIRE(a2.positive_roots.size() == 3);
    CHECK(a2.positive_roots[0].str() == "a1");
    CHECK(a2.positive_roots[1].str() == "a2");
    CHECK(a2.positive_roots[2].str() == "a1+a2");
    CHECK(a2.positive_roots[0].height() == 1);
    CHECK(a2.positive_roots[2].height() == 2);

    CHECK(build_type_a(3).positive_roots.size() == 6);
    CHECK(build_type_a(1).positive_roots.size() == 1);
    CHECK_THROWS_AS(build_type_a(0), Error);
}

TEST_CASE("root parsing and printing") {
    CHECK(Root::parse("a1+a2", 2) == Root{1, 3});
    CHECK(Root::parse("-a1", 2) == Root{2, 1});
    CHECK(Root::parse("-a1-a2", 2) == Root{3, 1});
    CHECK(Root{3, 1}.str() == "-a1-a2");
    CHECK_THROWS_AS(Root::parse("a1+a3", 3), Error); // support not consecutive
    CHECK_THROWS_AS(Root::parse("a1-a2", 2), Error); // mixed signs
    CHECK_THROWS_AS(Root::parse("a5", 2), Error);
    CHECK(Root{1, 3}.simple_coefficients(2) == std::vector<int>{1, 1});
    CHECK(Root{2, 1}.simple_coefficients(2) == std::vector<int>{-1, 0});
}

TEST_CASE("Weyl action on roots") {
    const int rank = 2;
    const WeylElement s1 = WeylElement::simple_reflection(rank, 1);
    const WeylElement s2 = WeylElement::simple_reflection(rank, 2);
    const Root a1{1, 2}, a2{2, 3};

    CHECK(act(s1, a1, rank) == a1.negated());
    CHECK(act(s1, a2, rank) == Root{1, 3}); // a1 + a2

    // Longest element of S3 is the permutation (1 3); it sends a1 to -a2.
    const WeylElement w0 = WeylElement::longest(rank);
    CHECK(w0.perm == std::vector<int>{3, 2, 1});
    CHECK(act(w0, a1, rank) == Root{3, 2});
    CHECK(act(w0, a1, rank) == a2.negated());

    // act(w, act(w^-1, r)) = r on every root.
    const RootSystemA rs = build_type_a(rank);
    for (const WeylElement& w : enumerate_weyl(rank))
        for (const Root& r : rs.positive_roots) {
            CHECK(act(w, act(w.inverse(), r, rank), rank) == r);
            CHECK(rs.is_root(act(w, r, rank)));
        }

    CHECK_THROWS_AS(act(s1, Root{1, 1}, rank), Error);
    CHECK(enumerate_weyl(2).size() == 6);
    CHECK(enumerate_weyl(3).size() == 24);
}

TEST_CASE("validate_hessenberg") {
    CHECK(validate_hessenberg(make_hessenberg_space(2, {Root{2, 1}})).ok);

    // Omega = {-theta}: adding a1 lands on the missing -a2.
    const HessenbergValidation bad = validate_hessenberg(make_hessenberg_space(2, {Root{3, 1}}));
    CHECK(!bad.ok);
    CHECK(bad.alpha->str() == "-a1-a2");
    CHECK(bad.simple_index == 1);
    CHECK(bad.missing->str() == "-a2");

    CHECK(validate_hessenberg(make_hessenberg_space(2, {})).ok);
    CHECK_THROWS_AS(make_hessenberg_space(2, {Root{1, 2}}), Error); // positive root
}

TEST_CASE("peterson_omega") {
    const HessenbergSpace p2 = peterson_omega(2);
    CHECK(p2.str() == "{-a1, -a2}");
    CHECK(validate_hessenberg(p2).ok);
    CHECK(peterson_omega(1).str() == "{-a1}");
    CHECK(peterson_omega(3).omega.size() == 3);
    for (int rank = 1; rank <= 4; ++rank) CHECK(validate_hessenberg(peterson_omega(rank)).ok);

    // The printed height condition is not B-closed for rank >= 2.
    CHECK(omega_from_height_condition(1).omega.empty());
    CHECK(!validate_hessenberg(omega_from_height_condition(2)).ok);
    CHECK(!validate_hessenberg(omega_from_height_condition(3)).ok);
}

TEST_CASE("hessenberg_fixed_points") {
    const auto full = make_hessenberg_space(2, build_type_a(2).negative_roots());
    CHECK(hessenberg_fixed_points(full).size() == 6);

    const auto pet = hessenberg_fixed_points(peterson_omega(2));
    REQUIRE(pet.size() == 4);
    // {e, s1, s2, w0} as permutations of {1,2,3}.
    std::vector<std::vector<int>> perms;
    for (const auto& w : pet) perms.push_back(w.perm);
    CHECK(std::find(perms.begin(), perms.end(), std::vector<int>{1, 2, 3}) != perms.end());
    CHECK(std::find(perms.begin(), perms.end(), std::vector<int>{2, 1, 3}) != perms.end());
    CHECK(std::find(perms.begin(), perms.end(), std::vector<int>{1, 3, 2}) != perms.end());
    CHECK(std::find(perms.begin(), perms.end(), std::vector<int>{3, 2, 1}) != perms.end());

    CHECK(hessenberg_fixed_points(make_hessenberg_space(2, {})).size() == 1);
    CHECK_THROWS_AS(hessenberg_fixed_points(make_hessenberg_space(2, {Root{3, 1}})), Error);
}

TEST_CASE("fixed point count equals the product formula at t = 1") {
    for (int rank = 2; rank <= 3; ++rank) {
        for (const auto& omega : enumerate_valid_omegas(rank)) {
            const ProductFormulaResult pf = product_formula(omega);
            REQUIRE(pf.is_polynomial);
            const Rational at_one = pf.value_q.eval(Rational(1));
            CHECK(Rational(static_cast<long>(hessenberg_fixed_points(omega).size())) == at_one);
        }
    }
}

TEST_CASE("omega enumeration and parsing") {
    CHECK(enumerate_valid_omegas(2).size() == 5);
    // A3: order ideals of the positive-root poset, counted by hand.
    CHECK(enumerate_valid_omegas(3).size() == 14);
    const HessenbergSpace o = parse_omega("-a1,-a2", 2);
    CHECK(o.str() == "{-a1, -a2}");
    CHECK(parse_omega("-a1-a2, -a1, -a2", 2).omega.size() == 3);
    CHECK_THROWS_AS(parse_omega("a1", 2), Error);
}
