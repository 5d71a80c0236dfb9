"""Smoke tests for the python bindings."""

import pytest

zs = pytest.importorskip("zscheme")


def test_parse_round_trip():
    assert zs.parse("x1*(x1+v)", ["x1", "v"], [2, 2]) == "x1^2 + x1*v"


def test_present_pn2():
    rep = zs.present("pn:2")
    assert rep["model"] == "pn:2"
    assert rep["equivariant"]["euler"] == 3
    assert rep["equivariant"]["certificates"]["regular_sequence"] is True
    assert rep["ordinary"]["hilbert_numerator"][0] == 1


def test_zscheme_object():
    z = zs.ZScheme("pn:1")
    assert z.flat_degree() == 2
    assert z.integrate("x1") == "1/2"
    assert z.integrate_jacobian() == "2"
    assert z.fiber_sum("x1", "2") == "1/2"
    assert z.component_restriction("x1", 1) == "-v"
    fiber = z.fiber("1")
    assert fiber["dimension"] == "2"
    assert fiber["reduced"] == "true"


def test_custom_model():
    z = zs.ZScheme(["x1"], [2], {"x1": "0 - x1^2"})
    assert z.flat_degree() == 2
    with pytest.raises(ValueError):
        zs.ZScheme(["x1"], [2], {"x1": "0"})  # not an isolated zero


def test_hessenberg_peterson():
    rep = zs.hessenberg(2, "peterson")
    assert rep["poincare_t"] == [1, 0, 2, 0, 1]
    assert rep["fixed_points"] == 4
    assert rep["complete_intersection"]["degrees"] == [4, 4, 4]
    assert rep["poincare_matches_product"] is True


def test_hessenberg_invalid_omega():
    with pytest.raises(ValueError):
        zs.hessenberg(2, "-a1-a2")  # not B-closed


def test_product_formula_and_fixed_points():
    pf = zs.product_formula(2, "full")
    assert pf["is_polynomial"] is True
    assert zs.fixed_point_count(2, "full") == 6
    assert len(zs.valid_omegas(2)) == 5


def test_flag_flat_degree():
    assert zs.ZScheme("flag:2").flat_degree() == 6
