"""Polynomial and series text grammar."""

from fractions import Fraction

import pytest

from stablepoly.errors import InputError
from stablepoly.multipoly import MultiPoly
from stablepoly.parsing import parse_poly, parse_series, parse_sy_poly
from stablepoly.scalars import QI


def test_basic_forms():
    assert parse_poly("w") == MultiPoly(2, {(0, 1): QI(1)}, ("z", "w"))
    assert parse_poly("2*w - 1") == MultiPoly(
        2, {(0, 1): QI(2), (0, 0): QI(-1)}, ("z", "w"))
    assert parse_poly("i") == MultiPoly.constant(1, QI(0, 1), ("z1",))


def test_imaginary_unit_and_implicit_multiplication():
    p = parse_poly("i*w")
    q = parse_poly("iw")
    assert p == q
    assert p.coefficient((0, 1)) == QI(0, 1)


def test_fractions_and_powers():
    p = parse_poly("(1/2)*z^2 + w^3")
    assert p.coefficient((2, 0)) == QI(Fraction(1, 2))
    assert p.coefficient((0, 3)) == QI(1)


def test_unary_minus_and_parentheses():
    p = parse_poly("-(w - i*z^2)")
    assert p == parse_poly("i*z^2 - w")


def test_bare_z_is_first_ball_coordinate():
    p = parse_poly("z^2", domain="siegel", dim=2)
    assert p.names == ("z", "w")
    assert p.coefficient((2, 0)) == QI(1)


def test_dimension_inference():
    assert parse_poly("1 - z2").dim == 2
    assert parse_poly("1 - z3").dim == 3
    assert parse_poly("w - z1*z2").dim == 3
    assert parse_poly("w").dim == 2


def test_domain_forcing():
    p = parse_poly("z1^2", domain="siegel", dim=3)
    assert p.names[-1] == "w"
    with pytest.raises(InputError):
        parse_poly("w + z1", domain="ball")


def test_float_backend():
    p = parse_poly("0.5*w", backend="float")
    assert p.backend == "float"
    assert p.coefficient((0, 1)) == 0.5


def test_rejects_garbage():
    for bad in ("", "w +", "q^2", "z1^^2", "(w", "1 2 +"):
        with pytest.raises(InputError):
            parse_poly(bad)


def test_sy_variables_need_their_own_grammar():
    with pytest.raises(InputError):
        parse_poly("y^2 - s")
    with pytest.raises(InputError):
        parse_poly("s^2*w")


def test_parse_sy_poly():
    P = parse_sy_poly("y^4 - 4*s^2*y^2 - 1")
    assert P.dim == 2
    assert P.names == ("s", "y")
    assert P.coefficient((0, 4)) == QI(1)
    assert P.coefficient((2, 2)) == QI(-4)
    assert P.coefficient((0, 0)) == QI(-1)
    with pytest.raises(InputError):
        parse_sy_poly("s + z1")


def test_parse_series():
    L = parse_series("i*s^2 + s^4", order=8)
    assert L.var == "s"
    assert L.order == 8
    assert L.coeff(2) == QI(0, 1)
    assert L.coeff(4) == QI(1)
    assert L.coeff(3) == QI(0)
    with pytest.raises(InputError):
        parse_series("y + s")


def test_parse_series_division_by_constant():
    L = parse_series("s^2/4")
    assert L.coeff(2) == QI(Fraction(1, 4))


def test_whitespace_insensitive():
    assert parse_poly(" w  -  i * z ^ 2 ") == parse_poly("w - i*z^2")
