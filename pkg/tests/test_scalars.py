"""Exact Gaussian-rational scalars and unimodular phases."""

import cmath
import math
import random
from fractions import Fraction

import pytest

from stablepoly.scalars import (
    QI,
    Unimodular,
    abs2,
    as_scalar,
    conj,
    imag_part,
    is_exact,
    qi_nth_root,
    qi_snap,
    qi_sqrt,
    rational_sqrt,
    real_part,
    to_complex,
)


def rand_qi(rng, den=12):
    return QI(Fraction(rng.randint(-20, 20), rng.randint(1, den)),
              Fraction(rng.randint(-20, 20), rng.randint(1, den)))


def test_construction_and_equality():
    assert QI(1) == QI(Fraction(2, 2))
    assert QI(1, 2) == QI(1) + QI(0, 2)
    assert QI(0) == 0
    assert QI(3, 0) == Fraction(3)
    assert bool(QI(0, 0)) is False
    assert bool(QI(0, 1)) is True


def test_arithmetic_matches_complex():
    rng = random.Random(7)
    for _ in range(200):
        a, b = rand_qi(rng), rand_qi(rng)
        za, zb = complex(a), complex(b)
        assert cmath.isclose(complex(a + b), za + zb)
        assert cmath.isclose(complex(a - b), za - zb)
        assert cmath.isclose(complex(a * b), za * zb)
        if b:
            assert cmath.isclose(complex(a / b), za / zb)
        assert cmath.isclose(complex(a ** 3), za ** 3)


def test_field_axioms_are_exact():
    rng = random.Random(11)
    for _ in range(100):
        a, b, c = rand_qi(rng), rand_qi(rng), rand_qi(rng)
        assert (a + b) * c == a * c + b * c
        if b:
            assert (a / b) * b == a
        assert a * a.conjugate() == QI(a.abs2())


def test_conjugate_and_abs2():
    x = QI(Fraction(3, 5), Fraction(-4, 5))
    assert x.abs2() == Fraction(1)
    assert x.conjugate() == QI(Fraction(3, 5), Fraction(4, 5))
    assert abs(x) == pytest.approx(1.0)


def test_pow_negative_exponent():
    x = QI(1, 1)
    assert x ** -2 == QI(1) / (x * x)
    assert x ** 0 == QI(1)


def test_scalar_helpers_cover_both_backends():
    assert is_exact(QI(1)) and is_exact(Fraction(1, 2)) and is_exact(3)
    assert not is_exact(0.5) and not is_exact(1 + 2j)
    assert as_scalar(Fraction(1, 2)) == QI(Fraction(1, 2))
    assert as_scalar(0.25) == 0.25
    assert to_complex(QI(1, 2)) == 1 + 2j
    assert real_part(QI(1, 2)) == Fraction(1)
    assert imag_part(QI(1, 2)) == Fraction(2)
    assert imag_part(3 + 4j) == 4.0
    assert conj(2 + 1j) == 2 - 1j
    assert abs2(QI(1, 1)) == Fraction(2)
    assert abs2(3 + 4j) == pytest.approx(25.0)


def test_rational_sqrt_exact_and_refusal():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(0)) == Fraction(0)
    assert rational_sqrt(Fraction(2)) is None


def test_qi_sqrt_squares_back():
    rng = random.Random(3)
    for _ in range(50):
        x = rand_qi(rng)
        r = qi_sqrt(x * x)
        if r is None:
            continue  # sqrt may decline non-representable surds
        assert r * r == x * x


def test_qi_nth_root_on_exact_powers():
    x = QI(Fraction(1, 2), Fraction(1, 2))
    for n in (2, 3, 4):
        r = qi_nth_root(x ** n, n)
        if r is not None:
            assert r ** n == x ** n


def test_qi_snap_recovers_small_rationals():
    z = complex(Fraction(3, 7)) + 1j * complex(Fraction(-2, 9))
    s = qi_snap(z)
    assert s == QI(Fraction(3, 7), Fraction(-2, 9))


def test_unimodular_exact_phases():
    u = Unimodular.from_half_turns(Fraction(1, 2))  # e^{i pi/2} = i
    assert u.to_complex() == pytest.approx(1j)
    assert (u * u).to_complex() == pytest.approx(-1.0)
    assert (u ** 4).to_complex() == pytest.approx(1.0)
    assert u.conjugate().to_complex() == pytest.approx(-1j)


def test_unimodular_from_scalar():
    u = Unimodular.from_scalar(QI(0, 1))
    assert u.to_complex() == pytest.approx(1j)
    v = Unimodular.from_scalar(cmath.exp(1j * 0.3))
    assert v.to_complex() == pytest.approx(cmath.exp(1j * 0.3))
    with pytest.raises(Exception):
        Unimodular.from_scalar(QI(2))


def test_unimodular_eighth_root_is_exact():
    u = Unimodular.from_half_turns(Fraction(1, 4))  # e^{i pi/4}
    assert u.is_exact
    assert abs(u.to_complex() - cmath.exp(1j * math.pi / 4)) < 1e-15
    assert (u ** 8) == Unimodular.one()
