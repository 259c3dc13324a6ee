"""Truncated power series: arithmetic, composition, reversion, exp/log."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stablepoly.errors import BadConstantTerm, InputError
from stablepoly.scalars import QI
from stablepoly.series import TruncSeries

I = QI(0, 1)


def series(coeffs, order=None, var="t"):
    return TruncSeries([QI(c) if isinstance(c, (int, Fraction)) else c
                        for c in coeffs], order=order, var=var)


def rand_series(rng, order, constant=None, linear=None, den=6):
    """Random exact series; constant/linear pin those coefficients."""
    cs = [QI(Fraction(rng.randint(-4, 4), rng.randint(1, den)),
             Fraction(rng.randint(-4, 4), rng.randint(1, den)))
          for _ in range(order + 1)]
    if constant is not None:
        cs[0] = QI(constant)
    if linear is not None:
        cs[1] = QI(linear)
    return TruncSeries(cs, order=order)


def test_identity_and_monomial():
    t = TruncSeries.identity(8)
    assert t.coeff(1) == QI(1) and t.coeff(0) == QI(0)
    m = TruncSeries.monomial(3, QI(2), 8)
    assert m.coeff(3) == QI(2) and m.valuation() == 3


def test_arithmetic_basics():
    f = series([1, 2, 3], order=6)
    g = series([0, 1, 0, 1], order=6)
    assert (f + g).coeff(1) == QI(3)
    assert (f - f).is_zero()
    assert (f * g).coeff(1) == QI(1)
    assert (f * g).coeff(2) == QI(2)
    h = 2 + f  # scalar ops on either side
    assert h.coeff(0) == QI(3)
    assert (f * QI(0, 1)).coeff(2) == QI(0, 3)


def test_truncation_order_tracking():
    f = series([1, 1], order=4)
    g = series([1, 1], order=9)
    assert (f * g).order == 4
    assert f.pad_zero(9).order == 9
    assert f.truncate(2).order == 2


def test_product_rule():
    rng = random.Random(5)
    for _ in range(20):
        f = rand_series(rng, 10)
        g = rand_series(rng, 10)
        lhs = (f * g).derivative()
        rhs = f.derivative() * g + f * g.derivative()
        assert lhs.agrees_with(rhs, through=9)


def test_antiderivative_inverts_derivative():
    rng = random.Random(6)
    f = rand_series(rng, 12, constant=0)
    assert f.derivative().antiderivative().agrees_with(f, through=12)


def test_inverse_of_unit():
    rng = random.Random(8)
    for _ in range(20):
        f = rand_series(rng, 10, constant=1)
        g = f.inverse()
        assert (f * g).agrees_with(TruncSeries.one(10), through=10)


def test_inverse_rejects_zero_constant():
    with pytest.raises(Exception):
        series([0, 1], order=5).inverse()


def test_exp_log_round_trip_exact():
    rng = random.Random(42)
    for _ in range(100):
        f = rand_series(rng, 9, constant=0)
        g = f.exp().log()
        assert g == f.truncate(g.order)
        h = rand_series(rng, 9, constant=1)
        assert h.log().exp() == h


def test_log_requires_constant_one():
    with pytest.raises(BadConstantTerm):
        series([2, 1], order=5).log()


def test_nth_root_round_trip_exact():
    rng = random.Random(43)
    for _ in range(100):
        f = rand_series(rng, 8, constant=1)
        n = rng.choice([2, 3, 4, 5])
        r = f.nth_root(n)
        assert r ** n == f


def test_reversion_round_trip_exact():
    rng = random.Random(44)
    for _ in range(100):
        f = rand_series(rng, 8, constant=0, linear=1)
        g = f.reversion()
        assert f.compose(g).agrees_with(TruncSeries.identity(8), through=8)
        assert g.compose(f).agrees_with(TruncSeries.identity(8), through=8)


def test_reversion_requires_normalized_input():
    from stablepoly.errors import NotNormalized
    rng = random.Random(45)
    f = rand_series(rng, 8, constant=0, linear=Fraction(3, 2))
    with pytest.raises(NotNormalized):
        f.reversion()


def test_reversion_frozen_oracle():
    # reversion of t - t^2 has Catalan coefficients 1, 1, 2, 5, 14, 42
    f = series([0, 1, -1], order=6)
    g = f.reversion()
    for j, c in enumerate([0, 1, 1, 2, 5, 14, 42]):
        assert g.coeff(j) == QI(c)


def test_lagrange_matches_iterative_reversion():
    rng = random.Random(46)
    for _ in range(30):
        f = rand_series(rng, 9, constant=0, linear=1)
        assert f.reversion() == f.reversion_lagrange()


def test_reversion_quarter_root_example():
    # Phi(t) = t (1 + 4 t^2)^(-1/4) reverts to s ((1+4s^4)^(1/2) + 2s^2)^(1/2)
    n = 9
    base = series([1, 0, 4], order=n - 1)
    phi = (base.nth_root(4).inverse()).shift(1).truncate(n)
    psi = phi.reversion()
    inner = series([1] + [0] * 3 + [4], order=n - 1)  # 1 + 4 s^4
    target = ((inner.nth_root(2) + series([0, 0, 2], order=n - 1))
              .nth_root(2)).shift(1).truncate(n)
    assert psi.agrees_with(target, through=8)


def test_compose_requires_zero_constant():
    f = series([1, 1], order=5)
    g = series([1, 1], order=5)
    with pytest.raises(Exception):
        f.compose(g)


def test_eval_matches_horner():
    f = series([1, -2, Fraction(1, 3)], order=5)
    x = 0.37 + 0.11j
    direct = 1 - 2 * x + (1 / 3) * x * x
    assert f.eval_complex(x) == pytest.approx(direct)


def test_shift_and_divide_t_power():
    f = series([0, 0, 3, 1], order=7)
    assert f.divide_t_power(2).coeff(0) == QI(3)
    assert f.divide_t_power(2).shift(2) == f.truncate(f.order)
    with pytest.raises(InputError):
        series([1], order=3).divide_t_power(1)


def test_float_backend_round_trips_are_close():
    rng = random.Random(47)
    f = rand_series(rng, 10, constant=0).to_float()
    g = f.exp().log()
    assert g.agrees_with(f.truncate(g.order), through=g.order, tol=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=0, max_size=6))
def test_reversion_property_small_integers(tail):
    f = TruncSeries([QI(0), QI(1)] + [QI(c) for c in tail], order=8)
    g = f.reversion()
    assert f.compose(g).agrees_with(TruncSeries.identity(8), through=8)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=1, max_size=6))
def test_exp_homomorphism_small_integers(cs):
    f = TruncSeries([QI(0)] + [QI(c) for c in cs], order=7)
    g = TruncSeries([QI(0)] + [QI(c) for c in reversed(cs)], order=7)
    assert (f + g).exp() == f.exp() * g.exp()


def test_radius_estimate_positive():
    f = series([0, 1, 1, 1], order=12)
    assert f.radius_estimate() > 0
