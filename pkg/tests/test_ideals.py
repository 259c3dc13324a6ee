"""Admissible-numerator ideals and membership.

For a monomial q = z^a w^b the membership verdicts have closed forms:
reduction modulo (w - i z^2) sends q to i^b z^(a+2b), so q lies in the
isolated-type ideal (w - iz^2, z^4) exactly when a + 2b >= 4, and q lies
in (z^2, w)^M exactly when floor(a/2) + b >= M.  The suites below compare
is_member against these rules over a degree box.
"""

from fractions import Fraction

import numpy as np
import pytest

from stablepoly.errors import (
    InputError,
    InsufficientOrder,
    UnsettledCase,
)
from stablepoly.ideals import (
    AdmissibleIdeal,
    WitnessCurve,
    ideal_for,
    ideal_from_classified,
    is_member,
    unboundedness_witness,
)
from stablepoly.multipoly import MultiPoly, transport_ball_to_siegel
from stablepoly.parsing import parse_poly
from stablepoly.scalars import QI


def monomial(a, b):
    return MultiPoly(2, {(a, b): QI(1)}, ("z", "w"))


def test_basic_power_membership_table():
    ideal = ideal_for(parse_poly("w"))
    assert ideal.kind == "basic_power"
    assert ideal.M == 1
    for a in range(0, 7):
        for b in range(0, 4):
            expected = (a // 2) + b >= 1
            assert is_member(monomial(a, b), ideal) == expected, (a, b)


def test_basic_power_two_membership_table():
    p = parse_poly("(w - (1/2)*i*z^2)*(w - (1/3)*i*z^2)")
    ideal = ideal_for(p)
    assert ideal.kind == "basic_power"
    assert ideal.M == 2
    for a in range(0, 8):
        for b in range(0, 4):
            expected = (a // 2) + b >= 2
            assert is_member(monomial(a, b), ideal) == expected, (a, b)


def test_isolated_membership_table():
    ideal = ideal_for(parse_poly("w - i*w^2 - i*z^2"))
    assert ideal.kind == "isolated_product"
    for a in range(0, 7):
        for b in range(0, 4):
            expected = a + 2 * b >= 4
            assert is_member(monomial(a, b), ideal) == expected, (a, b)


def test_isolated_generators():
    ideal = ideal_for(parse_poly("w - i*w^2 - i*z^2"))
    gens = ideal.generators()
    texts = sorted(str(g) for g in gens)
    assert texts == ["w - i*z^2", "z^4"]


def test_nonmonomial_members():
    ideal = ideal_for(parse_poly("w - i*w^2 - i*z^2"))
    assert is_member(parse_poly("w - i*z^2"), ideal)
    assert is_member(parse_poly("(w - i*z^2)*(1 + w + z)"), ideal)
    assert is_member(parse_poly("z^4 + z^5*w"), ideal)
    assert not is_member(parse_poly("w"), ideal)
    assert not is_member(parse_poly("w + z^2"), ideal)
    assert not is_member(parse_poly("z^3", domain="siegel", dim=2), ideal)


def test_membership_invariant_under_unit_multiplication():
    ideal = ideal_for(parse_poly("w"))
    unit = parse_poly("1 + z + w - i*z*w")
    for q in (monomial(2, 0), monomial(1, 1), monomial(1, 0), monomial(0, 0)):
        assert is_member(q * unit, ideal) == is_member(q, ideal)


def test_intro_example_ball_membership():
    # 1 - z2 on the ball: z1^a z2^b is admissible exactly when a >= 2
    p = parse_poly("1 - z2")
    ideal = ideal_for(transport_ball_to_siegel(p))
    for a in range(0, 5):
        for b in range(0, 5):
            q = MultiPoly(2, {(a, b): QI(1)}, ("z1", "z2"))
            got = is_member(transport_ball_to_siegel(q), ideal)
            assert got == (a >= 2), (a, b)


def test_unstable_input_is_rejected():
    from stablepoly.constructors import family_Pc
    with pytest.raises(InputError):
        ideal_for(family_Pc(Fraction(3, 4)))


def test_curve_case_is_unsettled():
    with pytest.raises(UnsettledCase):
        ideal_for(parse_poly("w + w^2 - z^2"))


def test_ideal_from_classified_matches_ideal_for():
    from stablepoly.classify import classify_branch
    from stablepoly.puiseux import expand_branches
    p = parse_poly("w - i*w^2 - i*z^2")
    bs = expand_branches(p, order=32)
    classes = [classify_branch(b)[0] for b in bs]
    direct = ideal_from_classified(bs, classes)
    via_poly = ideal_for(p)
    assert direct.kind == via_poly.kind
    assert [str(g) for g in direct.generators()] == \
        [str(g) for g in via_poly.generators()]


def test_simple_zero_ideal_membership():
    p = parse_poly("i*w - (1/2)*z1^2 - (1/4)*z2^2")
    ideal = ideal_for(p)
    assert ideal.kind == "simple_zero"
    w = MultiPoly(3, {(0, 0, 1): QI(1)}, ("z1", "z2", "w"))
    z1 = MultiPoly(3, {(1, 0, 0): QI(1)}, ("z1", "z2", "w"))
    z1z2 = MultiPoly(3, {(1, 1, 0): QI(1)}, ("z1", "z2", "w"))
    one = MultiPoly.constant(3, QI(1), ("z1", "z2", "w"))
    assert is_member(w, ideal)
    assert is_member(z1 * z1, ideal)
    assert is_member(z1z2, ideal)
    assert not is_member(z1, ideal)
    assert not is_member(one, ideal)


def test_insufficient_order_for_truncated_numerator():
    ideal = ideal_for(parse_poly("w - i*w^2 - i*z^2"))
    q = monomial(1, 0)  # truncation of an unknown series at order 1
    with pytest.raises(InsufficientOrder):
        is_member(q, ideal, q_order=1)


def test_witness_certifies_growth():
    # q = z is not admissible for p = w; |q/p| blows up along the curve
    p = parse_poly("w")
    ideal = ideal_for(p)
    q = monomial(1, 0)
    curve = unboundedness_witness(q, p, ideal)
    ratios = []
    for r in curve.default_radii():
        pt = curve.point(r)
        ratios.append(abs(complex(q.eval(pt.coords)))
                      / abs(complex(p.eval(pt.coords))))
    assert ratios[-1] > 10 * ratios[0]


def test_witness_for_isolated_nonmember():
    p = parse_poly("w - i*w^2 - i*z^2")
    ideal = ideal_for(p)
    q = parse_poly("z^2", domain="siegel", dim=2)
    assert not is_member(q, ideal)
    curve = unboundedness_witness(q, p, ideal)
    r_hi, r_lo = 1e-2, 1e-4
    hi = curve.point(r_hi)
    lo = curve.point(r_lo)
    ratio = lambda pt: (abs(complex(q.eval(pt.coords)))
                        / abs(complex(p.eval(pt.coords))))
    assert ratio(lo) > 5 * ratio(hi)


def test_generators_stay_bounded_near_zero():
    # soundness: each generator g has |g/p| bounded on a shrinking domain
    # sample, so generators really are admissible numerators
    p = parse_poly("w - i*w^2 - i*z^2")
    ideal = ideal_for(p)
    rng = np.random.default_rng(5)
    pf = p.to_float()
    for g in ideal.generators():
        gf = g.to_float()
        worst = 0.0
        for r in (1e-1, 1e-2, 1e-3):
            z = r * (rng.standard_normal(200) + 1j * rng.standard_normal(200))
            u = r * r * rng.uniform(0.1, 1.0, 200)
            w = np.abs(z) ** 2 + 1j * np.abs(z) ** 2 + u * 1j
            pts = np.vstack([z, w])
            vals = np.abs(gf.eval_many(pts)) / np.abs(pf.eval_many(pts))
            worst = max(worst, float(vals.max()))
        assert worst < 50.0, str(g)


def test_generators_ball_form():
    ideal = ideal_for(transport_ball_to_siegel(parse_poly("1 - z2")))
    ball_gens = sorted(str(g) for g in ideal.generators_ball())
    assert any("z1^2" in t for t in ball_gens)
    assert any("z2" in t for t in ball_gens)
