"""Sparse multivariate polynomials and the ball/Siegel coordinate maps."""

import random
from fractions import Fraction

import numpy as np
import pytest

from stablepoly.errors import DimMismatch
from stablepoly.multipoly import (
    MultiPoly,
    Point,
    transport_ball_to_siegel,
    transport_siegel_to_ball,
    weierstrass_wdegree_reduce,
)
from stablepoly.parsing import parse_poly
from stablepoly.scalars import QI


def rand_poly(rng, dim, deg, nterms, names=None):
    terms = {}
    for _ in range(nterms):
        e = tuple(rng.randint(0, deg) for _ in range(dim))
        terms[e] = QI(Fraction(rng.randint(-9, 9), rng.randint(1, 4)),
                      Fraction(rng.randint(-9, 9), rng.randint(1, 4)))
    return MultiPoly(dim, terms, names)


def rand_point(rng, dim, scale=0.5):
    return tuple(complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale))
                 for _ in range(dim))


def test_constructors_and_queries():
    p = MultiPoly(2, {(1, 0): QI(2), (0, 1): QI(0, 1)})
    assert p.total_degree() == 1
    assert p.degree_in(0) == 1
    assert p.coefficient((1, 0)) == QI(2)
    assert p.coefficient((5, 5)) == QI(0)
    assert not p.is_zero()
    assert MultiPoly.zero(3).is_zero()
    assert MultiPoly.constant(2, QI(7)).total_degree() == 0
    v = MultiPoly.variable(3, 1)
    assert v.coefficient((0, 1, 0)) == QI(1)


def test_arithmetic_matches_pointwise_evaluation():
    rng = random.Random(2)
    for _ in range(25):
        p = rand_poly(rng, 2, 3, 5)
        q = rand_poly(rng, 2, 3, 5)
        x = rand_point(rng, 2)
        assert (p + q).eval(x) == pytest.approx(p.eval(x) + q.eval(x))
        assert (p * q).eval(x) == pytest.approx(p.eval(x) * q.eval(x))
        assert (p - q).eval(x) == pytest.approx(p.eval(x) - q.eval(x))
        assert (p ** 2).eval(x) == pytest.approx(p.eval(x) ** 2)


def test_eval_many_matches_eval():
    rng = random.Random(3)
    p = rand_poly(rng, 3, 2, 6)
    pts = np.array([rand_point(rng, 3) for _ in range(40)]).T
    vals = p.eval_many(pts)
    for k in range(40):
        assert vals[k] == pytest.approx(p.eval(tuple(pts[:, k])))


def test_dim_mismatch_raises():
    p = MultiPoly.variable(2, 0)
    q = MultiPoly.variable(3, 0)
    with pytest.raises(DimMismatch):
        p + q


def test_diff_and_gradient():
    p = parse_poly("w - i*w^2 - i*z^2")
    assert p.diff(0) == parse_poly("-2*i*z", domain="siegel", dim=2)
    g = p.gradient0()
    assert g[0] == QI(0) and g[1] == QI(1)


def test_hessian_of_quadratic_recovers_matrix():
    # p = i w - z1^2/2 - z1 z2 - z2^2/4 has z-Hessian [[-1, -1], [-1, -1/2]]
    p = parse_poly("i*w - (1/2)*z1^2 - z1*z2 - (1/4)*z2^2")
    H = p.hessian_z0()
    assert H[0][0] == QI(-1)
    assert H[0][1] == QI(-1) and H[1][0] == QI(-1)
    assert H[1][1] == QI(Fraction(-1, 2))


def test_transport_intro_example():
    # 1 - z2 on the ball corresponds to 2w on the Siegel domain
    p = parse_poly("1 - z2")
    assert transport_ball_to_siegel(p) == parse_poly("2*w")


def test_transport_monomials_closed_form():
    # z1^a z2^b maps to 2^a z^a (i - w)^b
    for a in range(3):
        for b in range(3):
            p = MultiPoly(2, {(a, b): QI(1)}, names=("z1", "z2"))
            lhs = transport_ball_to_siegel(p)
            z = parse_poly("z", domain="siegel", dim=2)
            w = parse_poly("w")
            rhs = (z ** a) * ((QI(0, 1) - w) ** b) * QI(2 ** a)
            assert lhs == rhs


def test_transport_round_trip_is_unit_multiple():
    # the two maps compose to multiplication by (2i)^deg, a nonzero scalar,
    # so the zero set (and ideal membership) is unchanged
    rng = random.Random(4)
    for _ in range(10):
        p = rand_poly(rng, 2, 3, 4, names=("z1", "z2"))
        if p.is_zero():
            continue
        back = transport_siegel_to_ball(transport_ball_to_siegel(p))
        assert back == p * (QI(0, 2) ** p.total_degree())


def test_transport_round_trip_siegel_side():
    rng = random.Random(5)
    for _ in range(10):
        q = rand_poly(rng, 2, 3, 4, names=("z", "w"))
        if q.is_zero():
            continue
        back = transport_ball_to_siegel(transport_siegel_to_ball(q))
        assert back == q * (QI(0, 2) ** q.total_degree())


def test_transport_zero_correspondence():
    # zeros map: p(ball point) = 0 iff transported p vanishes at the image
    rng = random.Random(6)
    p = rand_poly(rng, 2, 2, 4, names=("z1", "z2"))
    q = transport_ball_to_siegel(p)
    for _ in range(20):
        z, w = rand_point(rng, 2, scale=0.4)
        # inverse Cayley pair: z1 = 2z/(i+w), z2 = (i-w)/(i+w)
        z1 = 2 * z / (1j + w)
        z2 = (1j - w) / (1j + w)
        lhs = complex(q.eval((z, w)))
        rhs = complex(p.eval((z1, z2))) * (1j + w) ** p.total_degree()
        assert lhs == pytest.approx(rhs, abs=1e-10)


def test_point_domain_membership():
    inside = Point((0.1 + 0j, 0.5j), "siegel")
    assert inside.in_domain()
    on_edge = Point((0.5, 0.25j), "siegel")  # Im w = |z|^2 exactly
    assert not on_edge.in_domain(strict=True)
    ball_pt = Point((0.3, 0.4), "ball")
    assert ball_pt.in_domain()
    assert Point((1.0, 0.0), "ball").in_domain() is False


def test_scale_and_shift_var():
    p = parse_poly("w - i*z^2")
    s = p.scale_vars((QI(2), QI(1)))
    assert s == parse_poly("w - 4*i*z^2")
    sh = p.shift_var(1, QI(0, 1))  # w -> w + i
    assert sh == parse_poly("w + i - i*z^2")


def test_reverse_var_and_strip():
    p = parse_poly("w^2 + z*w^3")
    r = p.reverse_var(1)
    assert r == parse_poly("w + z")
    k, core = parse_poly("z^2*w + z^3").strip_var_power(0)
    assert k == 2
    assert core == parse_poly("w + z", domain="siegel")


def test_weierstrass_coefficients_at_zero_and_along_branch():
    from stablepoly.puiseux import expand_branches
    p = parse_poly("w - i*w^2 - i*z^2")
    # expansion around w = 0: q_0(z) = p(z, 0) = -i z^2
    (q0,) = weierstrass_wdegree_reduce(p, 1)
    assert q0.coeff(2) == QI(0, -1)
    assert q0.coeff(0) == QI(0) and q0.coeff(1) == QI(0)
    # expansion around the branch itself: q_0 vanishes to the full order
    b = expand_branches(p, order=16)[0]
    (r0,) = weierstrass_wdegree_reduce(p, 1, phi0=b.phi, c=b.c, order=14)
    assert r0.valuation() is None or r0.valuation() > 12


def test_str_round_trips_through_parser():
    rng = random.Random(9)
    for _ in range(10):
        p = rand_poly(rng, 2, 3, 5, names=("z", "w"))
        assert parse_poly(str(p), domain="siegel", dim=2) == p
