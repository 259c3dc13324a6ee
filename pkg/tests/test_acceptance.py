"""End-to-end reproduction suite.

One test per shipped guarantee, with the tolerances and wall-clock budgets
pinned in the assertions.  Everything here is desk scale; a budget miss on
reasonable hardware is a real regression, not noise.
"""

import random
import time
from fractions import Fraction

import numpy as np
import pytest

from stablepoly.classify import (
    build_L,
    classify_branch,
    classify_simple_zero,
)
from stablepoly.constructors import (
    check_algebraic_L,
    family_Pc,
    family_Qc,
    make_param,
    planted_rowdet,
    rowdet_factor,
    rowdet_poly,
)
from stablepoly.ideals import ideal_for, ideal_from_classified, is_member
from stablepoly.multipoly import MultiPoly, transport_ball_to_siegel
from stablepoly.parsing import parse_poly, parse_series, parse_sy_poly
from stablepoly.puiseux import expand_branches, normalize_branch
from stablepoly.scalars import QI
from stablepoly.series import TruncSeries
from stablepoly.verify import (
    SampleConfig,
    curve_from_branch,
    g_exponent_fit,
    stability_scan,
    trace_boundary_curve,
)

I = QI(0, 1)


def ball_monomial(a, b):
    return MultiPoly(2, {(a, b): QI(1)}, ("z1", "z2"))


def test_intro_ideal_membership_box():
    # on the ball, the admissible numerators of 1 - z2 at e2 form the ideal
    # (z1^2, 1 - z2): a monomial z1^a z2^b reduces to z1^a, so membership
    # over the degree box a + b <= 6 is decided by a >= 2
    t0 = time.monotonic()
    siegel = transport_ball_to_siegel(parse_poly("1 - z2"))
    ideal = ideal_for(siegel)
    assert ideal.kind == "basic_power" and ideal.M == 1
    for a in range(7):
        for b in range(7 - a):
            q = transport_ball_to_siegel(ball_monomial(a, b))
            assert is_member(q, ideal) == (a >= 2), (a, b)
    gen = transport_ball_to_siegel(parse_poly("1 - z2", dim=2))
    assert is_member(gen, ideal)
    assert time.monotonic() - t0 < 1.0


def test_pc_family_classification_and_ideals():
    t0 = time.monotonic()
    for c in (Fraction(1, 8), Fraction(1, 4), Fraction(3, 8)):
        branches = expand_branches(family_Pc(c))
        cls, _ = classify_branch(branches[0])
        assert cls.tag == "Basic"
        assert cls.psi0 == QI(0, 2 * c)
        ideal = ideal_from_classified(branches, [cls])
        assert sorted(str(g) for g in ideal.generators()) == ["w", "z^2"]
    branches = expand_branches(family_Pc(Fraction(1, 2)))
    cls, _ = classify_branch(branches[0])
    assert cls.tag == "Isolated" and cls.K == 1
    assert cls.phi0.coeff(2) == I
    assert all(cls.phi0.coeff(j) == QI(0) for j in (0, 1, 3))
    ideal = ideal_from_classified(branches, [cls])
    assert sorted(str(g) for g in ideal.generators()) == ["w - i*z^2", "z^4"]
    p = family_Pc(Fraction(3, 4))
    cls, _ = classify_branch(expand_branches(p)[0])
    assert cls.tag == "Unstable"
    assert cls.witness is not None and cls.witness.in_domain(strict=True)
    assert abs(complex(p.eval(cls.witness.coords))) < 1e-9
    assert time.monotonic() - t0 < 2.0


def test_qc_family_is_basic_degree_four():
    t0 = time.monotonic()
    branches = expand_branches(family_Qc(Fraction(1, 2)))
    cls, _ = classify_branch(branches[0])
    assert cls.tag == "Basic"
    assert cls.a0 == 4 and cls.M == 1  # a0 = 4 > 2M = 2
    ideal = ideal_from_classified(branches, [cls])
    assert sorted(str(g) for g in ideal.generators()) == ["w", "z^2"]
    assert time.monotonic() - t0 < 1.0


def test_param_golden_w_series():
    t0 = time.monotonic()
    w = make_param(1, 1, parse_series("i*s", order=8), order=8).w_series
    assert w.coeff(2) == I
    assert w.coeff(3) == QI(Fraction(-2, 3))
    assert all(w.coeff(j) == QI(0) for j in (0, 1, 4, 5, 6, 7, 8))
    L = parse_series("i*s^2 + s^4 + s^5", order=12)
    w = make_param(2, 1, L, order=12).w_series
    assert w.coeff(4) == I
    assert w.coeff(6) == QI(Fraction(-4, 3))
    assert w.coeff(8) == QI(0, 2)
    assert w.coeff(9) == QI(0, Fraction(20, 9))
    assert time.monotonic() - t0 < 1.0


def test_build_L_recovers_surd():
    # e^L for the branch of w - iw^2 - iz^2 equals
    # ((1 + 4s^4)^(1/2) + 2s^2)^(1/2); the target side is assembled from
    # series primitives only
    b = expand_branches(parse_poly("w - i*w^2 - i*z^2"), order=32)[0]
    L, Phi, Psi = build_L(b)
    assert L.order >= 12
    inner = TruncSeries.from_pairs([(0, QI(1)), (4, QI(4))], 12)
    target = (inner.nth_root(2)
              + TruncSeries.monomial(2, QI(2), 12)).nth_root(2)
    assert L.exp().truncate(12) == target


def test_algebraic_function_gates():
    t0 = time.monotonic()
    rep = check_algebraic_L(parse_sy_poly("y^4 - 4*s^2*y^2 - 1"), 1)
    assert rep.passed
    rep = check_algebraic_L(parse_sy_poly("y^4 - 4*i*s^2*y^2 - 1"), 1)
    assert rep.passed
    rep = check_algebraic_L(parse_sy_poly("y^2 - 2*i*s*y - 1"), 1)
    assert rep.monomial_ends and rep.branch_gate
    assert not rep.no_critical_term_at_infinity
    assert rep.offending
    for _branch, coef in rep.offending:
        assert abs(coef) > 0  # the reported s^3 coefficient is nonzero
    assert time.monotonic() - t0 < 2.0


def test_curve_trace_and_scan():
    t0 = time.monotonic()
    p = parse_poly("w + w^2 - z^2")
    b = expand_branches(p, order=32)[0]
    cls, _ = classify_branch(b)
    assert cls.tag == "Curve"
    rep = trace_boundary_curve(curve_from_branch(b, cls), 512, p=p, tol=1e-9)
    assert len(rep.rows) == 512
    assert rep.max_boundary_residual < 1e-9
    assert rep.max_p_residual < 1e-9
    scan = stability_scan(p, SampleConfig(seed=42, count=100000))
    assert scan.in_domain > 0 and len(scan.zero_hits) == 0
    assert time.monotonic() - t0 < 5.0


def synthetic_isolated_branch(M, K):
    top = 2 * M * (K + 1)
    pairs = [(2 * M, QI(0, 1)), (top, QI(0, -1))]
    if M > 1:
        pairs.append((top + 1, QI(1)))  # break the proper power
    phi = TruncSeries.from_pairs(pairs, 2 * top)
    return normalize_branch(M, QI(1), phi)


def test_g_exponent_grid():
    t0 = time.monotonic()
    for M in (1, 2):
        for K in (1, 2, 3):
            b = synthetic_isolated_branch(M, K)
            cls, _ = classify_branch(b)
            assert cls.tag == "Isolated" and cls.K == K
            rep = g_exponent_fit(b, cls)
            assert rep.exponent == pytest.approx(2 * M * (1 + K), abs=0.2)
    assert time.monotonic() - t0 < 10.0


def rand_series(rng, order, constant=None, linear=None):
    cs = [QI(Fraction(rng.randint(-4, 4), rng.randint(1, 6)),
             Fraction(rng.randint(-4, 4), rng.randint(1, 6)))
          for _ in range(order + 1)]
    if constant is not None:
        cs[0] = QI(constant)
    if linear is not None:
        cs[1] = QI(linear)
    return TruncSeries(cs, order=order)


def test_series_engine_round_trips():
    rng = random.Random(2024)
    t = TruncSeries.identity(10)
    for _ in range(25):
        f = rand_series(rng, 10, constant=0, linear=1)
        assert f.compose(f.reversion()) == t
        g = rand_series(rng, 10, constant=0)
        assert g.exp().log() == g
        h = rand_series(rng, 10, constant=1)
        assert h.log().exp() == h
        n = rng.randint(2, 5)
        assert (h ** n).nth_root(n) == h
    for _ in range(10):
        f = rand_series(rng, 9, constant=0, linear=1)
        assert f.reversion() == f.reversion_lagrange()


def test_rowdet_factoring_batch():
    t0 = time.monotonic()
    for seed in range(20):
        d = seed % 3 + 1
        N = (seed // 3) % 3 + 2
        rc, planted = planted_rowdet(d, N, seed=seed)
        p = rowdet_poly(rc)
        zeros, residual = rowdet_factor(p, rc, seed=seed)
        total = 0
        for zeta, mult in zeros:
            vec = np.array([complex(x) for x in zeta])
            assert abs(np.linalg.norm(vec) - 1.0) < 1e-9
            assert abs(complex(p.eval(zeta))) <= 1e-8
            total += mult
        assert residual.total_degree() + total == p.total_degree()
        rng = np.random.default_rng(seed)
        x = rng.standard_normal((d, 100000)) + 1j * rng.standard_normal(
            (d, 100000))
        x /= np.linalg.norm(x, axis=0, keepdims=True)
        pts = x * rng.uniform(0, 1, 100000) ** (1 / (2 * d))
        assert float(np.abs(residual.eval_many(pts)).min()) > 1e-9
    assert time.monotonic() - t0 < 30.0


def test_simple_zero_three_variables():
    strict = parse_poly("i*w - (1/2)*z1^2 - (1/4)*z2^2")
    rep = classify_simple_zero(strict)
    assert rep.verdict == "strict"
    assert rep.singular_values[0] == pytest.approx(0.5, abs=1e-10)
    assert rep.singular_values[1] == pytest.approx(0.25, abs=1e-10)
    boundary = parse_poly("i*w - (1/2)*z1^2 - z2^2")
    rep = classify_simple_zero(boundary)
    assert rep.verdict == "boundary"
    assert rep.singular_values[0] == pytest.approx(1.0, abs=1e-10)
    assert rep.singular_values[1] == pytest.approx(0.5, abs=1e-10)
    # admissible numerators are (w, (z)^2): a monomial z1^a z2^b w^c of
    # degree <= 3 belongs exactly when c >= 1 or a + b >= 2
    ideal = ideal_for(strict)
    assert ideal.kind == "simple_zero"
    names = ("z1", "z2", "w")
    for a in range(4):
        for b in range(4 - a):
            for c in range(4 - a - b):
                q = MultiPoly(3, {(a, b, c): QI(1)}, names)
                expected = c >= 1 or a + b >= 2
                assert is_member(q, ideal) == expected, (a, b, c)
