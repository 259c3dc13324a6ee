"""Admissible-numerator ideals and membership tests.

For a stable polynomial p with a boundary zero at 0, the numerators q for
which q/p stays bounded near 0 form an ideal.  Three settled shapes are
modeled here:

* simple_zero (any dimension): generators w and all products z_a z_b; q is a
  member iff q(0) = 0 and the z-gradient of q vanishes at 0.
* basic_power (two variables, all branches basic, p of w-order M at 0):
  generators w^j z^(2(M-j)); membership is the weighted valuation condition
  a + 2b >= 2M on every monomial z^a w^b with b < M.
* isolated_product (two variables, a single isolated-type branch of total
  multiplicity M): generators (w - phi0(conj(c) z))^j z^(2(1+K)(M-j));
  membership via the Taylor coefficients q_j of q in powers of
  (w - phi0(conj(c) z)), each of which must vanish to z-order
  2(1+K)(M-j).

``ideal_for`` runs the branch classification and picks the settled shape, or
raises UnsettledCase for the open configurations (curve-type branches, mixed
branch types, boundary-contraction simple zeros in more than two variables).
Non-membership can be illustrated by an explicit curve along which |q/p|
blows up; the curve families mirror the lower-bound constructions used to
prove the ideals maximal.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .classify import BranchClass, classify_branch, classify_simple_zero
from .errors import (
    InputError,
    InsufficientOrder,
    UnsettledCase,
    WitnessSearchFailed,
)
from .multipoly import (
    MultiPoly,
    Point,
    transport_siegel_to_ball,
    weierstrass_wdegree_reduce,
)
from .puiseux import expand_branches
from .scalars import (
    DEFAULT_TOL,
    QI,
    Unimodular,
    is_zero,
    to_complex,
)
from .series import TruncSeries


@dataclass(frozen=True)
class AdmissibleIdeal:
    """One of the settled admissible-numerator ideals."""

    kind: str  # "simple_zero" | "basic_power" | "isolated_product"
    d: int
    M: int = 1
    K: int | None = None
    phi0: TruncSeries | None = None
    c: Unimodular | None = None

    def __post_init__(self):
        if self.kind not in ("simple_zero", "basic_power", "isolated_product"):
            raise InputError(f"unknown ideal kind {self.kind!r}")
        if self.kind == "isolated_product" and (self.K is None or self.phi0 is None):
            raise InputError("isolated_product needs K and phi0")

    # -- generators ---------------------------------------------------------

    def _phi0_in_z(self) -> MultiPoly:
        """phi0(conj(c) z) as a polynomial in the two Siegel variables."""
        c = self.c if self.c is not None else Unimodular.one()
        cbar = c.conjugate()
        terms = {}
        exact = self.phi0.backend == "exact" and c.is_exact
        for ell in range(self.phi0.order + 1):
            coef = self.phi0.coeffs[ell]
            if isinstance(coef, QI) and not coef:
                continue
            if not isinstance(coef, QI) and coef == 0:
                continue
            rot = (cbar**ell).exact_qi() if exact else None
            if rot is None:
                rot = cbar.to_complex() ** ell
                coef = to_complex(coef)
            terms[(ell, 0)] = coef * rot
        return MultiPoly(2, terms)

    def generators(self) -> list:
        """Symbolic generators as Siegel-coordinate polynomials."""
        if self.kind == "simple_zero":
            d = self.d
            gens = [MultiPoly.variable(d, d - 1)]
            for a in range(d - 1):
                for b in range(a, d - 1):
                    gens.append(MultiPoly.variable(d, a) * MultiPoly.variable(d, b))
            return gens
        w = MultiPoly.variable(2, 1)
        z = MultiPoly.variable(2, 0)
        if self.kind == "basic_power":
            return [w**j * z ** (2 * (self.M - j)) for j in range(self.M + 1)]
        core = w - self._phi0_in_z()
        e = 2 * (1 + self.K)
        return [core**j * z ** (e * (self.M - j)) for j in range(self.M + 1)]

    def generators_ball(self) -> list:
        """The generators transported to ball coordinates."""
        if self.kind == "simple_zero" and self.d != 2:
            raise InputError("ball transport of generators is two-variable only")
        return [transport_siegel_to_ball(g) for g in self.generators()]

    def to_json(self) -> dict:
        out = {"kind": self.kind, "d": self.d, "M": self.M}
        if self.K is not None:
            out["K"] = self.K
        if self.phi0 is not None:
            out["phi0"] = self.phi0.to_json()
        if self.c is not None:
            cq = self.c.exact_qi()
            from .scalars import scalar_to_json

            out["c"] = (
                scalar_to_json(cq)
                if cq is not None
                else {"re": self.c.to_complex().real, "im": self.c.to_complex().imag}
            )
        out["generators"] = [g.to_json() for g in self.generators()]
        return out


# ---------------------------------------------------------------------------
# picking the settled ideal


def ideal_for(p: MultiPoly, order: int = 32, tol: float = DEFAULT_TOL,
              order_cap: int = 512) -> AdmissibleIdeal:
    """The admissible-numerator ideal of p at 0, for the settled cases.

    Two-variable polynomials go through branch expansion and classification;
    higher dimensions through the simple-zero contraction test.  Raises
    InputError when p is demonstrably not stable near 0 and UnsettledCase
    when the configuration is one the theory leaves open.
    """
    if p.dim != 2:
        report = classify_simple_zero(p, tol)
        if report.verdict == "strict":
            return AdmissibleIdeal("simple_zero", p.dim)
        if report.verdict == "boundary":
            raise UnsettledCase(
                "contraction norm 1 at a simple zero: ideal not settled beyond "
                "two variables")
        raise InputError("gradient/Hessian data rules out stability at 0")
    branches, classes = _classified_branches(p, order, tol, order_cap)
    return ideal_from_classified(branches, [cls for cls, _ in classes])


def ideal_from_classified(branches, classes) -> AdmissibleIdeal:
    """Assemble the two-variable ideal from already-classified branches."""
    for cls in classes:
        if cls.tag == "Unstable":
            w = cls.witness.to_complex() if cls.witness is not None else None
            raise InputError(
                f"p is not stable near 0: branch enters the domain at {w}")
    if any(cls.tag == "Curve" for cls in classes):
        raise UnsettledCase("curve-type branch: admissible ideal not settled")
    Mtot = sum(b.multiplicity for b in branches)
    if all(cls.tag == "Basic" for cls in classes):
        return AdmissibleIdeal("basic_power", 2, M=Mtot)
    isolated = [(b, cls) for b, cls in zip(branches, classes)
                if cls.tag == "Isolated"]
    if len(branches) == 1 and len(isolated) == 1:
        b, cls = isolated[0]
        return AdmissibleIdeal("isolated_product", 2, M=b.multiplicity,
                               K=cls.K, phi0=cls.phi0, c=b.c)
    raise UnsettledCase(
        "mixed branch types through 0: admissible ideal not settled")


def _classified_branches(p, order, tol, order_cap):
    """Expand and classify, growing the order on InsufficientOrder."""
    n = order
    while True:
        branches = expand_branches(p, order=n, tol=tol)
        try:
            return branches, [classify_branch(b, tol) for b in branches]
        except InsufficientOrder as exc:
            need = exc.needs_order if exc.needs_order else 2 * n
            if need <= n or need > order_cap:
                raise
            n = need


# ---------------------------------------------------------------------------
# membership


def is_member(q: MultiPoly, I: AdmissibleIdeal, q_order: int | None = None,
              tol: float = DEFAULT_TOL) -> bool:
    """Whether q lies in the ideal; exact for polynomial input.

    ``q_order`` marks q as the truncation of a power series whose terms of
    total degree > q_order are unknown; the valuation checks then raise
    InsufficientOrder if they would need coefficients beyond it.
    """
    if I.kind == "simple_zero":
        if q.dim != I.d:
            raise InputError(f"numerator has dim {q.dim}, ideal lives in dim {I.d}")
        scale = q.coef_scale()
        if not is_zero(q.coefficient((0,) * q.dim), tol, scale):
            return False
        grad = q.gradient0()
        return all(is_zero(g, tol, scale) for g in grad[: q.dim - 1])
    if q.dim != 2:
        raise InputError("power ideals are two-variable")
    scale = q.coef_scale()
    if I.kind == "basic_power":
        if q_order is not None and q_order < 2 * I.M:
            raise InsufficientOrder(
                "series numerator known to too low an order",
                needs_order=2 * I.M)
        for (a, b), coef in q.terms.items():
            if b < I.M and a + 2 * b < 2 * I.M and not is_zero(coef, tol, scale):
                return False
        return True
    need = 2 * (1 + I.K) * I.M
    if q_order is not None and q_order < need:
        raise InsufficientOrder(
            "series numerator known to too low an order", needs_order=need)
    parts = weierstrass_wdegree_reduce(q, I.M, phi0=I.phi0, c=I.c, order=need)
    for j in range(I.M):
        val = parts[j].valuation(tol)
        if val is not None and val < 2 * (1 + I.K) * (I.M - j):
            return False
    return True


# ---------------------------------------------------------------------------
# witness curves for non-members


@dataclass(frozen=True)
class WitnessCurve:
    """A parametrized curve inside the domain along which |q/p| grows."""

    kind: str
    d: int
    description: str
    B: float | None = None
    _data: tuple = ()

    def point(self, r: float) -> Point:
        fn = _CURVE_EVAL[self.kind]
        return fn(self, float(r))

    def default_radii(self):
        if self.kind == "ball_tangent":
            return [1.0 - x for x in np.geomspace(1e-1, 1e-4, 13)]
        return list(np.geomspace(1e-1, 1e-4, 13))

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "d": self.d,
            "description": self.description,
            "B": self.B,
        }


def _eval_vertical(c: WitnessCurve, r: float) -> Point:
    return Point((0.0 + 0.0j,) * (c.d - 1) + (1j * r * r,), "siegel")


def _eval_tangent(c: WitnessCurve, r: float) -> Point:
    (direction,) = c._data
    coords = tuple(0.5 * r * u for u in direction) + (1j * r * r,)
    return Point(coords, "siegel")


def _eval_scaled(c: WitnessCurve, r: float) -> Point:
    zhat, what = c._data
    return Point((zhat * r, what * r * r), "siegel")


def _eval_isolated(c: WitnessCurve, r: float) -> Point:
    cval, M, K, a_coeffs, B = c._data
    u = r**M
    A0 = sum(a * u**ell for ell, a in enumerate(a_coeffs))
    z = cval * u * cmath.exp(1j * M * A0)
    integral = sum(
        M * ell * a * r ** (2 * M + M * ell) / (2 * M + M * ell)
        for ell, a in enumerate(a_coeffs)
    )
    w = 1j * r ** (2 * M) - 2 * M * integral + 1j * B * r ** (2 * M * (1 + K))
    return Point((z, w), "siegel")


def _eval_ball_tangent(c: WitnessCurve, r: float) -> Point:
    (direction,) = c._data
    coords = tuple(0.5 * math.sqrt(max(1.0 - r * r, 0.0)) * u for u in direction)
    return Point(coords + (r + 0.0j,), "ball")


_CURVE_EVAL = {
    "vertical": _eval_vertical,
    "tangent": _eval_tangent,
    "scaled": _eval_scaled,
    "isolated_family": _eval_isolated,
    "ball_tangent": _eval_ball_tangent,
}


def confirm_growth(q: MultiPoly, p: MultiPoly, curve: WitnessCurve,
                   radii=None, factor: float = 10.0):
    """(verdict, table): does |q/p| increase monotonically along the curve
    with at least ``factor`` total growth?  The table rows are (r, ratio)."""
    if radii is None:
        radii = curve.default_radii()
    table = []
    for r in radii:
        pt = curve.point(r)
        coords = np.array(pt.to_complex(), dtype=complex).reshape(-1, 1)
        qv = abs(q.eval_many(coords)[0])
        pv = abs(p.eval_many(coords)[0])
        if pv == 0:
            return False, table
        table.append((float(r), float(qv / pv)))
    ratios = [t[1] for t in table]
    monotone = all(b > a * 0.999 for a, b in zip(ratios, ratios[1:]))
    return monotone and ratios[-1] >= factor * ratios[0], table


def unboundedness_witness(q: MultiPoly, p: MultiPoly, I: AdmissibleIdeal,
                          cls: BranchClass | None = None,
                          tol: float = DEFAULT_TOL) -> WitnessCurve:
    """A curve exhibiting |q/p| -> infinity for a non-member q.

    The family matches the ideal kind: vertical or tangential approach for
    simple zeros (ball inputs get the tangential sphere curve), the scaled
    family (r zhat, r^2 what) for basic powers, and the A0-twisted family
    with a tunable B for isolated products.  The growth is numerically
    confirmed before returning; WitnessSearchFailed reports a family that
    did not certify (without overturning the algebraic verdict).
    """
    ball = p.names[-1] != "w"
    if I.kind == "simple_zero":
        candidates = _simple_zero_curves(q, I.d, ball, tol)
    elif I.kind == "basic_power":
        candidates = _scaled_curves()
    else:
        candidates = _isolated_curves(I, cls)
    for curve in candidates:
        ok, table = confirm_growth(q, p, curve, factor=10.0)
        if ok:
            return curve
    raise WitnessSearchFailed(
        "no curve family certified growth; the algebraic verdict stands")


def _simple_zero_curves(q: MultiPoly, d: int, ball: bool, tol: float):
    out = []
    if ball:
        n = q.dim - 1
        dirs = [tuple(1.0 if j == k else 0.0 for j in range(n)) for k in range(n)]
        for direction in dirs:
            out.append(WitnessCurve(
                "ball_tangent", q.dim,
                "z = u/2 * sqrt(1-r^2) tangential approach to the boundary zero",
                _data=(direction,)))
        return out
    out.append(WitnessCurve("vertical", d, "(0, i r^2) vertical approach"))
    grad = q.gradient0()
    gz = [to_complex(g) for g in grad[: d - 1]]
    if any(abs(g) > 0 for g in gz):
        norm = math.sqrt(sum(abs(g) ** 2 for g in gz))
        direction = tuple(g.conjugate() / norm for g in gz)
        out.append(WitnessCurve(
            "tangent", d, "(u r/2, i r^2) tangential approach along conj-gradient",
            _data=(direction,)))
    for k in range(d - 1):
        out.append(WitnessCurve(
            "tangent", d, f"(e_{k + 1} r/2, i r^2) tangential approach",
            _data=(tuple(1.0 if j == k else 0.0 for j in range(d - 1)),)))
    return out


def _scaled_curves():
    out = []
    for zh, wh in ((0.5, 1j), (0.4, 0.3 + 1j), (0.5j, 2j), (-0.5, 1j),
                   (0.3 + 0.3j, 0.5 + 1j)):
        out.append(WitnessCurve(
            "scaled", 2, f"(r zhat, r^2 what) with zhat={zh}, what={wh}",
            _data=(zh, wh)))
    return out


def _isolated_curves(I: AdmissibleIdeal, cls: BranchClass | None):
    if cls is None or cls.A0 is None:
        a_coeffs = [0.0]
        M, K = I.M, I.K
    else:
        a_coeffs = [float(to_complex(x).real) for x in cls.A0.coeffs]
        M, K = cls.M, cls.K
    cval = I.c.to_complex() if I.c is not None else 1.0 + 0.0j
    out = []
    for B in (1.0, 2.0, 0.5, 3.0, 1.0 / 3.0):
        out.append(WitnessCurve(
            "isolated_family", 2,
            f"z = c r^M e^(iM A0(r^M)), w = i r^(2M) - 2M Int + i B r^(2M(1+K)), B={B}",
            B=B, _data=(cval, M, K, tuple(a_coeffs), B)))
    return out
