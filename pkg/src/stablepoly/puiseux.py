"""Puiseux branch expansion at the origin for two-variable polynomials.

A branch is a parametrization t -> (c t^M, phi(t)) of a local irreducible
component of the zero set through (0,0), with phi truncated at a certified
order.  Branches come out normalized: |c| = 1 and the first nonzero
coefficient of phi lies on the positive imaginary axis (the rotation that
achieves this is exact whenever it is a root of unity and the rotated
coefficients stay Gaussian rational; otherwise the branch falls back to the
float backend).

The expansion itself is the classical Newton polygon algorithm with exact
Q(i) arithmetic: polygon edges give leading exponents gamma = u/v, roots of
the edge characteristic polynomial give leading coefficients, and each root
is pursued either by Hensel lifting (simple roots) or recursively.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    DimMismatch,
    InputError,
    NonzeroConstantTerm,
    NotWGeneral,
    ZeroPolynomial,
)
from .multipoly import MultiPoly, Point, w_squarefree_decomposition
from .scalars import (
    DEFAULT_TOL,
    QI,
    QI_I,
    Unimodular,
    abs2,
    as_scalar,
    conj,
    is_exact,
    is_zero,
    qi_nth_root,
    qi_snap,
    rational_sqrt,
    to_complex,
)
from .series import TruncSeries


@dataclass(frozen=True)
class PuiseuxBranch:
    """Normalized branch t -> (c t^M, phi(t)) with phi known mod t^(order+1)."""

    M: int
    c: Unimodular
    phi: TruncSeries
    multiplicity: int = 1
    certified_order: int | None = None

    def __post_init__(self):
        if self.certified_order is None:
            object.__setattr__(self, "certified_order", self.phi.order)

    @property
    def backend(self) -> str:
        return "exact" if (self.c.is_exact and self.phi.backend == "exact") else "float"

    def point(self, t) -> Point:
        """The branch point (c t^M, phi(t)); exact when everything is."""
        t = as_scalar(t)
        cval = self.c.exact_qi()
        if cval is None or isinstance(t, complex) or self.phi.backend != "exact":
            z = self.c.to_complex() * to_complex(t) ** self.M
            w = self.phi.eval_complex(to_complex(t))
        else:
            z = cval * t**self.M
            w = self.phi.eval(t)
        return Point((z, w), "siegel")

    def to_json(self) -> dict:
        cq = self.c.exact_qi()
        from .scalars import scalar_to_json

        cjson = {"half_turns": str(self.c.q), "unit": scalar_to_json(self.c.u)} if cq is None else scalar_to_json(cq)
        return {
            "M": self.M,
            "c": cjson,
            "phi": self.phi.to_json(),
            "multiplicity": self.multiplicity,
            "certified_order": self.certified_order,
        }


# ---------------------------------------------------------------------------
# integer and rational helpers


def _int_nth_root(n: int, k: int):
    """Exact integer k-th root of n >= 0, or None."""
    if n < 0:
        return None
    if n in (0, 1):
        return n
    r = round(n ** (1.0 / k))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**k == n:
            return cand
    return None


def rational_nth_root(q: Fraction, k: int):
    if q < 0:
        return None
    num = _int_nth_root(q.numerator, k)
    den = _int_nth_root(q.denominator, k)
    if num is None or den is None:
        return None
    return Fraction(num, den)


# ---------------------------------------------------------------------------
# root finding for edge characteristic polynomials


def _scalar_poly_roots(coeffs, tol: float = DEFAULT_TOL):
    """Roots with multiplicity of a scalar polynomial (low-degree-first list).

    Exact Q(i) roots are recognized by snapping float roots and verifying
    exactly; whatever does not snap stays float with clustered multiplicity.
    Ordered by (re, im) of the value for deterministic traversal.
    """
    coeffs = list(coeffs)
    while coeffs and is_zero(coeffs[-1], tol, 1.0):
        coeffs.pop()
    if len(coeffs) <= 1:
        return []
    exact = all(is_exact(c) for c in coeffs)
    found = []
    if exact:
        work = [c if isinstance(c, QI) else QI(c) for c in coeffs]
        fl = np.roots([complex(c) for c in reversed(work)])
        seen = set()
        for r in fl:
            cand = qi_snap(complex(r))
            if cand in seen:
                continue
            mult = 0
            while len(work) > 1:
                quot, rem = _qi_deflate(work, cand)
                if rem:
                    break
                work = quot
                mult += 1
            if mult:
                seen.add(cand)
                found.append((cand, mult))
        if len(work) > 1:
            for r, m in _cluster_roots(np.roots([complex(c) for c in reversed(work)])):
                found.append((r, m))
    else:
        found = _cluster_roots(np.roots([to_complex(c) for c in reversed(coeffs)]))
    found.sort(key=lambda rm: (round(to_complex(rm[0]).real, 12), round(to_complex(rm[0]).imag, 12)))
    return found


def _qi_deflate(coeffs, root):
    """Synthetic division of a QI polynomial by (T - root)."""
    quot = []
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        quot.append(acc)
        acc = acc * root + c
    quot.reverse()
    return quot, acc  # remainder is acc


def _cluster_roots(roots, rel: float = 1e-6):
    roots = sorted(roots, key=lambda r: (round(r.real, 9), round(r.imag, 9)))
    out = []
    scale = max((abs(r) for r in roots), default=1.0) or 1.0
    for r in roots:
        for k, (r0, m) in enumerate(out):
            if abs(r - r0) <= rel * max(scale, 1.0):
                out[k] = ((r0 * m + r) / (m + 1), m + 1)
                break
        else:
            out.append((r, 1))
    return [(complex(r), m) for r, m in out]


def _vth_root(T0, v: int):
    """One v-th root of T0, exact in Q(i) when possible."""
    if v == 1:
        return T0
    if isinstance(T0, QI):
        r = qi_nth_root(T0, v)
        if r is not None:
            return r
        T0 = complex(T0)
    return abs(T0) ** (1.0 / v) * cmath.exp(1j * cmath.phase(T0) / v)


# ---------------------------------------------------------------------------
# Newton polygon


def _support_minima(p: MultiPoly):
    """Per w-exponent minimal z-exponent with its coefficient source."""
    mins: dict[int, int] = {}
    for (a, b), _ in p.terms.items():
        if b not in mins or a < mins[b]:
            mins[b] = a
    return sorted(mins.items())  # list of (beta, j)


def _lower_hull(points):
    """Lower convex hull of (x, y) points sorted by x."""
    hull = []
    for pt in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] if it lies above the segment hull[-2] -> pt
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def _newton_edges(p: MultiPoly):
    """Negative-slope edges as (u, v, E, char_coeffs), sorted by gamma."""
    pts = [(b, j) for b, j in _support_minima(p)]
    hull = _lower_hull(pts)
    edges = []
    for (b1, j1), (b2, j2) in zip(hull, hull[1:]):
        if j2 >= j1:
            continue  # slope >= 0: no branch through the origin
        du, dv = j1 - j2, b2 - b1
        g = math.gcd(du, dv)
        u, v = du // g, dv // g
        E = v * j1 + u * b1
        # characteristic polynomial in T = c^v
        chi = []
        k = 0
        for b in range(b1, b2 + 1, v):
            coef = None
            for (a, bb), c in p.terms.items():
                if bb == b and v * a + u * b == E:
                    coef = c if coef is None else coef + c
            chi.append(coef if coef is not None else QI(0))
            k += 1
        edges.append((u, v, E, chi))
    edges.sort(key=lambda e: Fraction(e[0], e[1]))
    return edges


def _edge_substitute(p: MultiPoly, u: int, v: int, c, E: int) -> MultiPoly:
    """p(z^v, z^u (c + w)) / z^E expanded exactly."""
    c = as_scalar(c)
    terms: dict = {}
    for (a, b), coef in p.terms.items():
        base = v * a + u * b - E
        for k in range(b + 1):
            key = (base, k)
            val = coef * math.comb(b, k) * c ** (b - k)
            terms[key] = terms[key] + val if key in terms else val
    return MultiPoly(2, terms, p.names)


def _hensel_solve(p: MultiPoly, order: int, tol: float = DEFAULT_TOL) -> TruncSeries:
    """The unique analytic root w = phi(z) when dp/dw(0,0) != 0."""
    pw = p.diff(1)
    exact = p.backend == "exact"
    phi = TruncSeries.zero(0, exact=exact)
    while phi.order < order:
        m = min(2 * phi.order + 1, order)
        ph = phi.pad_zero(m)
        zid = TruncSeries.identity(m, exact=exact)
        num = p.eval_series([zid, ph], order=m)
        den = pw.eval_series([zid, ph], order=m)
        phi = ph - num * den.inverse(tol)
    return phi


def _np_branches(p: MultiPoly, order: int, tol: float, depth: int = 0):
    """Raw branches of p through (0,0) as (M, w_series, certified, sheets).

    The parametrization is z = t^M, w = w_series(t); normalization happens
    later.  ``sheets`` counts unresolved coincident sheets when the recursion
    hits the truncation wall (1 everywhere at desk scale).
    """
    out = []
    wpow, p = p.strip_var_power(1)
    if wpow:
        out.append((1, TruncSeries.zero(order), order, wpow))
    const = p.coefficient((0, 0))
    if not is_zero(const, tol, p.coef_scale() or 1.0):
        return out
    if p.is_zero():
        return out
    for u, v, E, chi in _newton_edges(p):
        for T0, mult in _scalar_poly_roots(chi, tol):
            c = _vth_root(T0, v)
            ph = _edge_substitute(p, u, v, c, E)
            if mult == 1:
                sub = [(1, _hensel_solve(ph, order, tol), order, 1)]
            elif depth > order:
                sub = [(1, TruncSeries.zero(order), 0, mult)]
            else:
                sub = _np_branches(ph, order, tol, depth + 1)
            for Mh, phih, cert, sheets in sub:
                shift = u * Mh
                w_series = (phih + c).shift(shift)
                new_cert = min(order, shift + cert)
                out.append((v * Mh, w_series.truncate(min(order, w_series.order)),
                            new_cert, sheets))
    return out


# ---------------------------------------------------------------------------
# public operations


def expand_branches(p: MultiPoly, order: int = 32, tol: float = DEFAULT_TOL):
    """All Puiseux branches of p through the origin, normalized.

    Requires p nonzero with p(0,0) = 0 and p(0,w) not identically zero.
    The multiplicities (sheet counts times factor multiplicities) sum to the
    w-order of p(0, w).
    """
    if p.dim != 2:
        raise DimMismatch("branch expansion handles two variables; reduce first")
    if p.is_zero():
        raise ZeroPolynomial("cannot expand the zero polynomial")
    scale = p.coef_scale()
    if not is_zero(p.coefficient((0, 0)), tol, scale):
        raise NonzeroConstantTerm("p(0,0) != 0: no zero at the origin to expand")
    if all(is_zero(c, tol, scale) for e, c in p.terms.items() if e[0] == 0):
        raise NotWGeneral("p(0,w) vanishes identically; apply a linear change first")
    factors = w_squarefree_decomposition(p) if p.backend == "exact" else [(p, 1)]
    branches = []
    for g, mu in factors:
        if is_zero(g.coefficient((0, 0)), tol, g.coef_scale() or 1.0):
            for M, wser, cert, sheets in _np_branches(g, order, tol):
                branches.append(
                    normalize_branch(M, QI(1), wser, multiplicity=mu * M * sheets,
                                     certified_order=cert, tol=tol)
                )
    return branches


def normalize_branch(M: int, c, phi: TruncSeries, multiplicity: int = 1,
                     certified_order: int | None = None,
                     tol: float = DEFAULT_TOL) -> PuiseuxBranch:
    """Fold |c| into the parameter and rotate so phi's leading coefficient is
    positive imaginary.

    Exactness is kept when the modulus is a rational with a rational M-th
    root and the rotation is a root of unity whose action keeps every
    coefficient in Q(i); otherwise the branch demotes to float.
    """
    if M < 1:
        raise InputError("branch ramification index must be >= 1")
    if certified_order is None:
        certified_order = phi.order
    if isinstance(c, Unimodular):
        unim = c
    else:
        c = as_scalar(c)
        m2 = abs2(c)
        if m2 == 0:
            raise InputError("branch z-coefficient must be nonzero")
        unim, phi = _fold_modulus(M, c, m2, phi, tol)
    a0 = phi.valuation(tol)
    if a0 is None:
        return PuiseuxBranch(M, unim, phi, multiplicity, min(certified_order, phi.order))
    zeta = _normalizing_rotation(phi.coeffs[a0], a0, tol)
    if zeta is not None:
        phi = _rotate_series(phi, zeta)
        unim = unim * zeta**M
    return PuiseuxBranch(M, unim, phi, multiplicity, min(certified_order, phi.order))


def _fold_modulus(M: int, c, m2, phi: TruncSeries, tol: float):
    """Split c into modulus and direction; rescale t by the modulus."""
    if isinstance(m2, Fraction) and m2 == 1:
        return Unimodular.from_scalar(c), phi
    if isinstance(c, QI):
        r = rational_sqrt(m2)
        rho = rational_nth_root(r, M) if r is not None else None
        if rho is not None:
            direction = c / QI(r)
            scale = QI(1) / QI(rho)
            coeffs = [phi.coeffs[j] * scale**j for j in range(phi.order + 1)]
            return Unimodular.from_scalar(direction), TruncSeries(coeffs, phi.order, phi.var)
        c = complex(c)
    cz = complex(c)
    modulus = abs(cz)
    if abs(modulus - 1.0) <= tol:
        return Unimodular.from_scalar(cz / modulus), phi.to_float()
    lam = modulus ** (1.0 / M)
    coeffs = [to_complex(phi.coeffs[j]) / lam**j for j in range(phi.order + 1)]
    return Unimodular.from_scalar(cz / modulus), TruncSeries(coeffs, phi.order, phi.var)


def _normalizing_rotation(psi0, a0: int, tol: float):
    """A unimodular zeta with zeta^a0 * psi0 on the positive imaginary axis."""
    if isinstance(psi0, QI):
        r = rational_sqrt(psi0.abs2())
        if r is not None:
            direction = psi0 / QI(r)
            eta = QI_I * direction.conjugate()  # target i / direction
            for k in range(4):
                if eta == QI_I**k:
                    if k == 0:
                        return None
                    return Unimodular.from_half_turns(Fraction(k, 2 * a0))
            if a0 == 1:
                return Unimodular.from_scalar(eta)
        psi0 = complex(psi0)
    psi0 = to_complex(psi0)
    theta = (math.pi / 2 - cmath.phase(psi0)) / a0
    if abs(theta) <= 1e-15:
        return None
    return Unimodular.from_scalar(cmath.exp(1j * theta))


def _rotate_series(phi: TruncSeries, zeta: Unimodular) -> TruncSeries:
    """phi(zeta * t); demotes to float if a rotated coefficient leaves Q(i)."""
    if phi.backend == "exact" and zeta.is_exact:
        coeffs = []
        ok = True
        for j in range(phi.order + 1):
            if not phi.coeffs[j]:
                coeffs.append(QI(0))
                continue
            factor = (zeta**j).exact_qi()
            if factor is None:
                ok = False
                break
            coeffs.append(phi.coeffs[j] * factor)
        if ok:
            return TruncSeries(coeffs, phi.order, phi.var)
    zc = zeta.to_complex()
    return TruncSeries(
        [to_complex(phi.coeffs[j]) * zc**j for j in range(phi.order + 1)],
        phi.order,
        phi.var,
    )


def branch_is_injective(b: PuiseuxBranch, tol: float = DEFAULT_TOL) -> bool:
    """True when gcd(M, exponents of phi) = 1, certified to the truncation.

    A branch whose z and w components are both functions of t^g with g > 1
    traces its image g times; the classifier rejects such parametrizations.
    """
    g = b.M
    scale = b.phi._scale()
    for j in range(1, b.phi.order + 1):
        if not is_zero(b.phi.coeffs[j], tol, scale):
            g = math.gcd(g, j)
            if g == 1:
                return True
    return g == 1


def branch_residual(p: MultiPoly, b: PuiseuxBranch, order: int | None = None) -> TruncSeries:
    """p(c t^M, phi(t)) as a series; identically 0 through the certified order."""
    if order is None:
        order = b.certified_order
    cval = b.c.exact_qi()
    needed = {a for (a, _), _ in p.terms.items()}
    if cval is None and b.c.is_exact:
        if all((b.c**a).exact_qi() is not None for a in needed):
            # each z-power of c is exact even though c itself is not
            zpow = {a: (b.c**a).exact_qi() for a in needed}
            acc = TruncSeries.zero(order)
            phi = b.phi.pad_zero(order) if b.phi.order < order else b.phi.truncate(order)
            wpows = {0: TruncSeries.one(order)}

            def wp(k):
                if k not in wpows:
                    wpows[k] = (wp(k - 1) * phi).truncate(order)
                return wpows[k]

            for (a, k), coef in p.terms.items():
                mono = TruncSeries.monomial(b.M * a, coef * zpow[a], order)
                acc = acc + (mono * wp(k)).truncate(order)
            return acc
        cval = b.c.to_complex()
    if cval is None:
        cval = b.c.to_complex()
    zs = TruncSeries.monomial(b.M, cval, order)
    phi = b.phi.pad_zero(order) if b.phi.order < order else b.phi
    return p.eval_series([zs, phi], order=order)
