"""Classification of normalized branches and of simple boundary zeros.

A normalized branch t -> (c t^M, phi(t)) with phi = psi0 t^a0 + ... falls into
one of four classes:

* Basic: a0 > 2M, or a0 = 2M with |psi0| < 1.  The avoidance function
  G(t) = |t|^(2M) - Im phi(t) is positive in a punctured disk for elementary
  reasons and the admissible ideal is (w, z^2)^M.
* Isolated: a0 = 2M, psi0 = i, and the logarithm L of the reparametrizing
  factor decomposes as i*A0(s^M) + s^(2MK) L1 with Re L1(0) > 0.  The origin
  is an isolated boundary zero with contact order 2M(1+K).
* Curve: M = 1 and every L coefficient is purely imaginary (certified to the
  truncation order); the zero set meets the boundary in a curve through 0.
* Unstable: the branch enters the open domain Im w > |z|^2 arbitrarily close
  to 0, so no polynomial with this branch is stable.  A witness point on the
  branch is produced.

The decomposition of L follows the angular analysis: with mu = e^(i pi / M),
m(k) = min{ j : Re(L_j mu^(kj)) != 0 } must be even, equal for all k, and
carry a positive coefficient; any failure yields an explicit instability
witness t = Psi(r mu^k).  Real-part zero tests stay exact for rotation
angles whose half-turn denominator lies in {1, 2, 3, 4, 6}.
"""

from __future__ import annotations

import cmath
import decimal
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    InputError,
    InsufficientOrder,
    NotInjective,
    NotNonBasic,
    WitnessSearchFailed,
    ZeroGradient,
)
from .multipoly import MultiPoly, Point
from .puiseux import PuiseuxBranch, _scalar_poly_roots, branch_is_injective
from .scalars import (
    DEFAULT_TOL,
    QI,
    QI_I,
    imag_part,
    is_exact,
    is_zero,
    scalar_to_json,
    to_complex,
)
from .series import TruncSeries


# ---------------------------------------------------------------------------
# result types


@dataclass(frozen=True)
class BranchClass:
    """Classification verdict for one branch; fields beyond the tag are
    populated per class (K/A0/L1_lead/phi0 for Isolated, L for Curve,
    witness for Unstable)."""

    tag: str
    M: int
    a0: int | None
    psi0: object | None
    certified_order: int
    K: int | None = None
    A0: TruncSeries | None = None
    L1_lead: object | None = None
    phi0: TruncSeries | None = None
    lower_bound_exponent: int | None = None
    L: TruncSeries | None = None
    witness: Point | None = None
    witness_t: object | None = None
    notes: tuple = ()

    def to_json(self) -> dict:
        out = {
            "tag": self.tag,
            "M": self.M,
            "a0": self.a0,
            "psi0": None if self.psi0 is None else scalar_to_json(self.psi0),
            "certified_order": self.certified_order,
        }
        if self.K is not None:
            out["K"] = self.K
            out["A0"] = self.A0.to_json()
            out["L1_lead"] = scalar_to_json(self.L1_lead)
            out["phi0"] = self.phi0.to_json()
            out["lower_bound_exponent"] = self.lower_bound_exponent
        if self.L is not None:
            out["L"] = self.L.to_json()
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.notes:
            out["notes"] = list(self.notes)
        return out


@dataclass(frozen=True)
class ClassificationTrace:
    """Angular diagnostics: mu = e^(i pi/M), nu = e^(i pi/2M), the critical
    index m(k) per direction (None meaning no real part up to the order), and
    the leading (exponent, coefficient) of G along each critical ray."""

    mu: complex
    nu: complex
    m_of_k: tuple
    G_leading: tuple
    order: int

    def to_json(self) -> dict:
        return {
            "mu": {"re": self.mu.real, "im": self.mu.imag},
            "nu": {"re": self.nu.real, "im": self.nu.imag},
            "m_of_k": list(self.m_of_k),
            "G_leading": [
                {"exponent": e, "coefficient": c} for e, c in self.G_leading
            ],
            "order": self.order,
        }


@dataclass(frozen=True)
class SmoothReport:
    """Simple-zero analysis in any dimension: is the gradient normal to the
    boundary, and is the normalized Hessian a contraction."""

    dim: int
    gradient: tuple
    parallel: bool
    A: object | None
    singular_values: tuple
    norm: float | None
    verdict: str
    ideal_hint: str | None = None

    def to_json(self) -> dict:
        out = {
            "dim": self.dim,
            "gradient": [{"re": g.real, "im": g.imag} for g in self.gradient],
            "gradient_parallel_to_last_axis": self.parallel,
            "singular_values": list(self.singular_values),
            "norm": self.norm,
            "verdict": self.verdict,
        }
        if self.A is not None:
            out["A"] = [[{"re": x.real, "im": x.imag} for x in row] for row in self.A]
        if self.ideal_hint:
            out["ideal_hint"] = self.ideal_hint
        return out


# ---------------------------------------------------------------------------
# exact real parts along rotated directions

_COS_SIN_TABLE = {
    # denominator -> {numerator mod 2*den: ((cos rational, sqrt2, sqrt3), (sin ...))}
    1: {0: ((1, 0, 0), (0, 0, 0)), 1: ((-1, 0, 0), (0, 0, 0))},
    2: {1: ((0, 0, 0), (1, 0, 0)), 3: ((0, 0, 0), (-1, 0, 0))},
    3: {
        1: ((Fraction(1, 2), 0, 0), (0, 0, Fraction(1, 2))),
        2: ((Fraction(-1, 2), 0, 0), (0, 0, Fraction(1, 2))),
        4: ((Fraction(-1, 2), 0, 0), (0, 0, Fraction(-1, 2))),
        5: ((Fraction(1, 2), 0, 0), (0, 0, Fraction(-1, 2))),
    },
    4: {
        1: ((0, Fraction(1, 2), 0), (0, Fraction(1, 2), 0)),
        3: ((0, Fraction(-1, 2), 0), (0, Fraction(1, 2), 0)),
        5: ((0, Fraction(-1, 2), 0), (0, Fraction(-1, 2), 0)),
        7: ((0, Fraction(1, 2), 0), (0, Fraction(-1, 2), 0)),
    },
    6: {
        1: ((0, 0, Fraction(1, 2)), (Fraction(1, 2), 0, 0)),
        5: ((0, 0, Fraction(-1, 2)), (Fraction(1, 2), 0, 0)),
        7: ((0, 0, Fraction(-1, 2)), (Fraction(-1, 2), 0, 0)),
        11: ((0, 0, Fraction(1, 2)), (Fraction(-1, 2), 0, 0)),
    },
}


def _surd_float(comps) -> float:
    """Sign-reliable float of a + b*sqrt(2) + c*sqrt(3) via 60-digit decimals."""
    a, b, c = comps
    with decimal.localcontext() as ctx:
        ctx.prec = 60
        val = decimal.Decimal(a.numerator) / a.denominator if a else decimal.Decimal(0)
        if b:
            val += (decimal.Decimal(b.numerator) / b.denominator) * decimal.Decimal(2).sqrt()
        if c:
            val += (decimal.Decimal(c.numerator) / c.denominator) * decimal.Decimal(3).sqrt()
        return float(val)


def _re_along(coef, q: Fraction, tol: float, scale: float):
    """(is_zero, signed value) of Re(coef * e^(i pi q)).

    Exact when coef is Gaussian rational and q's denominator is in the surd
    table; tolerance-based otherwise.
    """
    q = q % 2
    if isinstance(coef, QI) and q.denominator in _COS_SIN_TABLE:
        entry = _COS_SIN_TABLE[q.denominator].get(q.numerator % (2 * q.denominator))
        if entry is None:  # numerator shares a factor only when q wasn't reduced
            entry = _COS_SIN_TABLE[1][0]
        (cr, c2, c3), (sr, s2, s3) = entry
        x, y = coef.re, coef.im
        comps = (
            x * Fraction(cr) - y * Fraction(sr),
            x * Fraction(c2) - y * Fraction(s2),
            x * Fraction(c3) - y * Fraction(s3),
        )
        if not any(comps):
            return True, 0.0
        return False, _surd_float(comps)
    val = (to_complex(coef) * cmath.exp(1j * math.pi * float(q))).real
    if abs(val) <= tol * max(scale, 1.0):
        return True, 0.0
    return False, val


# ---------------------------------------------------------------------------
# L construction


def build_L(b: PuiseuxBranch, tol: float = DEFAULT_TOL):
    """Reparametrizing data (L, Phi, Psi) for a non-basic branch.

    Phi solves i t phi'(t) / (-2M) = Phi(t)^(2M) with Phi(t) = t + O(t^2);
    Psi is its inverse and L(s) = log(Psi(s)/s).  The defining identity
    phi(Psi(s)) = i s^(2M) + 2Mi * antiderivative(s^(2M) L'(s)) then holds
    through the truncation.
    """
    phi = b.phi
    M = b.M
    a0 = phi.valuation(tol)
    if a0 != 2 * M:
        raise NotNonBasic(f"branch has a0 = {a0}, expected exactly {2 * M}")
    psi0 = phi.coeffs[a0]
    if isinstance(psi0, QI):
        if psi0 != QI_I:
            raise NotNonBasic("leading phi coefficient must equal i")
    elif abs(to_complex(psi0) - 1j) > tol * max(phi._scale(), 1.0):
        raise NotNonBasic("leading phi coefficient must equal i")
    if phi.order < 2 * M + 1:
        raise InsufficientOrder("phi too short to build L", needs_order=4 * M)
    h = (phi.derivative().shift(1) * QI_I).divide_t_power(2 * M, tol) / QI(-2 * M)
    Phi = h.nth_root(2 * M).shift(1)
    Psi = Phi.reversion().with_var("s")
    L = Psi.divide_t_power(1, tol).log().with_var("s")
    return L, Phi, Psi


def _phipsi_rhs(L: TruncSeries, M: int) -> TruncSeries:
    """i s^(2M) + 2Mi * antiderivative(s^(2M) L'(s)) to L's reliable order."""
    integral = L.derivative().shift(2 * M).antiderivative()
    rhs = integral * QI(2 * M) * QI_I
    lead = TruncSeries.monomial(2 * M, QI_I, rhs.order, var=rhs.var)
    return rhs + lead


# ---------------------------------------------------------------------------
# the angular decomposition of L


def decompose_L(L: TruncSeries, M: int, tol: float = DEFAULT_TOL) -> dict:
    """Critical indices m(k) and the first sign violation, if any.

    Returns a dict with keys m_of_k (list over k = 0..2M-1, None = no real
    part up to the order), kind ("isolated" | "curve" | "violation"),
    K (isolated only), violation (j, k, value) for the most negative
    offender, and values (per-k leading real parts).
    """
    twoM = 2 * M
    scale = L._scale()
    m_of_k = [None] * twoM
    lead_val = [0.0] * twoM
    first_j = None
    for j in range(1, L.order + 1):
        coef = L.coeffs[j]
        if not isinstance(coef, QI) and is_zero(coef, tol, scale):
            continue
        if isinstance(coef, QI) and not coef:
            continue
        for k in range(twoM):
            if m_of_k[k] is not None:
                continue
            zero, val = _re_along(coef, Fraction(k * j, M), tol, scale)
            if not zero:
                m_of_k[k] = j
                lead_val[k] = val
                if first_j is None or j < first_j:
                    first_j = j
        if all(m is not None for m in m_of_k):
            break
    if first_j is None:
        return {"m_of_k": m_of_k, "kind": "curve", "K": None, "violation": None,
                "values": lead_val}
    # a clean isolated decomposition means every direction breaks at the same
    # even multiple of 2M with a positive coefficient
    if (
        first_j % twoM == 0
        and all(m == first_j for m in m_of_k)
        and all(v > 0 for v in lead_val)
    ):
        return {"m_of_k": m_of_k, "kind": "isolated", "K": first_j // twoM,
                "violation": None, "values": lead_val}
    worst_k = None
    worst = math.inf
    for k in range(twoM):
        if m_of_k[k] == first_j and lead_val[k] < worst:
            worst = lead_val[k]
            worst_k = k
    if worst_k is None or worst >= 0:
        # equal positive leads at an index that is not a multiple of 2M can
        # only happen alongside some negative direction; scan found none, so
        # the data is inconsistent with every stable pattern
        worst_k = m_of_k.index(first_j)
        worst = lead_val[worst_k]
    return {"m_of_k": m_of_k, "kind": "violation", "K": None,
            "violation": (first_j, worst_k, worst), "values": lead_val}


def angular_critical_G(b: PuiseuxBranch, r: float, k: int,
                       tol: float = DEFAULT_TOL, L: TruncSeries | None = None) -> float:
    """G along the k-th critical ray at radius r, from the closed form
    G = r^(2M) expm1(2M Re L(r mu^k)) - 2M Re Integral(r mu^k)."""
    M = b.M
    if L is None:
        L, _, _ = build_L(b, tol)
    mu_k = cmath.exp(1j * math.pi * k / M)
    s = r * mu_k
    integral = L.derivative().shift(2 * M).antiderivative()
    re_L = L.eval_complex(s).real
    re_I = integral.eval_complex(s).real
    return r ** (2 * M) * math.expm1(2 * M * re_L) - 2 * M * re_I


# ---------------------------------------------------------------------------
# witnesses for unstable branches


def _tail_margin(phi: TruncSeries, r: float) -> float:
    """Crude bound on the truncation tail of phi at radius r."""
    rad = phi.radius_estimate()
    if rad <= 0 or not math.isfinite(rad) or r >= 0.95 * rad:
        return math.inf
    x = r / rad
    return 2.0 * x ** (phi.order + 1) / (1.0 - x) * max(phi._scale(), 1.0)


def _gate_witness(b: PuiseuxBranch, tol: float):
    """Witness for a0 < 2M or |psi0| > 1: a real parameter r with
    Im phi(r) > r^(2M) by more than the tail estimate."""
    phi = b.phi
    M = b.M
    rad = phi.radius_estimate()
    cap = 0.5 * rad if math.isfinite(rad) and rad > 0 else 0.5
    if phi.backend == "exact":
        grid = sorted(
            {Fraction(num, den) for den in range(2, 65) for num in (1, 2, 3)
             if Fraction(num, den) <= min(cap, Fraction(3, 4))},
            reverse=True,
        )
        for r in grid:
            w = phi.eval(QI(r))
            gap = w.im - r ** (2 * M)
            if gap > 0 and float(gap) > _tail_margin(phi, float(r)):
                return b.point(QI(r)), QI(r)
    r = min(cap, 0.5)
    for _ in range(80):
        w = phi.eval_complex(complex(r))
        gap = w.imag - r ** (2 * M)
        if gap > max(10 * tol, _tail_margin(phi, r)):
            return b.point(complex(r)), complex(r)
        r *= 0.8
    raise WitnessSearchFailed("no parameter value exhibited Im phi(r) > r^(2M)")


def _violation_witness(b: PuiseuxBranch, Psi: TruncSeries, k: int, tol: float):
    """Witness from a sign violation: t = Psi(r mu^k) enters the domain."""
    M = b.M
    mu_k = cmath.exp(1j * math.pi * k / M)
    rad = Psi.radius_estimate()
    r = 0.5 * rad if math.isfinite(rad) and rad > 0 else 0.25
    r = min(r, 0.5)
    for _ in range(80):
        t = Psi.eval_complex(r * mu_k)
        pt = b.point(t)
        z, w = pt.to_complex()
        gap = w.imag - abs(z) ** 2
        if gap > max(10 * tol, _tail_margin(b.phi, abs(t))):
            return pt, t
        r *= 0.8
    raise WitnessSearchFailed("angular critical direction did not yield a domain point")


def curve_witness(p: MultiPoly, b: PuiseuxBranch, tol: float = DEFAULT_TOL,
                  start: Point | None = None):
    """A point exactly on the zero set of p inside Im w > |z|^2, near the
    unstable branch b; exact when a rational parameter hits a Gaussian
    rational root.  Falls back to polishing ``start`` (or a fresh on-branch
    witness) onto the curve by Newton in w.  Returns None when nothing
    certifiable is found.
    """
    cq = b.c.exact_qi()
    guide = b.phi
    if p.backend == "exact" and cq is not None:
        for den in range(2, 13):
            for num in range(1, den):
                if math.gcd(num, den) != 1:
                    continue
                t = Fraction(num, den)
                if t > Fraction(3, 4):
                    continue
                z0 = cq * QI(t) ** b.M
                coeffs = _univariate_in_w(p, z0)
                target = guide.eval_complex(complex(t))
                best = None
                for root, _ in _scalar_poly_roots(coeffs, tol):
                    if not isinstance(root, QI):
                        continue
                    if root.abs2() > Fraction(9, 16):
                        continue
                    if root.im <= z0.abs2():
                        continue
                    dist = abs(complex(root) - target)
                    if best is None or dist < best[0]:
                        best = (dist, root)
                if best is not None:
                    return Point((z0, best[1]), "siegel")
    # float fallback: polish the branch point onto the curve by Newton in w
    if start is None:
        try:
            start, _ = _gate_witness(b, tol)
        except WitnessSearchFailed:
            return None
    z0c, w0 = start.to_complex()
    coeffs = _univariate_in_w(p, z0c)
    dcoeffs = [j * coeffs[j] for j in range(1, len(coeffs))]
    w = w0
    for _ in range(60):
        fw = _horner(coeffs, w)
        if abs(fw) <= tol * max(p.coef_scale(), 1.0):
            break
        dfw = _horner(dcoeffs, w)
        if abs(dfw) == 0:
            return None
        w = w - fw / dfw
    else:
        return None
    if w.imag - abs(z0c) ** 2 > 10 * tol:
        return Point((z0c, w), "siegel")
    return None


def _univariate_in_w(p: MultiPoly, z0):
    """Coefficient list of w -> p(z0, w)."""
    degw = p.degree_in(1)
    coeffs = [QI(0) if is_exact(z0) else 0j] * (degw + 1)
    for (a, bidx), coef in p.terms.items():
        coeffs[bidx] = coeffs[bidx] + coef * z0**a
    return coeffs


def _horner(coeffs, x):
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * x + complex(c)
    return acc


# ---------------------------------------------------------------------------
# the classifier


def classify_branch(b: PuiseuxBranch, tol: float = DEFAULT_TOL):
    """Classify one normalized branch; returns (BranchClass, ClassificationTrace).

    Raises InsufficientOrder (with a needs_order hint) when the truncation
    cannot settle the verdict, and NotInjective when the parametrization is
    a proper power and the non-basic analysis does not apply to it.
    """
    phi = b.phi
    M = b.M
    twoM = 2 * M
    N = b.certified_order if b.certified_order is not None else phi.order
    mu = cmath.exp(1j * math.pi / M)
    nu = cmath.exp(1j * math.pi / twoM)
    a0 = phi.valuation(tol)
    if a0 is None:
        cls = BranchClass("Basic", M, None, None, N,
                          notes=("w-component vanishes to the certified order",))
        return cls, ClassificationTrace(mu, nu, (None,) * twoM, (), N)
    psi0 = phi.coeffs[a0]
    sigma_cmp = _compare_modulus_to_one(psi0, tol, phi._scale())
    if a0 > twoM or (a0 == twoM and sigma_cmp < 0):
        cls = BranchClass("Basic", M, a0, psi0, N)
        return cls, ClassificationTrace(mu, nu, (None,) * twoM, (), N)
    if a0 < twoM or sigma_cmp > 0:
        witness, t = _gate_witness(b, tol)
        cls = BranchClass("Unstable", M, a0, psi0, N, witness=witness, witness_t=t)
        return cls, ClassificationTrace(mu, nu, (None,) * twoM, (), N)
    # non-basic gate: a0 = 2M, |psi0| = 1, normalization forces psi0 = i
    if not branch_is_injective(b, tol):
        raise NotInjective(
            "branch parameter runs through a proper power; reduce it first")
    L, Phi, Psi = build_L(b, tol)
    dec = decompose_L(L, M, tol)
    G_lead = _g_leading(L, M, dec["m_of_k"], tol)
    trace = ClassificationTrace(mu, nu, tuple(dec["m_of_k"]), G_lead, N)
    if dec["kind"] == "violation":
        j, k, val = dec["violation"]
        witness, t = _violation_witness(b, Psi, k, tol)
        cls = BranchClass("Unstable", M, a0, psi0, N, witness=witness, witness_t=t,
                          notes=(f"G turns negative along direction k={k} at order {twoM + j}",))
        return cls, trace
    if dec["kind"] == "curve":
        if M > 1:
            raise InsufficientOrder(
                "no real part in L up to the certified order, but M > 1 admits "
                "no boundary curve; re-expand to a higher order",
                needs_order=2 * N,
            )
        cls = BranchClass("Curve", M, a0, psi0, N, L=L,
                          notes=(f"all L coefficients purely imaginary through order {L.order}",))
        return cls, trace
    K = dec["K"]
    if N < twoM * (K + 1):
        raise InsufficientOrder(
            f"isolated candidate with K={K} needs phi through order {twoM * (K + 1)}",
            needs_order=twoM * (K + 2),
        )
    A0 = TruncSeries([imag_part(L.coeffs[M * ell]) for ell in range(2 * K)],
                     2 * K - 1, var="u")
    phi0 = TruncSeries([phi.coeffs[M * j] if M * j <= phi.order else QI(0)
                        for j in range(2 * (K + 1))], 2 * K + 1, var="u")
    cls = BranchClass(
        "Isolated", M, a0, psi0, N,
        K=K, A0=A0, L1_lead=L.coeffs[twoM * K], phi0=phi0,
        lower_bound_exponent=twoM * (1 + K),
        notes=("phi0 collects every branch coefficient below the remainder "
               f"exponent {twoM * (1 + K)}",),
    )
    return cls, trace


def _compare_modulus_to_one(psi0, tol: float, scale: float) -> int:
    """-1, 0, +1 for |psi0| <, =, > 1; exact for Gaussian rationals."""
    if isinstance(psi0, QI):
        m2 = psi0.abs2()
        return (m2 > 1) - (m2 < 1)
    m = abs(to_complex(psi0))
    if abs(m - 1.0) <= tol * max(scale, 1.0):
        return 0
    return 1 if m > 1 else -1


def _g_leading(L: TruncSeries, M: int, m_of_k, tol: float):
    """Per-direction leading (exponent, coefficient) of G from the expansion
    G ~ (2M)^2/(m+2M) r^(2M+m) Re(L_m mu^(km))."""
    out = []
    scale = L._scale()
    for k, m in enumerate(m_of_k):
        if m is None:
            out.append((None, 0.0))
            continue
        _, val = _re_along(L.coeffs[m], Fraction(k * m, M), tol, scale)
        coef = (2 * M) ** 2 / (m + 2 * M) * val
        out.append((2 * M + m, coef))
    return tuple(out)


def simple_criterion(b: PuiseuxBranch, tol: float = DEFAULT_TOL):
    """Shortcut for phi = i t^(2M) + alpha t^(2M(K+1)) + o with Im alpha < 0:
    returns (K, predicted leading L coefficient i(K+1)alpha/(2M)), or None
    when the pattern does not apply."""
    phi = b.phi
    M = b.M
    twoM = 2 * M
    a0 = phi.valuation(tol)
    if a0 != twoM:
        return None
    scale = phi._scale()
    nxt = None
    for j in range(a0 + 1, phi.order + 1):
        if not is_zero(phi.coeffs[j], tol, scale):
            nxt = j
            break
    if nxt is None or nxt % twoM != 0:
        return None
    K = nxt // twoM - 1
    if K < 1:
        return None
    alpha = phi.coeffs[nxt]
    im_alpha = imag_part(alpha)
    if isinstance(im_alpha, Fraction):
        if im_alpha >= 0:
            return None
    elif im_alpha >= -tol * max(scale, 1.0):
        return None
    lead = alpha * QI_I * QI(K + 1) / QI(twoM)
    return K, lead


def classify_simple_zero(p: MultiPoly, tol: float = DEFAULT_TOL) -> SmoothReport:
    """Contraction test at a smooth boundary zero in any dimension.

    Requires p(0) = 0 with a nonzero gradient.  Reports whether the gradient
    points along the distinguished (w) axis and whether the matrix
    A = -H_z p(0) / (2 dp/dw(0)) is a contraction: strict contractions are
    stable simple zeros with ideal (w, (z)^2), operator norm 1 touches the
    boundary of that condition, and anything larger is a violation.
    """
    d = p.dim
    scale = p.coef_scale()
    if not is_zero(p.coefficient((0,) * d), tol, scale):
        raise InputError("p(0) != 0: not a boundary zero at the origin")
    grad = p.gradient0()
    gradc = [to_complex(g) for g in grad]
    if all(is_zero(g, tol, scale) for g in grad):
        raise ZeroGradient("gradient vanishes at 0; the zero is not simple")
    parallel = all(is_zero(g, tol, scale) for g in grad[:-1]) and not is_zero(
        grad[-1], tol, scale)
    if not parallel:
        return SmoothReport(d, tuple(gradc), False, None, (), None, "violation")
    pw = to_complex(grad[-1])
    H = p.hessian_z0()
    n = d - 1
    A = np.empty((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            A[i, j] = -to_complex(H[i][j]) / (2 * pw)
    svals = np.linalg.svd(A, compute_uv=False) if n else np.array([0.0])
    norm = float(svals[0]) if len(svals) else 0.0
    if norm < 1 - tol:
        verdict = "strict"
        hint = "simple_zero"
    elif norm <= 1 + tol:
        verdict = "boundary"
        hint = None
    else:
        verdict = "violation"
        hint = None
    return SmoothReport(d, tuple(gradc), True, A.tolist(),
                        tuple(float(s) for s in svals), norm, verdict, hint)
