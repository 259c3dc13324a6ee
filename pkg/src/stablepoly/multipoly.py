"""Sparse multivariate polynomials over exact or float complex scalars.

Conventions.  A polynomial in dimension d uses variables z_1, ..., z_{d-1}, w
(Siegel coordinates); polynomials living on the unit ball use z_1, ..., z_d.
Exponent tuples index variables in that order, so the last slot is always the
distinguished variable (w, respectively z_d).  Terms iterate in graded
lexicographic order to keep every serialization deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimMismatch, NotWGeneral, ZeroPolynomial
from .scalars import (
    DEFAULT_TOL,
    QI,
    QI_I,
    Unimodular,
    abs2,
    as_scalar,
    conj,
    imag_part,
    is_exact,
    is_zero,
    scalar_from_json,
    scalar_to_json,
    to_complex,
)
from .series import TruncSeries


def _default_names(dim: int, domain: str = "siegel"):
    if domain == "ball":
        return tuple(f"z{j + 1}" for j in range(dim))
    if dim == 2:
        return ("z", "w")
    return tuple(f"z{j + 1}" for j in range(dim - 1)) + ("w",)


class MultiPoly:
    """Polynomial stored as {exponent tuple: nonzero coefficient}."""

    __slots__ = ("dim", "terms", "names")

    def __init__(self, dim: int, terms=None, names=None):
        if dim < 1:
            raise DimMismatch("dimension must be >= 1")
        clean = {}
        if terms:
            for exp, coef in terms.items():
                exp = tuple(int(e) for e in exp)
                if len(exp) != dim:
                    raise DimMismatch(f"exponent {exp} does not match dimension {dim}")
                if any(e < 0 for e in exp):
                    raise ValueError("negative exponents are not allowed")
                coef = as_scalar(coef)
                if exp in clean:
                    coef = clean[exp] + coef
                clean[exp] = coef
        # demote everything to float if any coefficient is float
        if any(isinstance(c, complex) for c in clean.values()):
            clean = {e: to_complex(c) for e, c in clean.items()}
        clean = {e: c for e, c in clean.items() if not _coef_is_exact_zero(c)}
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "names", tuple(names) if names else _default_names(dim))

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, dim: int, names=None) -> "MultiPoly":
        return cls(dim, {}, names)

    @classmethod
    def constant(cls, dim: int, c, names=None) -> "MultiPoly":
        return cls(dim, {(0,) * dim: c}, names)

    @classmethod
    def variable(cls, dim: int, idx: int, names=None) -> "MultiPoly":
        exp = [0] * dim
        exp[idx] = 1
        return cls(dim, {tuple(exp): QI(1)}, names)

    @classmethod
    def from_json(cls, d: dict) -> "MultiPoly":
        names = tuple(d["vars"])
        dim = len(names)
        terms = {tuple(t["exp"]): scalar_from_json(t["coef"]) for t in d["terms"]}
        return cls(dim, terms, names)

    # -- structure ----------------------------------------------------------
    @property
    def backend(self) -> str:
        return "exact" if all(isinstance(c, QI) for c in self.terms.values()) else "float"

    def is_zero(self) -> bool:
        return not self.terms

    def coef_scale(self) -> float:
        if not self.terms:
            return 1.0
        return max(abs(to_complex(c)) for c in self.terms.values())

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def degree_in(self, idx: int) -> int:
        if not self.terms:
            return 0
        return max(e[idx] for e in self.terms)

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), QI(0) if self.backend == "exact" else 0j)

    def terms_sorted(self):
        """(exponent, coefficient) pairs in graded lexicographic order."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def to_float(self) -> "MultiPoly":
        return MultiPoly(self.dim, {e: to_complex(c) for e, c in self.terms.items()}, self.names)

    def with_names(self, names) -> "MultiPoly":
        return MultiPoly(self.dim, dict(self.terms), names)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __hash__(self):
        return hash((self.dim, tuple(self.terms_sorted())))

    # -- arithmetic -----------------------------------------------------------
    def _check_dim(self, other: "MultiPoly"):
        if self.dim != other.dim:
            raise DimMismatch(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other):
        if isinstance(other, MultiPoly):
            self._check_dim(other)
            terms = dict(self.terms)
            for e, c in other.terms.items():
                terms[e] = terms.get(e, 0) + c if e in terms else c
            return MultiPoly(self.dim, terms, self.names)
        return self + MultiPoly.constant(self.dim, other, self.names)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.dim, {e: -c for e, c in self.terms.items()}, self.names)

    def __sub__(self, other):
        if isinstance(other, MultiPoly):
            return self + (-other)
        return self + (-as_scalar(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            self._check_dim(other)
            terms: dict = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    prod = c1 * c2
                    terms[e] = terms[e] + prod if e in terms else prod
            return MultiPoly(self.dim, terms, self.names)
        other = as_scalar(other)
        return MultiPoly(self.dim, {e: c * other for e, c in self.terms.items()}, self.names)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_scalar(other)
        return MultiPoly(self.dim, {e: c / other for e, c in self.terms.items()}, self.names)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers take nonnegative integer exponents")
        out = MultiPoly.constant(self.dim, QI(1), self.names)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- calculus ---------------------------------------------------------------
    def diff(self, idx: int) -> "MultiPoly":
        terms = {}
        for e, c in self.terms.items():
            if e[idx] == 0:
                continue
            ne = list(e)
            ne[idx] -= 1
            terms[tuple(ne)] = c * e[idx]
        return MultiPoly(self.dim, terms, self.names)

    def gradient0(self):
        """Gradient at the origin as a list of scalars."""
        out = []
        for idx in range(self.dim):
            exp = [0] * self.dim
            exp[idx] = 1
            out.append(self.coefficient(exp))
        return out

    def hessian_z0(self):
        """Hessian in the z variables at the origin ((d-1) x (d-1) scalars)."""
        n = self.dim - 1
        H = [[None] * n for _ in range(n)]
        for j in range(n):
            for k in range(n):
                exp = [0] * self.dim
                exp[j] += 1
                exp[k] += 1
                c = self.coefficient(exp)
                H[j][k] = c * 2 if j == k else c
        return H

    # -- evaluation ----------------------------------------------------------------
    def eval(self, coords):
        """Evaluate at a point (sequence of scalars); exact when inputs are."""
        coords = [as_scalar(x) for x in coords]
        if len(coords) != self.dim:
            raise DimMismatch("point dimension mismatch")
        total = None
        for e, c in self.terms.items():
            term = c
            for x, k in zip(coords, e):
                if k:
                    term = term * x**k
            total = term if total is None else total + term
        if total is None:
            return QI(0) if self.backend == "exact" else 0j
        return total

    def eval_many(self, coords):
        """Vectorized float evaluation; coords is a (dim, n) complex array."""
        import numpy as np

        coords = np.asarray(coords, dtype=complex)
        if coords.shape[0] != self.dim:
            raise DimMismatch("sample array dimension mismatch")
        out = np.zeros(coords.shape[1], dtype=complex)
        for e, c in self.terms.items():
            term = np.full(coords.shape[1], to_complex(c))
            for v, k in enumerate(e):
                if k:
                    term = term * coords[v] ** k
            out += term
        return out

    def eval_series(self, subs, order=None) -> TruncSeries:
        """Substitute a TruncSeries for every variable.

        The result is certified to the minimum order among the substituted
        series (valuations can only improve on that, never hurt it).
        """
        if len(subs) != self.dim:
            raise DimMismatch("substitution needs one series per variable")
        if order is None:
            order = min(s.order for s in subs)
        exact = self.backend == "exact" and all(s.backend == "exact" for s in subs)
        acc = TruncSeries.zero(order, subs[0].var if subs else "t", exact=exact)
        powers = [{0: TruncSeries.one(order, acc.var, exact=exact)} for _ in range(self.dim)]

        def var_power(v, k):
            cache = powers[v]
            if k not in cache:
                kk = max(i for i in cache if i <= k)
                p = cache[kk]
                while kk < k:
                    p = (p * subs[v].truncate(order).pad_zero(order)).truncate(order)
                    kk += 1
                    cache[kk] = p
            return cache[k]

        for e, c in self.terms.items():
            term = TruncSeries.monomial(0, c, order, acc.var)
            for v, k in enumerate(e):
                if k:
                    term = (term * var_power(v, k)).truncate(order)
            acc = acc + term
        return acc

    # -- substitutions ----------------------------------------------------------------
    def scale_vars(self, factors) -> "MultiPoly":
        """Substitute x_v -> factor_v * x_v."""
        factors = [as_scalar(f) for f in factors]
        terms = {}
        for e, c in self.terms.items():
            for v, k in enumerate(e):
                if k:
                    c = c * factors[v] ** k
            terms[e] = terms.get(e, 0) + c if e in terms else c
        return MultiPoly(self.dim, terms, self.names)

    def shift_var(self, idx: int, a) -> "MultiPoly":
        """Substitute x_idx -> x_idx + a."""
        a = as_scalar(a)
        out = MultiPoly.zero(self.dim, self.names)
        for e, c in self.terms.items():
            k = e[idx]
            base = list(e)
            for j in range(k + 1):
                base[idx] = j
                coef = c * _binomial(k, j) * a ** (k - j)
                out = out + MultiPoly(self.dim, {tuple(base): coef}, self.names)
        return out

    def reverse_var(self, idx: int, degree=None) -> "MultiPoly":
        """Replace x_idx by 1/x_idx and clear denominators up to x_idx^degree."""
        if degree is None:
            degree = self.degree_in(idx)
        terms = {}
        for e, c in self.terms.items():
            ne = list(e)
            ne[idx] = degree - e[idx]
            if ne[idx] < 0:
                raise ValueError("reversal degree too small")
            terms[tuple(ne)] = c
        return MultiPoly(self.dim, terms, self.names)

    def strip_var_power(self, idx: int) -> tuple[int, "MultiPoly"]:
        """Factor out the largest power of x_idx dividing the polynomial."""
        if not self.terms:
            return 0, self
        k = min(e[idx] for e in self.terms)
        if k == 0:
            return 0, self
        terms = {}
        for e, c in self.terms.items():
            ne = list(e)
            ne[idx] -= k
            terms[tuple(ne)] = c
        return k, MultiPoly(self.dim, terms, self.names)

    # -- io ------------------------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "vars": list(self.names),
            "terms": [
                {"exp": list(e), "coef": scalar_to_json(c)} for e, c in self.terms_sorted()
            ],
        }

    def __str__(self):
        from .scalars import format_scalar

        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms_sorted():
            monos = []
            for v, k in enumerate(e):
                if k == 1:
                    monos.append(self.names[v])
                elif k > 1:
                    monos.append(f"{self.names[v]}^{k}")
            cs = format_scalar(c)
            if not monos:
                parts.append(cs)
            elif cs == "1":
                parts.append("*".join(monos))
            elif cs == "-1":
                parts.append("-" + "*".join(monos))
            else:
                wrapped = f"({cs})" if (" " in cs or "/" in cs) else cs
                parts.append(wrapped + "*" + "*".join(monos))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"MultiPoly({self.dim}, {dict(self.terms_sorted())!r})"


def _coef_is_exact_zero(c) -> bool:
    if isinstance(c, QI):
        return not c
    return c == 0


def _binomial(n: int, k: int) -> int:
    return math.comb(n, k)


# ---------------------------------------------------------------------------
# points and domains


@dataclass(frozen=True)
class Point:
    """A point of C^d tagged with the domain its coordinates refer to."""

    coords: tuple
    domain: str = "siegel"  # 'siegel' or 'ball'

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(as_scalar(x) for x in self.coords))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def in_domain(self, strict: bool = True) -> bool:
        """Membership in U_d (Im w > sum |z_j|^2) or the unit ball; exact for QI."""
        if self.domain == "siegel":
            w = self.coords[-1]
            lhs = imag_part(w)
            rhs = sum((abs2(z) for z in self.coords[:-1]), start=Fraction(0))
            return lhs > rhs if strict else lhs >= rhs
        total = sum((abs2(z) for z in self.coords), start=Fraction(0))
        return total < 1 if strict else total <= 1

    def boundary_gap(self) -> float:
        """Im w - |z|^2 (Siegel) or 1 - |z|^2 (ball) as a float."""
        if self.domain == "siegel":
            w = to_complex(self.coords[-1])
            return w.imag - sum(abs(to_complex(z)) ** 2 for z in self.coords[:-1])
        return 1.0 - sum(abs(to_complex(z)) ** 2 for z in self.coords)

    def to_complex(self) -> tuple:
        return tuple(to_complex(x) for x in self.coords)

    def to_json(self) -> dict:
        return {"domain": self.domain, "coords": [scalar_to_json(x) for x in self.coords]}

    @classmethod
    def from_json(cls, d: dict) -> "Point":
        return cls(tuple(scalar_from_json(x) for x in d["coords"]), d.get("domain", "siegel"))


# ---------------------------------------------------------------------------
# transports between the ball and the Siegel half-space


def _div_linear_w(p: MultiPoly, root, tol: float = DEFAULT_TOL):
    """Divide p by (w - root) in the last variable.

    Returns (quotient, remainder-poly-in-z); the remainder is p with w = root.
    """
    root = as_scalar(root)
    widx = p.dim - 1
    bucket: dict = {}
    for e, c in p.terms.items():
        ze = e[:widx]
        bucket.setdefault(ze, {})[e[widx]] = c
    quot_terms = {}
    rem_terms = {}
    for ze, coeffs in bucket.items():
        deg = max(coeffs)
        dense = [coeffs.get(k, 0) for k in range(deg + 1)]
        # synthetic division by (w - root)
        q = [0] * deg
        acc = dense[deg]
        for k in range(deg - 1, -1, -1):
            q[k] = acc
            acc = dense[k] + acc * root
        for k, c in enumerate(q):
            c = as_scalar(c)
            if not _coef_is_exact_zero(c):
                quot_terms[ze + (k,)] = c
        acc = as_scalar(acc)
        if not _coef_is_exact_zero(acc):
            rem_terms[ze + (0,)] = acc
    return (
        MultiPoly(p.dim, quot_terms, p.names),
        MultiPoly(p.dim, rem_terms, p.names),
    )


def _strip_linear_w_factors(p: MultiPoly, root, tol: float = DEFAULT_TOL) -> MultiPoly:
    while not p.is_zero():
        quot, rem = _div_linear_w(p, root, tol)
        scale = p.coef_scale()
        if all(is_zero(c, tol, scale) for c in rem.terms.values()) and not quot.is_zero():
            p = quot
        else:
            break
    return p


def transport_ball_to_siegel(p: MultiPoly) -> MultiPoly:
    """Clear denominators of p composed with the ball -> Siegel map.

    The map sends (z, w) in U_d to (2 z / (i+w), (i-w)/(i+w)) on the ball;
    the homogenized pullback (i+w)^deg(p) * p(...) is returned with all common
    (i+w) factors stripped.  The zero sets near the distinguished boundary
    points correspond under this transport.
    """
    if p.is_zero():
        raise ZeroPolynomial("cannot transport the zero polynomial")
    d = p.dim
    D = p.total_degree()
    names = _default_names(d)
    w = MultiPoly.variable(d, d - 1, names)
    i_plus_w = w + QI_I
    i_minus_w = (-w) + QI_I
    pw_plus = [MultiPoly.constant(d, QI(1), names)]
    pw_minus = [MultiPoly.constant(d, QI(1), names)]
    for _ in range(D):
        pw_plus.append(pw_plus[-1] * i_plus_w)
        pw_minus.append(pw_minus[-1] * i_minus_w)
    out = MultiPoly.zero(d, names)
    for e, c in p.terms.items():
        alpha, beta = e[:-1], e[-1]
        rest = D - sum(alpha) - beta
        term = MultiPoly(
            d,
            {tuple(alpha) + (0,): c * QI(2) ** sum(alpha)},
            names,
        )
        out = out + term * pw_minus[beta] * pw_plus[rest]
    return _strip_linear_w_factors(out, QI(0, -1))


def transport_siegel_to_ball(p: MultiPoly) -> MultiPoly:
    """Inverse transport; returns the cleared pullback with (1+w) stripped.

    The inverse map sends ball points to (i z / (1+w), i (1-w)/(1+w)).
    The result uses ball variable names z_1 ... z_d.
    """
    if p.is_zero():
        raise ZeroPolynomial("cannot transport the zero polynomial")
    d = p.dim
    D = p.total_degree()
    names = _default_names(d, domain="ball")
    w = MultiPoly.variable(d, d - 1, names)
    one_plus_w = w + QI(1)
    one_minus_w = (-w) + QI(1)
    pw_plus = [MultiPoly.constant(d, QI(1), names)]
    pw_minus = [MultiPoly.constant(d, QI(1), names)]
    for _ in range(D):
        pw_plus.append(pw_plus[-1] * one_plus_w)
        pw_minus.append(pw_minus[-1] * one_minus_w)
    out = MultiPoly.zero(d, names)
    for e, c in p.terms.items():
        alpha, beta = e[:-1], e[-1]
        rest = D - sum(alpha) - beta
        term = MultiPoly(d, {tuple(alpha) + (0,): c * QI_I ** (sum(alpha) + beta)}, names)
        out = out + term * pw_minus[beta] * pw_plus[rest]
    return _strip_linear_w_factors(out, QI(-1))


# ---------------------------------------------------------------------------
# Weierstrass-style reduction of a numerator


def weierstrass_wdegree_reduce(q: MultiPoly, M: int, phi0: TruncSeries | None = None,
                               c: Unimodular | None = None, order: int | None = None):
    """Taylor coefficients of q around w = phi0(conj(c) z).

    Returns the list [q_0, ..., q_{M-1}] with
    q_j(z) = (1/j!) (d/dw)^j q evaluated at (z, phi0(conj(c) z)), each as a
    TruncSeries in z.  With phi0 omitted the expansion point is w = 0.  This
    is exact for polynomial input whenever phi0 and c are exact.
    """
    if q.dim != 2:
        raise DimMismatch("w-degree reduction is specific to two variables")
    degw = q.degree_in(1)
    if phi0 is None:
        phi0 = TruncSeries.zero(0)
    phi_deg = phi0.order
    if order is None:
        order = q.degree_in(0) + degw * max(phi_deg, 1) + 2 * M
    # build phi0(conj(c) z) as a series in z
    if c is None:
        cconj_pows = None
        shift = phi0.pad_zero(order).truncate(order)
    else:
        cbar = c.conjugate()
        coeffs = []
        for j in range(phi0.order + 1):
            coeffs.append(phi0.coeffs[j] * cbar.scalar_power(j))
        shift = TruncSeries(coeffs, phi0.order, "t").pad_zero(order).truncate(order)
    zser = TruncSeries.identity(order, exact=shift.backend == "exact" and q.backend == "exact")
    out = []
    deriv = q
    fact = 1
    for j in range(M):
        out.append(deriv.eval_series([zser, shift], order=order) / fact)
        deriv = deriv.diff(1)
        fact *= j + 1
    return out


# ---------------------------------------------------------------------------
# exact univariate helpers over Q(i) (dense lists, low degree first)


def _u_trim(a):
    while a and _coef_is_exact_zero(a[-1]):
        a = a[:-1]
    return list(a)


def _u_deg(a) -> int:
    return len(a) - 1


def _u_add(a, b):
    n = max(len(a), len(b))
    out = []
    for k in range(n):
        x = a[k] if k < len(a) else QI(0)
        y = b[k] if k < len(b) else QI(0)
        out.append(x + y)
    return _u_trim(out)


def _u_neg(a):
    return [-x for x in a]

def _u_scale(a, c):
    return _u_trim([x * c for x in a])


def _u_mul(a, b):
    if not a or not b:
        return []
    out = [QI(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _u_trim(out)


def _u_divmod(a, b):
    """Division over the field Q(i); b must be nonzero."""
    a = _u_trim(a)
    b = _u_trim(b)
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    q = [QI(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    inv = QI(1) / b[-1]
    while len(r) >= len(b) and r:
        k = len(r) - len(b)
        c = r[-1] * inv
        q[k] = c
        for j in range(len(b)):
            r[k + j] = r[k + j] - c * b[j]
        r = _u_trim(r)
        if not r:
            break
    return _u_trim(q), _u_trim(r)


def _u_gcd(a, b):
    """Monic gcd over Q(i)."""
    a, b = _u_trim(a), _u_trim(b)
    while b:
        _, r = _u_divmod(a, b)
        a, b = b, r
    if a:
        a = _u_scale(a, QI(1) / a[-1])
    return a


def _u_derivative(a):
    return _u_trim([a[k] * k for k in range(1, len(a))])


def _u_eval(a, x):
    acc = QI(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------
# exact bivariate helpers: dense in w with Q(i)[z] coefficients


def _b_from_multipoly(p: MultiPoly):
    """Dense-in-w representation [c_0(z), ..., c_B(z)] with zpoly coefficients."""
    degw = p.degree_in(1)
    out = [[] for _ in range(degw + 1)]
    for (a, b), c in p.terms.items():
        col = out[b]
        while len(col) <= a:
            col.append(QI(0))
        col[a] = col[a] + c
    return [_u_trim(col) for col in out]


def _b_to_multipoly(bp, names=("z", "w")) -> MultiPoly:
    terms = {}
    for b, col in enumerate(bp):
        for a, c in enumerate(col):
            if not _coef_is_exact_zero(c):
                terms[(a, b)] = c
    return MultiPoly(2, terms, names)


def _b_trim(bp):
    while bp and not bp[-1]:
        bp = bp[:-1]
    return list(bp)


def _b_degw(bp) -> int:
    return len(bp) - 1


def _b_content(bp):
    g = []
    for col in bp:
        if col:
            g = _u_gcd(g, col)
            if _u_deg(g) == 0 and g:
                return g
    return g if g else []


def _b_primitive(bp):
    bp = _b_trim(bp)
    if not bp:
        return [], []
    cont = _b_content(bp)
    if not cont:
        return [], []
    if _u_deg(cont) == 0 and cont[0] == QI(1):
        return cont, bp
    prim = []
    for col in bp:
        if not col:
            prim.append([])
        else:
            q, r = _u_divmod(col, cont)
            if r:
                raise AssertionError("content division left a remainder")
            prim.append(q)
    return cont, prim


def _b_mul_z(bp, zpoly):
    return [_u_mul(col, zpoly) if col else [] for col in bp]


def _b_sub(a, b):
    n = max(len(a), len(b))
    out = []
    for k in range(n):
        x = a[k] if k < len(a) else []
        y = b[k] if k < len(b) else []
        out.append(_u_add(x, _u_neg(y)))
    return _b_trim(out)


def _b_pseudo_rem(a, b):
    """Pseudo-remainder of a by b in w over Q(i)[z]."""
    a = _b_trim(a)
    b = _b_trim(b)
    if not b:
        raise ZeroDivisionError("bivariate pseudo-division by zero")
    lb = b[-1]
    da, db = _b_degw(a), _b_degw(b)
    r = [list(col) for col in a]
    while r and _b_degw(r) >= db:
        k = _b_degw(r) - db
        lead = r[-1]
        r = _b_mul_z(r[:-1], lb)
        sub = [_u_mul(col, lead) for col in b[:-1]]
        shifted = [[] for _ in range(k)] + sub
        r = _b_sub(r, shifted)
    return _b_trim(r)


def _b_gcd(a, b):
    """Primitive gcd in (Q(i)[z])[w] via a primitive pseudo-remainder sequence."""
    a, b = _b_trim(a), _b_trim(b)
    if not a:
        return _b_primitive(b)[1]
    if not b:
        return _b_primitive(a)[1]
    _, a = _b_primitive(a)
    _, b = _b_primitive(b)
    if _b_degw(a) < _b_degw(b):
        a, b = b, a
    while True:
        r = _b_pseudo_rem(a, b)
        if not r:
            break
        _, r = _b_primitive(r)
        a, b = b, r
        if _b_degw(b) == 0:
            # a nonzero constant-in-w remainder: gcd is a z-poly (unit for us)
            return [[QI(1)]]
    # normalize: primitive with monic top z-coefficient
    lead = b[-1]
    b = [_u_scale(col, QI(1) / lead[-1]) for col in b]
    return b


def _b_exact_div(a, b):
    """Exact division a / b in (Q(i)[z])[w]; raises if not divisible."""
    a, b = _b_trim(a), _b_trim(b)
    if not b:
        raise ZeroDivisionError
    if not a:
        return []
    da, db = _b_degw(a), _b_degw(b)
    if da < db:
        raise AssertionError("not divisible (degree)")
    lb = b[-1]
    q = [[] for _ in range(da - db + 1)]
    r = [list(col) for col in a]
    for k in range(da - db, -1, -1):
        r = _b_trim(r)
        if not r or _b_degw(r) < db + k:
            q[k] = []
            continue
        lead = r[-1]
        qk, rem = _u_divmod(lead, lb)
        if rem:
            raise AssertionError("not divisible (leading coefficient)")
        q[k] = qk
        shifted = [[] for _ in range(k)] + [_u_mul(col, qk) for col in b]
        r = _b_sub(r, shifted)
    r = _b_trim(r)
    if r:
        raise AssertionError("not divisible (remainder)")
    return _b_trim(q)


def _b_diff_w(bp):
    return _b_trim([_u_scale(bp[k], QI(k)) for k in range(1, len(bp))])


def w_squarefree_decomposition(p: MultiPoly):
    """Musser squarefree decomposition in w over Q(i)[z].

    Returns [(factor, multiplicity)] with each factor primitive in z and the
    product of factor^multiplicity equal to p up to a z-unit content.  Only
    available in the exact backend; float callers should treat their input as
    squarefree.
    """
    if p.backend != "exact":
        return [(p, 1)]
    bp = _b_from_multipoly(p)
    _, bp = _b_primitive(bp)
    if _b_degw(bp) == 0:
        return []
    d = _b_diff_w(bp)
    T = _b_gcd(bp, d)
    if _b_degw(T) == 0:
        return [(_b_to_multipoly(bp, p.names), 1)]
    V = _b_exact_div(bp, T)
    out = []
    k = 0
    while _b_degw(V) > 0:
        k += 1
        W = _b_gcd(T, V)
        Ak = _b_exact_div(V, W)
        if _b_degw(Ak) > 0:
            out.append((_b_to_multipoly(Ak, p.names), k))
        V = W
        T = _b_exact_div(T, W)
    return out
