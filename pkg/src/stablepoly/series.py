"""Truncated formal power series over exact or float complex scalars.

A :class:`TruncSeries` stores coefficients a_0..a_N and the truncation order N,
meaning the represented function is known modulo t^(N+1).  Binary operations
truncate at the minimum of the operand orders; composition f(g) truncates at
min(order(f) * valuation(g), order(g)).  Multiplying by a power of t raises
the order accordingly since that is genuine knowledge, but nothing ever pads
unknown coefficients with silent zeros.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import BadConstantTerm, DimMismatch, NonzeroConstantTerm, NotNormalized
from .scalars import (
    DEFAULT_TOL,
    QI,
    as_scalar,
    imag_part,
    is_exact,
    is_zero,
    real_part,
    scalar_from_json,
    scalar_to_json,
    to_complex,
)


def _coerce_coeffs(coeffs):
    vals = [as_scalar(c) for c in coeffs]
    if any(isinstance(v, complex) for v in vals):
        vals = [to_complex(v) for v in vals]
    return tuple(vals)


class TruncSeries:
    """A power series in one variable truncated at a known order."""

    __slots__ = ("coeffs", "order", "var")

    def __init__(self, coeffs, order=None, var="t"):
        coeffs = _coerce_coeffs(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        if len(coeffs) < order + 1:
            zero = QI(0) if all(isinstance(c, QI) for c in coeffs) else 0j
            coeffs = coeffs + (zero,) * (order + 1 - len(coeffs))
        else:
            coeffs = coeffs[: order + 1]
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, order, var="t", exact=True):
        z = QI(0) if exact else 0j
        return cls((z,) * (order + 1), order, var)

    @classmethod
    def one(cls, order, var="t", exact=True):
        z = QI(0) if exact else 0j
        o = QI(1) if exact else 1 + 0j
        return cls((o,) + (z,) * order, order, var)

    @classmethod
    def identity(cls, order, var="t", exact=True):
        return cls.monomial(1, QI(1) if exact else 1 + 0j, order, var)

    @classmethod
    def monomial(cls, k, coef, order, var="t"):
        coef = as_scalar(coef)
        zero = QI(0) if is_exact(coef) else 0j
        coeffs = [zero] * (order + 1)
        if k <= order:
            coeffs[k] = coef
        return cls(coeffs, order, var)

    @classmethod
    def from_pairs(cls, pairs, order, var="t", exact=True):
        """Build from (exponent, coefficient) pairs."""
        zero = QI(0) if exact else 0j
        coeffs = [zero] * (order + 1)
        for k, c in pairs:
            if k <= order:
                coeffs[k] = coeffs[k] + as_scalar(c)
        return cls(coeffs, order, var)

    # -- basic structure --------------------------------------------------
    @property
    def backend(self) -> str:
        return "exact" if all(isinstance(c, QI) for c in self.coeffs) else "float"

    def coeff(self, j):
        if j < 0:
            raise IndexError("negative exponent")
        if j > self.order:
            raise IndexError(f"coefficient t^{j} beyond truncation order {self.order}")
        return self.coeffs[j]

    def __getitem__(self, j):
        return self.coeff(j)

    def _scale(self) -> float:
        if self.backend == "exact":
            return 1.0
        mags = [abs(c) for c in self.coeffs]
        return max(mags) if mags else 1.0

    def valuation(self, tol: float = DEFAULT_TOL):
        """Smallest exponent with a nonzero coefficient, or None if all vanish."""
        scale = self._scale()
        for j, c in enumerate(self.coeffs):
            if not is_zero(c, tol, scale):
                return j
        return None

    def is_zero(self, tol: float = DEFAULT_TOL) -> bool:
        return self.valuation(tol) is None

    def leading(self, tol: float = DEFAULT_TOL):
        v = self.valuation(tol)
        if v is None:
            return None, None
        return v, self.coeffs[v]

    def truncate(self, order) -> "TruncSeries":
        order = min(order, self.order)
        return TruncSeries(self.coeffs[: order + 1], order, self.var)

    def with_var(self, var) -> "TruncSeries":
        return TruncSeries(self.coeffs, self.order, var)

    def to_float(self) -> "TruncSeries":
        return TruncSeries([to_complex(c) for c in self.coeffs], self.order, self.var)

    def pad_zero(self, order) -> "TruncSeries":
        """Extend with exact zeros; only sound for polynomials known exactly."""
        if order <= self.order:
            return self
        zero = QI(0) if self.backend == "exact" else 0j
        return TruncSeries(self.coeffs + (zero,) * (order - self.order), order, self.var)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def agrees_with(self, other: "TruncSeries", through=None, tol: float = DEFAULT_TOL) -> bool:
        if through is None:
            through = min(self.order, other.order)
        if through > min(self.order, other.order):
            raise ValueError("comparison order exceeds certified orders")
        scale = max(self._scale(), other._scale())
        return all(
            is_zero(self.coeffs[j] - other.coeffs[j], tol, scale) for j in range(through + 1)
        )

    # -- ring operations ---------------------------------------------------
    def __add__(self, other):
        if isinstance(other, TruncSeries):
            n = min(self.order, other.order)
            return TruncSeries(
                [self.coeffs[j] + other.coeffs[j] for j in range(n + 1)], n, self.var
            )
        other = as_scalar(other)
        coeffs = list(self.coeffs)
        coeffs[0] = coeffs[0] + other
        return TruncSeries(coeffs, self.order, self.var)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.order, self.var)

    def __sub__(self, other):
        if isinstance(other, TruncSeries):
            return self + (-other)
        return self + (-as_scalar(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            n = min(self.order, other.order)
            a, b = self.coeffs, other.coeffs
            out = []
            for k in range(n + 1):
                s = a[0] * b[k]
                for j in range(1, k + 1):
                    s = s + a[j] * b[k - j]
                out.append(s)
            return TruncSeries(out, n, self.var)
        other = as_scalar(other)
        return TruncSeries([c * other for c in self.coeffs], self.order, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("series powers take nonnegative integer exponents")
        out = TruncSeries.one(self.order, self.var, exact=self.backend == "exact")
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by t^k (k >= 0); the order rises by k."""
        if k < 0:
            raise ValueError("use divide_t_power for negative shifts")
        zero = QI(0) if self.backend == "exact" else 0j
        return TruncSeries((zero,) * k + self.coeffs, self.order + k, self.var)

    def divide_t_power(self, k: int, tol: float = DEFAULT_TOL) -> "TruncSeries":
        """Divide by t^k; requires the low coefficients to vanish."""
        scale = self._scale()
        for j in range(min(k, self.order + 1)):
            if not is_zero(self.coeffs[j], tol, scale):
                raise NonzeroConstantTerm(
                    f"series is not divisible by {self.var}^{k}: coefficient at {self.var}^{j} is nonzero"
                )
        if k > self.order:
            raise ValueError("cannot divide beyond the truncation order")
        return TruncSeries(self.coeffs[k:], self.order - k, self.var)

    def inverse(self, tol: float = DEFAULT_TOL) -> "TruncSeries":
        """Multiplicative inverse; requires an invertible constant term."""
        a0 = self.coeffs[0]
        if is_zero(a0, tol, self._scale()):
            raise BadConstantTerm("cannot invert a series with zero constant term")
        n = self.order
        inv0 = (QI(1) if isinstance(a0, QI) else 1 + 0j) / a0
        out = [inv0]
        for k in range(1, n + 1):
            s = self.coeffs[1] * out[k - 1]
            for j in range(2, k + 1):
                s = s + self.coeffs[j] * out[k - j]
            out.append(-inv0 * s)
        return TruncSeries(out, n, self.var)

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return self * other.inverse()
        other = as_scalar(other)
        return TruncSeries([c / other for c in self.coeffs], self.order, self.var)

    # -- calculus ----------------------------------------------------------
    def derivative(self) -> "TruncSeries":
        if self.order == 0:
            zero = QI(0) if self.backend == "exact" else 0j
            return TruncSeries((zero,), 0, self.var)
        return TruncSeries(
            [self.coeffs[j] * j for j in range(1, self.order + 1)], self.order - 1, self.var
        )

    def antiderivative(self) -> "TruncSeries":
        zero = QI(0) if self.backend == "exact" else 0j
        out = [zero] + [self.coeffs[j] / (j + 1) for j in range(self.order + 1)]
        return TruncSeries(out, self.order + 1, self.var)

    # -- composition and friends --------------------------------------------
    def compose(self, g: "TruncSeries", tol: float = DEFAULT_TOL) -> "TruncSeries":
        """f(g) for g with valuation >= 1, truncated per the min rule."""
        gval = g.valuation(tol)
        if gval == 0:
            raise NonzeroConstantTerm("composition needs inner valuation >= 1")
        if gval is None:
            n = g.order
            c0 = self.coeffs[0]
            return TruncSeries.monomial(0, c0, n, g.var)
        n = min(self.order * gval, g.order)
        return _compose_at(self, g, n)

    def exp(self, tol: float = DEFAULT_TOL) -> "TruncSeries":
        """exp(f) - requires valuation >= 1 so the constant term is forced to 1."""
        if not is_zero(self.coeffs[0], tol, self._scale()):
            raise NonzeroConstantTerm("exp needs a series with zero constant term")
        n = self.order
        exact = self.backend == "exact"
        one = QI(1) if exact else 1 + 0j
        out = [one]
        for k in range(1, n + 1):
            s = self.coeffs[1] * out[k - 1]
            for j in range(2, k + 1):
                s = s + self.coeffs[j] * out[k - j] * j
            out.append(s / k)
        return TruncSeries(out, n, self.var)

    def log(self, tol: float = DEFAULT_TOL) -> "TruncSeries":
        """log(f) for f with constant term 1."""
        c0 = self.coeffs[0]
        if not is_zero(c0 - (QI(1) if isinstance(c0, QI) else 1.0), tol, self._scale()):
            raise BadConstantTerm("log needs constant term 1")
        n = self.order
        # l' = f'/f integrated termwise keeps the order at n.
        quotient = self.derivative() * self.truncate(n - 1).inverse() if n >= 1 else None
        if quotient is None:
            return TruncSeries.zero(0, self.var, exact=self.backend == "exact")
        return quotient.antiderivative()

    def nth_root(self, n: int, tol: float = DEFAULT_TOL) -> "TruncSeries":
        """The n-th root with constant term 1."""
        c0 = self.coeffs[0]
        if not is_zero(c0 - (QI(1) if isinstance(c0, QI) else 1.0), tol, self._scale()):
            raise BadConstantTerm("nth_root needs constant term 1")
        if n <= 0:
            raise ValueError("root index must be positive")
        lg = self.log(tol)
        scaled = TruncSeries([c / n for c in lg.coeffs], lg.order, self.var)
        return scaled.exp(tol)

    def reversion(self, tol: float = DEFAULT_TOL) -> "TruncSeries":
        """Compositional inverse of f = t + O(t^2), by Newton iteration."""
        if self.order < 1:
            raise NotNormalized("reversion needs order >= 1")
        scale = self._scale()
        one = self.coeffs[1]
        if not is_zero(self.coeffs[0], tol, scale) or not is_zero(
            one - (QI(1) if isinstance(one, QI) else 1.0), tol, scale
        ):
            raise NotNormalized("reversion needs f(0) = 0 and f'(0) = 1")
        n = self.order
        exact = self.backend == "exact"
        g = TruncSeries.identity(1, self.var, exact=exact)
        fprime = self.derivative()
        while g.order < n:
            m = min(2 * g.order + 1, n)
            g_ext = g.pad_zero(m)
            fg = _compose_at(self, g_ext, m)
            resid = fg - TruncSeries.identity(m, self.var, exact=exact)
            deriv = _compose_at(fprime, g_ext, m)
            g = g_ext - resid * deriv.inverse(tol)
        return g.with_var(self.var)

    def reversion_lagrange(self, tol: float = DEFAULT_TOL) -> "TruncSeries":
        """Compositional inverse via the Lagrange coefficient formula.

        [s^n] f^(-1) = (1/n) [t^(n-1)] (t / f(t))^n.  Kept separate from
        :meth:`reversion` so the two routes can cross-check each other.
        """
        scale = self._scale()
        one = self.coeffs[1] if self.order >= 1 else None
        if one is None or not is_zero(self.coeffs[0], tol, scale) or not is_zero(
            one - (QI(1) if isinstance(one, QI) else 1.0), tol, scale
        ):
            raise NotNormalized("reversion needs f(0) = 0 and f'(0) = 1")
        n = self.order
        exact = self.backend == "exact"
        h = self.divide_t_power(1, tol).inverse(tol)  # t/f(t), order n-1
        out = [QI(0) if exact else 0j]
        power = TruncSeries.one(n - 1, self.var, exact=exact)
        for k in range(1, n + 1):
            power = power * h
            if k - 1 <= power.order:
                out.append(power.coeffs[k - 1] / k)
            else:
                out.append(QI(0) if exact else 0j)
        return TruncSeries(out, n, self.var)

    # -- evaluation ----------------------------------------------------------
    def eval(self, x):
        """Horner evaluation; exact when both the series and x are exact."""
        x = as_scalar(x)
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def eval_complex(self, x: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * x + to_complex(c)
        return acc

    def radius_estimate(self) -> float:
        """Crude convergence-radius estimate 1 / max_j |a_j|^(1/j)."""
        best = 0.0
        for j in range(1, self.order + 1):
            m = abs(to_complex(self.coeffs[j]))
            if m > 0:
                best = max(best, m ** (1.0 / j))
        if best == 0.0:
            return 1.0
        return min(1.0 / best, 1.0)

    # -- io -------------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "var": self.var,
            "order": self.order,
            "coeffs": [scalar_to_json(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, d: dict) -> "TruncSeries":
        return cls([scalar_from_json(c) for c in d["coeffs"]], d["order"], d.get("var", "t"))

    def __str__(self):
        from .scalars import format_scalar

        parts = []
        for j, c in enumerate(self.coeffs):
            if is_zero(c, scale=self._scale()):
                continue
            cs = format_scalar(c)
            if j == 0:
                parts.append(cs)
            else:
                mono = self.var if j == 1 else f"{self.var}^{j}"
                if cs == "1":
                    parts.append(mono)
                elif cs == "-1":
                    parts.append(f"-{mono}")
                else:
                    wrapped = f"({cs})" if (" " in cs or "/" in cs) else cs
                    parts.append(f"{wrapped}*{mono}")
        body = " + ".join(parts).replace("+ -", "- ") if parts else "0"
        return f"{body} + O({self.var}^{self.order + 1})"

    def __repr__(self):
        return f"TruncSeries({list(self.coeffs)!r}, order={self.order})"


def _compose_at(f: TruncSeries, g: TruncSeries, order: int) -> TruncSeries:
    """Horner composition f(g) truncated at a caller-chosen working order."""
    exact = f.backend == "exact" and g.backend == "exact"
    g = g.truncate(order) if g.order > order else g.pad_zero(order)
    acc = TruncSeries.monomial(0, f.coeffs[-1], order, g.var)
    for c in reversed(f.coeffs[:-1]):
        acc = acc * g + c
    if exact and acc.backend != "exact":  # pragma: no cover - sanity
        raise AssertionError("exact composition left Q(i)")
    return acc


# ---------------------------------------------------------------------------
# module-level aliases matching the operation names used elsewhere


def compose(f: TruncSeries, g: TruncSeries, tol: float = DEFAULT_TOL) -> TruncSeries:
    return f.compose(g, tol)


def exp_series(f: TruncSeries, tol: float = DEFAULT_TOL) -> TruncSeries:
    return f.exp(tol)


def log_series(f: TruncSeries, tol: float = DEFAULT_TOL) -> TruncSeries:
    return f.log(tol)


def nth_root_series(f: TruncSeries, n: int, tol: float = DEFAULT_TOL) -> TruncSeries:
    return f.nth_root(n, tol)


def reversion(f: TruncSeries, tol: float = DEFAULT_TOL) -> TruncSeries:
    return f.reversion(tol)


def reversion_lagrange(f: TruncSeries, tol: float = DEFAULT_TOL) -> TruncSeries:
    return f.reversion_lagrange(tol)


def series_real_part(f: TruncSeries) -> TruncSeries:
    return TruncSeries([as_scalar(real_part(c)) for c in f.coeffs], f.order, f.var)


def series_imag_part(f: TruncSeries) -> TruncSeries:
    return TruncSeries([as_scalar(imag_part(c)) for c in f.coeffs], f.order, f.var)
