"""Scalar arithmetic with two backends.

The exact backend works in the Gaussian rationals Q(i) via :class:`QI`
(a pair of ``fractions.Fraction`` parts).  The float backend is the builtin
``complex``.  Arithmetic mixes freely: any operation touching a float demotes
the result to ``complex``, so series and polynomial code can stay agnostic.

:class:`Unimodular` represents unit-modulus constants u * exp(i*pi*q) with u
a Gaussian rational and q rational.  It keeps branch rotation factors such as
exp(i*pi/4) exact even though they live outside Q(i).
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from numbers import Rational

DEFAULT_TOL = 1e-9

_RationalLike = (int, Fraction)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot build an exact rational from {x!r}")


class QI:
    """Gaussian rational re + im*i with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("QI is immutable")

    # -- conversions ---------------------------------------------------
    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __repr__(self) -> str:
        return f"QI({self.re!r}, {self.im!r})"

    def __str__(self) -> str:
        return format_scalar(self)

    # -- structure -----------------------------------------------------
    def conjugate(self) -> "QI":
        return QI(self.re, -self.im)

    def abs2(self) -> Fraction:
        """|x|^2 as an exact rational."""
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return math.sqrt(float(self.abs2()))

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __eq__(self, other):
        if isinstance(other, QI):
            return self.re == other.re and self.im == other.im
        if isinstance(other, _RationalLike):
            return self.im == 0 and self.re == other
        if isinstance(other, (float, complex)):
            return complex(self) == complex(other)
        return NotImplemented

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, QI):
            return QI(self.re + other.re, self.im + other.im)
        if isinstance(other, _RationalLike):
            return QI(self.re + other, self.im)
        if isinstance(other, (float, complex)):
            return complex(self) + other
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return QI(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, (QI, *_RationalLike)):
            return self + (-other if isinstance(other, QI) else QI(-_as_fraction(other)))
        if isinstance(other, (float, complex)):
            return complex(self) - other
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, _RationalLike):
            return QI(other - self.re, -self.im)
        if isinstance(other, (float, complex)):
            return other - complex(self)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, QI):
            return QI(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, _RationalLike):
            return QI(self.re * other, self.im * other)
        if isinstance(other, (float, complex)):
            return complex(self) * other
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, QI):
            d = other.abs2()
            if d == 0:
                raise ZeroDivisionError("division by zero Gaussian rational")
            num = self * other.conjugate()
            return QI(num.re / d, num.im / d)
        if isinstance(other, _RationalLike):
            return QI(self.re / other, self.im / other)
        if isinstance(other, (float, complex)):
            return complex(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, _RationalLike):
            return QI(other) / self
        if isinstance(other, (float, complex)):
            return other / complex(self)
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return QI(1) / self ** (-n)
        out = QI(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out


QI_ZERO = QI(0)
QI_ONE = QI(1)
QI_I = QI(0, 1)


# ---------------------------------------------------------------------------
# backend helpers


def is_exact(x) -> bool:
    return isinstance(x, (QI, *_RationalLike))


def as_scalar(x):
    """Coerce a user-supplied value into a backend scalar (QI or complex)."""
    if isinstance(x, QI):
        return x
    if isinstance(x, _RationalLike):
        return QI(x)
    if isinstance(x, Rational):
        return QI(Fraction(x))
    if isinstance(x, (float, complex)):
        return complex(x)
    raise TypeError(f"unsupported scalar {x!r}")


def to_complex(x) -> complex:
    return complex(x)


def is_zero(x, tol: float = DEFAULT_TOL, scale: float = 1.0) -> bool:
    """Zero test: exact for QI, relative tolerance for floats."""
    if isinstance(x, QI):
        return not x
    if isinstance(x, _RationalLike):
        return x == 0
    return abs(x) <= tol * max(scale, 1.0)


def real_part(x):
    if isinstance(x, QI):
        return x.re
    if isinstance(x, _RationalLike):
        return _as_fraction(x)
    return complex(x).real


def imag_part(x):
    if isinstance(x, QI):
        return x.im
    if isinstance(x, _RationalLike):
        return Fraction(0)
    return complex(x).imag


def conj(x):
    if isinstance(x, QI):
        return x.conjugate()
    if isinstance(x, _RationalLike):
        return QI(x)
    return complex(x).conjugate()


def abs2(x):
    if isinstance(x, QI):
        return x.abs2()
    if isinstance(x, _RationalLike):
        return Fraction(x) ** 2
    z = complex(x)
    return z.real * z.real + z.imag * z.imag


def rational_sqrt(q: Fraction):
    """Exact square root of a nonnegative rational, or None if irrational."""
    if q < 0:
        return None
    if q == 0:
        return Fraction(0)
    num, den = q.numerator, q.denominator
    rn = math.isqrt(num)
    rd = math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def qi_sqrt(x: QI):
    """Exact square root inside Q(i), or None when no such root exists."""
    r2 = rational_sqrt(x.abs2())
    if r2 is None:
        return None
    # (a+bi)^2 = x  gives  a^2 = (|x| + re)/2, b^2 = (|x| - re)/2.
    a2 = (r2 + x.re) / 2
    b2 = (r2 - x.re) / 2
    a = rational_sqrt(a2)
    b = rational_sqrt(b2)
    if a is None or b is None:
        return None
    if x.im < 0:
        b = -b
    cand = QI(a, b)
    if cand * cand == x:
        return cand
    return None


def qi_snap(z: complex, max_den: int = 10**9):
    """Nearest Gaussian rational with small denominator (caller must verify)."""
    return QI(
        Fraction(z.real).limit_denominator(max_den),
        Fraction(z.imag).limit_denominator(max_den),
    )


def qi_nth_root(x: QI, n: int):
    """Exact n-th root of x in Q(i) when one exists (float probe + exact check)."""
    if n == 1:
        return x
    if not x:
        return QI_ZERO
    if n == 2:
        return qi_sqrt(x)
    zf = complex(x)
    base = abs(zf) ** (1.0 / n)
    theta = cmath.phase(zf) / n
    for k in range(n):
        cand = qi_snap(base * cmath.exp(1j * (theta + 2 * math.pi * k / n)))
        if cand**n == x:
            return cand
    return None


# ---------------------------------------------------------------------------
# unit-modulus constants


def _half_turn_power(q: Fraction):
    """exp(i*pi*q) as an exact QI when q is a multiple of 1/2, else None."""
    twice = 2 * q
    if twice.denominator != 1:
        return None
    return (QI_I ** (twice.numerator % 4))


class Unimodular:
    """Unit-modulus constant u * exp(i*pi*q).

    u is a Gaussian rational of modulus 1 (or a complex float in the float
    backend) and q is a rational number of half-turns, reduced mod 2.  Exact
    quarter-turn factors are folded into u so the representation is canonical.
    """

    __slots__ = ("u", "q")

    def __init__(self, u=QI_ONE, q=Fraction(0)):
        q = _as_fraction(q) % 2
        u = as_scalar(u)
        if isinstance(u, complex):
            u = u * cmath.exp(1j * math.pi * float(q))
            q = Fraction(0)
        else:
            folded = _half_turn_power(q)
            if folded is not None:
                u = u * folded
                q = Fraction(0)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "q", q)

    def __setattr__(self, name, value):
        raise AttributeError("Unimodular is immutable")

    @classmethod
    def one(cls) -> "Unimodular":
        return cls(QI_ONE)

    @classmethod
    def from_half_turns(cls, q) -> "Unimodular":
        return cls(QI_ONE, q)

    @classmethod
    def from_scalar(cls, x) -> "Unimodular":
        """Wrap a scalar that is already unit modulus."""
        x = as_scalar(x)
        if isinstance(x, QI):
            if x.abs2() != 1:
                raise ValueError("not unit modulus")
            return cls(x)
        if abs(abs(x) - 1.0) > 1e-8:
            raise ValueError("not unit modulus")
        return cls(x)

    @property
    def is_exact(self) -> bool:
        return isinstance(self.u, QI)

    def to_complex(self) -> complex:
        if isinstance(self.u, QI):
            return complex(self.u) * cmath.exp(1j * math.pi * float(self.q))
        return self.u

    def exact_qi(self):
        """The value as a QI when it lies in Q(i), else None."""
        if not isinstance(self.u, QI):
            return None
        if self.q == 0:
            return self.u
        folded = _half_turn_power(self.q)
        if folded is None:
            return None
        return self.u * folded

    def conjugate(self) -> "Unimodular":
        return Unimodular(conj(self.u), -self.q)

    def __mul__(self, other):
        if isinstance(other, Unimodular):
            return Unimodular(self.u * other.u, self.q + other.q)
        return NotImplemented

    def __pow__(self, n: int) -> "Unimodular":
        if not isinstance(n, int):
            return NotImplemented
        if isinstance(self.u, QI):
            return Unimodular(self.u**n, self.q * n)
        return Unimodular(self.u**n)

    def scalar_power(self, n: int):
        """self**n as a plain scalar: QI when exact, complex otherwise."""
        p = self**n
        exact = p.exact_qi()
        return exact if exact is not None else p.to_complex()

    def __eq__(self, other):
        if isinstance(other, Unimodular):
            if self.is_exact and other.is_exact:
                return self.u == other.u and self.q == other.q
            return abs(self.to_complex() - other.to_complex()) < 1e-12
        return NotImplemented

    def __hash__(self):
        return hash((self.u if self.is_exact else round(self.to_complex().real, 12), self.q))

    def __repr__(self):
        if self.q == 0:
            return f"Unimodular({self.u!r})"
        return f"Unimodular({self.u!r}, q={self.q})"

    def __str__(self):
        if self.q == 0:
            return format_scalar(self.u)
        base = "" if self.u == QI_ONE else format_scalar(self.u) + "*"
        return f"{base}exp(i*pi*{self.q})"


# ---------------------------------------------------------------------------
# formatting and JSON


def _format_fraction(f: Fraction) -> str:
    return str(f)


def format_scalar(x) -> str:
    """Short human-readable form like '1/2 + 3i' or '0.25-0.5i'."""
    if isinstance(x, _RationalLike):
        x = QI(x)
    if isinstance(x, QI):
        if not x.im:
            return _format_fraction(x.re)
        im = _format_fraction(abs(x.im))
        im_part = "i" if im == "1" else f"{im}i"
        sign = "-" if x.im < 0 else "+"
        if not x.re:
            return im_part if x.im > 0 else f"-{im_part}"
        return f"{_format_fraction(x.re)} {sign} {im_part}"
    z = complex(x)
    if z.imag == 0:
        return repr(z.real)
    if z.real == 0:
        return f"{z.imag!r}i"
    sign = "-" if z.imag < 0 else "+"
    return f"{z.real!r} {sign} {abs(z.imag)!r}i"


def scalar_to_json(x) -> dict:
    """Serialize as {'re': ..., 'im': ...}; rationals become 'p/q' strings."""
    if isinstance(x, _RationalLike):
        x = QI(x)
    if isinstance(x, QI):
        return {"re": str(x.re), "im": str(x.im)}
    z = complex(x)
    return {"re": z.real, "im": z.imag}


def scalar_from_json(d: dict):
    re, im = d.get("re", 0), d.get("im", 0)
    if isinstance(re, str) or isinstance(im, str):
        return QI(Fraction(str(re)), Fraction(str(im)))
    if isinstance(re, int) and isinstance(im, int):
        return QI(re, im)
    return complex(float(re), float(im))
