"""Exception types shared across the package.

Every error carries a short machine-readable ``code`` so the command line
surface can map failures onto stable exit codes without string matching.
"""

from __future__ import annotations


class StablePolyError(Exception):
    """Base class for all package errors."""

    code = "error"


class InputError(StablePolyError):
    """Malformed user input (parse failures, bad dimensions, bad flags)."""

    code = "input"


class DimMismatch(InputError):
    code = "dim-mismatch"


class ZeroPolynomial(InputError):
    code = "zero-polynomial"


class NonzeroConstantTerm(InputError):
    """Series operation requires valuation >= 1 but the constant term is not 0."""

    code = "nonzero-constant-term"


class BadConstantTerm(InputError):
    """Series operation requires constant term 1 (log, n-th root) or a unit."""

    code = "bad-constant-term"


class NotNormalized(InputError):
    """Series reversion requires f(0) = 0 and f'(0) = 1."""

    code = "not-normalized"


class NotWGeneral(InputError):
    """p(0, w) vanishes identically; the caller must apply a linear change first."""

    code = "not-w-general"


class NotNonBasic(InputError):
    """build_L needs a normalized branch with valuation 2M and leading coefficient i."""

    code = "not-non-basic"


class ZeroGradient(InputError):
    """Smooth-point classification requires a nonzero gradient at the origin."""

    code = "zero-gradient"


class NotSymmetric(InputError):
    code = "not-symmetric"


class NotRowContraction(InputError):
    code = "not-row-contraction"


class NoBranchThroughOne(InputError):
    """The algebraic-avoidance check needs a function branch with f(0) = 1."""

    code = "no-branch-through-one"


class BoundViolated(InputError):
    """A constructor coefficient falls outside its certified stability range."""

    code = "bound-violated"


class UnsettledCase(StablePolyError):
    """The classification is sound but no admissible ideal description is certified."""

    code = "unsettled"


class NotInjective(UnsettledCase):
    """The branch parametrization traces its image more than once."""

    code = "not-injective"


class InsufficientOrder(UnsettledCase):
    """Truncation order too small to settle the question.

    ``needs_order`` is a hint for re-expansion; pipelines double the order until
    a configured cap and then report the case as inconclusive.
    """

    code = "insufficient-order"

    def __init__(self, message: str, needs_order: int | None = None):
        super().__init__(message)
        self.needs_order = needs_order


class NumericalDegeneracy(StablePolyError):
    """A float-backend computation lost too much accuracy to certify anything."""

    code = "numerical-degeneracy"


class WitnessSearchFailed(NumericalDegeneracy):
    code = "witness-search-failed"


class DegenerateFit(NumericalDegeneracy):
    """Least-squares exponent fit rejected (curvature or spread out of range)."""

    code = "degenerate-fit"
