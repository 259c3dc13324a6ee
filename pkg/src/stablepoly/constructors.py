"""Factories for the example families and the parametrization machinery.

Contents:

* make_param / param_to_branch: build the curve (c s^M e^{M L(s)},
  i s^(2M) + 2Mi Int s^(2M) L'(s) ds) from a polynomial L and convert it to
  a normalized Puiseux branch.
* family_Pc, family_Qc: the quadratic and quartic one-parameter families
  w - iw^2 - 2ci z^2 and w - 3iw^2 - 3w^3 + iw^4 + 8ci z^4, with the
  stability thresholds exposed as constants.
* rudin_poly: ball polynomials 1 - z2 - sum g_k z1^(2k) that stay zero-free
  on the ball when |g_k| does not exceed the central binomial bounds.
* quadratic_form_poly: 1 - z^T A z for symmetric A, with a Takagi
  factorization A = U D U^T and the induced Siegel model iw - sum D_j z_j^2.
* rowdet_poly / rowdet_factor: determinantal polynomials det(I - sum z_j A_j)
  from row contractions, and the peeling of boundary-zero factors
  (1 - <z, zeta>).
* one_variable_lift: compose a univariate polynomial with
  tau = d^(d/2) z_1 ... z_d.
* check_algebraic_L: the three necessary conditions for e^L to be an
  algebraic function arising from a stable-polynomial branch, including the
  expansion of f'(1/s)/f(1/s) at infinity on every continuation branch.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .classify import classify_branch, decompose_L
from .errors import (
    BoundViolated,
    InputError,
    NoBranchThroughOne,
    NotRowContraction,
    NotSymmetric,
    NumericalDegeneracy,
)
from .multipoly import MultiPoly, transport_ball_to_siegel
from .puiseux import PuiseuxBranch, _hensel_solve, _np_branches, branch_is_injective, normalize_branch
from .scalars import (
    DEFAULT_TOL,
    QI,
    QI_I,
    Unimodular,
    as_scalar,
    is_exact,
    is_zero,
    to_complex,
)
from .series import TruncSeries


# ---------------------------------------------------------------------------
# parametrized avoidance curves


@dataclass(frozen=True)
class ParamCurve:
    """The curve z = c s^M e^{M L(s)}, w = i s^(2M) + 2Mi Int s^(2M) L'."""

    M: int
    c: Unimodular
    L: TruncSeries
    z_series: TruncSeries
    w_series: TruncSeries
    order: int
    condition: str | None  # "curve" | "isolated" | None
    injective: bool

    def point(self, s: complex):
        return (self.z_series.eval_complex(s), self.w_series.eval_complex(s))

    def to_json(self) -> dict:
        return {
            "M": self.M,
            "z_series": self.z_series.to_json(),
            "w_series": self.w_series.to_json(),
            "order": self.order,
            "condition": self.condition,
            "injective": self.injective,
        }


def make_param(M: int, c, L: TruncSeries, order: int = 32,
               tol: float = DEFAULT_TOL) -> ParamCurve:
    """Build the parametrized curve from a polynomial L with L(0) = 0.

    The condition flag records whether L certifies avoidance: "curve" for
    M = 1 with purely imaginary coefficients, "isolated" when the angular
    decomposition succeeds, None otherwise (the curve may enter the domain).
    """
    if M < 1:
        raise InputError("M must be a positive integer")
    if L.order >= 0 and not is_zero(L.coeffs[0], tol, L._scale()):
        raise InputError("L(0) must vanish")
    if not isinstance(c, Unimodular):
        c = Unimodular.from_scalar(as_scalar(c))
    Lp = L.pad_zero(order).with_var("s")
    expML = (Lp * QI(M)).exp()
    z = expML.shift(M).truncate(order)
    cval = c.exact_qi()
    z = z * cval if cval is not None else z.to_float() * c.to_complex()
    w = (Lp.derivative().shift(2 * M).antiderivative() * QI(2 * M) * QI_I
         + TruncSeries.monomial(2 * M, QI_I, order + 1, var="s")).truncate(order)
    dec = decompose_L(Lp, M, tol)
    if dec["kind"] == "curve":
        condition = "curve" if M == 1 else None
    elif dec["kind"] == "isolated":
        condition = "isolated"
    else:
        condition = None
    branch = param_branch_raw(M, c, Lp, w, tol)
    return ParamCurve(M, c, Lp, z.with_var("s"), w.with_var("s"), order,
                      condition, branch_is_injective(branch, tol))


def param_branch_raw(M: int, c: Unimodular, Lp: TruncSeries, w: TruncSeries,
                     tol: float = DEFAULT_TOL) -> PuiseuxBranch:
    """The branch t -> (c t^M, phi(t)) traced by the parametrized curve,
    via t = s e^{L(s)}."""
    t_of_s = Lp.exp().shift(1)
    s_of_t = t_of_s.reversion(tol)
    phi = w.compose(s_of_t).with_var("t")
    return normalize_branch(M, c, phi, tol=tol)


def param_to_branch(pc: ParamCurve, tol: float = DEFAULT_TOL) -> PuiseuxBranch:
    return param_branch_raw(pc.M, pc.c, pc.L, pc.w_series, tol)


# ---------------------------------------------------------------------------
# one-parameter polynomial families

PC_STABLE_MAX = Fraction(1, 2)
QC_STABLE_SUFFICIENT = Fraction(1, 12)
QC_STABLE_SHARP = Fraction(27, 32)


def family_Pc(c) -> MultiPoly:
    """w - iw^2 - 2ci z^2; stable near 0 exactly for 0 <= c <= 1/2."""
    c = as_scalar(c)
    return MultiPoly(2, {
        (0, 1): QI(1),
        (0, 2): -QI_I,
        (2, 0): QI(-2) * QI_I * c,
    })


def family_Qc(c) -> MultiPoly:
    """w - 3iw^2 - 3w^3 + iw^4 + 8ci z^4; stable near 0 for 0 <= c <= 1/12
    (and claimed sharp up to 27/32)."""
    c = as_scalar(c)
    return MultiPoly(2, {
        (0, 1): QI(1),
        (0, 2): QI(-3) * QI_I,
        (0, 3): QI(-3),
        (0, 4): QI_I,
        (4, 0): QI(8) * QI_I * c,
    })


# ---------------------------------------------------------------------------
# the central-binomial family on the ball


def rudin_coefficients(n: int) -> list:
    """The bounds c_k = (1/2k) 4^(1-k) binom(2k-2, k-1) for k = 1..n."""
    return [
        Fraction(1, 2 * k) * Fraction(1, 4 ** (k - 1)) * math.comb(2 * k - 2, k - 1)
        for k in range(1, n + 1)
    ]


def rudin_poly(gs, tol: float = DEFAULT_TOL, allow_poly: bool = False) -> MultiPoly:
    """1 - z2 - sum_k g_k z1^(2k) on the two-ball.

    In the default constants mode each g_k is a scalar with |g_k| <= c_k,
    the k-th coefficient of the series for 1 - sqrt(1 - x); violating the
    bound raises BoundViolated.  With allow_poly=True, g_k may be a
    univariate polynomial in z2 (coefficient list) whose supremum on the
    closed disk is estimated by circle sampling, advisory only.
    """
    bounds = rudin_coefficients(len(gs))
    terms = {(0, 0): QI(1), (0, 1): QI(-1)}
    for k, g in enumerate(gs, start=1):
        if isinstance(g, (list, tuple)):
            if not allow_poly:
                raise InputError("polynomial coefficients need allow_poly=True")
            sup = _circle_sup(g)
            if sup > float(bounds[k - 1]) + 1e-6:
                raise BoundViolated(
                    f"estimated sup |g_{k}| = {sup:.6g} exceeds c_{k} = {bounds[k - 1]}")
            for j, gc in enumerate(g):
                gc = as_scalar(gc)
                if is_zero(gc, tol, 1.0):
                    continue
                key = (2 * k, j)
                terms[key] = terms.get(key, QI(0)) - gc
            continue
        g = as_scalar(g)
        if _modulus_exceeds(g, bounds[k - 1], tol):
            raise BoundViolated(f"|g_{k}| exceeds c_{k} = {bounds[k - 1]}")
        if not is_zero(g, tol, 1.0):
            terms[(2 * k, 0)] = -g
    return MultiPoly(2, terms, names=("z1", "z2"))


def _modulus_exceeds(g, bound: Fraction, tol: float) -> bool:
    if isinstance(g, QI):
        return g.abs2() > bound * bound
    return abs(to_complex(g)) > float(bound) + tol


def _circle_sup(coeffs, n: int = 720) -> float:
    vals = [
        abs(sum(to_complex(c) * cmath.exp(1j * 2 * math.pi * t / n) ** j
                for j, c in enumerate(coeffs)))
        for t in range(n)
    ]
    return max(vals)


@dataclass(frozen=True)
class RudinAnalysis:
    ball: MultiPoly
    siegel: MultiPoly
    branch_class: object
    K: int | None


def rudin_analysis(gs, order: int = 32, tol: float = DEFAULT_TOL) -> RudinAnalysis:
    """Build the family member, transport it, and classify its branch."""
    from .puiseux import expand_branches

    ball = rudin_poly(gs, tol)
    siegel = transport_ball_to_siegel(ball)
    branches = expand_branches(siegel, order=order, tol=tol)
    cls, _ = classify_branch(branches[0], tol)
    return RudinAnalysis(ball, siegel, cls, cls.K)


# ---------------------------------------------------------------------------
# symmetric quadratic forms and the Takagi factorization


@dataclass(frozen=True)
class TakagiReport:
    U: object
    D: tuple
    residual: float
    verdict: str  # strict | boundary | violation
    siegel: MultiPoly | None

    def to_json(self) -> dict:
        U = np.asarray(self.U, dtype=complex)
        return {
            "U": [[{"re": x.real, "im": x.imag} for x in row] for row in U],
            "D": list(self.D),
            "residual": self.residual,
            "verdict": self.verdict,
            "siegel": self.siegel.to_json() if self.siegel is not None else None,
        }


def takagi(A, tol: float = DEFAULT_TOL):
    """Factor a complex symmetric matrix as A = U D U^T with U unitary and
    D nonnegative diagonal (returned as a vector, descending).

    Exact for real diagonal input; otherwise float via the Hermitian
    eigenproblem of A conj(A), with degenerate singular values handled by a
    symmetric matrix square root on each cluster.
    """
    A = _as_complex_matrix(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise NotSymmetric("matrix must be square")
    n = A.shape[0]
    if np.max(np.abs(A - A.T)) > tol * max(1.0, np.max(np.abs(A))):
        raise NotSymmetric("matrix must equal its transpose")
    if np.allclose(A.imag, 0) and np.allclose(A, np.diag(np.diagonal(A))):
        d = np.real(np.diagonal(A)).copy()
        U = np.diag(np.where(d >= 0, 1.0 + 0.0j, 1.0j))
        D = np.abs(d)
        order = np.argsort(-D)
        return U[:, order], D[order]
    B = A @ np.conj(A)
    evals, Utilde = np.linalg.eigh((B + B.conj().T) / 2)
    evals = np.clip(evals[::-1], 0.0, None)
    Utilde = Utilde[:, ::-1]
    D = np.sqrt(evals)
    C = Utilde.conj().T @ A @ np.conj(Utilde)
    P = np.zeros((n, n), dtype=complex)
    i = 0
    from scipy.linalg import sqrtm

    while i < n:
        j = i + 1
        while j < n and abs(D[j] - D[i]) <= 1e-8 * max(1.0, D[i]):
            j += 1
        if D[i] <= 1e-12:
            P[i:j, i:j] = np.eye(j - i)
        else:
            S = C[i:j, i:j] / D[i]
            S = (S + S.T) / 2
            P[i:j, i:j] = sqrtm(S)
        i = j
    U = Utilde @ P
    return U, D


def quadratic_form_poly(A, tol: float = DEFAULT_TOL):
    """(1 - z^T A z, TakagiReport) for a symmetric matrix A.

    The report carries the Takagi factors, the contraction verdict on the
    singular values, and, when the largest singular value is 1, the Siegel
    model iw - sum_j D_j z_j^2 over the remaining directions.
    """
    exact = _is_exact_matrix(A)
    Anp = _as_complex_matrix(A)
    n = Anp.shape[0]
    terms = {(0,) * n: QI(1)}
    for i in range(n):
        for j in range(n):
            aij = as_scalar(A[i][j]) if exact else complex(Anp[i, j])
            if is_zero(aij, tol, 1.0):
                continue
            e = [0] * n
            e[i] += 1
            e[j] += 1
            key = tuple(e)
            terms[key] = terms.get(key, QI(0) if exact else 0j) - aij
    p = MultiPoly(n, terms, names=tuple(f"z{j}" for j in range(1, n + 1)))
    U, D = takagi(Anp, tol)
    residual = float(np.max(np.abs(Anp - U @ np.diag(D) @ U.T)))
    top = float(D[0]) if len(D) else 0.0
    if top < 1 - tol:
        verdict = "strict"
    elif top <= 1 + tol:
        verdict = "boundary"
    else:
        verdict = "violation"
    siegel = None
    if abs(top - 1.0) <= tol and n >= 1:
        sterms = {tuple([0] * (n - 1)) + (1,): QI_I}
        for j in range(1, n):
            dj = float(D[j])
            if dj > tol:
                e = [0] * n
                e[j - 1] = 2
                sterms[tuple(e)] = complex(-dj)
        siegel = MultiPoly(n, sterms)
    report = TakagiReport(U, tuple(float(x) for x in D), residual, verdict, siegel)
    return p, report


def _is_exact_matrix(A) -> bool:
    if isinstance(A, np.ndarray):
        return False
    try:
        return all(is_exact(as_scalar(x)) for row in A for x in row)
    except (TypeError, InputError):
        return False


def _as_complex_matrix(A) -> np.ndarray:
    if isinstance(A, np.ndarray):
        return A.astype(complex)
    return np.array([[to_complex(as_scalar(x)) for x in row] for row in A],
                    dtype=complex)


# ---------------------------------------------------------------------------
# determinantal polynomials from row contractions


@dataclass(frozen=True)
class RowContraction:
    """Matrices A_1..A_d with sum A_j A_j^* <= I."""

    matrices: tuple

    def __post_init__(self):
        mats = tuple(np.asarray(m, dtype=complex) for m in self.matrices)
        if not mats:
            raise InputError("need at least one matrix")
        N = mats[0].shape[0]
        for m in mats:
            if m.shape != (N, N):
                raise InputError("matrices must share a square shape")
        object.__setattr__(self, "matrices", mats)
        gram = sum(m @ m.conj().T for m in mats)
        defect = np.eye(N) - gram
        if np.min(np.linalg.eigvalsh((defect + defect.conj().T) / 2)) < -1e-9:
            raise NotRowContraction("I - sum A_j A_j* has a negative eigenvalue")

    @property
    def d(self) -> int:
        return len(self.matrices)

    @property
    def N(self) -> int:
        return self.matrices[0].shape[0]

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "N": self.N,
            "matrices": [
                [[{"re": x.real, "im": x.imag} for x in row] for row in m]
                for m in self.matrices
            ],
        }


def _det_laplace(rows) -> MultiPoly:
    """Determinant of a square matrix of MultiPoly entries."""
    n = len(rows)
    if n == 0:
        raise InputError("empty matrix")
    if n == 1:
        return rows[0][0]
    acc = None
    for j in range(n):
        entry = rows[0][j]
        if entry.is_zero():
            continue
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = entry * _det_laplace(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    if acc is None:
        return MultiPoly.zero(rows[0][0].dim, rows[0][0].names)
    return acc


def rowdet_poly(rc: RowContraction) -> MultiPoly:
    """det(I - sum_j z_j A_j) as a ball polynomial in d variables."""
    d, N = rc.d, rc.N
    names = tuple(f"z{j}" for j in range(1, d + 1))
    entries = []
    for i in range(N):
        row = []
        for k in range(N):
            terms = {}
            if i == k:
                terms[(0,) * d] = QI(1)
            for j, m in enumerate(rc.matrices):
                if m[i, k] != 0:
                    e = [0] * d
                    e[j] = 1
                    key = tuple(e)
                    terms[key] = terms.get(key, 0j) - complex(m[i, k])
            row.append(MultiPoly(d, terms, names=names))
        entries.append(row)
    return _det_laplace(entries)


def _spectral_ascent(mats, a0, iters: int = 400, tol: float = 1e-11):
    """Projected ascent of the dominant eigenvalue modulus of sum a_j A_j
    over the unit sphere |a| = 1; returns (a, rho)."""
    a = np.asarray(a0, dtype=complex)
    a = a / np.linalg.norm(a)
    step = 0.5
    rho_prev = -1.0
    for _ in range(iters):
        T = sum(aj * m for aj, m in zip(a, mats))
        evals, vecs = np.linalg.eig(T)
        idx = int(np.argmax(np.abs(evals)))
        lam = evals[idx]
        rho = abs(lam)
        if rho > 1 - 1e-13:
            return a, rho
        v = vecs[:, idx]
        wl, vecsl = np.linalg.eig(T.conj().T)
        il = int(np.argmin(np.abs(np.conj(wl) - lam)))
        u = vecsl[:, il]
        denom = np.vdot(u, v)
        if abs(denom) < 1e-13:
            break
        grad = np.array([np.conj(lam) * (np.vdot(u, m @ v) / denom)
                         for m in mats])
        g = np.conj(grad)
        if np.linalg.norm(g) < tol:
            break
        improved = False
        while step > 1e-12:
            cand = a + step * g
            cand = cand / np.linalg.norm(cand)
            Tc = sum(cj * m for cj, m in zip(cand, mats))
            rc_ = float(np.max(np.abs(np.linalg.eigvals(Tc))))
            if rc_ > rho + 1e-15:
                a = cand
                rho_prev = rho
                improved = True
                step = min(step * 1.5, 0.5)
                break
            step *= 0.5
        if not improved:
            break
    T = sum(aj * m for aj, m in zip(a, mats))
    rho = float(np.max(np.abs(np.linalg.eigvals(T))))
    return a, rho


def _unitary_with_first_column(v: np.ndarray) -> np.ndarray:
    """A unitary whose first column is the given unit vector."""
    n = len(v)
    M = np.eye(n, dtype=complex)
    M[:, 0] = v
    Q, R = np.linalg.qr(M)
    Q[:, 0] *= R[0, 0] / abs(R[0, 0])
    if abs(np.vdot(Q[:, 0], v) - 1.0) > 1e-9:
        Q[:, 0] = v  # QR may flip the column's phase; force it
        for k in range(1, n):
            for j in range(k):
                Q[:, k] -= np.vdot(Q[:, j], Q[:, k]) * Q[:, j]
            Q[:, k] /= np.linalg.norm(Q[:, k])
    return Q


def rowdet_factor(p: MultiPoly, rc: RowContraction, seed: int = 42,
                  tol: float = 1e-9, starts: int = 12):
    """Peel boundary-zero factors (1 - <z, zeta>) off det(I - sum z_j A_j).

    Searches unit directions a where the row operator sum a_j A_j reaches
    spectral radius 1 (projected ascent, several deterministic starts),
    rotates the found zero to e_1, applies the block reduction that the
    contraction structure forces there, and recurses on the compressed
    matrices.  Returns (zeros, residual) where zeros is a list of
    (zeta tuple, multiplicity) and the residual polynomial has no boundary
    zeros up to the search's resolution.
    """
    rng = np.random.default_rng(seed)
    mats = [m.copy() for m in rc.matrices]
    d = rc.d
    U_total = np.eye(d, dtype=complex)
    zeros = []
    while mats[0].shape[0] > 0:
        found = None
        for s in range(starts):
            a0 = rng.standard_normal(d) + 1j * rng.standard_normal(d)
            if s == 0:
                # deterministic axis starts help the diagonal cases
                a0 = np.ones(d, dtype=complex)
            elif s <= d:
                a0 = np.zeros(d, dtype=complex)
                a0[s - 1] = 1.0
            a, rho = _spectral_ascent(mats, a0)
            if rho >= 1 - tol:
                found = a
                break
        if found is None:
            break
        T = sum(aj * m for aj, m in zip(found, mats))
        evals, vecs = np.linalg.eig(T)
        idx = int(np.argmax(np.abs(evals)))
        lam = evals[idx]
        # rotate a by the eigenvalue phase so that the eigenvalue becomes 1
        a = found * np.conj(lam) / abs(lam)
        T = sum(aj * m for aj, m in zip(a, mats))
        evals, vecs = np.linalg.eig(T)
        idx = int(np.argmin(np.abs(evals - 1.0)))
        if abs(evals[idx] - 1.0) > 50 * tol:
            raise NumericalDegeneracy(
                f"eigenvalue {evals[idx]} did not converge to 1")
        v = vecs[:, idx]
        v = v / np.linalg.norm(v)
        zeta_local = a
        zeta_global = U_total @ zeta_local
        zeros.append(tuple(complex(x) for x in zeta_global))
        # variable rotation z = U y with U e_1 = zeta_local
        U = _unitary_with_first_column(zeta_local)
        B = [sum(U[j, k] * mats[j] for j in range(d)) for k in range(d)]
        # operator rotation sending the fixed vector to e_1
        V = _unitary_with_first_column(v)
        C = [V.conj().T @ b @ V for b in B]
        if abs(C[0][0, 0] - 1.0) > 1e-6:
            raise NumericalDegeneracy("block reduction lost the fixed vector")
        mats = [c[1:, 1:] for c in C]
        U_total = U_total @ U
        if mats[0].shape[0] == 0:
            break
    residual = _residual_det(mats, U_total, d)
    merged = []
    for z in zeros:
        for k, (z0, mult) in enumerate(merged):
            if max(abs(x - y) for x, y in zip(z, z0)) < 1e-6:
                merged[k] = (z0, mult + 1)
                break
        else:
            merged.append((z, 1))
    # sanity: the peeled factors times the residual must reproduce p
    pts = 0.4 * (rng.standard_normal((d, 8)) + 1j * rng.standard_normal((d, 8)))
    recon = residual.eval_many(pts)
    for z0, mult in merged:
        recon = recon * (1 - pts.T @ np.conj(np.asarray(z0))) ** mult
    direct = p.eval_many(pts)
    if np.max(np.abs(direct - recon)) > 1e-6 * max(1.0, np.max(np.abs(direct))):
        raise NumericalDegeneracy("peeled factorization does not reproduce p")
    return merged, residual


def _residual_det(mats, U_total, d) -> MultiPoly:
    """det(I - sum_k y_k C_k) written back in the original variables."""
    names = tuple(f"z{j + 1}" for j in range(d))
    n = mats[0].shape[0] if mats else 0
    if n == 0:
        return MultiPoly.constant(d, QI(1), names)
    sub = rowdet_poly(RowContraction(tuple(mats)))
    # y = U_total^H z, i.e. y_k = sum_j conj(U[j,k]) z_j
    Uh = U_total.conj().T
    linear = []
    for k in range(d):
        terms = {}
        for j in range(d):
            if abs(Uh[k, j]) > 1e-15:
                e = [0] * d
                e[j] = 1
                terms[tuple(e)] = complex(Uh[k, j])
        linear.append(MultiPoly(d, terms, names))
    return _substitute_polys(sub, linear)


def _substitute_polys(p: MultiPoly, subs) -> MultiPoly:
    """p with each variable replaced by the given polynomials."""
    out = MultiPoly.zero(subs[0].dim, subs[0].names)
    cache = {}

    def power(idx, k):
        if k == 0:
            return MultiPoly.constant(subs[0].dim, QI(1), subs[0].names)
        if (idx, k) not in cache:
            cache[(idx, k)] = power(idx, k - 1) * subs[idx]
        return cache[(idx, k)]

    for e, coef in p.terms.items():
        term = MultiPoly.constant(subs[0].dim, coef, subs[0].names)
        for idx, k in enumerate(e):
            if k:
                term = term * power(idx, k)
        out = out + term
    return out


def planted_rowdet(d: int, N: int, seed: int = 0):
    """A random row contraction whose determinant has exactly one planted
    boundary zero; returns (contraction, zeta) with det(I - sum zeta_j A_j)
    = 0 and |zeta| = 1."""
    if N < 2 or d < 1:
        raise InputError("need N >= 2 and d >= 1")
    rng = np.random.default_rng(seed)
    m = N - 1
    G = rng.standard_normal((m, m * d)) + 1j * rng.standard_normal((m, m * d))
    G = 0.8 * G / np.linalg.norm(G, 2)
    blocks = [G[:, j * m:(j + 1) * m] for j in range(d)]
    B = []
    for j, blk in enumerate(blocks):
        top = np.zeros((1, N), dtype=complex)
        top[0, 0] = 1.0 if j == 0 else 0.0
        B.append(np.block([[top[:, :1], np.zeros((1, m))],
                           [np.zeros((m, 1)), blk]]))
    U = np.linalg.qr(rng.standard_normal((d, d))
                     + 1j * rng.standard_normal((d, d)))[0]
    mats = tuple(
        sum(np.conj(U[j, k]) * B[k] for k in range(d)) for j in range(d))
    return RowContraction(mats), tuple(complex(x) for x in U[:, 0])


# ---------------------------------------------------------------------------
# lifting one-variable examples


def one_variable_lift(coeffs, d: int) -> MultiPoly:
    """Compose a univariate polynomial (coefficient list, low to high) with
    tau = d^(d/2) z_1 ... z_d; exact for even d, float otherwise."""
    if d < 1:
        raise InputError("dimension must be positive")
    if d % 2 == 0:
        tau_coef = QI(d ** (d // 2))
    else:
        tau_coef = complex(d ** (d / 2))
    terms = {}
    for k, c in enumerate(coeffs):
        c = as_scalar(c)
        if is_zero(c, DEFAULT_TOL, 1.0):
            continue
        terms[(k,) * d] = c * tau_coef**k
    return MultiPoly(d, terms, names=tuple(f"z{j}" for j in range(1, d + 1)))


# ---------------------------------------------------------------------------
# necessary conditions for algebraic e^L


@dataclass(frozen=True)
class AlgebraicLReport:
    monomial_ends: bool
    branch_gate: bool
    branch_kind: str | None
    K: int | None
    no_critical_term_at_infinity: bool
    offending: tuple
    irreducibility_assumed: bool = True

    @property
    def passed(self) -> bool:
        return (self.monomial_ends and self.branch_gate
                and self.no_critical_term_at_infinity)

    def to_json(self) -> dict:
        return {
            "monomial_ends": self.monomial_ends,
            "branch_gate": self.branch_gate,
            "branch_kind": self.branch_kind,
            "K": self.K,
            "no_critical_term_at_infinity": self.no_critical_term_at_infinity,
            "offending": [
                {"branch": i, "coefficient": {"re": c.real, "im": c.imag}}
                for i, c in self.offending
            ],
            "irreducibility_assumed": self.irreducibility_assumed,
            "passed": self.passed,
        }


def _y_coefficient_polys(P: MultiPoly):
    """P as a list of univariate-in-s coefficient polynomials of y^j."""
    m = P.degree_in(1)
    buckets = [{} for _ in range(m + 1)]
    for (a, b), coef in P.terms.items():
        buckets[b][a] = coef
    return buckets


def check_algebraic_L(P: MultiPoly, M: int, order: int | None = None,
                      tol: float = DEFAULT_TOL) -> AlgebraicLReport:
    """Necessary conditions for f with P(s, f(s)) = 0, f(0) = 1, to arise as
    e^L for a branch avoiding the domain.

    Three checks: the extreme y-coefficients of P are monomials in s; the
    branch of f through (0,1) has log of curve or isolated type; and no
    continuation of f'(1/s)/f(1/s) at infinity carries an s^(2M+1) term.
    Irreducibility of P is assumed, not verified.
    """
    if P.dim != 2:
        raise InputError("P must be a polynomial in (s, y)")
    buckets = _y_coefficient_polys(P)
    m = len(buckets) - 1
    if m < 1:
        raise InputError("P must depend on y")
    monomial_ends = len(buckets[0]) == 1 and len(buckets[m]) == 1
    # branch through (0, 1)
    Q = P.shift_var(1, QI(1))
    if not is_zero(Q.coefficient((0, 0)), tol, P.coef_scale()):
        raise NoBranchThroughOne("P(0, 1) != 0")
    dQ = Q.diff(1)
    if is_zero(dQ.coefficient((0, 0)), tol, P.coef_scale()):
        raise NoBranchThroughOne("the root y = 1 of P(0, y) is not simple")
    n = order if order is not None else max(32, 4 * M + 8)
    g = _hensel_solve(Q, n, tol)
    f = g + QI(1)
    L = f.log().with_var("s")
    dec = decompose_L(L, M, tol)
    branch_kind = dec["kind"]
    K = dec["K"]
    branch_gate = branch_kind in ("curve", "isolated") and (
        branch_kind != "curve" or M == 1)
    ok_inf, offending = _no_term_at_infinity(P, M, tol)
    return AlgebraicLReport(monomial_ends, branch_gate, branch_kind, K,
                            ok_inf, tuple(offending))


def _no_term_at_infinity(P: MultiPoly, M: int, tol: float):
    """Check every continuation of f'(1/s)/f(1/s) at 0 for an s^(2M+1) term.

    Continuations are the Puiseux branches of P(1/sigma, Y) = 0 over
    sigma -> 0, including those where Y tends to 0 or to infinity; along a
    branch with sigma = t^m and Y = t^e yhat(t) the expansion is
    -(e/m) t^m - (1/m) t^(m+1) yhat'/yhat, and the critical coefficient
    sits at t^(m(2M+1)).
    """
    degs = P.degree_in(0)
    degy = P.degree_in(1)
    R = P.reverse_var(0, degs)
    _, R = R.strip_var_power(0)
    offending = []
    counter = [0]
    target_order = (2 * M + 1) * max(1, degy) + 4

    def record(m, yhat):
        # v(t) = -(e/m) t^m - (1/m) t^(m+1) (yhat'/yhat)(t); for M >= 1 the
        # exponent m(2M+1) only meets the second piece
        i = counter[0]
        counter[0] += 1
        k = m * (2 * M + 1) - (m + 1)
        v = yhat.derivative() * yhat.inverse(tol)
        if k > v.order:
            return
        coef = to_complex(v.coeffs[k]) * (-1.0 / m)
        if abs(coef) > tol:
            offending.append((i, complex(coef)))

    # finite targets: branches above each root of R(0, Y)
    const_poly = [QI(0)] * (degy + 1)
    for (a, b), coef in R.terms.items():
        if a == 0:
            const_poly[b] = coef
    from .puiseux import _scalar_poly_roots

    for y0, _mult in _scalar_poly_roots(const_poly, tol):
        for m, useries, _cert, _sheets in _np_branches(
                R.shift_var(1, y0), target_order, tol):
            F = useries + y0
            e = F.valuation(tol)
            if e is None:
                continue  # Y identically y0 = 0, not a function branch
            record(m, F.divide_t_power(e, tol) if e else F)
    # poles: branches of the y-reversed polynomial through V = 0
    R2 = R.reverse_var(1, degy)
    if is_zero(R2.coefficient((0, 0)), tol, R2.coef_scale() or 1.0):
        for m, vseries, _cert, _sheets in _np_branches(R2, target_order, tol):
            e = vseries.valuation(tol)
            if not e:
                continue
            record(m, vseries.divide_t_power(e, tol).inverse(tol))
    return not offending, offending
