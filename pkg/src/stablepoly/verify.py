"""Numeric verification: stability sampling, defect-exponent fits,
boundedness probes, and boundary-curve tracing.

Everything here is trend- and sample-based evidence, never a proof; the
thresholds are explicit and the sample streams are reproducible (numpy's
PCG64 generator, whose output stream is documented and stable across
platforms for a fixed seed).
"""

from __future__ import annotations

import cmath
import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from .classify import angular_critical_G, build_L, classify_branch
from .errors import DegenerateFit, InputError, NumericalDegeneracy
from .ideals import WitnessCurve
from .multipoly import MultiPoly
from .puiseux import PuiseuxBranch, expand_branches
from .scalars import DEFAULT_TOL, to_complex

STRATEGIES = ("uniform-ball", "boundary-shell", "branch-perturbation")


@dataclass(frozen=True)
class SampleConfig:
    """Reproducible sampling plan for stability scans."""

    seed: int = 42
    count: int = 1000
    radius: float = 0.5
    domain: str = "siegel"  # "siegel" | "ball"
    strategy: str = "uniform-ball"
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise InputError(f"unknown strategy {self.strategy!r}")
        if self.domain not in ("siegel", "ball"):
            raise InputError(f"unknown domain {self.domain!r}")
        if self.count < 1 or self.radius <= 0:
            raise InputError("count and radius must be positive")

    def to_json(self) -> dict:
        return {"seed": self.seed, "count": self.count, "radius": self.radius,
                "domain": self.domain, "strategy": self.strategy,
                "tol": self.tol}


def _ball_samples(rng, m: int, n: int, radius: float) -> np.ndarray:
    """n points uniform in the complex m-ball of the given radius, (m, n)."""
    g = rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))
    norms = np.linalg.norm(g, axis=0)
    norms[norms == 0] = 1.0
    radii = radius * rng.random(n) ** (1.0 / (2 * m))
    return g / norms * radii


def sample_ball(cfg: SampleConfig, dim: int) -> np.ndarray:
    """Sample points of the open unit ball in C^dim, shape (dim, count)."""
    rng = np.random.default_rng(cfg.seed)
    r = min(cfg.radius, 1.0 - 1e-12)
    if cfg.strategy == "boundary-shell":
        g = rng.standard_normal((dim, cfg.count)) + 1j * rng.standard_normal(
            (dim, cfg.count))
        norms = np.linalg.norm(g, axis=0)
        norms[norms == 0] = 1.0
        radii = r * (1.0 - 1e-3 * rng.random(cfg.count))
        return g / norms * radii
    return _ball_samples(rng, dim, cfg.count, r)


def sample_siegel(cfg: SampleConfig, dim: int) -> np.ndarray:
    """Sample the open domain Im w > |z|^2 near 0, shape (dim, count).

    z is uniform in a ball of the configured radius; Im w sits |z|^2 plus a
    uniform excess below radius^2 (a thin excess for the boundary shell);
    Re w is uniform in (-radius^2, radius^2).
    """
    rng = np.random.default_rng(cfg.seed)
    m = dim - 1
    z = _ball_samples(rng, m, cfg.count, cfg.radius) if m else np.zeros(
        (0, cfg.count), dtype=complex)
    depth = cfg.radius**2 * (1e-3 if cfg.strategy == "boundary-shell" else 1.0)
    u = depth * rng.random(cfg.count)
    re_w = cfg.radius**2 * (2 * rng.random(cfg.count) - 1)
    w = re_w + 1j * (np.sum(np.abs(z) ** 2, axis=0) + u)
    return np.vstack([z, w[None, :]])


@dataclass(frozen=True)
class ScanReport:
    count: int
    in_domain: int
    min_abs: float
    argmin: tuple
    zero_hits: tuple
    config: SampleConfig
    log10_hist: tuple = ()  # (edges, counts) over log10 |p|

    def to_json(self) -> dict:
        return {
            "count": self.count,
            "in_domain": self.in_domain,
            "min_abs": self.min_abs,
            "argmin": [{"re": x.real, "im": x.imag} for x in self.argmin],
            "zero_hits": [
                [{"re": x.real, "im": x.imag} for x in pt] for pt in self.zero_hits
            ],
            "log10_hist": [list(part) for part in self.log10_hist],
            "config": self.config.to_json(),
        }


def stability_scan(p: MultiPoly, cfg: SampleConfig) -> ScanReport:
    """Evaluate |p| over a reproducible sample of the open domain.

    A zero hit is a sample with |p| below the configured tolerance; for a
    polynomial with no zeros in the domain the report has none.  The
    branch-perturbation strategy places samples on the truncated branch
    curves themselves (plus upward nudges), so unstable branches produce
    hits that uniform sampling would almost surely miss.
    """
    if p.is_zero():
        raise InputError("the zero polynomial vanishes everywhere")
    if cfg.strategy == "branch-perturbation":
        pts = _branch_perturbation_samples(p, cfg)
    elif cfg.domain == "ball":
        pts = sample_ball(cfg, p.dim)
    else:
        pts = sample_siegel(cfg, p.dim)
    if cfg.domain == "siegel":
        inside = np.imag(pts[-1]) > np.sum(np.abs(pts[:-1]) ** 2, axis=0)
    else:
        inside = np.linalg.norm(pts, axis=0) < 1.0
    pts = pts[:, inside]
    if pts.shape[1] == 0:
        raise NumericalDegeneracy("no samples landed in the open domain")
    vals = np.abs(p.eval_many(pts))
    order = np.argsort(vals, kind="stable")
    imin = int(order[0])
    hits = tuple(
        tuple(complex(x) for x in pts[:, int(i)])
        for i in order[: np.count_nonzero(vals < cfg.tol)]
    )
    logs = np.log10(np.maximum(vals, 1e-300))
    counts, edges = np.histogram(logs, bins=40)
    hist = (tuple(float(e) for e in edges), tuple(int(c) for c in counts))
    return ScanReport(cfg.count, pts.shape[1], float(vals[imin]),
                      tuple(complex(x) for x in pts[:, imin]), hits, cfg, hist)


def _branch_perturbation_samples(p: MultiPoly, cfg: SampleConfig) -> np.ndarray:
    if p.dim != 2 or cfg.domain != "siegel":
        raise InputError("branch perturbation needs the two-variable Siegel model")
    branches = expand_branches(p, order=32, tol=cfg.tol)
    rng = np.random.default_rng(cfg.seed)
    r_t = min(cfg.radius, 0.3)
    cols = []
    for i in range(cfg.count):
        b = branches[i % len(branches)]
        t = r_t * math.sqrt(rng.random()) * cmath.exp(2j * math.pi * rng.random())
        pt = b.point(t)
        z, w = to_complex(pt.coords[0]), to_complex(pt.coords[1])
        if i % 2:
            w += 1j * cfg.radius**2 * rng.random()
        cols.append((z, w))
    return np.array(cols, dtype=complex).T


# ---------------------------------------------------------------------------
# defect-exponent fitting


@dataclass(frozen=True)
class GFitReport:
    exponent: float
    expected: int | None
    mode: str  # "isolated" | "basic"
    radii: tuple
    values: tuple
    max_fit_residual: float

    def to_json(self) -> dict:
        return {"exponent": self.exponent, "expected": self.expected,
                "mode": self.mode, "radii": list(self.radii),
                "values": list(self.values),
                "max_fit_residual": self.max_fit_residual}

    def rows(self):
        return [(r, v) for r, v in zip(self.radii, self.values)]


def g_exponent_fit(b: PuiseuxBranch, cls=None, r_lo: float = 1e-3,
                   r_hi: float = 1e-1, n: int = 20,
                   tol: float = DEFAULT_TOL) -> GFitReport:
    """Least-squares slope of log(defect) against log(radius).

    For an isolated-type branch the defect at radius r is the minimum of G
    over the angular critical rays, with expected slope 2M(1+K); a basic
    branch uses the minimum of G over a uniform angle grid, expected 2M.
    """
    if cls is None:
        cls, _ = classify_branch(b, tol)
    M = b.M
    radii = np.geomspace(r_lo, r_hi, n)
    if cls.tag == "Isolated":
        L, _, _ = build_L(b, tol)
        values = [
            min(angular_critical_G(b, float(r), k, tol, L=L) for k in range(2 * M))
            for r in radii
        ]
        expected = 2 * M * (1 + cls.K)
        mode = "isolated"
    elif cls.tag == "Basic":
        thetas = np.linspace(0.0, 2 * math.pi, 64, endpoint=False)
        values = []
        for r in radii:
            g = [
                float(r) ** (2 * M)
                - b.phi.eval_complex(float(r) * cmath.exp(1j * th)).imag
                for th in thetas
            ]
            values.append(min(g))
        expected = 2 * M
        mode = "basic"
    else:
        raise DegenerateFit(
            f"defect exponent undefined for a {cls.tag.lower()}-type branch")
    if min(values) <= 0:
        raise DegenerateFit("nonpositive defect values; branch too close to "
                            "unstable or radius grid too wide")
    logs = np.log(np.asarray(values))
    logr = np.log(radii)
    slope, intercept = np.polyfit(logr, logs, 1)
    resid = float(np.max(np.abs(logs - (slope * logr + intercept))))
    if resid > 0.5:
        raise DegenerateFit(f"log-log fit is not linear (max residual {resid:.3g})")
    return GFitReport(float(slope), expected, mode, tuple(float(r) for r in radii),
                      tuple(float(v) for v in values), resid)


# ---------------------------------------------------------------------------
# boundedness probes along witness curves


@dataclass(frozen=True)
class ProbeReport:
    verdict: str  # "growth" | "bounded-trend"
    rate: float | None  # fitted exponent of the boundary defect
    rows: tuple  # (r, |q|, |p|, ratio)

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "rate": self.rate,
                "rows": [list(r) for r in self.rows]}


def boundedness_probe(q: MultiPoly, p: MultiPoly, curve: WitnessCurve,
                      r_grid=None, factor: float = 10.0) -> ProbeReport:
    """Tabulate |q/p| along a witness curve and call the trend.

    The growth verdict needs the ratio to climb monotonically (within a
    0.1 percent slack) and to gain at least the given factor across the
    grid; the rate is the fitted exponent of the ratio against the boundary
    defect (r for curves approaching the origin, 1-r for curves approaching
    the sphere).
    """
    if r_grid is None:
        r_grid = curve.default_radii()
    rows = []
    for r in r_grid:
        pt = curve.point(r)
        coords = np.array([to_complex(x) for x in pt.coords], dtype=complex)
        qv = abs(complex(q.eval_many(coords[:, None])[0]))
        pv = abs(complex(p.eval_many(coords[:, None])[0]))
        if pv == 0.0:
            raise NumericalDegeneracy(f"denominator vanished on the curve at r={r}")
        rows.append((float(r), qv, pv, qv / pv))
    ratios = [row[3] for row in rows]
    defects = [1.0 - row[0] if curve.kind == "ball_tangent" else row[0]
               for row in rows]
    # orient along shrinking defect
    pairs = sorted(zip(defects, ratios), reverse=True)
    seq = [ratio for _, ratio in pairs]
    if min(seq) == 0.0:
        # the numerator vanishes on the curve; nothing can grow
        return ProbeReport("bounded-trend", None, tuple(rows))
    monotone = all(seq[i + 1] >= seq[i] * 0.999 for i in range(len(seq) - 1))
    total = seq[-1] / seq[0]
    if monotone and total >= factor:
        slope, _ = np.polyfit(np.log([d for d, _ in pairs]), np.log(seq), 1)
        return ProbeReport("growth", float(slope), tuple(rows))
    return ProbeReport("bounded-trend", None, tuple(rows))


# ---------------------------------------------------------------------------
# boundary-curve tracing


@dataclass(frozen=True)
class TraceReport:
    rows: tuple  # (param, z tuple, w)
    max_boundary_residual: float
    max_p_residual: float | None

    def to_json(self) -> dict:
        return {
            "rows": [
                {"param": s,
                 "z": [{"re": z.real, "im": z.imag} for z in zs],
                 "w": {"re": w.real, "im": w.imag}}
                for s, zs, w in self.rows
            ],
            "max_boundary_residual": self.max_boundary_residual,
            "max_p_residual": self.max_p_residual,
        }

    def csv_header(self):
        nz = len(self.rows[0][1]) if self.rows else 1
        cols = ["param"]
        for j in range(nz):
            name = "z" if nz == 1 else f"z{j + 1}"
            cols += [f"{name}_re", f"{name}_im"]
        cols += ["w_re", "w_im"]
        return cols

    def csv_rows(self):
        for s, zs, w in self.rows:
            row = [s]
            for z in zs:
                row += [z.real, z.imag]
            row += [w.real, w.imag]
            yield row


def lemniscate_closed_form(theta: float, sign: int = 1):
    """The boundary zero curve of w + w^2 - z^2 through the origin:
    z = +-(sqrt2/2) e^{i theta/2} e^{i pi/4} sqrt(sin theta),
    w = -1/2 + e^{i theta}/2, for theta in [0, pi]."""
    root = math.sqrt(max(math.sin(theta), 0.0))
    z = sign * (math.sqrt(2) / 2) * cmath.exp(1j * theta / 2) \
        * cmath.exp(1j * math.pi / 4) * root
    w = -0.5 + 0.5 * cmath.exp(1j * theta)
    return z, w


def trace_boundary_curve(source, n_points: int = 512, p: MultiPoly | None = None,
                         tol: float = 1e-9, s_max: float | None = None,
                         param_range=None) -> TraceReport:
    """Sample a curve of boundary zeros and certify the residuals.

    The source is either a curve-type parametrized curve (traced over real
    s up to half its estimated convergence radius) or a callable closed
    form parameter -> (z, w).  Every emitted point is checked against
    |Im w - |z|^2| <= tol, and |p| <= tol when p is given; the parameter
    window shrinks (up to three halvings) if truncation spoils the bound.
    """
    if callable(source):
        a, bnd = param_range if param_range is not None else (0.0, math.pi)
        params = np.linspace(a, bnd, n_points)
        rows = []
        for s in params:
            z, w = source(float(s))
            zs = z if isinstance(z, tuple) else (complex(z),)
            rows.append((float(s), tuple(complex(x) for x in zs), complex(w)))
        return _certified_trace(rows, p, tol)
    pc = source
    if pc.condition != "curve":
        raise InputError("tracing needs a curve-type parametrization")
    if s_max is None:
        s_max = 0.5 * min(pc.z_series.radius_estimate(),
                          pc.w_series.radius_estimate())
    for _ in range(4):
        params = np.linspace(-s_max, s_max, n_points)
        rows = []
        for s in params:
            z = pc.z_series.eval_complex(complex(s))
            w = pc.w_series.eval_complex(complex(s))
            rows.append((float(s), (complex(z),), complex(w)))
        try:
            return _certified_trace(rows, p, tol)
        except NumericalDegeneracy:
            s_max *= 0.5
    return _certified_trace(rows, p, tol)


def _certified_trace(rows, p, tol) -> TraceReport:
    bres = max(
        abs(sum(abs(z) ** 2 for z in zs) - w.imag) for _, zs, w in rows
    ) if rows else 0.0
    pres = None
    if p is not None:
        pts = np.array([list(zs) + [w] for _, zs, w in rows], dtype=complex).T
        pres = float(np.max(np.abs(p.eval_many(pts))))
    worst = max(bres, pres if pres is not None else 0.0)
    if worst > tol:
        raise NumericalDegeneracy(
            f"trace residual {worst:.3g} exceeds tolerance {tol:.3g}")
    return TraceReport(tuple(rows), float(bres), pres)


def curve_from_branch(b: PuiseuxBranch, cls=None, tol: float = DEFAULT_TOL):
    """Rebuild the boundary parametrization of a curve-type branch."""
    from .constructors import make_param

    if cls is None:
        cls, _ = classify_branch(b, tol)
    if cls.tag != "Curve":
        raise InputError(f"branch classifies as {cls.tag}, not Curve")
    return make_param(b.M, b.c, cls.L, order=max(cls.L.order + 1, 8), tol=tol)


# ---------------------------------------------------------------------------
# delimited output


def write_csv(target, header, rows) -> None:
    """CSV with LF line endings and 17-significant-digit floats."""
    own = isinstance(target, (str, bytes))
    fh = open(target, "w", newline="") if own else target
    try:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_csv_cell(x) for x in row])
    finally:
        if own:
            fh.close()


def _csv_cell(x):
    if isinstance(x, float):
        return f"{x:.17g}"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (np.floating,)):
        return f"{float(x):.17g}"
    return str(x)


def csv_text(header, rows) -> str:
    buf = io.StringIO()
    write_csv(buf, header, rows)
    return buf.getvalue()
