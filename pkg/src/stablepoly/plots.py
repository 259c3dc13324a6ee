"""Figure rendering for the verification reports.

Each function takes a report from the verify module and writes a PNG or SVG
(decided by the file extension) next to whatever delimited output the caller
produced.  Rendering is headless.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .verify import GFitReport, ProbeReport, ScanReport, TraceReport


def plot_trace(report: TraceReport, path: str) -> str:
    """Boundary curve in the z-plane and the w-plane."""
    rows = report.rows
    z = np.array([zs[0] for _, zs, _ in rows], dtype=complex)
    w = np.array([wv for _, _, wv in rows], dtype=complex)
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 4.2))
    ax1.plot(z.real, z.imag, ".", markersize=2)
    ax1.set_xlabel("Re z")
    ax1.set_ylabel("Im z")
    ax1.set_title("boundary zero curve, z-plane")
    ax1.set_aspect("equal", adjustable="datalim")
    ax2.plot(w.real, w.imag, ".", markersize=2)
    ax2.set_xlabel("Re w")
    ax2.set_ylabel("Im w")
    ax2.set_title("w-plane")
    ax2.set_aspect("equal", adjustable="datalim")
    fig.suptitle(
        f"max |Im w - |z|^2| = {report.max_boundary_residual:.2e}"
        + ("" if report.max_p_residual is None
           else f", max |p| = {report.max_p_residual:.2e}"))
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_gfit(report: GFitReport, path: str) -> str:
    """Log-log defect values with the fitted slope."""
    r = np.asarray(report.radii)
    v = np.asarray(report.values)
    fig, ax = plt.subplots(figsize=(5.2, 4.2))
    ax.loglog(r, v, "o", label="min G")
    anchor = v[0] * (r / r[0]) ** report.exponent
    ax.loglog(r, anchor, "-", label=f"slope {report.exponent:.3f}")
    if report.expected is not None:
        ax.loglog(r, v[0] * (r / r[0]) ** report.expected, "--",
                  label=f"expected {report.expected}")
    ax.set_xlabel("r")
    ax.set_ylabel("defect")
    ax.set_title(f"{report.mode} defect exponent")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_scan(report: ScanReport, path: str) -> str:
    """Histogram of log10 |p| over the sampled domain points."""
    fig, ax = plt.subplots(figsize=(5.2, 4.2))
    if report.log10_hist:
        edges, counts = report.log10_hist
        ax.stairs(counts, edges, fill=True)
    ax.axvline(math.log10(max(report.min_abs, 1e-300)), color="tab:red",
               linestyle="--", label=f"min |p| = {report.min_abs:.2e}")
    ax.set_xlabel("log10 |p|")
    ax.set_ylabel("samples")
    ax.set_title(
        f"{report.in_domain} samples, {len(report.zero_hits)} zero hit(s), "
        f"strategy {report.config.strategy}")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_probe(report: ProbeReport, path: str) -> str:
    """Ratio |q/p| against the radius grid."""
    r = np.array([row[0] for row in report.rows])
    ratio = np.array([row[3] for row in report.rows])
    fig, ax = plt.subplots(figsize=(5.2, 4.2))
    ax.loglog(r, ratio, "o-")
    ax.set_xlabel("r")
    ax.set_ylabel("|q/p|")
    title = f"verdict: {report.verdict}"
    if report.rate is not None:
        title += f", defect exponent {report.rate:.3f}"
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
