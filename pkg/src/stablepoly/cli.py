"""Command-line surface.

Subcommands cover the full pipeline: branch expansion, classification,
admissible ideals and membership, coordinate transport, the example-family
factories, the algebraic-L gate checks, and the numeric verification suite
(which can render figures next to its delimited output).

Exit codes: 0 success, 2 input error, 3 unsettled or inconclusive (a
first-class outcome, not a failure), 4 numeric degeneracy.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import constructors as cons
from . import verify as ver
from .classify import classify_simple_zero
from .errors import (
    InputError,
    NumericalDegeneracy,
    StablePolyError,
    UnsettledCase,
)
from .ideals import (
    WitnessCurve,
    _classified_branches,
    ideal_for,
    ideal_from_classified,
    is_member,
    unboundedness_witness,
)
from .multipoly import (
    MultiPoly,
    transport_ball_to_siegel,
    transport_siegel_to_ball,
)
from .parsing import parse_poly, parse_series, parse_sy_poly
from .scalars import QI, to_complex

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_UNSETTLED = 3
EXIT_NUMERIC = 4

DEFAULTS = {"backend": "exact", "order": 32, "tol": 1e-9, "seed": 42,
            "format": "text"}


def _common_flags(sp, plot: bool = False):
    sp.add_argument("--backend", choices=("exact", "float"),
                    default=os.environ.get("STABLEPOLY_BACKEND",
                                           DEFAULTS["backend"]))
    sp.add_argument("--order", type=int, default=DEFAULTS["order"])
    sp.add_argument("--tol", type=float, default=DEFAULTS["tol"])
    sp.add_argument("--seed", type=int, default=DEFAULTS["seed"])
    sp.add_argument("--out", default=None, help="output file (default stdout)")
    sp.add_argument("--format", choices=("text", "json", "csv"),
                    default=DEFAULTS["format"])
    if plot:
        sp.add_argument("--plot", default=None, metavar="FILE",
                        help="also render a figure (png/svg by extension)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="stablepoly",
        description="Boundary-zero analysis of stable polynomials on the "
                    "ball and the Siegel domain")
    sub = ap.add_subparsers(dest="command", required=True)

    for name, doc in (
        ("analyze", "branches, classifications, and the ideal in one report"),
        ("classify", "branch classifications only"),
        ("branches", "Puiseux branch expansions only"),
        ("ideal", "the admissible-numerator ideal"),
    ):
        sp = sub.add_parser(name, help=doc)
        sp.add_argument("poly")
        _common_flags(sp)
        sp.set_defaults(func=globals()[f"cmd_{name}"])

    sp = sub.add_parser("member", help="ideal membership of a numerator")
    sp.add_argument("--numerator", required=True)
    sp.add_argument("--denominator", required=True)
    _common_flags(sp)
    sp.set_defaults(func=cmd_member)

    sp = sub.add_parser("transport", help="move between ball and Siegel models")
    sp.add_argument("--to", required=True, choices=("ball", "siegel"))
    sp.add_argument("poly")
    _common_flags(sp)
    sp.set_defaults(func=cmd_transport)

    sp = sub.add_parser("construct", help="example family factories")
    csub = sp.add_subparsers(dest="family", required=True)

    c = csub.add_parser("pc", help="w - iw^2 - 2ci z^2")
    c.add_argument("--c", required=True)
    _common_flags(c)
    c.set_defaults(func=cmd_construct_pc)

    c = csub.add_parser("qc", help="w - 3iw^2 - 3w^3 + iw^4 + 8ci z^4")
    c.add_argument("--c", required=True)
    _common_flags(c)
    c.set_defaults(func=cmd_construct_qc)

    c = csub.add_parser("rudin", help="1 - z2 - sum g_k z1^(2k)")
    c.add_argument("--gs", required=True,
                   help="comma-separated coefficients, e.g. 1/2,1/8")
    c.add_argument("--analyze", action="store_true")
    _common_flags(c)
    c.set_defaults(func=cmd_construct_rudin)

    c = csub.add_parser("quadform", help="1 - z^T A z with Takagi data")
    c.add_argument("--matrix", required=True,
                   help='JSON rows, e.g. [["1","0"],["0","1/2"]]')
    _common_flags(c)
    c.set_defaults(func=cmd_construct_quadform)

    c = csub.add_parser("rowdet", help="det(I - sum z_j A_j) from a row contraction")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--matrices",
                   help="JSON list of square matrices; entries number, "
                        "[re, im], or scalar text")
    g.add_argument("--planted", metavar="d,N",
                   help="generate a seeded instance with one boundary zero")
    c.add_argument("--factor", action="store_true",
                   help="peel the boundary-zero factors")
    _common_flags(c)
    c.set_defaults(func=cmd_construct_rowdet)

    c = csub.add_parser("param", help="curve z = c s^M e^(M L), w = i s^2M + ...")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--c", default="1")
    c.add_argument("--l", required=True, help="series in s, e.g. 'i s^2 + s^4'")
    _common_flags(c)
    c.set_defaults(func=cmd_construct_param)

    c = csub.add_parser("lift", help="compose with d^(d/2) z_1...z_d")
    c.add_argument("--coeffs", required=True, help="low-to-high, e.g. 1,-1")
    c.add_argument("--dim", type=int, required=True)
    _common_flags(c)
    c.set_defaults(func=cmd_construct_lift)

    sp = sub.add_parser("check-alg-l",
                        help="necessary conditions for algebraic e^L")
    sp.add_argument("--poly", required=True, help="P(s, y)")
    sp.add_argument("--m", type=int, required=True)
    _common_flags(sp)
    sp.set_defaults(func=cmd_check_alg_l)

    sp = sub.add_parser("verify", help="numeric verification suite")
    vsub = sp.add_subparsers(dest="check", required=True)

    v = vsub.add_parser("scan", help="stability sampling")
    v.add_argument("--poly", required=True)
    v.add_argument("--count", type=int, default=10000)
    v.add_argument("--radius", type=float, default=0.5)
    v.add_argument("--strategy", default="uniform-ball",
                   choices=ver.STRATEGIES)
    v.add_argument("--domain", default=None, choices=("ball", "siegel"))
    _common_flags(v, plot=True)
    v.set_defaults(func=cmd_verify_scan)

    v = vsub.add_parser("gfit", help="defect exponent fit")
    v.add_argument("--poly", required=True)
    v.add_argument("--branch-index", type=int, default=0)
    _common_flags(v, plot=True)
    v.set_defaults(func=cmd_verify_gfit)

    v = vsub.add_parser("probe", help="|q/p| along a witness curve")
    v.add_argument("--numerator", required=True)
    v.add_argument("--denominator", required=True)
    v.add_argument("--curve", default="vertical",
                   choices=("vertical", "ball-tangent"))
    v.add_argument("--direction", default=None,
                   help="tangent direction components, e.g. 1,0")
    _common_flags(v, plot=True)
    v.set_defaults(func=cmd_verify_probe)

    v = vsub.add_parser("trace", help="trace the boundary zero curve")
    v.add_argument("--poly", default=None)
    v.add_argument("--closed-form", default=None, choices=("lemniscate",),
                   help="use a built-in closed form instead of a polynomial")
    v.add_argument("--points", type=int, default=512)
    v.add_argument("--smax", type=float, default=None)
    _common_flags(v, plot=True)
    v.set_defaults(func=cmd_verify_trace)

    return ap


# ---------------------------------------------------------------------------
# shared helpers


def _parse_scalar(text: str, backend: str):
    p = parse_poly(text, backend=backend)
    if p.total_degree() > 0:
        raise InputError(f"expected a scalar, got {text!r}")
    return p.coefficient((0,) * p.dim)


def _parse_entry(x, backend: str):
    if isinstance(x, str):
        return _parse_scalar(x, backend)
    if isinstance(x, (list, tuple)) and len(x) == 2:
        return complex(float(x[0]), float(x[1]))
    if isinstance(x, (int, float)):
        return QI(Fraction(x)) if backend == "exact" and float(
            x).is_integer() else complex(x)
    raise InputError(f"cannot read matrix entry {x!r}")


def _as_siegel(p: MultiPoly):
    """(siegel polynomial, transported?) for analysis entry points."""
    if p.names[-1] == "w":
        return p, False
    return transport_ball_to_siegel(p), True


def _rational_in_range(c, lo: Fraction, hi: Fraction) -> bool:
    if isinstance(c, QI):
        return c.im == 0 and lo <= c.re <= hi
    cc = to_complex(c)
    return abs(cc.imag) < 1e-12 and float(lo) <= cc.real <= float(hi)


def _poly_payload(p: MultiPoly) -> dict:
    return {"text": str(p), "poly": p.to_json()}


# ---------------------------------------------------------------------------
# pipeline commands


def _pipeline(args):
    p = parse_poly(args.poly, backend=args.backend)
    siegel, moved = _as_siegel(p)
    if siegel.dim != 2:
        report = classify_simple_zero(siegel, args.tol)
        return p, siegel, moved, None, None, report
    branches, classes = _classified_branches(siegel, args.order, args.tol, 512)
    return p, siegel, moved, branches, [cls for cls, _ in classes], None


def cmd_analyze(args):
    p, siegel, moved, branches, classes, smooth = _pipeline(args)
    payload = {"input": _poly_payload(p), "transported": moved}
    lines = [f"input: {p}"]
    if moved:
        payload["siegel"] = _poly_payload(siegel)
        lines.append(f"siegel model: {siegel}")
    if smooth is not None:
        payload["smooth"] = smooth.to_json()
        lines.append(
            f"simple zero: verdict {smooth.verdict}, "
            f"singular values {[f'{s:.6g}' for s in smooth.singular_values]}")
    else:
        payload["branches"] = [b.to_json() for b in branches]
        payload["classes"] = [c.to_json() for c in classes]
        for b, c in zip(branches, classes):
            lines.append(_class_line(b, c))
    # A failed ideal is still a complete analysis: the classification (with
    # its witness, for unstable input) is the answer, so exit 0 either way.
    try:
        if smooth is None:
            ideal = ideal_from_classified(branches, classes)
        else:
            ideal = ideal_for(siegel, args.order, args.tol)
        payload["ideal"] = _ideal_payload(ideal)
        lines.append(f"ideal: {_ideal_line(ideal)}")
    except (UnsettledCase, InputError) as exc:
        payload["ideal"] = None
        payload["ideal_error"] = str(exc)
        lines.append(f"ideal: not available ({exc})")
    return payload, "\n".join(lines), EXIT_OK


def _class_line(b, c) -> str:
    bits = [f"branch M={b.M}, multiplicity {b.multiplicity}: {c.tag}"]
    if c.tag == "Isolated":
        bits.append(f"K={c.K}")
    if c.tag == "Unstable" and c.witness is not None:
        pt = tuple(to_complex(x) for x in c.witness.coords)
        bits.append("witness " + ", ".join(f"{x:.12g}" for x in pt))
    return ", ".join(bits)


def _ideal_line(ideal) -> str:
    gens = ", ".join(str(g) for g in ideal.generators())
    return f"{ideal.kind} ({gens})"


def _ideal_payload(ideal) -> dict:
    out = ideal.to_json()
    out["generators_text"] = [str(g) for g in ideal.generators()]
    return out


def cmd_classify(args):
    p, siegel, moved, branches, classes, smooth = _pipeline(args)
    if smooth is not None:
        return ({"smooth": smooth.to_json()},
                f"simple zero: verdict {smooth.verdict}", EXIT_OK)
    payload = {"classes": [c.to_json() for c in classes],
               "transported": moved}
    lines = [_class_line(b, c) for b, c in zip(branches, classes)]
    return payload, "\n".join(lines), EXIT_OK


def cmd_branches(args):
    p, siegel, moved, branches, classes, smooth = _pipeline(args)
    if smooth is not None:
        raise InputError("branch expansion needs the two-variable model")
    payload = {"branches": [b.to_json() for b in branches],
               "transported": moved}
    lines = []
    for b in branches:
        lines.append(f"M={b.M}, c={b.c}, multiplicity {b.multiplicity}, "
                     f"phi = {b.phi}")
    return payload, "\n".join(lines), EXIT_OK


def cmd_ideal(args):
    p = parse_poly(args.poly, backend=args.backend)
    siegel, moved = _as_siegel(p)
    ideal = ideal_for(siegel, args.order, args.tol)
    payload = {"ideal": _ideal_payload(ideal), "transported": moved}
    return payload, _ideal_line(ideal), EXIT_OK


def cmd_member(args):
    p = parse_poly(args.denominator, backend=args.backend)
    siegel, moved = _as_siegel(p)
    domain = "siegel" if not moved else "ball"
    q = parse_poly(args.numerator, backend=args.backend,
                   dim=p.dim, domain=domain)
    q_siegel = transport_ball_to_siegel(q) if moved else q
    ideal = ideal_for(siegel, args.order, args.tol)
    verdict = is_member(q_siegel, ideal, tol=args.tol)
    payload = {"member": verdict, "ideal": _ideal_payload(ideal),
               "transported": moved}
    lines = [f"member: {str(verdict).lower()}"]
    if not verdict:
        try:
            curve = unboundedness_witness(q_siegel, siegel, ideal, tol=args.tol)
            payload["witness_curve"] = curve.to_json()
            lines.append(f"unbounded along: {curve.description}")
        except NumericalDegeneracy as exc:
            payload["witness_curve"] = None
            lines.append(f"witness search failed: {exc}")
    return payload, "\n".join(lines), EXIT_OK


def cmd_transport(args):
    p = parse_poly(args.poly, backend=args.backend)
    if args.to == "siegel":
        if p.names[-1] == "w":
            raise InputError("polynomial is already in Siegel coordinates")
        out = transport_ball_to_siegel(p)
    else:
        if p.names[-1] != "w":
            raise InputError("polynomial is already in ball coordinates")
        out = transport_siegel_to_ball(p)
    return ({"result": _poly_payload(out)}, str(out), EXIT_OK)


# ---------------------------------------------------------------------------
# constructors


def cmd_construct_pc(args):
    c = _parse_scalar(args.c, args.backend)
    p = cons.family_Pc(c)
    certified = _rational_in_range(c, Fraction(0), cons.PC_STABLE_MAX)
    payload = {"result": _poly_payload(p), "c": str(c),
               "certified_stable_range": f"0 <= c <= {cons.PC_STABLE_MAX}",
               "in_certified_range": certified}
    text = str(p) + ("" if certified else
                     f"\nnote: c outside the certified range "
                     f"[0, {cons.PC_STABLE_MAX}]")
    return payload, text, EXIT_OK


def cmd_construct_qc(args):
    c = _parse_scalar(args.c, args.backend)
    p = cons.family_Qc(c)
    certified = _rational_in_range(c, Fraction(0), cons.QC_STABLE_SUFFICIENT)
    sharp = _rational_in_range(c, Fraction(0), cons.QC_STABLE_SHARP)
    payload = {"result": _poly_payload(p), "c": str(c),
               "certified_stable_range": f"0 <= c <= {cons.QC_STABLE_SUFFICIENT}",
               "sharp_bound": str(cons.QC_STABLE_SHARP),
               "in_certified_range": certified,
               "within_sharp_bound": sharp}
    text = str(p)
    if not certified:
        text += (f"\nnote: c outside the certified range "
                 f"[0, {cons.QC_STABLE_SUFFICIENT}]"
                 + ("" if not sharp else
                    f" (but within the sharp bound {cons.QC_STABLE_SHARP})"))
    return payload, text, EXIT_OK


def cmd_construct_rudin(args):
    gs = [_parse_scalar(t, args.backend) for t in args.gs.split(",")]
    p = cons.rudin_poly(gs, args.tol)
    payload = {"result": _poly_payload(p),
               "bounds": [str(b) for b in cons.rudin_coefficients(len(gs))]}
    text = str(p)
    if args.analyze:
        rep = cons.rudin_analysis(gs, args.order, args.tol)
        payload["class"] = rep.branch_class.to_json()
        payload["K"] = rep.K
        text += f"\nclass: {rep.branch_class.tag}" + (
            f", K={rep.K}" if rep.K is not None else "")
    return payload, text, EXIT_OK


def cmd_construct_quadform(args):
    rows = json.loads(args.matrix)
    A = [[_parse_entry(x, args.backend) for x in row] for row in rows]
    p, rep = cons.quadratic_form_poly(A, args.tol)
    payload = {"result": _poly_payload(p), "takagi": rep.to_json()}
    lines = [str(p),
             f"singular values: {[f'{d:.12g}' for d in rep.D]}",
             f"verdict: {rep.verdict} (residual {rep.residual:.3e})"]
    if rep.siegel is not None:
        lines.append(f"siegel model: {rep.siegel}")
    return payload, "\n".join(lines), EXIT_OK


def cmd_construct_rowdet(args):
    if args.planted:
        d, n = (int(x) for x in args.planted.split(","))
        rc, zeta = cons.planted_rowdet(d, n, args.seed)
        planted = [{"re": z.real, "im": z.imag} for z in zeta]
    else:
        mats = json.loads(args.matrices)
        rc = cons.RowContraction(tuple(
            [[_parse_entry(x, "float") for x in row] for row in m]
            for m in mats))
        planted = None
    p = cons.rowdet_poly(rc)
    payload = {"result": _poly_payload(p), "contraction": rc.to_json()}
    if planted is not None:
        payload["planted_zero"] = planted
    lines = [str(p)]
    if args.factor:
        zeros, residual = cons.rowdet_factor(p, rc, seed=args.seed)
        payload["zeros"] = [
            {"zeta": [{"re": z.real, "im": z.imag} for z in zt],
             "multiplicity": m} for zt, m in zeros]
        payload["residual"] = _poly_payload(residual)
        for zt, m in zeros:
            lines.append(f"boundary zero (multiplicity {m}): "
                         + ", ".join(f"{z:.12g}" for z in zt))
        lines.append(f"residual: {residual}")
    return payload, "\n".join(lines), EXIT_OK


def cmd_construct_param(args):
    c = _parse_scalar(args.c, args.backend)
    L = parse_series(args.l, backend=args.backend, order=args.order)
    pc = cons.make_param(args.m, c, L, order=args.order, tol=args.tol)
    payload = {"curve": pc.to_json()}
    lines = [f"z(s) = {pc.z_series}",
             f"w(s) = {pc.w_series}",
             f"condition: {pc.condition}, injective: {pc.injective}"]
    return payload, "\n".join(lines), EXIT_OK


def cmd_construct_lift(args):
    coeffs = [_parse_scalar(t, args.backend) for t in args.coeffs.split(",")]
    p = cons.one_variable_lift(coeffs, args.dim)
    return ({"result": _poly_payload(p)}, str(p), EXIT_OK)


def cmd_check_alg_l(args):
    P = parse_sy_poly(args.poly, backend=args.backend)
    rep = cons.check_algebraic_L(P, args.m, tol=args.tol)
    payload = {"report": rep.to_json()}
    lines = [
        f"extreme y-coefficients monomial: {rep.monomial_ends}",
        f"branch through (0,1) admissible: {rep.branch_gate} "
        f"(kind {rep.branch_kind}"
        + (f", K={rep.K}" if rep.K is not None else "") + ")",
        f"no critical term at infinity: {rep.no_critical_term_at_infinity}",
    ]
    for idx, coef in rep.offending:
        lines.append(f"  continuation {idx}: s^{2 * args.m + 1} coefficient "
                     f"{coef:.12g}")
    lines.append(f"verdict: {'pass' if rep.passed else 'fail'} "
                 "(irreducibility assumed, not verified)")
    return payload, "\n".join(lines), EXIT_OK


# ---------------------------------------------------------------------------
# verification


def cmd_verify_scan(args):
    p = parse_poly(args.poly, backend=args.backend)
    domain = args.domain or ("siegel" if p.names[-1] == "w" else "ball")
    cfg = ver.SampleConfig(seed=args.seed, count=args.count,
                           radius=args.radius, domain=domain,
                           strategy=args.strategy, tol=args.tol)
    rep = ver.stability_scan(p, cfg)
    if args.plot:
        from .plots import plot_scan
        plot_scan(rep, args.plot)
    where = ", ".join(f"{x:.6g}" for x in rep.argmin)
    text = (f"samples in domain: {rep.in_domain}\n"
            f"min |p|: {rep.min_abs:.6e} at ({where})\n"
            f"zero hits (|p| < {cfg.tol:g}): {len(rep.zero_hits)}")
    header = []
    for j, name in enumerate(p.names):
        header += [f"{name}_re", f"{name}_im"]
    rows = [[x for z in pt for x in (z.real, z.imag)] for pt in rep.zero_hits]
    return {"report": rep.to_json()}, text, EXIT_OK, (header, rows)


def cmd_verify_gfit(args):
    p = parse_poly(args.poly, backend=args.backend)
    siegel, _ = _as_siegel(p)
    branches, classes = _classified_branches(siegel, args.order, args.tol, 512)
    i = args.branch_index
    if not 0 <= i < len(branches):
        raise InputError(f"branch index {i} out of range")
    rep = ver.g_exponent_fit(branches[i], classes[i][0], tol=args.tol)
    if args.plot:
        from .plots import plot_gfit
        plot_gfit(rep, args.plot)
    text = (f"fitted exponent: {rep.exponent:.4f} (expected {rep.expected}, "
            f"{rep.mode} mode, max fit residual {rep.max_fit_residual:.2e})")
    return ({"report": rep.to_json()}, text, EXIT_OK,
            (["r", "defect"], list(rep.rows())))


def cmd_verify_probe(args):
    p = parse_poly(args.denominator, backend=args.backend)
    domain = "siegel" if p.names[-1] == "w" else "ball"
    q = parse_poly(args.numerator, backend=args.backend,
                   dim=p.dim, domain=domain)
    if args.curve == "vertical":
        curve = WitnessCurve("vertical", p.dim, "vertical ray z=0, w=ir^2")
    else:
        m = p.dim - 1
        if args.direction:
            direction = tuple(complex(_parse_entry(t.strip(), "float"))
                              for t in args.direction.split(","))
        else:
            direction = (1.0 + 0j,) + (0j,) * (m - 1) if m else ()
        curve = WitnessCurve("ball_tangent", p.dim,
                             "tangent arc to the sphere", _data=(direction,))
    rep = ver.boundedness_probe(q, p, curve)
    if args.plot:
        from .plots import plot_probe
        plot_probe(rep, args.plot)
    text = f"verdict: {rep.verdict}"
    if rep.rate is not None:
        text += f" (defect exponent {rep.rate:.4f})"
    return ({"report": rep.to_json()}, text, EXIT_OK,
            (["r", "abs_q", "abs_p", "ratio"], [list(r) for r in rep.rows]))


def cmd_verify_trace(args):
    if bool(args.poly) == bool(args.closed_form):
        raise InputError("give exactly one of --poly or --closed-form")
    if args.closed_form:
        p = parse_poly("w + w^2 - z^2", backend="exact")
        rep = ver.trace_boundary_curve(ver.lemniscate_closed_form,
                                       args.points, p=p, tol=args.tol)
    else:
        p = parse_poly(args.poly, backend=args.backend)
        siegel, _ = _as_siegel(p)
        branches, classes = _classified_branches(siegel, args.order,
                                                 args.tol, 512)
        curves = [(b, c) for b, (c, _) in zip(branches, classes)
                  if c.tag == "Curve"]
        if not curves:
            raise UnsettledCase("no curve-type branch to trace")
        pc = ver.curve_from_branch(curves[0][0], curves[0][1], tol=args.tol)
        rep = ver.trace_boundary_curve(pc, args.points, p=siegel,
                                       tol=max(args.tol, 1e-9),
                                       s_max=args.smax)
    if args.plot:
        from .plots import plot_trace
        plot_trace(rep, args.plot)
    text = (f"{len(rep.rows)} points\n"
            f"max |Im w - |z|^2|: {rep.max_boundary_residual:.3e}\n"
            + (f"max |p|: {rep.max_p_residual:.3e}"
               if rep.max_p_residual is not None else ""))
    return ({"report": rep.to_json()}, text, EXIT_OK,
            (rep.csv_header(), list(rep.csv_rows())))


# ---------------------------------------------------------------------------
# dispatch


def _emit(args, payload, text, table=None) -> None:
    fmt = getattr(args, "format", "text")
    if fmt == "csv":
        if table is None:
            raise InputError("this command has no delimited output; "
                             "use --format text or json")
        header, rows = table
        if args.out:
            ver.write_csv(args.out, header, rows)
        else:
            sys.stdout.write(ver.csv_text(header, rows))
        return
    body = json.dumps(payload, indent=2) if fmt == "json" else text
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(body + "\n")
    else:
        print(body)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
        if len(result) == 4:
            payload, text, code, table = result
        else:
            payload, text, code = result
            table = None
        _emit(args, payload, text, table)
        return code
    except UnsettledCase as exc:
        print(f"unsettled: {exc}", file=sys.stderr)
        return EXIT_UNSETTLED
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NumericalDegeneracy as exc:
        print(f"numeric degeneracy: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except StablePolyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
