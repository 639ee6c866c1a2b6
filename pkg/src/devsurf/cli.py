"""Command-line interface.

Subcommands:

* ``devsurf implicit <expr|file>``    analyze an implicit surface F(x, y, z)
* ``devsurf parametric <expr|file>``  analyze a rational map P(s, t)
* ``devsurf verify <F> <P>``          exact substitution check
* ``devsurf mesh <P> --s a:b --t a:b --res N``  sample a map to a mesh

Reports are single JSON documents on stdout (``--pretty`` switches to a
human-readable rendering).  Exit codes: 0 rational developable surface
with a verified parametrization, 1 input error, 2 developable but
unsupported / not rational / degenerate input, 3 not developable,
4 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction
from typing import Optional

from .errors import DegenerateInputError, DevsurfError
from .exprs import ParseError, parse_map, parse_poly, print_map, print_poly, print_ratfunc
from .implicit import NOT_DEVELOPABLE, analyze_implicit
from .parametric import analyze_parametric
from .ratfunc import substitute_map

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_UNSUPPORTED = 2
EXIT_NOT_DEVELOPABLE = 3
EXIT_VERIFY_FAILED = 4


def _read_source(value: str) -> str:
    if os.path.exists(value) and os.path.isfile(value):
        with open(value, "r", encoding="utf-8") as fh:
            return fh.read().strip()
    return value


def _classification_dict(cls) -> dict:
    return {
        "tag": cls.tag,
        "apex": [str(a) for a in cls.apex] if cls.apex is not None else None,
        "direction": [str(d) for d in cls.direction] if cls.direction is not None else None,
        "edge_system": [print_poly(p) for p in cls.edge_system] if cls.edge_system else None,
        "note": cls.note,
    }


def _param_dict(result) -> Optional[dict]:
    if result is None:
        return None
    return {
        "kind": result.kind,
        "p0": print_map(result.p0),
        "p1": print_map(result.p1),
        "surface_map": print_map(result.full_map()),
        "refined": result.refined,
        "verified": result.verified,
    }


def _render_pretty(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    if "error" in report:
        lines.append(f"input: {report.get('input', '')}")
        lines.append(f"error: {report['error']}")
        lines.append(f"exit code: {report['exit_code']}")
        return "\n".join(lines)
    lines.append(f"input: {report['input']}")
    cls = report["classification"]
    lines.append(f"classification: {cls['tag']}")
    if cls.get("apex"):
        lines.append(f"  apex: ({', '.join(cls['apex'])})")
    if cls.get("direction"):
        lines.append(f"  ruling direction: ({', '.join(cls['direction'])})")
    if cls.get("edge_system"):
        lines.append("  cuspidal edge system:")
        for p in cls["edge_system"]:
            lines.append(f"    {p} = 0")
    if cls.get("note"):
        lines.append(f"  note: {cls['note']}")
    lines.append(f"developability form: {report['k_poly']}")
    param = report.get("parametrization")
    if param:
        lines.append(f"parametrization ({param['kind']}, verified={param['verified']}):")
        lines.append(f"  P0(t) = {param['p0']}")
        lines.append(f"  P1(t) = {param['p1']}")
        lines.append(f"  P(s,t) = {param['surface_map']}")
    if report.get("implicit_equation"):
        lines.append(f"implicit equation of rebuilt surface: {report['implicit_equation']} = 0")
    lines.append(f"verification: {report['verification']}")
    if report.get("failure"):
        lines.append(f"failure: {report['failure']}")
    lines.append(f"exit code: {report['exit_code']}")
    return "\n".join(lines)


def _emit(report: dict, pretty: bool) -> None:
    if pretty:
        print(_render_pretty(report))
    else:
        print(json.dumps(report))


def _analyze_implicit_source(src: str, args) -> dict:
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    F = parse_poly(src, allowed_vars=("x", "y", "z"))
    if F.is_constant():
        raise ParseError("implicit surface polynomial is constant", 1, 1)
    timings["parse_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    t0 = time.perf_counter()
    analysis = analyze_implicit(
        F,
        plane_budget=args.plane_budget,
        point_budget=args.point_search_budget,
        refine=not args.no_refine,
    )
    timings["analyze_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    cls = analysis.classification
    if cls.tag == NOT_DEVELOPABLE:
        code = EXIT_NOT_DEVELOPABLE
        verification = "K(x, y, z) does not vanish on the surface"
    elif analysis.parametrization is not None:
        code = EXIT_OK
        verification = analysis.parametrization.certificate
    else:
        code = EXIT_UNSUPPORTED
        verification = "developable, but no rational parametrization was produced"
    report = {
        "command": "implicit",
        "input": print_poly(F),
        "classification": _classification_dict(cls),
        "k_poly": print_poly(analysis.k_poly),
        "parametrization": _param_dict(analysis.parametrization),
        "implicit_equation": None,
        "verification": verification,
        "failure": analysis.failure,
        "exit_code": code,
        "timings_ms": timings,
    }
    return report


def _analyze_parametric_source(src: str, args) -> dict:
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    P = parse_map(src, params=("s", "t"))
    timings["parse_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    t0 = time.perf_counter()
    analysis = analyze_parametric(
        P,
        plane_budget=args.plane_budget,
        point_budget=args.point_search_budget,
        refine=not args.no_refine,
    )
    timings["analyze_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    cls = analysis.classification
    if cls.tag == NOT_DEVELOPABLE:
        code = EXIT_NOT_DEVELOPABLE
        verification = "K(s, t) is not identically zero"
    elif analysis.parametrization is not None:
        code = EXIT_OK
        verification = analysis.parametrization.certificate
    else:
        code = EXIT_UNSUPPORTED
        verification = "developable, but no rational reparametrization was produced"
    report = {
        "command": "parametric",
        "input": print_map(P),
        "classification": _classification_dict(cls),
        "k_poly": print_ratfunc(analysis.k_func),
        "parametrization": _param_dict(analysis.parametrization),
        "implicit_equation": print_poly(analysis.implicit_equation)
        if analysis.implicit_equation is not None
        else None,
        "verification": verification,
        "failure": analysis.failure,
        "exit_code": code,
        "timings_ms": timings,
    }
    return report


def _run_one(kind: str, src: str, args) -> dict:
    try:
        if kind == "implicit":
            return _analyze_implicit_source(src, args)
        return _analyze_parametric_source(src, args)
    except ParseError as err:
        return {
            "command": kind,
            "input": src,
            "error": str(err),
            "exit_code": EXIT_INPUT,
            "timings_ms": {},
        }
    except DegenerateInputError as err:
        return {
            "command": kind,
            "input": src,
            "error": str(err),
            "exit_code": EXIT_UNSUPPORTED,
            "timings_ms": {},
        }
    except (DevsurfError, ZeroDivisionError) as err:
        return {
            "command": kind,
            "input": src,
            "error": str(err),
            "exit_code": EXIT_UNSUPPORTED,
            "timings_ms": {},
        }


def _cmd_analyze(kind: str, args) -> int:
    sources = [_read_source(v) for v in args.source]
    if args.jobs > 1 and len(sources) > 1:
        import concurrent.futures

        with concurrent.futures.ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_WorkerJob(kind, args), sources))
    else:
        reports = [_run_one(kind, src, args) for src in sources]
    code = 0
    for report in reports:
        if "error" in report:
            out = dict(report)
            _emit(out, args.pretty)
        else:
            _emit(report, args.pretty)
        code = max(code, report["exit_code"])
    return code


class _WorkerJob:
    """Picklable helper for --jobs fan-out."""

    def __init__(self, kind: str, args):
        self.kind = kind
        self.plane_budget = args.plane_budget
        self.point_search_budget = args.point_search_budget
        self.no_refine = args.no_refine

    def __call__(self, src: str) -> dict:
        ns = argparse.Namespace(
            plane_budget=self.plane_budget,
            point_search_budget=self.point_search_budget,
            no_refine=self.no_refine,
        )
        return _run_one(self.kind, src, ns)


def _cmd_verify(args) -> int:
    try:
        F = parse_poly(_read_source(args.surface), allowed_vars=("x", "y", "z"))
        src = _read_source(args.parametrization)
        P = parse_map(src, params=("s", "t"))
    except ParseError as err:
        print(json.dumps({"command": "verify", "error": str(err), "exit_code": EXIT_INPUT}))
        return EXIT_INPUT
    residue = substitute_map(F, P)
    ok = residue.is_zero()
    report = {
        "command": "verify",
        "surface": print_poly(F),
        "parametrization": print_map(P),
        "exact_zero": ok,
        "residue": "0" if ok else print_ratfunc(residue),
        "exit_code": EXIT_OK if ok else EXIT_VERIFY_FAILED,
    }
    _emit(report, args.pretty)
    return report["exit_code"]


def _parse_range(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(":")
    if len(parts) != 2:
        raise ValueError(f"range must look like a:b, got {text!r}")
    lo, hi = Fraction(parts[0]), Fraction(parts[1])
    if lo >= hi:
        raise ValueError("range lower bound must be below the upper bound")
    return lo, hi


def _cmd_mesh(args) -> int:
    try:
        P = parse_map(_read_source(args.parametrization), params=("s", "t"))
        s_lo, s_hi = _parse_range(args.s)
        t_lo, t_hi = _parse_range(args.t)
        if args.res < 1:
            raise ValueError("resolution must be a positive integer")
    except (ParseError, ValueError) as err:
        print(json.dumps({"command": "mesh", "error": str(err), "exit_code": EXIT_INPUT}))
        return EXIT_INPUT
    n = args.res
    index = {}
    vertices = []
    skipped = 0
    for i in range(n):
        sval = s_lo if n == 1 else s_lo + (s_hi - s_lo) * Fraction(i, n - 1)
        for j in range(n):
            tval = t_lo if n == 1 else t_lo + (t_hi - t_lo) * Fraction(j, n - 1)
            pt = P.eval_all({"s": sval, "t": tval})
            if pt is None:
                skipped += 1
                continue
            index[(i, j)] = len(vertices) + 1
            vertices.append(pt)
    if not vertices:
        print(json.dumps({"command": "mesh", "error": "every grid point hits a pole", "exit_code": EXIT_UNSUPPORTED}))
        return EXIT_UNSUPPORTED
    lines = [f"# devsurf mesh: {len(vertices)} vertices, {skipped} pole skips"]
    for pt in vertices:
        coords = " ".join(format(float(v), ".12g") for v in pt)
        lines.append(f"v {coords}")
    faces = 0
    for i in range(n - 1):
        for j in range(n - 1):
            corners = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)]
            if all(c in index for c in corners):
                lines.append("f " + " ".join(str(index[c]) for c in corners))
                faces += 1
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(
            json.dumps(
                {
                    "command": "mesh",
                    "vertices": len(vertices),
                    "faces": faces,
                    "pole_skips": skipped,
                    "out": args.out,
                    "exit_code": EXIT_OK,
                }
            )
        )
    else:
        sys.stdout.write(text)
        if skipped:
            print(f"# warning: {skipped} grid points hit poles", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="devsurf",
        description="Exact developability analysis and rational parametrization of algebraic surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--pretty", action="store_true", help="human-readable report instead of JSON")
        p.add_argument("--plane-budget", type=int, default=35, help="number of candidate section planes")
        p.add_argument(
            "--point-search-budget", type=int, default=200, help="rational point search sweep budget"
        )
        p.add_argument("--no-refine", action="store_true", help="skip directrix degree reduction")
        p.add_argument("--jobs", type=int, default=1, help="parallel workers for multiple inputs")

    p_imp = sub.add_parser("implicit", help="analyze an implicit surface F(x, y, z)")
    p_imp.add_argument("source", nargs="+", help="polynomial expression or file")
    add_common(p_imp)

    p_par = sub.add_parser("parametric", help="analyze a rational parametrization P(s, t)")
    p_par.add_argument("source", nargs="+", help="rational map expression or file")
    add_common(p_par)

    p_ver = sub.add_parser("verify", help="check a parametrization against an implicit surface")
    p_ver.add_argument("surface", help="implicit polynomial expression or file")
    p_ver.add_argument("parametrization", help="rational map expression or file")
    p_ver.add_argument("--pretty", action="store_true")

    p_mesh = sub.add_parser("mesh", help="sample a rational map to a vertex/face mesh")
    p_mesh.add_argument("parametrization", help="rational map expression or file")
    p_mesh.add_argument("--s", required=True, help="s range a:b (rationals)")
    p_mesh.add_argument("--t", required=True, help="t range a:b (rationals)")
    p_mesh.add_argument("--res", type=int, required=True, help="grid resolution per axis")
    p_mesh.add_argument("--out", help="output file (default: stdout)")
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    # join range flags with their values so negative bounds parse: --t -3:3
    joined = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--s", "--t") and i + 1 < len(argv):
            joined.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            joined.append(tok)
            i += 1
    args = build_parser().parse_args(joined)
    if args.command == "implicit":
        return _cmd_analyze("implicit", args)
    if args.command == "parametric":
        return _cmd_analyze("parametric", args)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "mesh":
        return _cmd_mesh(args)
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
