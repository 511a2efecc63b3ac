"""Command-line driver: error curves, ratio studies, FDE solves and diagnostics.

Exit codes: 0 success, 2 usage error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys
import warnings
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .experiments import FLAVORS, METHODS, PRECISIONS, interpolation_error, ratio_study, solver_error
from .fde_solver import SolverError
from .fracderiv import RieszOrder
from .interp import DEFAULT_GRID_SIZE, InputError
from .problems import PROBLEMS, get_problem
from .specialfn import DomainError
from .superconv import C0_DEFAULT_NS, c0_decay, gjf_superconv_points, lobatto_superconv_points

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 2, 3


class UsageError(Exception):
    pass


class NumericalFailure(Exception):
    pass


def _floats(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits with 2 already; keep message format
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rieszsc", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, need_n=True):
        sp.add_argument("--alpha", type=_floats, required=True, help="order(s), comma list")
        if need_n:
            sp.add_argument("--n", type=_ints, required=True, help="N value(s), comma list")
        sp.add_argument("--out", type=Path, default=None, help="output file (default stdout)")
        sp.add_argument("--format", choices=("csv", "json"), default="csv")

    def evaluation(sp, fn_default):
        sp.add_argument("--fn", default=fn_default,
                        help=f"test function: {', '.join(PROBLEMS)} or mode:<n>")
        sp.add_argument("--grid", type=int, default=DEFAULT_GRID_SIZE, help="grid points")

    sp = sub.add_parser("error-curve", help="Riesz-derivative error of an interpolant")
    common(sp)
    evaluation(sp, "poly9")
    sp.add_argument("--flavor", choices=FLAVORS, default="lobatto")
    sp.add_argument("--precision", choices=PRECISIONS, default="extended")

    sp = sub.add_parser("ratio-study", help="gain ratios and fitted log-log slopes")
    common(sp)
    evaluation(sp, "poly9")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--flavor", choices=FLAVORS)
    g.add_argument("--method", choices=METHODS)
    sp.add_argument("--precision", choices=PRECISIONS, default="extended")

    sp = sub.add_parser("solve", help="solve the model FDE with a manufactured solution")
    common(sp)
    evaluation(sp, "fde-true")
    sp.add_argument("--method", choices=METHODS, default="pg")

    sp = sub.add_parser("c0-decay", help="weighted inner product decay diagnostic")
    common(sp, need_n=False)
    sp.add_argument("--n", type=_ints, default=list(C0_DEFAULT_NS))

    sp = sub.add_parser("superconv-points", help="dump superconvergence points")
    common(sp)
    sp.add_argument("--flavor", choices=FLAVORS, default="lobatto")
    return p


# ---------------------------------------------------------------- output


def _csv(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(_cell(v) for v in row) + "\n")
    return buf.getvalue()


def _cell(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, str):
        return v
    if v is None:
        return ""
    return "%.16e" % float(v)


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _companion(out: Path, tag: str) -> Path:
    return out.with_name(f"{out.stem}_{tag}{out.suffix}")


class _Writer:
    """Collects named outputs; the main output goes to ``--out`` or stdout."""

    def __init__(self, out: Optional[Path]):
        self.out = out
        self.files: list[tuple[Optional[Path], str]] = []

    def main(self, text: str) -> None:
        self.files.append((self.out, text))

    def side(self, tag: str, text: str) -> None:
        if self.out is not None:
            self.files.append((_companion(self.out, tag), text))

    def flush(self) -> None:
        for path, text in self.files:
            if path is None:
                sys.stdout.write(text)
            else:
                with open(path, "w", newline="\n") as fh:
                    fh.write(text)


# ---------------------------------------------------------------- validation


def _check_alpha(command: str, alphas, flavor=None, method=None) -> None:
    for a in alphas:
        try:
            RieszOrder(a)
        except DomainError as exc:
            raise UsageError(str(exc)) from None
        if flavor == "lobatto" and not 0 < a < 1:
            raise UsageError(f"lobatto flavor needs 0 < alpha < 1, got {a}")
        if method is not None and not 1 < a < 2:
            raise UsageError(f"{command} with a solver needs 1 < alpha < 2, got {a}")
        if command == "c0-decay" and not 0 < a < 2:
            raise UsageError(f"c0-decay needs 0 < alpha < 2, got {a}")


def _check_ns(ns, minimum: int) -> None:
    for n in ns:
        if n < minimum:
            raise UsageError(f"N must be >= {minimum}, got {n}")


def _problem(name: str, alpha: float):
    try:
        return get_problem(name, alpha)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None


def _finite(*arrays) -> None:
    for a in arrays:
        if not np.all(np.isfinite(a)):
            raise NumericalFailure("non-finite values in result")


# ---------------------------------------------------------------- commands


def cmd_error_curve(args, w: _Writer) -> None:
    _check_alpha("error-curve", args.alpha, flavor=args.flavor)
    _check_ns(args.n, 2 if args.flavor == "lobatto" else 1)
    if args.fn.startswith("mode:") and args.flavor == "lobatto":
        raise UsageError("mode:<n> functions are GJF-type; use --flavor gjf")
    records = []
    for a in args.alpha:
        problem = _problem(args.fn, a)
        for n in args.n:
            c = interpolation_error(args.flavor, problem, a, n, args.grid, args.precision)
            _finite(c.error, c.point_error)
            records.append(c)
    multi = len(records) > 1
    if args.format == "json":
        w.main(_json([{
            "alpha": c.alpha, "N": c.N, "flavor": c.label,
            "x": c.x.tolist(), "error": c.error.tolist(),
            "xi": c.points.points.tolist(), "error_at_xi": c.point_error.tolist(),
        } for c in records]))
        return
    lead = ("alpha", "N") if multi else ()
    w.main(_csv(lead + ("x", "error"),
                ((*((c.alpha, c.N) if multi else ()), xi, e)
                 for c in records for xi, e in zip(c.x, c.error))))
    w.side("points", _csv(lead + ("xi", "error_at_xi"),
                          ((*((c.alpha, c.N) if multi else ()), xi, e)
                           for c in records for xi, e in zip(c.points.points, c.point_error))))


def cmd_ratio_study(args, w: _Writer) -> None:
    kind = args.method or args.flavor or "lobatto"
    _check_alpha("ratio-study", args.alpha, flavor=kind if kind in FLAVORS else None,
                 method=kind if kind in METHODS else None)
    _check_ns(args.n, 2 if kind == "lobatto" else 1)
    study = ratio_study(kind, lambda a: _problem(args.fn, a), args.alpha, args.n,
                        args.grid, args.precision)
    for r in study.reports:
        if not (math.isfinite(r.global_max) and math.isfinite(r.superconv_max)):
            raise NumericalFailure("non-finite error maxima")
    if args.format == "json":
        w.main(_json({
            "records": [r.to_dict() for r in study.reports],
            "slopes": [{"alpha": a, "slope": s} for a, s in study.slopes.items()],
        }))
        return
    cols = ("alpha", "N", "flavor", "global_max", "superconv_max", "ratio")
    w.main(_csv(cols, ((r.alpha, r.N, r.flavor, r.global_max, r.superconv_max, r.ratio)
                       for r in study.reports)))
    w.side("slopes", _csv(("alpha", "slope"), study.slopes.items()))


def cmd_solve(args, w: _Writer) -> None:
    _check_alpha("solve", args.alpha, method=args.method)
    _check_ns(args.n, 1)
    results = []
    for a in args.alpha:
        problem = _problem(args.fn, a)
        for n in args.n:
            try:
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore")
                    sol, curve = solver_error(args.method, problem, a, n, args.grid)
            except SolverError as exc:
                raise NumericalFailure(str(exc)) from None
            if sol.ill_conditioned:
                raise NumericalFailure(f"condition number {sol.condition:.3e} (alpha={a}, N={n})")
            nodes = curve.points.points
            nodal = float(np.max(np.abs(problem.expansion(nodes) - sol.u(nodes))))
            _finite(sol.u.coeffs, curve.error, curve.point_error)
            results.append((sol, curve, nodal))
    if args.format == "json":
        w.main(_json([{
            "alpha": c.alpha, "N": c.N, "method": s.method,
            "coeffs": np.asarray(s.u.coeffs).tolist(),
            "condition": s.condition, "max_nodal_error": nodal,
            "ratio_report": c.ratio().to_dict(),
            "x": c.x.tolist(), "error": c.error.tolist(),
            "xi": c.points.points.tolist(), "error_at_xi": c.point_error.tolist(),
        } for s, c, nodal in results]))
        return
    multi = len(results) > 1
    lead = ("alpha", "N") if multi else ()

    def key(c):
        return (c.alpha, c.N) if multi else ()

    w.main(_csv(lead + ("x", "error"),
                ((*key(c), xi, e) for _, c, _ in results for xi, e in zip(c.x, c.error))))
    w.side("points", _csv(lead + ("xi", "error_at_xi"),
                          ((*key(c), xi, e) for _, c, _ in results
                           for xi, e in zip(c.points.points, c.point_error))))
    w.side("coeffs", _csv(lead + ("n", "coeff"),
                          ((*key(c), i, v) for s, c, _ in results for i, v in enumerate(s.u.coeffs))))
    w.side("report", _csv(("alpha", "N", "method", "global_max", "superconv_max", "ratio",
                           "condition", "max_nodal_error"),
                          ((c.alpha, c.N, s.method, r.global_max, r.superconv_max, r.ratio,
                            s.condition, nodal)
                           for s, c, nodal in results for r in (c.ratio(),))))


def cmd_c0_decay(args, w: _Writer) -> None:
    _check_alpha("c0-decay", args.alpha)
    _check_ns(args.n, 0)
    reports = [c0_decay(a, args.n) for a in args.alpha]
    if args.format == "json":
        w.main(_json([r.to_dict() for r in reports]))
        return
    w.main(_csv(("alpha", "N", "value"),
                ((r.alpha, n, v) for r in reports for n, v in zip(r.ns, r.values))))
    w.side("slopes", _csv(("alpha", "slope"), ((r.alpha, r.slope) for r in reports)))


def cmd_superconv_points(args, w: _Writer) -> None:
    _check_alpha("superconv-points", args.alpha, flavor=args.flavor)
    _check_ns(args.n, 2 if args.flavor == "lobatto" else 1)
    rows = []
    for a in args.alpha:
        for n in args.n:
            if args.flavor == "lobatto":
                pts = lobatto_superconv_points(a, n)
            else:
                try:
                    pts = gjf_superconv_points(a, n)
                except DomainError as exc:
                    raise UsageError(str(exc)) from None
            rows.extend((a, n, i, x) for i, x in enumerate(pts.points))
    if args.format == "json":
        w.main(_json([{"alpha": a, "N": n, "index": i, "xi": x} for a, n, i, x in rows]))
    else:
        w.main(_csv(("alpha", "N", "index", "xi"), rows))


COMMANDS = {
    "error-curve": cmd_error_curve,
    "ratio-study": cmd_ratio_study,
    "solve": cmd_solve,
    "c0-decay": cmd_c0_decay,
    "superconv-points": cmd_superconv_points,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    w = _Writer(args.out)
    try:
        COMMANDS[args.command](args, w)
    except UsageError as exc:
        print(f"rieszsc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericalFailure, SolverError, InputError, DomainError, FloatingPointError) as exc:
        print(f"rieszsc: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    try:
        w.flush()
    except OSError as exc:
        print(f"rieszsc: cannot write output: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
