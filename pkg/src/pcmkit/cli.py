"""Command-line interface.

Subcommands: analyze, localize, reduce, generate, reproduce, serve,
estimate-ri. Exit codes: 0 on success, 1 on validation/input errors, 2 when
the reproduce harness reports a failing row. Indicator values print with 6
decimal places; matrices print as CSV at full precision.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations
from pathlib import Path

from .analysis import analyze_matrix
from .indicators import kii, triad_inconsistencies
from .matrix import MatrixValidationError, PCMatrix
from .matrixio import format_csv, load_matrix, load_ri_table, matrix_to_dict, save_matrix
from .reduction import DEFAULT_THRESHOLD, reduce_inconsistency
from .reproduce import all_pass, format_report, golden_rows, rows_to_json
from .spectral import DEFAULT_RI_TABLE, cpc, estimate_ri, fpc


def _fmt(value: float | None) -> str:
    return "n/a" if value is None else f"{value:.6f}"


def _load_ri(path: str | None):
    return load_ri_table(path) if path else DEFAULT_RI_TABLE


def _cmd_analyze(args) -> int:
    matrix = load_matrix(args.file).matrix
    report = analyze_matrix(matrix, ri_table=_load_ri(args.ri_table), consistency_tol=args.tol)
    print(f"n            {report.n}")
    print(f"consistent   {'yes' if report.consistent else 'no'}")
    print(f"weights      {', '.join(f'{w:.6f}' for w in report.weights)}")
    print(f"lambda_max   {_fmt(report.lambda_max)}")
    print(f"CI           {_fmt(report.ci)}")
    if report.cr is None:
        print(f"CR           n/a (no RI entry for n={report.n})")
    else:
        print(f"CR           {_fmt(report.cr)}   (RI({report.n})={report.ri:g})")
    print(f"kii          {_fmt(report.kii)}")
    print(f"chain_ii     {_fmt(report.chain_ii)}")
    if report.worst_triad is None:
        print("worst triad  n/a (n < 3)")
    else:
        t = report.worst_triad
        print(
            f"worst triad  ({t.i},{t.j},{t.k})  values "
            f"({t.x:g}, {t.y:g}, {t.z:g})  ii {_fmt(report.kii)}"
        )
    return 0


def _cmd_localize(args) -> int:
    matrix = load_matrix(args.file).matrix
    if matrix.n < 3:
        print("no triads: n < 3")
        return 0
    value, triad = kii(matrix)
    print(
        f"worst triad  ({triad.i},{triad.j},{triad.k})  values "
        f"({triad.x:g}, {triad.y:g}, {triad.z:g})  ii {value:.6f}"
    )
    scores = triad_inconsistencies(matrix)
    ranked = sorted(
        (
            (float(v), (i + 1, j + 1, k + 1))
            for (i, j, k), v in zip(combinations(range(matrix.n), 3), scores)
            if v > args.tol
        ),
        key=lambda item: (-item[0], item[1]),
    )
    if not ranked:
        print("no inconsistent triads above tolerance")
        return 0
    print(f"inconsistent triads ({len(ranked)}), worst first:")
    for v, (i, j, k) in ranked[:20]:
        print(f"  ({i},{j},{k})  ii {v:.6f}")
    if len(ranked) > 20:
        print(f"  ... {len(ranked) - 20} more")
    return 0


def _cmd_reduce(args) -> int:
    matrix = load_matrix(args.file).matrix
    trace = reduce_inconsistency(matrix, threshold=args.threshold, max_steps=args.max_steps)
    for num, step in enumerate(trace.steps, start=1):
        t = step.triad
        print(
            f"step {num}: triad ({t.i},{t.j},{t.k})  cell "
            f"({step.changed_cell[0]},{step.changed_cell[1]})  "
            f"{step.old_value:g} -> {step.new_value:g}  "
            f"kii {step.kii_before:.6f} -> {step.kii_after:.6f}"
        )
    status = "yes" if trace.converged else "no"
    print(f"converged: {status} (kii {trace.final_kii:.6f}, threshold {trace.threshold:.6f})")
    if args.output:
        save_matrix(trace.final_matrix, args.output)
        print(f"final matrix written to {args.output}")
    else:
        print("final matrix:")
        print(format_csv(trace.final_matrix), end="")
    return 0


def _generate(args) -> PCMatrix:
    if args.family == "cpc":
        return cpc(args.x, args.n)
    return fpc(args.x, args.n)


def _cmd_generate(args) -> int:
    matrix = _generate(args)
    if args.output:
        save_matrix(matrix, args.output)
        print(f"matrix written to {args.output}")
    elif args.json:
        print(json.dumps(matrix_to_dict(matrix)))
    else:
        print(format_csv(matrix), end="")
    return 0


def _cmd_reproduce(args) -> int:
    rows = golden_rows(ri_table=_load_ri(args.ri_table))
    if args.json:
        print(rows_to_json(rows))
    else:
        print(format_report(rows))
    return 0 if all_pass(rows) else 2


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    # serves the web UI too when a built frontend sits next to the workdir
    app = create_app(ri_table=_load_ri(args.ri_table), frontend_dir=Path("frontend/dist"))
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def _cmd_estimate_ri(args) -> int:
    value = estimate_ri(args.n, samples=args.samples, rng=args.seed)
    print(f"estimated RI({args.n}) over {args.samples} samples: {value:.6f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pcmkit",
        description="Inconsistency analysis for pairwise comparison matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="print all indicators for a matrix file")
    p.add_argument("file", type=Path)
    p.add_argument("--ri-table", help="JSON file mapping n to RI values")
    p.add_argument("--tol", type=float, default=1e-9, help="relative consistency tolerance")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("localize", help="rank inconsistent triads, worst first")
    p.add_argument("file", type=Path)
    p.add_argument("--tol", type=float, default=0.0, help="only list triads with ii above this")
    p.set_defaults(func=_cmd_localize)

    p = sub.add_parser("reduce", help="repair worst triads until kii is acceptable")
    p.add_argument("file", type=Path)
    p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    p.add_argument("--max-steps", type=int, default=None)
    p.add_argument("--output", type=Path, default=None, help="write the final matrix here")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("generate", help="emit a cpc or fpc family matrix")
    p.add_argument("family", choices=["cpc", "fpc"])
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true", help="print JSON instead of CSV")
    p.add_argument("--output", type=Path, default=None)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("reproduce", help="recompute and check all golden numbers")
    p.add_argument("--json", action="store_true")
    p.add_argument("--ri-table", help="JSON file mapping n to RI values")
    p.set_defaults(func=_cmd_reproduce)

    p = sub.add_parser("serve", help="run the HTTP JSON service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--ri-table", help="JSON file mapping n to RI values")
    p.set_defaults(func=_cmd_serve)

    p = sub.add_parser("estimate-ri", help="Monte-Carlo estimate of a random-index value")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=_cmd_estimate_ri)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (MatrixValidationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
