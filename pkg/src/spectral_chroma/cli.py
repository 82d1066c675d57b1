"""Command-line front end: bound tables, sweeps, certificates, corpora.

Exit codes: 0 success, 1 usage error, 2 computation or domain error,
3 verification failure (a residual or soundness breach).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .bounds import (
    BoundId,
    BoundReport,
    full_report,
    generalized_sweep,
    normalized_sweep,
    round_display,
)
from .certify import (
    Coloring,
    build_conversion,
    verify_loan_identity,
    verify_majorization_step,
)
from .errors import (
    DomainError,
    NumericError,
    ParseError,
    VerificationError,
)
from .experiments import (
    DEFAULT_NAMED,
    comparison_csv,
    comparison_json,
    named_comparison,
    random_table,
    random_table_csv,
    random_table_json,
    report_json_payload,
    resolve_graph_input,
)
from .graphs import Graph, GraphMatrixKind, build_matrix
from .linalg import graph_spectrum
from .oracle import all_graphs, chromatic_number, colorable_with, greedy_coloring

_THREADS_ENV = "SPECTRAL_CHROMA_THREADS"
_SOUNDNESS_SLACK = 1e-6
_CERT_RESIDUAL_LIMIT = 1e-10

_SWEEPABLE = (
    BoundId.GEN_HOFFMAN,
    BoundId.GEN_NIKIFOROV,
    BoundId.GEN_KOLOTILINA_1,
    BoundId.GEN_KOLOTILINA_2,
    BoundId.GEN_NORMALIZED_HOFFMAN,
)
_SHOW_M = set(_SWEEPABLE) | {BoundId.INTEGER_C}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: D102 - argparse hook
        raise _UsageError(message)


def _thread_count() -> int:
    raw = os.environ.get(_THREADS_ENV)
    if raw is None:
        return os.cpu_count() or 1
    try:
        count = int(raw)
    except ValueError:
        raise DomainError(f"{_THREADS_ENV} must be an integer, got {raw!r}") from None
    if count < 1:
        raise DomainError(f"{_THREADS_ENV} must be >= 1, got {count}")
    return count


def _ordered_map(fn, items):
    """Apply fn across items, preserving order; thread count from the env."""

    workers = _thread_count()
    if workers == 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=16))


# --------------------------------------------------------------------------
# per-command handlers


def _report_lines(report: BoundReport) -> list[str]:
    lines = [f"graph {report.graph_id} n={report.n} edges={report.edge_count}"]
    for value in report.values:
        if not value.valid:
            lines.append(f"{value.id.value} n/a")
        elif value.id in _SHOW_M:
            lines.append(
                f"{value.id.value} {report.display(value.id)} m={value.best_m}"
            )
        else:
            lines.append(f"{value.id.value} {report.display(value.id)}")
    return lines


def _cmd_bounds(args) -> int:
    g = resolve_graph_input(args.input)
    report = full_report(g)
    if args.json:
        print(json.dumps(report_json_payload(report), indent=2))
    else:
        print("\n".join(_report_lines(report)))
    return 0


def _cmd_sweep(args) -> int:
    g = resolve_graph_input(args.input)
    bound_id = BoundId(args.bound)
    if bound_id is BoundId.GEN_NORMALIZED_HOFFMAN:
        column = normalized_sweep(graph_spectrum(g, GraphMatrixKind.NORMALIZED_ADJACENCY))
    else:
        spec_a = graph_spectrum(g, GraphMatrixKind.ADJACENCY)
        spec_l = graph_spectrum(g, GraphMatrixKind.LAPLACIAN)
        spec_q = graph_spectrum(g, GraphMatrixKind.SIGNLESS_LAPLACIAN)
        column = generalized_sweep(spec_a, spec_l, spec_q)[bound_id]
    print("m,value")
    for m, value in enumerate(column, start=1):
        print(f"{m}," if value is None else f"{m},{value!r}")
    return 0


def _certify_coloring(g: Graph, colors: int | None) -> Coloring:
    if colors is not None:
        col = colorable_with(g, colors)
        if col is None:
            raise DomainError(f"graph admits no proper coloring with {colors} colors")
        return col
    col = greedy_coloring(g)
    # the conversion construction needs at least two color classes; an
    # edgeless graph colors greedily with one, so widen the palette
    return col.with_palette(2) if col.c < 2 else col


def _cmd_certify(args) -> int:
    g = resolve_graph_input(args.input)
    col = _certify_coloring(g, args.colors)
    print(f"graph n={g.n} edges={g.edge_count} colors={col.c}")
    failed = False

    cert = build_conversion(g, col)  # raises VerificationError on breach
    print(f"conversion residual {cert.residual:.3e} tolerance {cert.tolerance:.3e} ok")

    a = build_matrix(g, GraphMatrixKind.ADJACENCY)
    deg = np.diag(g.degrees().astype(np.float64))
    for label, b in (("zero", np.zeros_like(a)), ("deg", deg), ("negdeg", -deg)):
        step = verify_majorization_step(a, b, col)
        state = "ok" if step.ok else "FAIL"
        print(
            f"majorization B={label} residual {step.identity_residual:.3e} "
            f"min_margin {step.spectral_margins.min():.3e} {state}"
        )
        failed |= not step.ok

    if g.edge_count >= 1:
        loan = verify_loan_identity(g, col)
        state = "ok" if loan.ok else "FAIL"
        print(
            f"loan residual {loan.identity_residual:.3e} "
            f"rayleigh {loan.rayleigh_value:.6f} {state}"
        )
        failed |= not loan.ok
    else:
        print("loan skipped (needs an edge)")

    print("FAILED" if failed else "certified")
    return 3 if failed else 0


def _cmd_chromatic(args) -> int:
    g = resolve_graph_input(args.input)
    result = chromatic_number(g)
    print(f"graph n={g.n} edges={g.edge_count}")
    print(f"chi {result.chi}")
    print("coloring " + " ".join(str(c) for c in result.witness.colors))
    return 0


def _cmd_random_table(args) -> int:
    rows = random_table(args.rows, samples=args.samples, seed_base=args.seed)
    if args.json:
        print(random_table_json(rows))
    elif args.csv:
        print(random_table_csv(rows), end="")
    else:
        print("n p samples hoffman kolo1 kolo2 bollobas")
        for row in rows:
            cells = [str(row.n), repr(row.p), str(row.samples)]
            for value in (row.hoffman_avg, row.kolo1_avg, row.kolo2_avg):
                cells.append(round_display(value))
            cells.append("-" if row.bollobas is None else round_display(row.bollobas))
            print(" ".join(cells))
    return 0


def _cmd_compare(args) -> int:
    names = list(DEFAULT_NAMED) if args.named else []
    names.extend(args.inputs)
    if not names:
        raise _UsageError("compare needs graph inputs or --named default")
    rows = named_comparison(names)
    if args.json:
        print(comparison_json(rows))
    elif args.csv:
        print(comparison_csv(rows), end="")
    else:
        blocks = []
        for row in rows:
            if row.error is not None:
                blocks.append(f"{row.name} error: {row.error}")
                continue
            chi = "?" if row.chi is None else str(row.chi)
            lines = [f"{row.name} chi={chi}"]
            lines.extend("  " + text for text in _report_lines(row.report)[1:])
            blocks.append("\n".join(lines))
        print("\n\n".join(blocks))
    return 0


def _check_graph(g: Graph) -> tuple[bool, bool]:
    """One corpus entry: (soundness ok, certification ok)."""

    report = full_report(g)
    chi = chromatic_number(g).chi
    sound = all(
        math.ceil(v.value - _SOUNDNESS_SLACK) <= chi
        for v in report.values
        if v.valid
    )

    col = greedy_coloring(g)
    if col.c < 2:
        col = col.with_palette(2)
    try:
        cert = build_conversion(g, col)
        certified = cert.residual < _CERT_RESIDUAL_LIMIT
        a = build_matrix(g, GraphMatrixKind.ADJACENCY)
        deg = np.diag(g.degrees().astype(np.float64))
        for b in (np.zeros_like(a), deg, -deg):
            certified &= verify_majorization_step(a, b, col).ok
        if g.edge_count >= 1:
            certified &= verify_loan_identity(g, col).ok
    except VerificationError:
        certified = False
    return sound, certified


def _cmd_corpus_check(args) -> int:
    unsound = 0
    uncertified = 0
    total = 0
    for n in range(1, args.max_n + 1):
        graphs = list(all_graphs(n))
        results = _ordered_map(_check_graph, graphs)
        bad_sound = sum(1 for sound, _ in results if not sound)
        bad_cert = sum(1 for _, certified in results if not certified)
        print(
            f"n={n} graphs={len(graphs)} "
            f"soundness_violations={bad_sound} certification_failures={bad_cert}"
        )
        unsound += bad_sound
        uncertified += bad_cert
        total += len(graphs)
    print(
        f"checked {total} graphs: {unsound} soundness violations, "
        f"{uncertified} certification failures"
    )
    return 3 if unsound or uncertified else 0


# --------------------------------------------------------------------------
# argument wiring


def _parse_rows(text: str) -> list[tuple[int, float]]:
    rows = []
    for chunk in text.split(","):
        parts = chunk.split(":")
        if len(parts) != 2:
            raise argparse.ArgumentTypeError(
                f"row {chunk!r} is not of the form n:p (like 20:0.5)"
            )
        try:
            rows.append((int(parts[0]), float(parts[1])))
        except ValueError:
            raise argparse.ArgumentTypeError(
                f"row {chunk!r} is not of the form n:p (like 20:0.5)"
            ) from None
    return rows


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="spectral-chroma",
        description="Spectral lower bounds on the chromatic number.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="every bound for one graph")
    p.add_argument("input", help="graph6 string, @file, or gen:family(args)")
    p.add_argument("--json", action="store_true", help="full-precision JSON")
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("sweep", help="per-m values of a generalized bound, CSV")
    p.add_argument("input")
    p.add_argument("--bound", required=True, choices=[b.value for b in _SWEEPABLE])
    p.set_defaults(handler=_cmd_sweep)

    p = sub.add_parser("certify", help="conversion and identity certificates")
    p.add_argument("input")
    p.add_argument("--colors", type=int, help="use an exact coloring with this many colors")
    p.set_defaults(handler=_cmd_certify)

    p = sub.add_parser("chromatic", help="exact chromatic number with witness")
    p.add_argument("input")
    p.set_defaults(handler=_cmd_chromatic)

    p = sub.add_parser("random-table", help="averaged bounds on random graphs")
    p.add_argument("--rows", required=True, type=_parse_rows, help="like 20:0.5,20:0.7")
    p.add_argument("--samples", type=int, default=15)
    p.add_argument("--seed", type=int, default=0)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(handler=_cmd_random_table)

    p = sub.add_parser("compare", help="bound tables across a list of graphs")
    p.add_argument("inputs", nargs="*", help="graph inputs, same forms as bounds")
    p.add_argument("--named", choices=["default"], help="include the built-in list")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(handler=_cmd_compare)

    p = sub.add_parser("corpus-check", help="exhaustive soundness and certification")
    p.add_argument("--max-n", type=int, default=7, choices=range(1, 8))
    p.set_defaults(handler=_cmd_corpus_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help prints and exits 0
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, DomainError, NumericError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
