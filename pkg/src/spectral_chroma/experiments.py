"""Comparison tables: named graphs, random-graph averages, machine formats.

Reproduces the two published comparison exercises: per-graph bound
tables for a fixed list of named generators, and averaged Hoffman /
Kolotilina values over random G(n, p) samples next to the deterministic
Bollobas estimate. Everything is seeded explicitly and reduces in a
fixed order, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .bounds import (
    BoundId,
    BoundReport,
    classical_bounds,
    full_report,
    round_display,
)
from .errors import DomainError, SpectralChromaError
from .graphs import Graph, GraphMatrixKind, generate_from_spec, parse_edge_list, parse_graph6, random_gnp
from .linalg import graph_spectrum
from .oracle import chromatic_number

_ORACLE_N_LIMIT = 24


def bollobas_estimate(n: int, p: float) -> float:
    """Asymptotic chromatic estimate 0.5 n / log_b(n), b = 1/(1-p).

    The vanishing correction term is dropped, matching the printed
    column this reproduces.
    """

    if n < 2:
        raise DomainError(f"estimate needs n >= 2, got {n}")
    if not 0.0 < p < 1.0:
        raise DomainError(f"estimate needs 0 < p < 1, got {p}")
    b = 1.0 / (1.0 - p)
    return 0.5 * n / (math.log(n) / math.log(b))


@dataclass(frozen=True)
class RandomTableRow:
    """One (n, p) row of averaged classical bounds over sampled graphs.

    bollobas is None at p = 1, where the estimate's formula is
    undefined but the averaged columns still make sense.
    """

    n: int
    p: float
    hoffman_avg: float
    kolo1_avg: float
    kolo2_avg: float
    bollobas: float | None
    samples: int
    seed_base: int
    regenerated: tuple[tuple[int, int], ...] = field(default_factory=tuple)
    # (sample index, auxiliary seed) pairs for edgeless draws that were redrawn


_REDRAW_CAP = 1000


def _sample_graph(n: int, p: float, seed_base: int, index: int, samples: int,
                  aux_counter: list[int], regenerated: list[tuple[int, int]]) -> Graph:
    g = random_gnp(n, p, seed_base + index)
    while g.edge_count == 0:
        if aux_counter[0] >= _REDRAW_CAP:
            raise DomainError(
                f"gave up after {_REDRAW_CAP} edgeless redraws at n={n}, p={p}"
            )
        aux_seed = seed_base + samples + aux_counter[0]
        aux_counter[0] += 1
        regenerated.append((index, aux_seed))
        g = random_gnp(n, p, aux_seed)
    return g


def random_table(
    rows: list[tuple[int, float]], samples: int, seed_base: int
) -> list[RandomTableRow]:
    """Averaged Hoffman / Kolotilina1 / Kolotilina2 per (n, p) cell.

    Sample index i uses seed seed_base + i. An edgeless draw (possible
    at tiny p) is replaced using auxiliary seeds seed_base + samples,
    seed_base + samples + 1, ... and the substitution is recorded on
    the row. Averages use compensated summation so the reduction order
    cannot shift results.
    """

    if samples < 1:
        raise DomainError(f"need at least one sample, got {samples}")
    out = []
    for n, p in rows:
        if n < 2:
            raise DomainError(f"table rows need n >= 2, got {n}")
        if not 0.0 < p <= 1.0:
            raise DomainError(f"table rows need 0 < p <= 1, got {p}")
        hoffman: list[float] = []
        kolo1: list[float] = []
        kolo2: list[float] = []
        aux_counter = [0]
        regenerated: list[tuple[int, int]] = []
        for i in range(samples):
            g = _sample_graph(n, p, seed_base, i, samples, aux_counter, regenerated)
            spec_a = graph_spectrum(g, GraphMatrixKind.ADJACENCY)
            spec_l = graph_spectrum(g, GraphMatrixKind.LAPLACIAN)
            spec_q = graph_spectrum(g, GraphMatrixKind.SIGNLESS_LAPLACIAN)
            vals = classical_bounds(spec_a, spec_l, spec_q)
            by_id = {v.id: v for v in vals}
            for bucket, bound_id in (
                (hoffman, BoundId.HOFFMAN),
                (kolo1, BoundId.KOLOTILINA_1),
                (kolo2, BoundId.KOLOTILINA_2),
            ):
                v = by_id[bound_id]
                if v.valid:
                    bucket.append(v.value)
        out.append(
            RandomTableRow(
                n=n,
                p=p,
                hoffman_avg=math.fsum(hoffman) / len(hoffman),
                kolo1_avg=math.fsum(kolo1) / len(kolo1),
                kolo2_avg=math.fsum(kolo2) / len(kolo2),
                bollobas=bollobas_estimate(n, p) if p < 1.0 else None,
                samples=samples,
                seed_base=seed_base,
                regenerated=tuple(regenerated),
            )
        )
    return out


def random_table_csv(rows: list[RandomTableRow]) -> str:
    """CSV with a header, '.' decimals, LF endings, full-precision averages."""

    lines = ["n,p,samples,seed_base,hoffman_avg,kolo1_avg,kolo2_avg,bollobas"]
    for r in rows:
        bollobas = "" if r.bollobas is None else repr(r.bollobas)
        lines.append(
            f"{r.n},{r.p!r},{r.samples},{r.seed_base},"
            f"{r.hoffman_avg!r},{r.kolo1_avg!r},{r.kolo2_avg!r},{bollobas}"
        )
    return "\n".join(lines) + "\n"


def random_table_json(rows: list[RandomTableRow]) -> str:
    payload = [
        {
            "n": r.n,
            "p": r.p,
            "samples": r.samples,
            "seed_base": r.seed_base,
            "hoffman_avg": r.hoffman_avg,
            "kolo1_avg": r.kolo1_avg,
            "kolo2_avg": r.kolo2_avg,
            "bollobas": r.bollobas,
            "regenerated": [list(pair) for pair in r.regenerated],
            "display": {
                "hoffman_avg": round_display(r.hoffman_avg),
                "kolo1_avg": round_display(r.kolo1_avg),
                "kolo2_avg": round_display(r.kolo2_avg),
                "bollobas": None if r.bollobas is None else round_display(r.bollobas),
            },
        }
        for r in rows
    ]
    return json.dumps(payload, indent=2)


# --------------------------------------------------------------------------
# named-graph comparisons

DEFAULT_NAMED = (
    "gen:circulant(16;1,7,8)",
    "gen:barbell(8)",
    "gen:sun(8)",
    "gen:windmill(3,6)",
    "gen:petersen",
    "gen:mycielskian(cycle(5))",
)


def resolve_graph_input(text: str) -> Graph:
    """One input grammar everywhere: gen:spec, @file, or a graph6 literal.

    Files are sniffed: any line with two or more whitespace-separated
    tokens means an edge list, otherwise the first nonblank line is
    graph6.
    """

    text = text.strip()
    if not text:
        raise DomainError("empty graph input")
    if text.startswith("gen:"):
        return generate_from_spec(text[len("gen:"):])
    if text.startswith("@"):
        path = Path(text[1:])
        try:
            content = path.read_text(encoding="ascii")
        except OSError as exc:
            raise DomainError(f"cannot read graph file {path}: {exc}") from None
        return parse_graph_file(content)
    return parse_graph6(text)


def parse_graph_file(content: str) -> Graph:
    """Sniff edge-list vs graph6 content and parse accordingly."""

    for line in content.splitlines():
        if len(line.split()) >= 2:
            return parse_edge_list(content)
    for line in content.splitlines():
        if line.strip():
            return parse_graph6(line)
    raise DomainError("graph file has no content")


@dataclass(frozen=True)
class ComparisonRow:
    """Full bound table for one named graph; error text if it failed."""

    name: str
    report: BoundReport | None = None
    chi: int | None = None
    error: str | None = None


def named_comparison(names: list[str]) -> list[ComparisonRow]:
    """Bound reports (plus exact chi at desk scale) in input order.

    A row that fails to resolve or compute carries its error message and
    the run continues.
    """

    rows = []
    for name in names:
        try:
            g = resolve_graph_input(name)
            report = full_report(g)
            chi = chromatic_number(g).chi if g.n <= _ORACLE_N_LIMIT else None
            rows.append(ComparisonRow(name=name, report=report, chi=chi))
        except SpectralChromaError as exc:
            rows.append(ComparisonRow(name=name, error=str(exc)))
    return rows


def comparison_csv(rows: list[ComparisonRow]) -> str:
    """One CSV row per graph: name, chi, then each bound's 1-decimal display."""

    header = ["name", "chi"] + [b.value for b in BoundId]
    lines = [",".join(header)]
    for row in rows:
        if row.report is None:
            lines.append(f"{row.name},error:{row.error}" + "," * (len(BoundId) - 1))
            continue
        cells = [row.name, "" if row.chi is None else str(row.chi)]
        for b in BoundId:
            v = row.report.value(b)
            cells.append(row.report.rounded_display[b.value] if v.valid else "")
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def report_json_payload(report: BoundReport, chi: int | None = None) -> dict:
    """The fixed regression schema for one graph's bound report."""

    payload: dict = {
        "graph": report.graph_id,
        "bounds": [
            {"id": v.id.value, "value": v.value, "best_m": v.best_m, "valid": v.valid}
            for v in report.values
        ],
        "display": dict(report.rounded_display),
    }
    if chi is not None:
        payload["chi"] = chi
    return payload


def comparison_json(rows: list[ComparisonRow]) -> str:
    payload = []
    for row in rows:
        if row.report is None:
            payload.append({"graph": row.name, "error": row.error})
        else:
            entry = report_json_payload(row.report, row.chi)
            entry["name"] = row.name
            payload.append(entry)
    return json.dumps(payload, indent=2)


# --------------------------------------------------------------------------
# the optional externally-supplied 16-vertex graph

_EXTERNAL_GRAPH_ENV = "SPECTRAL_CHROMA_NPM_FILE"


def load_no_perfect_matching() -> Graph | None:
    """The 16-vertex matching-free comparison graph, if a file provides it.

    Its construction is not specified anywhere in scope, so it can only
    be loaded: from the path in SPECTRAL_CHROMA_NPM_FILE, or from an
    optional bundled data file. Returns None when neither exists.
    """

    env_path = os.environ.get(_EXTERNAL_GRAPH_ENV)
    if env_path:
        return parse_graph_file(Path(env_path).read_text(encoding="ascii"))
    try:
        data = resources.files("spectral_chroma.data") / "no_perfect_matching.g6"
        content = data.read_text(encoding="ascii")
    except (FileNotFoundError, ModuleNotFoundError):
        return None
    return parse_graph_file(content)
