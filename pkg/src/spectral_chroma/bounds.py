"""Every spectral lower bound on the chromatic number, from one report call.

Fifteen bounds are computed from the adjacency, Laplacian, signless
Laplacian, and normalized adjacency spectra: four classical ratio
bounds, the average-degree bound, four generalized partial-sum bounds
swept over m, two normalized bounds, three weaker chain bounds kept for
comparison tables, and the integer search for the smallest color count
compatible with the partial-sum inequality.

Invalid bounds (nonpositive denominators, edgeless graphs, isolated
vertices for the normalized family) are reported as value 1 with
valid=False, never as exceptions, so sweeps over arbitrary graphs keep
going.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from enum import Enum
from typing import Mapping, Sequence

import numpy as np

from .errors import DomainError, NumericError
from .graphs import Graph, GraphMatrixKind, build_matrix, emit_graph6
from .linalg import PROPERTY_TOL, Spectrum, eigenvalues_sym, graph_spectrum


class BoundId(Enum):
    HOFFMAN = "Hoffman"
    NIKIFOROV_HYBRID = "NikiforovHybrid"
    KOLOTILINA_1 = "Kolotilina1"
    KOLOTILINA_2 = "Kolotilina2"
    LOAN = "LOAN"
    GEN_HOFFMAN = "GenHoffman"
    GEN_NIKIFOROV = "GenNikiforov"
    GEN_KOLOTILINA_1 = "GenKolotilina1"
    GEN_KOLOTILINA_2 = "GenKolotilina2"
    NORMALIZED_HOFFMAN = "NormalizedHoffman"
    GEN_NORMALIZED_HOFFMAN = "GenNormalizedHoffman"
    KOLOTILINA_CHAIN_317 = "KolotilinaChain317"
    HANSEN_LUCAS = "HansenLucas"
    CVETKOVIC = "Cvetkovic"
    INTEGER_C = "IntegerC"


@dataclass(frozen=True)
class BoundValue:
    """One evaluated bound: its value, the m that achieved it, validity."""

    id: BoundId
    value: float
    best_m: int = 1
    valid: bool = True

    def __post_init__(self) -> None:
        if self.valid and self.value < 1.0 - 1e-12:
            raise DomainError(f"{self.id.value}: valid bound below 1 ({self.value})")
        if self.valid and self.id is BoundId.INTEGER_C:
            if self.value != int(self.value) or self.value < 2:
                raise DomainError(f"IntegerC must be an integer >= 2, got {self.value}")


def invalid_bound(bound_id: BoundId) -> BoundValue:
    return BoundValue(bound_id, 1.0, best_m=1, valid=False)


def round_display(value: float) -> str:
    """One decimal, ties away from zero, matching printed comparison tables."""

    return str(Decimal(repr(float(value))).quantize(Decimal("0.1"), rounding=ROUND_HALF_UP))


def _ratio_bound(bound_id: BoundId, numerator: float, denominator: float) -> BoundValue:
    if denominator <= PROPERTY_TOL:
        return invalid_bound(bound_id)
    return BoundValue(bound_id, 1.0 + numerator / denominator)


def classical_bounds(
    spec_a: Spectrum, spec_l: Spectrum, spec_q: Spectrum
) -> list[BoundValue]:
    """The four m = 1 ratio bounds from the three unnormalized spectra.

    The smallest Laplacian eigenvalue enters the fourth bound exactly as
    computed (theoretically zero); dropping it would change nothing in
    exact arithmetic but the computed value is kept for honesty.
    """

    mu = spec_a.values
    th = spec_l.values
    dl = spec_q.values
    mu1, mun = float(mu[0]), float(mu[-1])
    if mu1 <= PROPERTY_TOL:
        return [
            invalid_bound(BoundId.HOFFMAN),
            invalid_bound(BoundId.NIKIFOROV_HYBRID),
            invalid_bound(BoundId.KOLOTILINA_1),
            invalid_bound(BoundId.KOLOTILINA_2),
        ]
    return [
        _ratio_bound(BoundId.HOFFMAN, mu1, -mun),
        _ratio_bound(BoundId.NIKIFOROV_HYBRID, mu1, float(th[0]) - mu1),
        _ratio_bound(BoundId.KOLOTILINA_1, mu1, mu1 - float(dl[0]) + float(th[0])),
        _ratio_bound(BoundId.KOLOTILINA_2, mu1, mu1 - float(dl[-1]) + float(th[-1])),
    ]


def loan_bound(g: Graph, spec_q: Spectrum) -> BoundValue:
    """Average-degree bound 1 + 2E/(2E - n*delta_n)."""

    if g.edge_count < 1:
        return invalid_bound(BoundId.LOAN)
    two_e = 2.0 * g.edge_count
    delta_n = float(spec_q.values[-1])
    return _ratio_bound(BoundId.LOAN, two_e, two_e - g.n * delta_n)


def _sweep_max(bound_id: BoundId, numerators: np.ndarray, denominators: np.ndarray) -> BoundValue:
    """Max of 1 + num/denom over m with admissible (> PROPERTY_TOL) denominators."""

    admissible = denominators > PROPERTY_TOL
    if not admissible.any():
        return invalid_bound(bound_id)
    values = np.full(numerators.shape, -np.inf)
    values[admissible] = 1.0 + numerators[admissible] / denominators[admissible]
    best = int(values.argmax())
    return BoundValue(bound_id, float(values[best]), best_m=best + 1)


def _gen_denominators(
    spec_a: Spectrum, spec_l: Spectrum, spec_q: Spectrum
) -> dict[BoundId, np.ndarray]:
    """Per-m denominator vectors for the four generalized bounds."""

    mu = spec_a.values
    th = spec_l.values
    dl = spec_q.values
    top_mu = np.cumsum(mu)
    bottom_mu = np.cumsum(mu[::-1])
    bottom_th = np.cumsum(th[::-1])
    bottom_dl = np.cumsum(dl[::-1])
    return {
        BoundId.GEN_HOFFMAN: -bottom_mu,
        BoundId.GEN_NIKIFOROV: np.cumsum(th - mu),
        BoundId.GEN_KOLOTILINA_1: np.cumsum(mu - dl + th),
        BoundId.GEN_KOLOTILINA_2: top_mu - bottom_dl + bottom_th,
    }


def generalized_bounds(
    spec_a: Spectrum, spec_l: Spectrum, spec_q: Spectrum
) -> list[BoundValue]:
    """Partial-sum versions of the four ratio bounds, maximized over m."""

    numerators = np.cumsum(spec_a.values)
    return [
        _sweep_max(bound_id, numerators, denom)
        for bound_id, denom in _gen_denominators(spec_a, spec_l, spec_q).items()
    ]


def generalized_sweep(
    spec_a: Spectrum, spec_l: Spectrum, spec_q: Spectrum
) -> dict[BoundId, list[float | None]]:
    """Per-m values for the generalized bounds; None marks inadmissible m."""

    numerators = np.cumsum(spec_a.values)
    out: dict[BoundId, list[float | None]] = {}
    for bound_id, denom in _gen_denominators(spec_a, spec_l, spec_q).items():
        column: list[float | None] = []
        for m in range(denom.size):
            if denom[m] > PROPERTY_TOL:
                column.append(float(1.0 + numerators[m] / denom[m]))
            else:
                column.append(None)
        out[bound_id] = column
    return out


def normalized_bounds(spec_na: Spectrum) -> list[BoundValue]:
    """Bounds from the normalized adjacency spectrum alone."""

    mu = spec_na.values
    hoffman = _ratio_bound(BoundId.NORMALIZED_HOFFMAN, 1.0, -float(mu[-1]))
    numerators = np.cumsum(mu)
    denominators = -np.cumsum(mu[::-1])
    gen = _sweep_max(BoundId.GEN_NORMALIZED_HOFFMAN, numerators, denominators)
    return [hoffman, gen]


def normalized_sweep(spec_na: Spectrum) -> list[float | None]:
    """Per-m values of the generalized normalized bound."""

    numerators = np.cumsum(spec_na.values)
    denominators = -np.cumsum(spec_na.values[::-1])
    return [
        float(1.0 + numerators[m] / denominators[m]) if denominators[m] > PROPERTY_TOL else None
        for m in range(denominators.size)
    ]


def chain_bounds(
    spec_a: Spectrum, spec_l: Spectrum, spec_q: Spectrum, n: int
) -> list[BoundValue]:
    """Three successively weaker closed-form bounds kept for comparisons."""

    mu1 = float(spec_a.values[0])
    th1 = float(spec_l.values[0])
    dl1 = float(spec_q.values[0])
    if mu1 <= PROPERTY_TOL:
        return [
            invalid_bound(BoundId.KOLOTILINA_CHAIN_317),
            invalid_bound(BoundId.HANSEN_LUCAS),
            invalid_bound(BoundId.CVETKOVIC),
        ]
    return [
        _ratio_bound(BoundId.KOLOTILINA_CHAIN_317, dl1, 2.0 * th1 - dl1),
        _ratio_bound(BoundId.HANSEN_LUCAS, dl1, 2.0 * n - dl1),
        _ratio_bound(BoundId.CVETKOVIC, mu1, n - mu1),
    ]


# --------------------------------------------------------------------------
# smallest integer c compatible with the partial-sum inequality

_INTEGER_C_CANDIDATES = ("zero", "deg", "negdeg")


def _candidate_b(g: Graph, name: str) -> np.ndarray:
    d = np.diag(g.degrees().astype(np.float64))
    return {"zero": np.zeros((g.n, g.n)), "deg": d, "negdeg": -d}[name]


def integer_c_minima(g: Graph, extra_b: np.ndarray | None = None) -> dict[str, list[int]]:
    """Per-candidate, per-m smallest c = 2..n satisfying the top-sum test.

    For each diagonal candidate B and each m, scan c upward and record
    the first c where the top-m eigenvalue sum of B - A is at least that
    of B + A/(c-1), minus PROPERTY_TOL. Pairs that never satisfy it
    contribute n (the color count never exceeds n). The scan is linear
    on purpose: monotonicity in c is not assumed.
    """

    if g.edge_count < 1:
        raise DomainError("integer search needs at least one edge")
    n = g.n
    a = build_matrix(g, GraphMatrixKind.ADJACENCY)
    names = list(_INTEGER_C_CANDIDATES)
    mats = [_candidate_b(g, name) for name in names]
    if extra_b is not None:
        b = np.asarray(extra_b, dtype=np.float64)
        if b.shape != (n, n):
            raise DomainError(f"extra candidate has shape {b.shape}, expected {(n, n)}")
        if not np.array_equal(b, b.T):
            raise DomainError("extra candidate must be symmetric")
        names.append("extra")
        mats.append(b)
    cs = np.arange(2, n + 1)
    out: dict[str, list[int]] = {}
    for name, b in zip(names, mats):
        lhs = np.cumsum(eigenvalues_sym(b - a).values)
        # one stacked solve for all trial c: B + A/(c-1), c = 2..n
        stack = b[None, :, :] + a[None, :, :] / (cs - 1)[:, None, None]
        eigs = np.linalg.eigvalsh(stack)[:, ::-1]
        traces = np.trace(stack, axis1=1, axis2=2)
        if np.abs(eigs.sum(axis=1) - traces).max() > 1e-9 * max(1.0, np.abs(traces).max()):
            raise NumericError("stacked eigensolve disagrees with matrix traces")
        rhs = np.cumsum(eigs, axis=1)
        satisfied = lhs[None, :] >= rhs - PROPERTY_TOL
        minima = []
        for m_idx in range(n):
            hits = np.nonzero(satisfied[:, m_idx])[0]
            minima.append(int(cs[hits[0]]) if hits.size else n)
        out[name] = minima
    return out


def integer_c_search(g: Graph, extra_b: np.ndarray | None = None) -> BoundValue:
    """Integer lower bound: max over candidates and m of the smallest valid c.

    Candidates are the zero matrix and the diagonal degree matrix with
    both signs; a caller may add one more symmetric candidate, which is
    sound only if it commutes with the conversion unitaries of some
    proper coloring (block-diagonal over color classes).
    """

    minima = integer_c_minima(g, extra_b)
    best_value = 0
    best_m = 1
    for name in minima:
        for m_idx, c in enumerate(minima[name]):
            if c > best_value:
                best_value = c
                best_m = m_idx + 1
    return BoundValue(BoundId.INTEGER_C, float(best_value), best_m=best_m)


# --------------------------------------------------------------------------
# the full report

@dataclass(frozen=True)
class BoundReport:
    """Every bound for one graph, plus the spectra they came from."""

    graph_id: str
    graph_hash: str
    n: int
    edge_count: int
    spectra: Mapping[GraphMatrixKind, Spectrum]
    values: tuple[BoundValue, ...]
    rounded_display: Mapping[str, str]

    def value(self, bound_id: BoundId) -> BoundValue:
        for v in self.values:
            if v.id is bound_id:
                return v
        raise DomainError(f"report is missing {bound_id.value}")

    def display(self, bound_id: BoundId) -> str:
        return self.rounded_display[bound_id.value]


def _display_map(values: Sequence[BoundValue]) -> dict[str, str]:
    out = {}
    for v in values:
        if v.id is BoundId.INTEGER_C and v.valid:
            out[v.id.value] = str(int(v.value))
        else:
            out[v.id.value] = round_display(v.value)
    return out


def full_report(g: Graph) -> BoundReport:
    """Compute all spectra once and evaluate every bound.

    Edgeless graphs yield a report where every bound is invalid with
    value 1. Graphs with isolated vertices (but some edge) get invalid
    normalized bounds and ordinary values elsewhere.
    """

    g6 = emit_graph6(g)
    digest = hashlib.sha256(g6.encode("ascii")).hexdigest()[:16]
    if g.edge_count == 0:
        values = tuple(invalid_bound(bound_id) for bound_id in BoundId)
        return BoundReport(
            graph_id=g6,
            graph_hash=digest,
            n=g.n,
            edge_count=0,
            spectra={},
            values=values,
            rounded_display=_display_map(values),
        )
    spec_a = graph_spectrum(g, GraphMatrixKind.ADJACENCY)
    spec_l = graph_spectrum(g, GraphMatrixKind.LAPLACIAN)
    spec_q = graph_spectrum(g, GraphMatrixKind.SIGNLESS_LAPLACIAN)
    spectra: dict[GraphMatrixKind, Spectrum] = {
        GraphMatrixKind.ADJACENCY: spec_a,
        GraphMatrixKind.LAPLACIAN: spec_l,
        GraphMatrixKind.SIGNLESS_LAPLACIAN: spec_q,
    }
    values = list(classical_bounds(spec_a, spec_l, spec_q))
    values.append(loan_bound(g, spec_q))
    values.extend(generalized_bounds(spec_a, spec_l, spec_q))
    if g.has_isolated_vertex():
        values.append(invalid_bound(BoundId.NORMALIZED_HOFFMAN))
        values.append(invalid_bound(BoundId.GEN_NORMALIZED_HOFFMAN))
    else:
        spec_na = graph_spectrum(g, GraphMatrixKind.NORMALIZED_ADJACENCY)
        spectra[GraphMatrixKind.NORMALIZED_ADJACENCY] = spec_na
        values.extend(normalized_bounds(spec_na))
    values.extend(chain_bounds(spec_a, spec_l, spec_q, g.n))
    values.append(integer_c_search(g))
    by_id = {v.id for v in values}
    if by_id != set(BoundId):
        raise DomainError("report does not cover every bound exactly once")
    return BoundReport(
        graph_id=g6,
        graph_hash=digest,
        n=g.n,
        edge_count=g.edge_count,
        spectra=spectra,
        values=tuple(values),
        rounded_display=_display_map(values),
    )
