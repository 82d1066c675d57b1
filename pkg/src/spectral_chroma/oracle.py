"""Exact ground truth at desk scale.

Backtracking chromatic numbers for graphs up to 64 vertices, exhaustive
labeled enumeration for tiny n, the bundled deduplicated corpora for 6
and 7 vertices, and the deterministic greedy coloring that feeds the
certificate machinery. The solver refuses rather than guessing: any
input past its ceiling raises instead of returning an estimate.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterator

from .certify import Coloring
from .errors import DomainError
from .graphs import Graph, from_edges, parse_graph6

_BACKTRACK_CEILING = 64
_ALL_PAIRS = {n: [(i, j) for j in range(n) for i in range(j)] for n in range(1, 7)}


@dataclass(frozen=True)
class ChromaticResult:
    """Exact chromatic number together with one witness coloring."""

    chi: int
    witness: Coloring


def greedy_coloring(g: Graph) -> Coloring:
    """Deterministic sequential coloring, largest degree first.

    May use more than chi colors; always proper. Ties in degree break
    by vertex index, so equal graphs always get equal colorings.
    """

    deg = g.degrees()
    order = sorted(range(g.n), key=lambda v: (-deg[v], v))
    adj = g.neighbors()
    colors = [-1] * g.n
    for v in order:
        taken = {colors[u] for u in adj[v] if colors[u] >= 0}
        color = 0
        while color in taken:
            color += 1
        colors[v] = color
    return Coloring(tuple(colors), max(colors) + 1)


def _greedy_clique(g: Graph) -> list[int]:
    adj = g.neighbors()
    deg = g.degrees()
    order = sorted(range(g.n), key=lambda v: (-deg[v], v))
    clique: list[int] = []
    for v in order:
        if all(v in adj[u] for u in clique):
            clique.append(v)
    return clique


def colorable_with(g: Graph, k: int) -> Coloring | None:
    """Decide k-colorability; returns a witness or None.

    Backtracking over vertices in degree-descending order, colors tried
    in index order, with new color indices introduced only in order (the
    first vertex always takes color 0). k = 0 is decidable too: no
    nonempty graph is 0-colorable.
    """

    if k < 0:
        raise DomainError(f"color count must be nonnegative, got {k}")
    if k == 0:
        return None
    if k >= g.n:
        return Coloring(tuple(range(g.n)), k)
    deg = g.degrees()
    order = sorted(range(g.n), key=lambda v: (-deg[v], v))
    adj = g.neighbors()
    pos = {v: i for i, v in enumerate(order)}
    assigned = [-1] * g.n

    def backtrack(i: int, used: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        forbidden = {assigned[u] for u in adj[v] if pos[u] < i}
        limit = min(k, used + 1)
        for color in range(limit):
            if color in forbidden:
                continue
            assigned[v] = color
            if backtrack(i + 1, max(used, color + 1)):
                return True
            assigned[v] = -1
        return False

    if not backtrack(0, 0):
        return None
    return Coloring(tuple(assigned), k)


def chromatic_number(g: Graph) -> ChromaticResult:
    """Exact chi with witness, via iterative deepening from a clique seed."""

    if g.n > _BACKTRACK_CEILING:
        raise DomainError(
            f"exact coloring supports at most {_BACKTRACK_CEILING} vertices, got {g.n}"
        )
    if g.edge_count == 0:
        return ChromaticResult(1, Coloring((0,) * g.n, 1))
    lower = max(2, len(_greedy_clique(g)))
    greedy = greedy_coloring(g)
    upper = greedy.c
    if lower == upper:
        return ChromaticResult(upper, greedy)
    for k in range(lower, upper):
        witness = colorable_with(g, k)
        if witness is not None:
            return ChromaticResult(k, witness)
    return ChromaticResult(upper, greedy)


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^C(n,2) labeled graphs on 0..n-1; supported for n <= 6."""

    if not 1 <= n <= 6:
        raise DomainError(f"labeled enumeration supports 1 <= n <= 6, got {n}")
    pairs = _ALL_PAIRS[n]
    for mask in range(1 << len(pairs)):
        edges = [pairs[b] for b in range(len(pairs)) if (mask >> b) & 1]
        yield from_edges(n, edges)


@lru_cache(maxsize=None)
def _corpus(n: int) -> tuple[Graph, ...]:
    path = resources.files("spectral_chroma.data") / f"graphs{n}.g6"
    lines = path.read_text(encoding="ascii").splitlines()
    graphs = tuple(parse_graph6(line) for line in lines if line.strip())
    for g in graphs:
        if g.n != n:
            raise DomainError(f"corpus graphs{n}.g6 contains a graph on {g.n} vertices")
    return graphs


def all_graphs(n: int) -> Iterator[Graph]:
    """Every graph on n vertices: labeled for n <= 5, corpus classes for 6 and 7."""

    if n < 1:
        raise DomainError(f"vertex count must be positive, got {n}")
    if n > 7:
        raise DomainError(f"exhaustive enumeration supports at most 7 vertices, got {n}")
    if n <= 5:
        yield from labeled_graphs(n)
    else:
        yield from _corpus(n)
