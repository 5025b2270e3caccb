"""Finite-type detection for cliques via the classification of finite Coxeter groups.

The trusted path is purely combinatorial: split the Coxeter diagram of a
clique into connected components and match each against the catalog
A_n, B_n, D_n, E6-E8, F4, H3, H4, I2(m).  ``cosine_matrix`` is provided for
numeric cross-checks only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .defining_graph import Clique, DefiningGraph, enumerate_cliques
from .errors import PreconditionError

__all__ = [
    "CoxeterDiagram",
    "FinitenessVerdict",
    "NotACliqueError",
    "INFINITE",
    "coxeter_diagram",
    "cosine_matrix",
    "classify_component",
    "is_finite_type",
    "is_fc_type",
    "FCResult",
]

INFINITE = "INFINITE"


class NotACliqueError(PreconditionError):
    pass


@dataclass(frozen=True)
class CoxeterDiagram:
    """Vertices of a clique and its edges with label >= 3 (label 2 omitted)."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, int], ...]

    def neighbors(self, v: str) -> dict[str, int]:
        out = {}
        for a, b, m in self.edges:
            if a == v:
                out[b] = m
            elif b == v:
                out[a] = m
        return out


@dataclass(frozen=True)
class FinitenessVerdict:
    finite: bool
    irreducible_components: tuple[tuple[tuple[str, ...], str], ...]


def _members(g: DefiningGraph, t) -> tuple[str, ...]:
    members = g.sort(t.members if isinstance(t, Clique) else t)
    if not g.is_clique_set(members):
        raise NotACliqueError(f"{set(members)} is not a clique")
    return members


def coxeter_diagram(g: DefiningGraph, t) -> CoxeterDiagram:
    members = _members(g, t)
    edges = []
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            m = g.label(a, b)
            if m >= 3:
                edges.append((a, b, m))
    return CoxeterDiagram(members, tuple(edges))


def cosine_matrix(g: DefiningGraph, t) -> np.ndarray:
    """``B[i, i] = 1`` and ``B[i, j] = -cos(pi / m_ij)`` over the clique members."""
    members = _members(g, t)
    n = len(members)
    b = np.eye(n)
    for i in range(n):
        for j in range(i + 1, n):
            m = g.label(members[i], members[j])
            b[i, j] = b[j, i] = -math.cos(math.pi / m)
    return b


def _diagram_components(d: CoxeterDiagram) -> list[tuple[str, ...]]:
    adj = {v: set() for v in d.vertices}
    for a, b, _ in d.edges:
        adj[a].add(b)
        adj[b].add(a)
    order = {v: i for i, v in enumerate(d.vertices)}
    seen, comps = set(), []
    for v in d.vertices:
        if v in seen:
            continue
        comp, stack = [], [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x] - seen:
                seen.add(y)
                stack.append(y)
        comps.append(tuple(sorted(comp, key=order.__getitem__)))
    return comps


def _path_labels(vertices, adj) -> list[int] | None:
    """Labels along a path graph read from one end, or None if not a path."""
    ends = [v for v in vertices if len(adj[v]) == 1]
    if len(ends) != 2 or any(len(adj[v]) > 2 for v in vertices):
        return None
    labels, prev, cur = [], None, ends[0]
    while True:
        nxt = [u for u in adj[cur] if u != prev]
        if not nxt:
            break
        labels.append(adj[cur][nxt[0]])
        prev, cur = cur, nxt[0]
    return labels if len(labels) == len(vertices) - 1 else None


def classify_component(vertices: tuple[str, ...], edges: Iterable[tuple[str, str, int]]) -> str:
    """Type tag of one connected Coxeter diagram (labels >= 3 only)."""
    adj: dict[str, dict[str, int]] = {v: {} for v in vertices}
    n_edges = 0
    for a, b, m in edges:
        adj[a][b] = m
        adj[b][a] = m
        n_edges += 1
    n = len(vertices)
    if n == 1:
        return "A1"
    if n == 2:
        (m,) = {m for a in adj for m in adj[a].values()}
        # low-rank coincidences resolved by priority: A2 = I2(3), B2 = I2(4)
        return {3: "A2", 4: "B2"}.get(m, f"I2({m})")
    if n_edges != n - 1:
        return INFINITE  # contains a cycle
    degrees = sorted(len(adj[v]) for v in vertices)
    if degrees[-1] > 3:
        return INFINITE
    labels = _path_labels(vertices, adj)
    if labels is not None:
        inner = labels[1:-1]
        if all(m == 3 for m in labels):
            return f"A{n}"
        if n == 4 and labels in ([3, 4, 3],):
            return "F4"
        if any(m != 3 for m in inner):
            return INFINITE
        end_labels = sorted((labels[0], labels[-1]))
        if end_labels == [3, 4]:
            return f"B{n}"
        if end_labels == [3, 5] and n in (3, 4):
            return f"H{n}"
        return INFINITE
    # exactly one branch vertex of degree 3, all labels 3
    if degrees.count(3) != 1 or any(m != 3 for v in adj for m in adj[v].values()):
        return INFINITE
    center = next(v for v in vertices if len(adj[v]) == 3)
    arms = []
    for start in adj[center]:
        length, prev, cur = 1, center, start
        while True:
            nxt = [u for u in adj[cur] if u != prev]
            if not nxt:
                break
            length += 1
            prev, cur = cur, nxt[0]
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return f"D{n}"
    return {(1, 2, 2): "E6", (1, 2, 3): "E7", (1, 2, 4): "E8"}.get(tuple(arms), INFINITE)


def is_finite_type(g: DefiningGraph, t) -> FinitenessVerdict:
    """Whether the Coxeter group of the clique ``t`` is finite.

    The empty clique gives the trivial group: finite, no components.
    """
    d = coxeter_diagram(g, t)
    comps = []
    for comp in _diagram_components(d):
        members = set(comp)
        edges = [e for e in d.edges if e[0] in members]
        comps.append((comp, classify_component(comp, edges)))
    finite = all(tag != INFINITE for _, tag in comps)
    return FinitenessVerdict(finite, tuple(comps))


@dataclass(frozen=True)
class FCResult:
    fc: bool
    offending_cliques: tuple[tuple[str, ...], ...]


def is_fc_type(g: DefiningGraph) -> FCResult:
    """FC-type test: every clique generates a finite Coxeter group.

    ``offending_cliques`` lists every infinite-type clique, smallest first.
    """
    offending = tuple(c.members for c in enumerate_cliques(g)
                      if not is_finite_type(g, c).finite)
    return FCResult(not offending, offending)
