"""Flag complexes of defining graphs and their piecewise-spherical vertex metric.

Distances are kept as integer counts of right angles ("quarter turns"):
an edge of a link has length pi/2, so a graph distance ``d`` becomes
``d`` quarter turns.  ``math.inf`` marks disconnected vertices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .defining_graph import Clique, DefiningGraph, enumerate_cliques
from .errors import PreconditionError

__all__ = [
    "SimplicialComplex",
    "SphericalMetricView",
    "LinkFamily",
    "LinkPartition",
    "LinkPartitionError",
    "flag_complex",
    "spherical_vertex_distance",
    "simplex_separation_lower_bound",
    "quarter_turns_to_radians",
    "link_partition_at",
    "to_dot",
]


class LinkPartitionError(PreconditionError):
    pass


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple[str, ...]
    simplices: frozenset  # of nonempty frozensets, downward closed

    def __post_init__(self):
        for s in self.simplices:
            if not s:
                raise ValueError("simplices must be nonempty")
            for k in range(1, len(s)):
                for face in combinations(s, k):
                    if frozenset(face) not in self.simplices:
                        raise ValueError(f"not downward closed: missing {set(face)}")

    @classmethod
    def from_facets(cls, vertices: Iterable[str], facets: Iterable[Iterable[str]]):
        simplices = set()
        for f in facets:
            f = tuple(f)
            for k in range(1, len(f) + 1):
                simplices.update(frozenset(c) for c in combinations(f, k))
        return cls(tuple(vertices), frozenset(simplices))

    def skeleton(self, k: int) -> frozenset:
        return frozenset(s for s in self.simplices if len(s) == k + 1)

    @property
    def dimension(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.skeleton(k)) for k in range(self.dimension + 1))

    def neighbors(self, v: str) -> set[str]:
        return {w for e in self.skeleton(1) if v in e for w in e if w != v}

    def is_flag(self) -> bool:
        """Every set of pairwise adjacent vertices spans a simplex."""
        edges = self.skeleton(1)
        for s in self.simplices:
            for v in self.vertices:
                if v in s:
                    continue
                if all(frozenset((v, u)) in edges for u in s) and (s | {v}) not in self.simplices:
                    return False
        return True

    def __repr__(self) -> str:
        return f"SimplicialComplex(vertices={len(self.vertices)}, f_vector={self.f_vector()})"


def flag_complex(g: DefiningGraph) -> SimplicialComplex:
    """Simplices are the nonempty cliques of ``g``."""
    return SimplicialComplex(
        g.vertices,
        frozenset(c.as_set() for c in enumerate_cliques(g) if len(c)),
    )


def _bfs(c: SimplicialComplex, source: str) -> dict[str, int]:
    if source not in c.vertices:
        raise KeyError(source)
    adj = {v: set() for v in c.vertices}
    for e in c.skeleton(1):
        a, b = tuple(e)
        adj[a].add(b)
        adj[b].add(a)
    dist = {source: 0}
    frontier = [source]
    while frontier:
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = nxt
    return dist


def spherical_vertex_distance(c: SimplicialComplex, v: str, w: str) -> int | float:
    """Link distance between vertices, in quarter turns (``math.inf`` if disconnected)."""
    if w not in c.vertices:
        raise KeyError(w)
    return _bfs(c, v).get(w, math.inf)


def simplex_separation_lower_bound(c: SimplicialComplex, t1: Iterable[str], t2: Iterable[str]) -> int | float:
    """Lower bound, in quarter turns, for the distance between points of two simplices."""
    t1, t2 = set(t1), set(t2)
    if t1 & t2:
        return 0
    best = math.inf
    for v in t1:
        dist = _bfs(c, v)
        for w in t2:
            best = min(best, dist.get(w, math.inf))
    return best


def quarter_turns_to_radians(q: int | float) -> float:
    return q * math.pi / 2


@dataclass(frozen=True)
class SphericalMetricView:
    """A complex with every edge of length pi/2."""

    complex: SimplicialComplex

    edge_length_quarter_turns = 1

    def distance(self, v: str, w: str) -> int | float:
        return spherical_vertex_distance(self.complex, v, w)

    def distance_radians(self, v: str, w: str) -> float:
        return quarter_turns_to_radians(self.distance(v, w))

    def separation_lower_bound(self, t1, t2) -> int | float:
        return simplex_separation_lower_bound(self.complex, t1, t2)


@dataclass(frozen=True)
class LinkFamily:
    """Link vertices at ``A_T`` reached along edges labeled ``generator``.

    These are the cosets ``g A_{T - {generator}}`` inside ``A_T``; the family
    is infinite (``generator^n A_{T - {generator}}`` are pairwise distinct)
    and no two of its members are adjacent in the link.
    """

    generator: str
    coset_clique: tuple[str, ...]
    witness: str
    infinite: bool = True
    independent: bool = True


@dataclass(frozen=True)
class LinkPartition:
    at: tuple[str, ...]
    families: tuple[LinkFamily, ...]


def link_partition_at(g: DefiningGraph, t) -> LinkPartition:
    members = g.sort(t.members if isinstance(t, Clique) else t)
    if not members:
        raise LinkPartitionError("link partition needs a nonempty clique")
    if not g.is_clique_set(members):
        raise LinkPartitionError(f"{set(members)} is not a clique")
    families = []
    for s in members:
        rest = tuple(v for v in members if v != s)
        families.append(LinkFamily(s, rest, f"{s}^n A_{{{','.join(rest)}}}, n in Z"))
    return LinkPartition(members, tuple(families))


def to_dot(c: SimplicialComplex, name: str = "flag_complex") -> str:
    """Graphviz rendering of the 1-skeleton; 2-simplices drawn as filled markers."""
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in c.vertices:
        lines.append(f'  "{v}";')
    order = {v: i for i, v in enumerate(c.vertices)}
    in_triangle = set()
    triangles = sorted((sorted(t, key=order.__getitem__) for t in c.skeleton(2)),
                       key=lambda t: [order[v] for v in t])
    for tri in triangles:
        in_triangle.update(frozenset(p) for p in combinations(tri, 2))
    for e in sorted((sorted(e, key=order.__getitem__) for e in c.skeleton(1)),
                    key=lambda e: [order[v] for v in e]):
        style = ' [color="steelblue", penwidth=2]' if frozenset(e) in in_triangle else ""
        lines.append(f'  "{e[0]}" -- "{e[1]}"{style};')
    for tri in triangles:
        tid = "tri_" + "_".join(tri)
        lines.append(f'  "{tid}" [shape=triangle, style=filled, fillcolor="lightblue", label="", width=0.25];')
        for v in tri:
            lines.append(f'  "{tid}" -- "{v}" [style=dotted, color="lightblue"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
