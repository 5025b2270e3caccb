"""Labeled defining graphs: parsing, emitting, links, joins and cliques.

A defining graph has a finite ordered vertex set and integer edge labels
``m >= 2``.  A missing edge stands for ``m = infinity`` and is never stored.
Declaration order of the vertices is used for every tie-break.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

__all__ = [
    "DefiningGraph",
    "Clique",
    "Classification",
    "ParseError",
    "DuplicateVertexError",
    "DuplicateEdgeError",
    "LabelTooSmallError",
    "NonIntegerLabelError",
    "UnknownEndpointError",
    "SelfLoopError",
    "EmptyGraphError",
    "UnknownVertexError",
    "parse",
    "parse_json",
    "load",
    "emit",
    "complement",
    "link",
    "star",
    "classify",
    "enumerate_cliques",
    "maximal_cliques",
    "graph_distances",
]


class ParseError(ValueError):
    """Malformed graph description; ``line`` is 1-based (0 when unknown)."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class DuplicateVertexError(ParseError):
    pass


class DuplicateEdgeError(ParseError):
    pass


class LabelTooSmallError(ParseError):
    pass


class NonIntegerLabelError(ParseError):
    pass


class UnknownEndpointError(ParseError):
    pass


class SelfLoopError(ParseError):
    pass


class EmptyGraphError(ParseError):
    pass


class UnknownVertexError(KeyError):
    pass


_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


class DefiningGraph:
    """Finite simplicial graph with integer labels ``m >= 2`` on its edges.

    Instances are immutable.  Two graphs compare equal when they have the
    same vertex order and the same labeled edges.
    """

    __slots__ = ("_vertices", "_labels", "_index", "_adj")

    def __init__(self, vertices: Iterable[str], edges: Mapping | Iterable = ()):
        verts = tuple(vertices)
        if not verts:
            raise EmptyGraphError("graph has no vertices")
        index = {}
        for v in verts:
            if not isinstance(v, str) or not _NAME.match(v):
                raise ParseError(f"invalid vertex name {v!r}")
            if v in index:
                raise DuplicateVertexError(f"duplicate vertex {v!r}")
            index[v] = len(index)
        items = edges.items() if isinstance(edges, Mapping) else (
            ((a, b), m) for a, b, m in edges
        )
        labels: dict[frozenset, int] = {}
        for pair, m in items:
            a, b = tuple(pair)
            if a == b:
                raise SelfLoopError(f"self-loop at {a!r}")
            for x in (a, b):
                if x not in index:
                    raise UnknownEndpointError(f"edge endpoint {x!r} is not a vertex")
            if isinstance(m, bool) or not isinstance(m, int):
                raise NonIntegerLabelError(f"label {m!r} on {a}-{b} is not an integer")
            if m < 2:
                raise LabelTooSmallError(f"label {m} on {a}-{b} is below 2")
            key = frozenset((a, b))
            if key in labels:
                raise DuplicateEdgeError(f"duplicate edge {a}-{b}")
            labels[key] = m
        adj = {v: set() for v in verts}
        for key in labels:
            a, b = tuple(key)
            adj[a].add(b)
            adj[b].add(a)
        self._vertices = verts
        self._labels = labels
        self._index = index
        self._adj = {v: frozenset(n) for v, n in adj.items()}

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> dict[frozenset, int]:
        return dict(self._labels)

    def edge_list(self) -> list[tuple[str, str, int]]:
        """Edges as ``(a, b, m)`` with ``a`` declared before ``b``, sorted."""
        out = []
        for key, m in self._labels.items():
            a, b = self.sort(key)
            out.append((a, b, m))
        out.sort(key=lambda e: (self._index[e[0]], self._index[e[1]]))
        return out

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertexError(v) from None

    def __contains__(self, v) -> bool:
        return v in self._index

    def __len__(self) -> int:
        return len(self._vertices)

    def neighbors(self, v: str) -> frozenset:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertexError(v) from None

    def adjacent(self, a: str, b: str) -> bool:
        return b in self.neighbors(a)

    def label(self, a: str, b: str) -> int | None:
        """Edge label, or ``None`` for a missing edge (``m = infinity``)."""
        return self._labels.get(frozenset((a, b)))

    def sort(self, vs: Iterable[str]) -> tuple[str, ...]:
        """Vertices of ``vs`` in declaration order."""
        return tuple(sorted(vs, key=self.index))

    def is_clique_set(self, vs: Iterable[str]) -> bool:
        vs = list(vs)
        return all(self.adjacent(a, b) for a, b in combinations(vs, 2))

    @property
    def is_right_angled(self) -> bool:
        return all(m == 2 for m in self._labels.values())

    def subgraph(self, vs: Iterable[str]) -> "DefiningGraph":
        keep = set(vs)
        return DefiningGraph(
            [v for v in self._vertices if v in keep],
            {k: m for k, m in self._labels.items() if k <= keep},
        )

    def relabel(self, mapping: Mapping[str, str], order: Iterable[str] | None = None):
        """Rename vertices; ``order`` optionally gives the new declaration order."""
        new_vertices = tuple(order) if order is not None else tuple(
            mapping[v] for v in self._vertices
        )
        return DefiningGraph(
            new_vertices,
            {frozenset(mapping[x] for x in k): m for k, m in self._labels.items()},
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, DefiningGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._labels == other._labels

    def __hash__(self) -> int:
        return hash((self._vertices, frozenset(self._labels.items())))

    def __repr__(self) -> str:
        body = " ".join(f"{a}-{b}:{m}" for a, b, m in self.edge_list())
        return f"DefiningGraph(vertices={' '.join(self._vertices)!r}, edges={body!r})"


@dataclass(frozen=True, order=False)
class Clique:
    """A clique of a defining graph, members in declaration order.

    ``maximal`` is informational and ignored by equality and hashing.
    """

    members: tuple[str, ...]
    maximal: bool = field(default=False, compare=False)

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v) -> bool:
        return v in self.members

    def as_set(self) -> frozenset:
        return frozenset(self.members)

    def __str__(self) -> str:
        return "{" + ",".join(self.members) + "}"


@dataclass(frozen=True)
class Classification:
    is_clique: bool
    star_center: str | None
    join_factors: tuple[tuple[str, ...], tuple[str, ...]] | None


# ---------------------------------------------------------------- parsing

_EDGE_TOKEN = re.compile(r"^([^-:\s]+)-([^-:\s]+):(\S+)$")


def _parse_label(raw: str, line: int) -> int:
    if not re.fullmatch(r"[+-]?\d+", raw):
        raise NonIntegerLabelError(f"label {raw!r} is not an integer", line)
    m = int(raw)
    if m < 2:
        raise LabelTooSmallError(f"label {m} is below 2", line)
    return m


def parse(text: str) -> DefiningGraph:
    """Parse the line-oriented text format.

    Statements are separated by newlines or ``;``.  ``vertices: a b c``
    declares vertices (may repeat), ``edge: a-b:3`` or ``edges: a-b:3 b-c:2``
    declares edges, ``edges: (none)`` is accepted, ``#`` starts a comment.
    Input starting with ``{`` is read as JSON instead.
    """
    if text.lstrip().startswith("{"):
        return parse_json(text)
    vertices: list[str] = []
    vertex_lines: dict[str, int] = {}
    edges: list[tuple[str, str, int, int]] = []
    seen_pairs: dict[frozenset, int] = {}
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0]
        for stmt in line.split(";"):
            stmt = stmt.strip()
            if not stmt:
                continue
            key, sep, rest = stmt.partition(":")
            key = key.strip().lower()
            if not sep:
                raise ParseError(f"expected 'vertices:' or 'edge:' statement, got {stmt!r}", lineno)
            tokens = rest.split()
            if key == "vertices":
                for name in tokens:
                    if not _NAME.match(name):
                        raise ParseError(f"invalid vertex name {name!r}", lineno)
                    if name in vertex_lines:
                        raise DuplicateVertexError(
                            f"duplicate vertex {name!r} (first declared on line {vertex_lines[name]})",
                            lineno,
                        )
                    vertex_lines[name] = lineno
                    vertices.append(name)
            elif key in ("edge", "edges"):
                if tokens in (["(none)"], ["none"]):
                    continue
                for tok in tokens:
                    mt = _EDGE_TOKEN.match(tok)
                    if not mt:
                        raise ParseError(f"malformed edge {tok!r}; expected a-b:m", lineno)
                    a, b, raw = mt.groups()
                    if a == b:
                        raise SelfLoopError(f"self-loop at {a!r}", lineno)
                    m = _parse_label(raw, lineno)
                    pair = frozenset((a, b))
                    if pair in seen_pairs:
                        raise DuplicateEdgeError(
                            f"duplicate edge {a}-{b} (first on line {seen_pairs[pair]})", lineno
                        )
                    seen_pairs[pair] = lineno
                    edges.append((a, b, m, lineno))
            else:
                raise ParseError(f"unknown statement {key!r}", lineno)
    for a, b, _, lineno in edges:
        for x in (a, b):
            if x not in vertex_lines:
                raise UnknownEndpointError(f"edge endpoint {x!r} is not a declared vertex", lineno)
    if not vertices:
        raise EmptyGraphError("graph declares no vertices")
    return DefiningGraph(vertices, [(a, b, m) for a, b, m, _ in edges])


def parse_json(text: str | dict) -> DefiningGraph:
    """Parse ``{"vertices": [...], "edges": [{"a":..., "b":..., "m":...}]}``."""
    data = json.loads(text) if isinstance(text, str) else text
    if not isinstance(data, dict) or "vertices" not in data:
        raise ParseError("JSON graph must be an object with a 'vertices' list")
    verts = data["vertices"]
    if not isinstance(verts, list):
        raise ParseError("'vertices' must be a list")
    seen = set()
    for v in verts:
        if v in seen:
            raise DuplicateVertexError(f"duplicate vertex {v!r}")
        seen.add(v)
    if not verts:
        raise EmptyGraphError("graph declares no vertices")
    edges = []
    pairs = set()
    for i, e in enumerate(data.get("edges", [])):
        try:
            a, b, m = e["a"], e["b"], e["m"]
        except (KeyError, TypeError):
            raise ParseError(f"edge #{i} must have keys a, b, m") from None
        if a == b:
            raise SelfLoopError(f"self-loop at {a!r}")
        if isinstance(m, bool) or not isinstance(m, int):
            raise NonIntegerLabelError(f"label {m!r} on {a}-{b} is not an integer")
        if m < 2:
            raise LabelTooSmallError(f"label {m} on {a}-{b} is below 2")
        for x in (a, b):
            if x not in seen:
                raise UnknownEndpointError(f"edge endpoint {x!r} is not a declared vertex")
        if frozenset((a, b)) in pairs:
            raise DuplicateEdgeError(f"duplicate edge {a}-{b}")
        pairs.add(frozenset((a, b)))
        edges.append((a, b, m))
    return DefiningGraph(verts, edges)


def load(path) -> DefiningGraph:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def emit(g: DefiningGraph, fmt: str = "text") -> str:
    """Serialize ``g``; ``parse(emit(g, fmt)) == g`` for both formats."""
    if fmt == "text":
        lines = ["vertices: " + " ".join(g.vertices)]
        lines += [f"edge: {a}-{b}:{m}" for a, b, m in g.edge_list()]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps(
            {
                "vertices": list(g.vertices),
                "edges": [{"a": a, "b": b, "m": m} for a, b, m in g.edge_list()],
            },
            indent=2,
        )
    raise ValueError(f"unknown graph format {fmt!r}")


# ---------------------------------------------------------------- structure


def complement(g: DefiningGraph) -> dict[str, frozenset]:
    """Adjacency of the complement graph (unlabeled) on the same vertices."""
    all_v = frozenset(g.vertices)
    return {v: all_v - g.neighbors(v) - {v} for v in g.vertices}


def link(g: DefiningGraph, s: str) -> tuple[str, ...]:
    return g.sort(g.neighbors(s))


def star(g: DefiningGraph, s: str) -> tuple[str, ...]:
    return g.sort(g.neighbors(s) | {s})


def _components(vertices: tuple[str, ...], adj: Mapping[str, Iterable[str]]) -> list[list[str]]:
    seen: set[str] = set()
    comps = []
    for v in vertices:
        if v in seen:
            continue
        comp, stack = [], [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(comp)
    return comps


def graph_distances(g: DefiningGraph, source: str) -> dict[str, int]:
    """BFS distances in the underlying graph; unreachable vertices omitted."""
    g.index(source)
    dist = {source: 0}
    frontier = [source]
    while frontier:
        nxt = []
        for x in frontier:
            for y in g.sort(g.neighbors(x)):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = nxt
    return dist


def classify(g: DefiningGraph) -> Classification:
    """Clique / star-of-a-vertex / join structure of the underlying graph.

    The first join factor is the smallest connected component of the
    complement (ties broken by least vertex), the second is everything else.
    With a star center ``s`` this puts ``(s,)`` first.
    """
    n = len(g)
    is_clique = all(len(g.neighbors(v)) == n - 1 for v in g.vertices)
    star_center = next((v for v in g.vertices if len(g.neighbors(v)) == n - 1), None)
    comps = _components(g.vertices, complement(g))
    join_factors = None
    if len(comps) > 1:
        first = min(comps, key=lambda c: (len(c), min(g.index(v) for v in c)))
        rest = [v for v in g.vertices if v not in first]
        join_factors = (g.sort(first), tuple(rest))
    return Classification(is_clique, star_center, join_factors)


def maximal_cliques(g: DefiningGraph) -> list[tuple[str, ...]]:
    """Maximal cliques by Bron-Kerbosch with pivoting, in lexicographic order."""
    out: list[tuple[str, ...]] = []

    def expand(r: set, p: set, x: set) -> None:
        if not p and not x:
            out.append(g.sort(r))
            return
        pivot = max(p | x, key=lambda u: (len(p & g.neighbors(u)), -g.index(u)))
        for v in g.sort(p - g.neighbors(pivot)):
            nv = g.neighbors(v)
            expand(r | {v}, p & nv, x & nv)
            p = p - {v}
            x = x | {v}

    expand(set(), set(g.vertices), set())
    out.sort(key=lambda c: [g.index(v) for v in c])
    return out


def enumerate_cliques(g: DefiningGraph) -> list[Clique]:
    """All cliques including the empty one, ordered by size then lexicographically.

    Obtained as the downward closure of the maximal cliques; maximal ones
    carry ``maximal=True``.
    """
    maximal = {frozenset(c) for c in maximal_cliques(g)}
    found: set[frozenset] = set()
    for c in maximal:
        for k in range(len(c) + 1):
            found.update(frozenset(sub) for sub in combinations(c, k))
    ordered = sorted(found, key=lambda c: (len(c), sorted(g.index(v) for v in c)))
    return [Clique(g.sort(c), maximal=c in maximal) for c in ordered]
