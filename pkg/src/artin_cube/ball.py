"""Finite balls of the clique-cube complex of a right-angled Artin group.

Cosets ``g A_T`` are made canonical with the commutation normal form of the
RAAG: freely and commutatively reduce the word, strip every ``T``-letter that
can be moved to the right end, then pick the lexicographically least
shuffle (generator declaration order, ``s`` before ``s^-1``).  Two cosets are
equal exactly when their canonical (word, clique) pairs are identical.

A ball has two truncation parameters: ``radius`` bounds the edge distance
from ``A_{}`` and ``word_budget`` bounds the length of coset
representatives (vertices such as ``A_{s}`` have infinite valence).  The
default budget is ``radius // 2``.  Distances are measured inside the
truncated 1-skeleton.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field, replace
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .coxeter import is_finite_type
from .defining_graph import DefiningGraph, enumerate_cliques
from .errors import PreconditionError
from .flag_links import SimplicialComplex, flag_complex
from .words import Letter, Word, format_word, parse_word

__all__ = [
    "NotRightAngledError",
    "CosetVertex",
    "Cube",
    "CubeBall",
    "LinkBaseReport",
    "normal_form_raag",
    "canonical_coset",
    "build_ball",
    "fundamental_domain",
    "link_at",
    "verify_link_base",
    "mark_deligne",
    "deligne_flag",
    "ball_to_json",
    "ball_to_dot",
]


class NotRightAngledError(PreconditionError):
    pass


class _RAAG:
    """Commutation data and memoized normal forms for one right-angled graph."""

    def __init__(self, g: DefiningGraph):
        if not g.is_right_angled:
            raise NotRightAngledError(
                "exact coset arithmetic needs every edge label equal to 2"
            )
        self.g = g
        self.order = {v: i for i, v in enumerate(g.vertices)}
        self.nf = lru_cache(maxsize=None)(self._normal_form)
        self.coset = lru_cache(maxsize=None)(self._canonical_coset)

    def commute(self, s: str, t: str) -> bool:
        return s != t and self.g.adjacent(s, t)

    def reduce(self, word: Iterable[Letter]) -> list[Letter]:
        """Geodesic word: cancel ``x ... x^-1`` whenever the middle commutes with ``x``."""
        out: list[Letter] = []
        for s, e in word:
            if s not in self.order:
                raise KeyError(f"unknown generator {s!r}")
            j = len(out) - 1
            while j >= 0 and self.commute(s, out[j][0]):
                j -= 1
            if j >= 0 and out[j] == (s, -e):
                del out[j]
            else:
                out.append((s, e))
        return out

    def _key(self, letter: Letter) -> tuple[int, int]:
        return self.order[letter[0]], 0 if letter[1] > 0 else 1

    def lex_least(self, word: list[Letter]) -> Word:
        rest = list(word)
        out = []
        while rest:
            best = None
            for i, x in enumerate(rest):
                if all(self.commute(x[0], y[0]) for y in rest[:i]):
                    if best is None or self._key(x) < self._key(rest[best]):
                        best = i
            out.append(rest.pop(best))
        return tuple(out)

    def _normal_form(self, word: Word) -> Word:
        return self.lex_least(self.reduce(word))

    def _canonical_coset(self, word: Word, clique: tuple[str, ...]) -> "CosetVertex":
        members = set(clique)
        w = list(self.nf(tuple(word)))
        stripped = True
        while stripped:
            stripped = False
            for i in range(len(w) - 1, -1, -1):
                if w[i][0] in members and all(self.commute(w[i][0], y[0]) for y in w[i + 1:]):
                    del w[i]
                    stripped = True
                    break
        return CosetVertex(self.nf(tuple(w)), clique)


@lru_cache(maxsize=64)
def _raag(g: DefiningGraph) -> _RAAG:
    return _RAAG(g)


def _as_word(word) -> Word:
    return parse_word(word) if isinstance(word, str) else tuple(word)


def normal_form_raag(g: DefiningGraph, word) -> Word:
    """Canonical word of a RAAG element; equal elements give identical words."""
    return _raag(g).nf(_as_word(word))


@dataclass(frozen=True, order=True)
class CosetVertex:
    rep: Word
    clique: tuple[str, ...]

    def __str__(self) -> str:
        w = format_word(self.rep)
        return f"{w + ' ' if w else ''}A_{{{','.join(self.clique)}}}"

    def to_json(self) -> dict:
        return {"rep": format_word(self.rep), "clique": list(self.clique)}


def canonical_coset(g: DefiningGraph, word, t) -> CosetVertex:
    """Canonical form of the coset ``word * A_t`` (``t`` a clique)."""
    members = g.sort(getattr(t, "members", t))
    if not g.is_clique_set(members):
        raise PreconditionError(f"{set(members)} is not a clique")
    return _raag(g).coset(_as_word(word), members)


@dataclass(frozen=True)
class Cube:
    """The interval ``[bottom, top]``: all ``g A_R`` with ``bottom.clique <= R <= top.clique``."""

    bottom: CosetVertex
    top: CosetVertex
    corners: tuple[CosetVertex, ...] = field(compare=False, repr=False)

    @property
    def dimension(self) -> int:
        return len(self.top.clique) - len(self.bottom.clique)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(s for s in self.top.clique if s not in self.bottom.clique)

    def to_json(self) -> dict:
        return {"bottom": self.bottom.to_json(), "top": self.top.to_json(),
                "dimension": self.dimension}


@dataclass(frozen=True)
class CubeBall:
    vertices: tuple[CosetVertex, ...]
    distance: dict = field(compare=False, repr=False)
    cubes: dict = field(repr=False)  # dimension -> tuple[Cube, ...]
    radius: int
    word_budget: int
    deligne: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def edges(self) -> tuple[Cube, ...]:
        return self.cubes.get(1, ())

    def cosets_of_identity_subgroup(self) -> list[CosetVertex]:
        """Vertices of the form ``g A_{}``."""
        return [v for v in self.vertices if not v.clique]

    def neighbors(self, v: CosetVertex) -> list[CosetVertex]:
        out = []
        for e in self.edges:
            if e.bottom == v:
                out.append(e.top)
            elif e.top == v:
                out.append(e.bottom)
        return out

    def f_vector(self) -> tuple[int, ...]:
        top = max(self.cubes, default=0)
        return (len(self.vertices),) + tuple(len(self.cubes.get(d, ())) for d in range(1, top + 1))


def _sub_cliques(members: tuple[str, ...]):
    for k in range(len(members) + 1):
        yield from combinations(members, k)


def build_ball(g: DefiningGraph, radius: int, word_budget: int | None = None) -> CubeBall:
    """Ball of the given radius around ``A_{}``, with all cubes it contains."""
    if radius < 0:
        raise ValueError("radius must be non-negative")
    group = _raag(g)
    budget = radius // 2 if word_budget is None else word_budget
    if budget < 0:
        raise ValueError("word_budget must be non-negative")
    cliques = [c.members for c in enumerate_cliques(g)]
    up_moves = {
        c: [s for s in g.vertices if s not in c and all(g.adjacent(s, u) for u in c)]
        for c in cliques
    }

    def moves(v: CosetVertex):
        for s in up_moves[v.clique]:
            yield group.coset(v.rep, g.sort(v.clique + (s,)))
        for s in v.clique:
            lower = tuple(u for u in v.clique if u != s)
            exp_sum = sum(e for x, e in v.rep if x == s)
            for n in range(-budget - exp_sum, budget - exp_sum + 1):
                step = ((s, 1 if n > 0 else -1),) * abs(n)
                yield group.coset(v.rep + step, lower)

    start = CosetVertex((), ())
    dist = {start: 0}
    order = [start]
    queue = deque([start])
    while queue:
        v = queue.popleft()
        if dist[v] == radius:
            continue
        for w in moves(v):
            if w not in dist and len(w.rep) <= budget:
                dist[w] = dist[v] + 1
                order.append(w)
                queue.append(w)

    cubes: dict[int, list[Cube]] = {}
    for v in order:
        for top_clique in cliques:
            if len(top_clique) <= len(v.clique) or not set(v.clique) < set(top_clique):
                continue
            extra = tuple(s for s in top_clique if s not in v.clique)
            corners = []
            for sub in _sub_cliques(extra):
                c = group.coset(v.rep, g.sort(v.clique + sub))
                if c not in dist:
                    break
                corners.append(c)
            else:
                cube = Cube(v, corners[-1], tuple(corners))
                cubes.setdefault(cube.dimension, []).append(cube)
    ball = CubeBall(
        vertices=tuple(order),
        distance=dist,
        cubes={d: tuple(cs) for d, cs in sorted(cubes.items())},
        radius=radius,
        word_budget=budget,
    )
    return mark_deligne(g, ball)


def fundamental_domain(g: DefiningGraph) -> CubeBall:
    """The subcomplex spanned by the cosets ``A_T`` themselves (``g`` = 1).

    Every interval ``[A_T, A_T']`` with ``T`` inside ``T'`` is a cube.  No
    word problem is involved, so any labels are allowed.
    """
    cliques = [c.members for c in enumerate_cliques(g)]
    verts = tuple(CosetVertex((), c) for c in cliques)
    by_clique = {v.clique: v for v in verts}
    cubes: dict[int, list[Cube]] = {}
    for low in cliques:
        for high in cliques:
            if len(high) > len(low) and set(low) < set(high):
                extra = tuple(s for s in high if s not in low)
                corners = tuple(by_clique[g.sort(low + sub)] for sub in _sub_cliques(extra))
                cube = Cube(by_clique[low], by_clique[high], corners)
                cubes.setdefault(cube.dimension, []).append(cube)
    ball = CubeBall(
        vertices=verts,
        distance={v: len(v.clique) for v in verts},
        cubes={d: tuple(cs) for d, cs in sorted(cubes.items())},
        radius=max(len(c) for c in cliques),
        word_budget=0,
    )
    return mark_deligne(g, ball)


def deligne_flag(g: DefiningGraph, clique) -> bool:
    """Whether ``A_T`` is of finite type, i.e. ``g A_T`` lies in the Deligne subcomplex."""
    return is_finite_type(g, clique).finite


def mark_deligne(g: DefiningGraph, ball: CubeBall) -> CubeBall:
    flags = {}
    cache: dict[tuple, bool] = {}
    for v in ball.vertices:
        if v.clique not in cache:
            cache[v.clique] = deligne_flag(g, v.clique)
        flags[v] = cache[v.clique]
    return replace(ball, deligne=flags)


def link_at(ball: CubeBall, v: CosetVertex) -> SimplicialComplex:
    """Link of ``v`` realized by the cubes of the ball that contain it.

    Link vertices are the neighbors of ``v`` (as strings); each cube through
    ``v`` contributes the simplex of its corners adjacent to ``v``.
    """
    here = set(v.clique)
    names = []
    simplices = set()
    for cs in ball.cubes.values():
        for cube in cs:
            if v not in cube.corners:
                continue
            adjacent = [str(c) for c in cube.corners if len(set(c.clique) ^ here) == 1]
            simplices.add(frozenset(adjacent))
            if cube.dimension == 1:
                names.extend(adjacent)
    return SimplicialComplex(tuple(sorted(set(names))), frozenset(simplices))


@dataclass(frozen=True)
class LinkBaseReport:
    isomorphic: bool
    link: SimplicialComplex
    expected: SimplicialComplex
    vertex_map: dict  # generator -> neighbor of A_{}
    missing: frozenset
    extra: frozenset


def verify_link_base(g: DefiningGraph, ball: CubeBall) -> LinkBaseReport:
    """Compare the link of ``A_{}`` in ``ball`` with the flag complex of ``g``.

    Each link vertex is matched to the label of its edge; the map is an
    isomorphism when labels are distinct and the labeled simplices coincide.
    Reliable once the radius is at least the clique number.
    """
    base = CosetVertex((), ())
    simplices = set()
    vertex_map: dict[str, str] = {}
    injective = True
    for cs in ball.cubes.values():
        for cube in cs:
            if cube.bottom != base:
                continue
            simplices.add(frozenset(cube.labels))
            if cube.dimension == 1:
                (s,) = cube.labels
                if s in vertex_map:
                    injective = False
                vertex_map[s] = str(cube.top)
    link = SimplicialComplex(g.sort(vertex_map), frozenset(simplices))
    expected = flag_complex(g)
    missing = expected.simplices - link.simplices
    extra = link.simplices - expected.simplices
    ok = injective and not missing and not extra and set(link.vertices) == set(expected.vertices)
    return LinkBaseReport(ok, link, expected, vertex_map, missing, extra)


def ball_to_json(ball: CubeBall) -> str:
    data = {
        "radius": ball.radius,
        "word_budget": ball.word_budget,
        "vertices": [
            dict(v.to_json(), deligne=ball.deligne.get(v, True), distance=ball.distance[v])
            for v in ball.vertices
        ],
        "cubes": [c.to_json() for d in sorted(ball.cubes) for c in ball.cubes[d]],
    }
    return json.dumps(data, indent=2)


def ball_to_dot(ball: CubeBall, name: str = "ball") -> str:
    ids = {v: f"v{i}" for i, v in enumerate(ball.vertices)}
    lines = [f"graph {name} {{", "  node [shape=point];"]
    for v in ball.vertices:
        shape = "" if ball.deligne.get(v, True) else ", color=red"
        lines.append(f'  {ids[v]} [xlabel="{v}"{shape}];')
    for e in ball.edges:
        lines.append(f'  {ids[e.bottom]} -- {ids[e.top]} [label="{e.labels[0]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
