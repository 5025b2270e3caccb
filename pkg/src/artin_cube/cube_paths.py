"""Labeled edge paths in the clique-cube complex and local geodesy certificates.

A path starts at a symbolic vertex ``g A_T`` and moves one generator at a
time.  An up step ``s`` goes ``g A_T -> g A_{T+s}``.  A down step ``s`` with
power ``p`` goes ``g A_T -> g s^p A_{T-s}``; ``p = 1`` is the default and
``p = 0`` keeps the same coset representative.  Words are only multiplied
and freely reduced, so no word problem is solved here.

The certificate is sound only: at each interior corner the two edges either
carry non-adjacent labels, or carry the same label out of a common top vertex
into distinct cosets.  In both cases they do not lie in a common cube and the
angle between them is at least pi.  Anything else is flagged.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .defining_graph import DefiningGraph
from .errors import PreconditionError
from .words import Word, format_word, multiply, parse_word, power

__all__ = [
    "UP",
    "DOWN",
    "Step",
    "SymbolicVertex",
    "EdgePath",
    "InvalidPathError",
    "Corner",
    "GeodesyCertificate",
    "certify_geodesic",
    "hyperplane_sequence",
    "may_cross",
    "pairwise_noncrossing",
    "consecutive_noncrossing",
    "covers_all_types",
    "path_from_json",
    "path_to_json",
    "infer_base_clique",
]

UP = "up"
DOWN = "down"
CERTIFIED = "Certified"
NOT_CERTIFIED = "NotCertified"


class InvalidPathError(PreconditionError):
    pass


@dataclass(frozen=True)
class Step:
    label: str
    dir: str
    power: int = 1

    def __post_init__(self):
        if self.dir not in (UP, DOWN):
            raise InvalidPathError(f"step direction must be 'up' or 'down', got {self.dir!r}")

    def to_json(self) -> dict:
        out = {"label": self.label, "dir": self.dir}
        if self.dir == DOWN and self.power != 1:
            out["power"] = self.power
        return out


@dataclass(frozen=True)
class SymbolicVertex:
    """The coset ``word * A_clique`` written with an unreduced-free word."""

    word: Word = ()
    clique: tuple[str, ...] = ()

    def __str__(self) -> str:
        w = format_word(self.word)
        return f"{w + ' ' if w else ''}A_{{{','.join(self.clique)}}}"


@dataclass(frozen=True)
class EdgePath:
    base: SymbolicVertex
    steps: tuple[Step, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.steps)

    def validate(self, g: DefiningGraph) -> None:
        self.vertices(g)

    def vertices(self, g: DefiningGraph) -> list[SymbolicVertex]:
        """Vertex sequence of the path; raises InvalidPathError on a bad step."""
        if not g.is_clique_set(self.base.clique):
            raise InvalidPathError(f"base clique {self.base.clique} is not a clique")
        word, clique = self.base.word, set(self.base.clique)
        out = [SymbolicVertex(word, g.sort(clique))]
        for i, st in enumerate(self.steps):
            if st.label not in g:
                raise InvalidPathError(f"step {i}: unknown generator {st.label!r}")
            if st.dir == UP:
                if st.label in clique:
                    raise InvalidPathError(f"step {i}: up {st.label} but {st.label} already in clique")
                if not all(g.adjacent(st.label, u) for u in clique):
                    raise InvalidPathError(f"step {i}: {sorted(clique | {st.label})} is not a clique")
                clique = clique | {st.label}
            else:
                if st.label not in clique:
                    raise InvalidPathError(f"step {i}: down {st.label} but {st.label} not in clique")
                clique = clique - {st.label}
                word = multiply(word, power(st.label, st.power))
            out.append(SymbolicVertex(word, g.sort(clique)))
        return out

    def concat(self, other: "EdgePath") -> "EdgePath":
        return EdgePath(self.base, self.steps + other.steps)


@dataclass(frozen=True)
class Corner:
    index: int  # vertex index along the path (1 .. len-1)
    labels: tuple[str, str]
    dirs: tuple[str, str]
    passed: bool
    reason: str


@dataclass(frozen=True)
class GeodesyCertificate:
    verdict: str
    corners: tuple[Corner, ...]

    @property
    def certified(self) -> bool:
        return self.verdict == CERTIFIED

    def failing(self) -> list[Corner]:
        return [c for c in self.corners if not c.passed]


def _corner(g: DefiningGraph, i: int, a: Step, b: Step) -> Corner:
    labels, dirs = (a.label, b.label), (a.dir, b.dir)
    if a.label == b.label:
        if a.dir == UP and b.dir == DOWN and b.power != 0:
            return Corner(i, labels, dirs, True, "same label into distinct cosets: no common cube")
        return Corner(i, labels, dirs, False, "backtrack: both edges join the same two vertices")
    if not g.adjacent(a.label, b.label):
        return Corner(i, labels, dirs, True, "labels not adjacent in the defining graph: no common cube")
    return Corner(i, labels, dirs, False, "labels adjacent in the defining graph: edges may span a square")


def certify_geodesic(g: DefiningGraph, p: EdgePath) -> GeodesyCertificate:
    p.validate(g)
    corners = tuple(_corner(g, i + 1, p.steps[i], p.steps[i + 1]) for i in range(len(p.steps) - 1))
    verdict = CERTIFIED if all(c.passed for c in corners) else NOT_CERTIFIED
    return GeodesyCertificate(verdict, corners)


def hyperplane_sequence(p: EdgePath) -> tuple[str, ...]:
    """Types of the hyperplanes crossed by ``p``, in order."""
    return tuple(st.label for st in p.steps)


def may_cross(g: DefiningGraph, s: str, t: str) -> bool:
    """Necessary condition for hyperplanes of types ``s`` and ``t`` to cross."""
    return s != t and g.adjacent(s, t)


def pairwise_noncrossing(g: DefiningGraph, seq: Sequence[str]) -> bool:
    return not any(
        may_cross(g, seq[i], seq[j]) for i in range(len(seq)) for j in range(i + 1, len(seq))
    )


def consecutive_noncrossing(g: DefiningGraph, seq: Sequence[str], cyclic: bool = False) -> bool:
    pairs = list(zip(seq, seq[1:]))
    if cyclic and len(seq) > 1:
        pairs.append((seq[-1], seq[0]))
    return not any(may_cross(g, s, t) for s, t in pairs)


def covers_all_types(g: DefiningGraph, seq: Iterable[str]) -> bool:
    return set(g.vertices) <= set(seq)


def infer_base_clique(g: DefiningGraph, steps: Sequence[Step]) -> tuple[str, ...]:
    """Smallest starting clique for which ``steps`` can be valid.

    A generator belongs to it exactly when its first occurrence is a down step.
    """
    seen, base = set(), []
    for st in steps:
        if st.label not in seen:
            seen.add(st.label)
            if st.dir == DOWN:
                base.append(st.label)
    return g.sort(base)


def path_to_json(p: EdgePath) -> dict:
    return {
        "base": {"word": format_word(p.base.word), "clique": list(p.base.clique)},
        "steps": [st.to_json() for st in p.steps],
    }


def path_from_json(data, g: DefiningGraph | None = None) -> EdgePath:
    """Read a path from a JSON array of steps or an object with ``base`` and ``steps``.

    A bare array starts at ``A_T`` with ``T`` from :func:`infer_base_clique`
    (requires ``g``) or at ``A_{}`` when no graph is given.
    """
    if isinstance(data, str):
        data = json.loads(data)
    if isinstance(data, list):
        raw_steps, base = data, None
    elif isinstance(data, dict) and "steps" in data:
        raw_steps, base = data["steps"], data.get("base")
    else:
        raise InvalidPathError("path JSON must be a list of steps or an object with 'steps'")
    try:
        steps = tuple(Step(s["label"], s["dir"], int(s.get("power", 1))) for s in raw_steps)
    except (KeyError, TypeError) as exc:
        raise InvalidPathError(f"malformed step: {exc}") from None
    if base is None:
        clique = infer_base_clique(g, steps) if g is not None else ()
        return EdgePath(SymbolicVertex((), clique), steps)
    clique = tuple(base.get("clique", ()))
    if g is not None:
        clique = g.sort(clique)
    return EdgePath(SymbolicVertex(parse_word(base.get("word", "")), clique), steps)
