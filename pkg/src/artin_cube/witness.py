"""Loxodromic elements with explicit axes, and the acylindricity witness package.

For letters ``s_1 ... s_k`` with consecutive (and first/last) letters
non-adjacent in the defining graph, ``g = s_1 ... s_k`` translates along the
edge path

    A_{}, A_{s_1}, g_1 A_{}, g_1 A_{s_2}, g_2 A_{}, ..., g A_{}

(``g_i = s_1 ... s_i``), i.e. up ``s_i`` then down ``s_i`` for each letter.
Runs of a repeated letter are taken as a single syllable ``s^n`` (one up
step, one down step with power ``n``), which is how ``h = s_1 g`` gets its
axis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce

from .cube_paths import (
    DOWN,
    UP,
    EdgePath,
    GeodesyCertificate,
    Step,
    SymbolicVertex,
    certify_geodesic,
    consecutive_noncrossing,
    covers_all_types,
    hyperplane_sequence,
    pairwise_noncrossing,
)
from .defining_graph import DefiningGraph, classify, complement
from .errors import PreconditionError
from .words import format_word, inverse, multiply, parse_word, power, syllables

__all__ = [
    "LOXODROMIC",
    "FULL_COVER",
    "CliqueGraphError",
    "JoinGraphError",
    "TooFewVerticesError",
    "WitnessWord",
    "WordChecks",
    "DivergenceNote",
    "AcylWitness",
    "axis_from_letters",
    "check_word",
    "loxodromic_word",
    "full_cover_word",
    "acyl_witness",
]

LOXODROMIC = "Loxodromic"
FULL_COVER = "FullCover"


class CliqueGraphError(PreconditionError):
    """Every pair of generators is adjacent; the complex has finite diameter."""


class JoinGraphError(PreconditionError):
    """The complement graph is disconnected."""


class TooFewVerticesError(PreconditionError):
    pass


def axis_from_letters(letters) -> EdgePath:
    """One period of the axis, starting at ``A_{}``."""
    steps = []
    for s, n in syllables(tuple((x, 1) for x in letters)):
        steps.append(Step(s, UP))
        steps.append(Step(s, DOWN, n))
    return EdgePath(SymbolicVertex(), tuple(steps))


@dataclass(frozen=True)
class WitnessWord:
    letters: tuple[str, ...]
    axis: EdgePath
    kind: str
    periodic: bool = True

    @property
    def word(self):
        return tuple((s, 1) for s in self.letters)

    def axis_segment(self, periods: int = 2) -> EdgePath:
        """``periods`` consecutive periods; two cover every corner up to translation."""
        return EdgePath(self.axis.base, self.axis.steps * periods)

    def __str__(self) -> str:
        return format_word(self.word)


@dataclass(frozen=True)
class WordChecks:
    consecutive_nonadjacent: bool
    wraparound_nonadjacent: bool
    covers_all: bool
    common_link_empty: bool
    axis_certified: bool
    consecutive_noncrossing: bool
    pairwise_noncrossing: bool

    @property
    def loxodromic_ok(self) -> bool:
        return self.consecutive_nonadjacent and self.wraparound_nonadjacent and self.axis_certified

    @property
    def full_cover_ok(self) -> bool:
        return self.loxodromic_ok and self.covers_all and self.common_link_empty


def check_word(g: DefiningGraph, w: WitnessWord) -> WordChecks:
    """Evaluate every validity predicate of a witness word.

    The two crossing checks are reported, not required: the pairwise one is
    stronger than what the axis construction guarantees.
    """
    letters = w.letters
    consecutive = all(
        a != b and not g.adjacent(a, b) for a, b in zip(letters, letters[1:])
    )
    wrap = len(letters) >= 2 and letters[0] != letters[-1] and not g.adjacent(letters[0], letters[-1])
    common = reduce(lambda acc, s: acc & g.neighbors(s), letters, frozenset(g.vertices))
    seq = hyperplane_sequence(w.axis)
    return WordChecks(
        consecutive_nonadjacent=consecutive,
        wraparound_nonadjacent=wrap,
        covers_all=covers_all_types(g, letters),
        common_link_empty=not common,
        axis_certified=certify_geodesic(g, w.axis_segment(2)).certified,
        consecutive_noncrossing=consecutive_noncrossing(g, seq, cyclic=True),
        pairwise_noncrossing=pairwise_noncrossing(g, seq),
    )


def loxodromic_word(g: DefiningGraph) -> WitnessWord:
    """``s t`` for the first non-adjacent pair in declaration order."""
    vs = g.vertices
    for i, a in enumerate(vs):
        for b in vs[i + 1:]:
            if not g.adjacent(a, b):
                letters = (a, b)
                return WitnessWord(letters, axis_from_letters(letters), LOXODROMIC)
    raise CliqueGraphError(
        "defining graph is a clique: the complex has finite diameter and the group "
        "has a global fixed point, so no loxodromic witness exists"
    )


def _require_non_join(g: DefiningGraph) -> None:
    if len(g) < 2:
        raise TooFewVerticesError("need at least two vertices")
    cls = classify(g)
    if cls.join_factors is not None:
        a, b = cls.join_factors
        raise JoinGraphError(
            f"defining graph is a join of {{{','.join(a)}}} and {{{','.join(b)}}}: "
            "its complement is disconnected"
        )


def full_cover_word(g: DefiningGraph) -> WitnessWord:
    """Closed walk in the complement graph through every vertex.

    Depth-first search of the complement from the first vertex, neighbors in
    declaration order; the walk traverses each tree edge down and back.
    """
    _require_non_join(g)
    comp = complement(g)
    walk: list[str] = []
    seen = {g.vertices[0]}

    def dfs(v: str) -> None:
        walk.append(v)
        for u in g.sort(comp[v]):
            if u not in seen:
                seen.add(u)
                dfs(u)
                walk.append(v)

    dfs(g.vertices[0])
    letters = tuple(walk[:-1])  # last entry returns to the start
    return WitnessWord(letters, axis_from_letters(letters), FULL_COVER)


@dataclass(frozen=True)
class DivergenceNote:
    """Two edges with the same label leaving one vertex into distinct cosets.

    Such edges never lie in a common cube, so the rays they start combine into
    a geodesic and have distinct endpoints.
    """

    at: SymbolicVertex
    label: str
    g_target: SymbolicVertex
    h_target: SymbolicVertex
    same_label: bool
    distinct_targets: bool

    @property
    def holds(self) -> bool:
        return self.same_label and self.distinct_targets


@dataclass(frozen=True)
class AcylWitness:
    g: WitnessWord
    h: WitnessWord
    h_letters: tuple[str, ...]
    divergence: tuple[DivergenceNote, DivergenceNote]
    hyperplane_pair: tuple[tuple[int, str], tuple[int, str]]
    g_certificate: GeodesyCertificate
    h_certificate: GeodesyCertificate
    g_checks: WordChecks = field(compare=False)

    @property
    def period(self) -> int:
        return len(self.g.axis)

    @property
    def all_certified(self) -> bool:
        return (self.g_certificate.certified and self.h_certificate.certified
                and all(d.holds for d in self.divergence))


def _divergence(g_word, h_word, s1: str) -> tuple[DivergenceNote, DivergenceNote]:
    # forward: at y = A_{s1}, g's axis drops to s1 A_{} and h's to s1^2 A_{}
    y = SymbolicVertex((), (s1,))
    fwd_g = SymbolicVertex(power(s1, 1), ())
    fwd_h = SymbolicVertex(power(s1, 2), ())
    forward = DivergenceNote(y, s1, fwd_g, fwd_h, True, fwd_g != fwd_h)
    # backward: g^-1 y = h^-1 y, with edges down to g^-1 A_{} and h^-1 A_{}
    g_inv, h_inv = inverse(g_word), inverse(h_word)
    back_y = SymbolicVertex(g_inv, (s1,))
    assert multiply(h_inv, power(s1, 1)) == g_inv
    back_g = SymbolicVertex(g_inv, ())
    back_h = SymbolicVertex(h_inv, ())
    backward = DivergenceNote(back_y, s1, back_g, back_h, True, back_g != back_h)
    return forward, backward


def acyl_witness(g: DefiningGraph) -> AcylWitness:
    """Package ``g`` from :func:`full_cover_word`, ``h = s_1 g`` and their checks.

    The hyperplane pair is given as axis edge positions (position ``i`` is
    the ``i``-th edge after ``A_{}``): the last crossing before ``A_{}`` and
    the first after ``g A_{}``.  Exactly one period lies strictly between.
    """
    gw = full_cover_word(g)
    s1 = gw.letters[0]
    h_letters = (s1,) + gw.letters
    hw = WitnessWord(h_letters, axis_from_letters(h_letters), FULL_COVER)
    k2 = len(gw.axis)
    seq = hyperplane_sequence(gw.axis)
    pair = ((-1, seq[-1]), (k2, seq[0]))
    return AcylWitness(
        g=gw,
        h=hw,
        h_letters=h_letters,
        divergence=_divergence(parse_word(" ".join(gw.letters)), parse_word(" ".join(h_letters)), s1),
        hyperplane_pair=pair,
        g_certificate=certify_geodesic(g, gw.axis_segment(2)),
        h_certificate=certify_geodesic(g, hw.axis_segment(2)),
        g_checks=check_word(g, gw),
    )
