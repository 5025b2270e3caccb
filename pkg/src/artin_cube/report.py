"""Theorem-applicability report for an Artin group given by its defining graph.

Verdicts are one-directional.  The criteria used here are sufficient
conditions, so a failed hypothesis yields ``NOT_DECIDED`` rather than a
negative answer.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields

from .coxeter import is_fc_type, is_finite_type
from .cube_paths import certify_geodesic, path_to_json
from .defining_graph import DefiningGraph, classify, maximal_cliques
from .witness import WitnessWord, acyl_witness, check_word, loxodromic_word

__all__ = [
    "SCHEMA_VERSION",
    "YES",
    "NOT_DECIDED",
    "YES_VIA_FINITE_TYPE_CLIQUES",
    "ALL_CLIQUES_FINITE_TYPE_FC",
    "REDUCED_TO_CLIQUES",
    "AnalysisReport",
    "analyze",
    "emit",
    "report_from_json",
]

SCHEMA_VERSION = 1

YES = "YES"
NOT_DECIDED = "NOT_DECIDED"
YES_VIA_FINITE_TYPE_CLIQUES = "YES_VIA_FINITE_TYPE_CLIQUES"
ALL_CLIQUES_FINITE_TYPE_FC = "ALL_CLIQUES_FINITE_TYPE_FC"
REDUCED_TO_CLIQUES = "REDUCED_TO_CLIQUES"


@dataclass
class AnalysisReport:
    graph: dict
    classification: dict
    fc_type: dict
    maximal_cliques: list
    center_trivial: str
    acyl_hyperbolic: str
    torsion_free: dict
    k_pi_1: dict
    witnesses: dict
    notes: list = field(default_factory=list)
    schema_version: int = SCHEMA_VERSION

    def to_dict(self) -> dict:
        return asdict(self)


def _witness_json(g: DefiningGraph, w: WitnessWord) -> dict:
    return {
        "kind": w.kind,
        "letters": list(w.letters),
        "axis": path_to_json(w.axis),
        "certificate": certify_geodesic(g, w.axis_segment(2)).verdict,
        "checks": asdict(check_word(g, w)),
    }


def _set(vs) -> str:
    return "{" + ",".join(vs) + "}"


def analyze(g: DefiningGraph) -> AnalysisReport:
    cls = classify(g)
    fc = is_fc_type(g)
    maximal = []
    for c in maximal_cliques(g):
        verdict = is_finite_type(g, c)
        maximal.append({
            "clique": list(c),
            "finite": verdict.finite,
            "components": [[list(m), tag] for m, tag in verdict.irreducible_components],
        })
    targets = [m["clique"] for m in maximal]
    all_finite = all(m["finite"] for m in maximal)

    center = YES if cls.star_center is None else NOT_DECIDED
    acyl = YES if cls.join_factors is None and len(g) >= 2 else NOT_DECIDED

    witnesses: dict = {"loxodromic": None, "acylindrical": None}
    if not cls.is_clique:
        witnesses["loxodromic"] = _witness_json(g, loxodromic_word(g))
    if acyl == YES:
        aw = acyl_witness(g)
        witnesses["acylindrical"] = {
            "g": _witness_json(g, aw.g),
            "h_letters": list(aw.h_letters),
            "h_axis": path_to_json(aw.h.axis),
            "h_certificate": aw.h_certificate.verdict,
            "hyperplane_pair": [list(p) for p in aw.hyperplane_pair],
            "divergence_holds": all(d.holds for d in aw.divergence),
        }

    notes = []
    if cls.is_clique:
        notes.append("defining graph is a clique: the clique-cube complex has finite diameter "
                     "and a global fixed point, so it carries no information here")
    elif cls.star_center is not None:
        notes.append(f"defining graph is the star of {cls.star_center}: the trivial-center "
                     "criterion does not apply")
    if cls.join_factors is not None:
        notes.append("defining graph is a join: such groups may still be acylindrically "
                     "hyperbolic by other arguments; no verdict is drawn")

    return AnalysisReport(
        graph={
            "vertices": list(g.vertices),
            "edges": [[a, b, m] for a, b, m in g.edge_list()],
            "right_angled": g.is_right_angled,
        },
        classification={
            "is_clique": cls.is_clique,
            "star_center": cls.star_center,
            "join_factors": [list(f) for f in cls.join_factors] if cls.join_factors else None,
        },
        fc_type={"fc": fc.fc, "offending_cliques": [list(c) for c in fc.offending_cliques]},
        maximal_cliques=maximal,
        center_trivial=center,
        acyl_hyperbolic=acyl,
        torsion_free={
            "verdict": YES_VIA_FINITE_TYPE_CLIQUES if all_finite else REDUCED_TO_CLIQUES,
            "cliques": targets,
        },
        k_pi_1={
            "verdict": ALL_CLIQUES_FINITE_TYPE_FC if fc.fc else REDUCED_TO_CLIQUES,
            "cliques": targets,
        },
        witnesses=witnesses,
        notes=notes,
    )


def _text(r: AnalysisReport) -> str:
    c = r.classification
    lines = [
        f"vertices: {' '.join(r.graph['vertices'])}",
        "edges: " + (" ".join(f"{a}-{b}:{m}" for a, b, m in r.graph["edges"]) or "(none)"),
        f"right-angled: {'yes' if r.graph['right_angled'] else 'no'}",
        f"clique: {'yes' if c['is_clique'] else 'no'}",
        f"star of vertex: {c['star_center'] or 'none'}",
        "join: " + (" * ".join(_set(f) for f in c["join_factors"]) if c["join_factors"] else "no"),
        "FC-type: " + ("yes" if r.fc_type["fc"] else
                       "no (infinite type: " + ", ".join(_set(x) for x in r.fc_type["offending_cliques"]) + ")"),
    ]
    for m in r.maximal_cliques:
        tags = " x ".join(tag for _, tag in m["components"]) or "trivial"
        lines.append(f"maximal clique {_set(m['clique'])}: {'finite' if m['finite'] else 'infinite'} type ({tags})")
    lines.append("trivial center: " + ("YES (not the star of a single vertex)" if r.center_trivial == YES
                                        else "NOT DECIDED (graph is the star of a vertex)"))
    lines.append("acylindrically hyperbolic: " + (
        "YES (not a join, at least two vertices)" if r.acyl_hyperbolic == YES
        else "NOT DECIDED (graph is a join or has one vertex)"))
    targets = ", ".join(_set(x) for x in r.torsion_free["cliques"])
    if r.torsion_free["verdict"] == YES_VIA_FINITE_TYPE_CLIQUES:
        lines.append(f"torsion-free: YES (every maximal clique is finite type: {targets})")
    else:
        lines.append(f"torsion-free: reduced to cliques {targets}")
    if r.k_pi_1["verdict"] == ALL_CLIQUES_FINITE_TYPE_FC:
        lines.append("K(pi,1) conjecture: holds (FC-type, every clique finite type)")
    else:
        lines.append(f"K(pi,1) conjecture: reduced to cliques {targets}")
    lox = r.witnesses.get("loxodromic")
    if lox:
        lines.append(f"loxodromic witness: {' '.join(lox['letters'])} [{lox['certificate']}]")
    acyl = r.witnesses.get("acylindrical")
    if acyl:
        lines.append(f"acylindricity witness: g = {' '.join(acyl['g']['letters'])} "
                     f"[{acyl['g']['certificate']}], h = {' '.join(acyl['h_letters'])} [{acyl['h_certificate']}]")
    lines += [f"note: {n}" for n in r.notes]
    return "\n".join(lines) + "\n"


def emit(report: AnalysisReport, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2, sort_keys=False)
    if fmt == "text":
        return _text(report)
    raise ValueError(f"unknown report format {fmt!r}")


def report_from_json(text: str | dict) -> AnalysisReport:
    data = json.loads(text) if isinstance(text, str) else dict(text)
    version = data.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ValueError(f"unsupported report schema version {version!r}")
    names = {f.name for f in fields(AnalysisReport)}
    return AnalysisReport(**{k: v for k, v in data.items() if k in names})
