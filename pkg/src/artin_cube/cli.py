"""Command line entry point: ``artin-cube <command> <graphfile> [options]``.

Exit status is 0 on success, 2 for unreadable or malformed input and 3 when
an operation's precondition fails (for example a witness for a join).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import ball as ball_mod
from .coxeter import is_fc_type, is_finite_type
from .cube_paths import certify_geodesic, hyperplane_sequence, path_from_json, path_to_json
from .defining_graph import DefiningGraph, ParseError, enumerate_cliques, load
from .errors import PreconditionError
from .flag_links import flag_complex, link_partition_at, spherical_vertex_distance, to_dot
from .report import analyze, emit
from .witness import acyl_witness, check_word, loxodromic_word

EXIT_PARSE = 2
EXIT_PRECONDITION = 3


def _clique_arg(g: DefiningGraph, raw: str | None):
    if raw is None:
        return None
    names = [x for x in raw.replace(" ", "").split(",") if x]
    for n in names:
        if n not in g:
            raise PreconditionError(f"unknown vertex {n!r}")
    return g.sort(names)


def _finite_or_str(q):
    return q if q != float("inf") else "inf"


def cmd_analyze(g, args, out):
    out.write(emit(analyze(g), "json" if args.json else "text"))
    if args.json:
        out.write("\n")


def cmd_finite_type(g, args, out):
    clique = _clique_arg(g, args.clique)
    targets = [clique] if clique is not None else [c.members for c in enumerate_cliques(g)]
    verdicts = []
    for t in targets:
        v = is_finite_type(g, t)
        verdicts.append({
            "clique": list(t),
            "finite": v.finite,
            "components": [[list(m), tag] for m, tag in v.irreducible_components],
        })
    data = {"verdicts": verdicts}
    if clique is None:
        fc = is_fc_type(g)
        data["fc"] = fc.fc
        data["offending_cliques"] = [list(c) for c in fc.offending_cliques]
    out.write(json.dumps(data, indent=2) + "\n")


def cmd_links(g, args, out):
    fc = flag_complex(g)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(to_dot(fc))
    if args.at is not None:
        part = link_partition_at(g, _clique_arg(g, args.at))
        data = {"at": list(part.at), "families": [asdict(f) for f in part.families]}
    else:
        data = {
            "vertices": list(fc.vertices),
            "f_vector": list(fc.f_vector()),
            "simplices": sorted((g.sort(s) for s in fc.simplices), key=lambda s: (len(s), [g.index(v) for v in s])),
            "distance_quarter_turns": {
                v: {w: _finite_or_str(spherical_vertex_distance(fc, v, w)) for w in g.vertices} for v in g.vertices
            },
        }
    if args.json or args.at is not None:
        out.write(json.dumps(data, indent=2) + "\n")
    else:
        out.write(f"flag complex f-vector: {' '.join(map(str, data['f_vector']))}\n")
        for s in data["simplices"]:
            out.write("  {" + ",".join(s) + "}\n")


def cmd_witness(g, args, out):
    if args.kind == "lox":
        w = loxodromic_word(g)
        data = {
            "kind": w.kind,
            "letters": list(w.letters),
            "axis": path_to_json(w.axis),
            "certificate": certify_geodesic(g, w.axis_segment(2)).verdict,
            "checks": asdict(check_word(g, w)),
        }
    else:
        aw = acyl_witness(g)
        data = {
            "g": {"letters": list(aw.g.letters), "axis": path_to_json(aw.g.axis),
                  "certificate": aw.g_certificate.verdict, "checks": asdict(aw.g_checks)},
            "h": {"letters": list(aw.h_letters), "axis": path_to_json(aw.h.axis),
                  "certificate": aw.h_certificate.verdict},
            "hyperplane_pair": [list(p) for p in aw.hyperplane_pair],
            "divergence": [
                {"at": str(d.at), "label": d.label, "g_target": str(d.g_target),
                 "h_target": str(d.h_target), "holds": d.holds}
                for d in aw.divergence
            ],
        }
    if args.json:
        out.write(json.dumps(data, indent=2) + "\n")
    else:
        if args.kind == "lox":
            out.write(f"word: {' '.join(data['letters'])}\ncertificate: {data['certificate']}\n")
        else:
            out.write(f"g: {' '.join(data['g']['letters'])} [{data['g']['certificate']}]\n"
                      f"h: {' '.join(data['h']['letters'])} [{data['h']['certificate']}]\n")
        out.write(json.dumps(data["axis"] if args.kind == "lox" else data["g"]["axis"]) + "\n")


def cmd_certify(g, args, out):
    try:
        with open(args.pathfile, encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read path file: {exc}") from None
    p = path_from_json(raw, g)
    cert = certify_geodesic(g, p)
    data = {
        "verdict": cert.verdict,
        "hyperplanes": list(hyperplane_sequence(p)),
        "corners": [asdict(c) for c in cert.corners],
    }
    if args.json:
        out.write(json.dumps(data, indent=2) + "\n")
    else:
        out.write(f"verdict: {cert.verdict}\n")
        for c in cert.failing():
            out.write(f"  corner {c.index} ({c.labels[0]} {c.dirs[0]}, {c.labels[1]} {c.dirs[1]}): {c.reason}\n")


def cmd_ball(g, args, out):
    if args.fundamental_domain:
        b = ball_mod.fundamental_domain(g)
    elif args.radius is None:
        raise PreconditionError("give --radius or --fundamental-domain")
    elif args.radius < 0 or (args.budget is not None and args.budget < 0):
        raise PreconditionError("radius and budget must be non-negative")
    else:
        b = ball_mod.build_ball(g, args.radius, args.budget)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(ball_mod.ball_to_dot(b))
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(ball_mod.ball_to_json(b))
    fv = b.f_vector()
    if args.fundamental_domain:
        out.write(f"fundamental domain: {fv[0]} vertices, cubes by dimension {list(fv[1:])}\n")
        for v in b.vertices:
            out.write(f"  {v}{'' if b.deligne[v] else '  (not finite type)'}\n")
    else:
        out.write(f"radius {b.radius}, word budget {b.word_budget}: "
                  f"{fv[0]} vertices, cubes by dimension {list(fv[1:])}\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="artin-cube", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="theorem-applicability report")
    a.add_argument("graphfile")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    f = sub.add_parser("finite-type", help="finite-type verdicts as JSON")
    f.add_argument("graphfile")
    f.add_argument("--clique", help="comma-separated clique, default: all cliques")
    f.set_defaults(func=cmd_finite_type)

    lk = sub.add_parser("links", help="flag complex, link distances, link partitions")
    lk.add_argument("graphfile")
    lk.add_argument("--at", help="comma-separated nonempty clique T: describe lk(A_T)")
    lk.add_argument("--dot", help="write the flag complex as DOT to this file")
    lk.add_argument("--json", action="store_true")
    lk.set_defaults(func=cmd_links)

    w = sub.add_parser("witness", help="loxodromic / acylindricity witnesses")
    w.add_argument("graphfile")
    w.add_argument("--kind", choices=("lox", "acyl"), default="acyl")
    w.add_argument("--json", action="store_true")
    w.set_defaults(func=cmd_witness)

    c = sub.add_parser("certify", help="certify an edge path as geodesic")
    c.add_argument("graphfile")
    c.add_argument("pathfile")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_certify)

    b = sub.add_parser("ball", help="ball around A_{} (right-angled) or the fundamental domain")
    b.add_argument("graphfile")
    b.add_argument("--radius", type=int)
    b.add_argument("--fundamental-domain", action="store_true",
                   help="the cosets A_T and the cubes between them (any labels)")
    b.add_argument("--budget", type=int, default=None, help="word-length budget, default radius // 2")
    b.add_argument("--dot", help="write the 1-skeleton as DOT")
    b.add_argument("--json", help="write vertices and cubes as JSON")
    b.set_defaults(func=cmd_ball)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        g = load(args.graphfile)
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    except (ParseError, json.JSONDecodeError) as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    try:
        args.func(g, args, out)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except PreconditionError as exc:
        err.write(f"precondition failed: {exc}\n")
        return EXIT_PRECONDITION
    return 0


if __name__ == "__main__":
    sys.exit(main())
