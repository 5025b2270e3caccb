"""Acceptance criteria, one test per criterion.

Each test records a ``PASS``/``FAIL`` line that is printed in the terminal
summary (and to stdout with ``-s``).  Run alone with::

    pytest tests/test_acceptance.py -v
"""

import json
from itertools import combinations

import numpy as np

from artin_cube.ball import CosetVertex, build_ball, fundamental_domain, verify_link_base
from artin_cube.coxeter import is_finite_type
from artin_cube.defining_graph import DefiningGraph, classify, enumerate_cliques, load, parse
from artin_cube.report import analyze, emit
from artin_cube.witness import check_word, full_cover_word
from conftest import ACCEPTANCE_LINES, DATA
from oracles import (
    all_graphs,
    brute_is_clique,
    brute_join,
    brute_star_centers,
    burnside_orbit_count,
    cosine_from_labels,
    graphs_up_to,
    labeled_clique_orbits,
    positive_definite,
    positive_definite_batch,
    raag_word_classes,
    words_up_to,
)

LABELS = [2, 3, 4, 5, 6]


def record(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_criterion_1_classification_oracle():
    checked = mismatches = 0
    for g in graphs_up_to(6):
        cls = classify(g)
        centers = brute_star_centers(g)
        ok = (
            (cls.join_factors is not None) == brute_join(g)
            and cls.star_center == (centers[0] if centers else None)
            and cls.is_clique == brute_is_clique(g)
        )
        checked += 1
        mismatches += not ok
    record(1, "join/star/clique vs brute force, all graphs <= 6 vertices",
           mismatches == 0 and checked == 1 + 2 + 8 + 64 + 1024 + 32768,
           f"{checked} graphs, {mismatches} mismatches")


def _verdict_rows(n: int, rows: np.ndarray) -> np.ndarray:
    names = "abcde"[:n]
    pairs = list(combinations(range(n), 2))
    out = np.empty(len(rows), dtype=bool)
    for k, row in enumerate(rows):
        g = DefiningGraph(names, [(names[i], names[j], LABELS[x]) for (i, j), x in zip(pairs, row)])
        out[k] = is_finite_type(g, names).finite
    return out


def _oracle_rows(n: int, rows: np.ndarray) -> np.ndarray:
    pairs = list(combinations(range(n), 2))
    cos = -np.cos(np.pi / np.array(LABELS, dtype=float))
    mats = np.tile(np.eye(n), (len(rows), 1, 1))
    for k, (i, j) in enumerate(pairs):
        mats[:, i, j] = mats[:, j, i] = cos[rows[:, k]]
    return positive_definite_batch(mats)


def test_criterion_2_coxeter_oracle():
    """Sizes <= 4 exhaustively; size 5 over one labeling per relabeling class.

    Finiteness is invariant under relabeling (a simultaneous permutation of
    the cosine matrix), so each class of the 5**10 size-5 labelings is
    decided by any representative.  The class count is checked by Burnside.
    """
    from itertools import product

    total = mismatches = 0
    for n in range(1, 5):
        rows = np.array(list(product(range(len(LABELS)), repeat=n * (n - 1) // 2)), dtype=np.int64)
        if rows.size == 0:
            rows = np.zeros((1, 0), dtype=np.int64)
        mismatches += int(np.sum(_verdict_rows(n, rows) != _oracle_rows(n, rows)))
        total += len(rows)
    reps = labeled_clique_orbits(5, LABELS)
    classes_ok = len(reps) == burnside_orbit_count(5, len(LABELS))
    mismatches += int(np.sum(_verdict_rows(5, reps) != _oracle_rows(5, reps)))
    total += len(reps)

    boundary = {(3, 3, 3): False, (2, 3, 3): True, (2, 3, 5): True, (2, 3, 6): False}
    boundary_ok = True
    for labels, finite in boundary.items():
        g = DefiningGraph("abc", [("a", "b", labels[0]), ("b", "c", labels[1]), ("a", "c", labels[2])])
        pd = positive_definite(cosine_from_labels(3, {(0, 1): labels[0], (1, 2): labels[1], (0, 2): labels[2]}))
        boundary_ok &= is_finite_type(g, "abc").finite is finite and pd is finite
    record(2, "finite-type table vs leading-minor oracle (tol 1e-9), cliques <= 5, labels 2..6",
           mismatches == 0 and classes_ok and boundary_ok,
           f"{total} labelings/classes, {mismatches} mismatches, "
           f"{len(reps)} size-5 classes (Burnside {burnside_orbit_count(5, len(LABELS))}), "
           f"boundary triangles {'ok' if boundary_ok else 'WRONG'}")


def test_criterion_3_link_of_base_vertex():
    named = {
        "paw_ra": load(DATA / "paw_ra.txt"),
        "c4": load(DATA / "c4.txt"),
        "p4": parse("vertices: a b c d; edges: a-b:2 b-c:2 c-d:2"),
        "edgeless3": parse("vertices: a b c"),
    }
    graphs = list(named.values())
    # every right-angled graph on <= 5 vertices whose cliques fit in a radius-3 ball
    for g in graphs_up_to(5):
        if max(len(c) for c in enumerate_cliques(g)) <= 3:
            graphs.append(g)
    failures = [g for g in graphs if not verify_link_base(g, build_ball(g, 3)).isomorphic]
    record(3, "link(A_{}) in radius-3 ball isomorphic to flag complex, matched by labels",
           not failures and len(graphs) >= 10,
           f"{len(graphs) - len(failures)}/{len(graphs)} graphs "
           f"(incl. {', '.join(named)})")


def test_criterion_4_witness_validity():
    checked = failures = 0
    for g in graphs_up_to(6):
        if len(g) < 2 or classify(g).join_factors is not None:
            continue
        w = full_cover_word(g)
        c = check_word(g, w)
        ok = (c.consecutive_nonadjacent and c.wraparound_nonadjacent and c.covers_all
              and c.common_link_empty and c.axis_certified)
        checked += 1
        failures += not ok
    record(4, "full-cover witness predicates and certified axis, non-join graphs <= 6 vertices",
           failures == 0 and checked > 0, f"{checked - failures}/{checked} pass")


def test_criterion_5_ball_exactness():
    cases = failures = 0
    for n in range(1, 5):
        for g in all_graphs(n):
            uf = raag_word_classes(g, 3)
            for w in range(4):
                expected = {uf.find(x) for x in words_up_to(g, w)}
                ball = build_ball(g, 2 * w, w)
                identity_cosets = ball.cosets_of_identity_subgroup()
                got = [uf.find(v.rep) for v in identity_cosets]
                cases += 1
                if len(set(got)) != len(got) or set(got) != expected:
                    failures += 1
    record(5, "cosets g A_{} in ball (radius 2w, budget w) vs union-find elements of length <= w",
           failures == 0, f"{cases - failures}/{cases} (graph, w) cases exact, |S| <= 4, w <= 3")


def test_criterion_6_local_pictures():
    single = parse("vertices: s")
    budget = 3
    ball = build_ball(single, 4, budget)
    top = CosetVertex((), ("s",))
    hanging = {str(v) for v in ball.neighbors(top)}
    expected = {"A_{}"} | {f"s{'' if n == 1 else '^' + str(n)} A_{{}}"
                           for n in range(-budget, budget + 1) if n}
    star_ok = hanging == expected and set(ball.cubes) == {1} and len(ball.vertices) == 2 * budget + 2

    paw = load(DATA / "paw.txt")
    domain = [str(v) for v in fundamental_domain(paw).vertices]
    paw_expected = ["A_{}", "A_{a}", "A_{b}", "A_{c}", "A_{d}",
                     "A_{a,b}", "A_{a,c}", "A_{b,c}", "A_{c,d}", "A_{a,b,c}"]
    paw_ok = domain == paw_expected
    record(6, "single-vertex local structure and paw fundamental domain",
           star_ok and paw_ok,
           f"A_{{s}} has {len(hanging)} neighbors (budget {budget}), no squares: {star_ok}; "
           f"fundamental domain {len(domain)} cosets: {paw_ok}")


def test_criterion_7_golden_reports():
    names = ["single", "edge", "triangle", "p4", "c4", "paw"]
    bad = []
    for name in names:
        expected = json.loads((DATA.parent / "golden" / f"{name}.json").read_text())
        if json.loads(emit(analyze(load(DATA / f"{name}.txt")), "json")) != expected:
            bad.append(name)
    record(7, "analyze() vs committed golden JSON", not bad,
           f"{len(names) - len(bad)}/{len(names)} match" + (f" (differ: {', '.join(bad)})" if bad else ""))
