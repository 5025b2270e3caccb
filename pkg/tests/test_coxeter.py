import math
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artin_cube.coxeter import (
    INFINITE,
    NotACliqueError,
    classify_component,
    coxeter_diagram,
    cosine_matrix,
    is_fc_type,
    is_finite_type,
)
from artin_cube.defining_graph import DefiningGraph, enumerate_cliques, parse
from oracles import cosine_from_labels, positive_definite


def clique(labels: dict, n: int | None = None) -> DefiningGraph:
    """Complete graph on a, b, ... with ``labels[(i, j)]``."""
    n = n or max(j for _, j in labels) + 1
    names = "abcdef"[:n]
    return DefiningGraph(names, [(names[i], names[j], m) for (i, j), m in labels.items()])


def tri(x, y, z):
    return clique({(0, 1): x, (1, 2): y, (0, 2): z})


def test_cosine_matrix_examples(single):
    assert cosine_matrix(single, ["s"]).tolist() == [[1.0]]
    st_graph = parse("vertices: s t; edge: s-t:2")
    assert np.allclose(cosine_matrix(st_graph, ["s", "t"]), np.eye(2))
    b = cosine_matrix(tri(3, 3, 3), "abc")
    assert np.allclose(b[~np.eye(3, dtype=bool)], -0.5)
    assert abs(np.linalg.det(b)) < 1e-12


def test_not_a_clique(p4):
    with pytest.raises(NotACliqueError):
        is_finite_type(p4, ["a", "c"])


def test_empty_clique_finite(paw):
    v = is_finite_type(paw, [])
    assert v.finite and v.irreducible_components == ()


@pytest.mark.parametrize("m", range(2, 20))
def test_dihedral_always_finite(m):
    g = parse(f"vertices: s t; edge: s-t:{m}")
    v = is_finite_type(g, ["s", "t"])
    assert v.finite
    assert positive_definite(cosine_matrix(g, ["s", "t"]))
    expected = {2: (("s",), "A1"), 3: (("s", "t"), "A2"), 4: (("s", "t"), "B2")}
    if m == 2:
        assert v.irreducible_components == ((("s",), "A1"), (("t",), "A1"))
    elif m in expected:
        assert v.irreducible_components == (expected[m],)
    else:
        assert v.irreducible_components == ((("s", "t"), f"I2({m})"),)


@pytest.mark.parametrize(
    "labels, finite",
    [((3, 3, 3), False), ((2, 3, 3), True), ((2, 3, 5), True), ((2, 3, 6), False),
     ((2, 3, 4), True), ((2, 4, 4), False), ((2, 2, 7), True), ((3, 3, 4), False)],
)
def test_triangle_boundary(labels, finite):
    g = tri(*labels)
    assert is_finite_type(g, "abc").finite is finite
    assert positive_definite(cosine_matrix(g, "abc")) is finite


def test_diagram_drops_label_two(paw):
    d = coxeter_diagram(paw, ["c", "d"])
    assert d.vertices == ("c", "d") and d.edges == ()
    d = coxeter_diagram(paw, ["a", "b", "c"])
    assert {frozenset(e[:2]) for e in d.edges} == {frozenset("ab"), frozenset("bc"), frozenset("ac")}


def _path(n, labels):
    vs = tuple(f"v{i}" for i in range(n))
    return vs, [(vs[i], vs[i + 1], m) for i, m in enumerate(labels)]


@pytest.mark.parametrize(
    "n, labels, tag",
    [
        (3, [3, 3], "A3"), (5, [3, 3, 3, 3], "A5"),
        (3, [4, 3], "B3"), (5, [3, 3, 3, 4], "B5"),
        (4, [3, 4, 3], "F4"), (3, [5, 3], "H3"), (4, [3, 3, 5], "H4"),
        (5, [3, 3, 3, 5], INFINITE), (4, [4, 3, 4], INFINITE), (3, [4, 4], INFINITE),
        (4, [3, 6, 3], INFINITE),
    ],
)
def test_path_diagrams(n, labels, tag):
    assert classify_component(*_path(n, labels)) == tag


def _tree(arms):
    edges, verts = [], ["c"]
    for k, length in enumerate(arms):
        prev = "c"
        for i in range(length):
            v = f"x{k}_{i}"
            verts.append(v)
            edges.append((prev, v, 3))
            prev = v
    return tuple(verts), edges


@pytest.mark.parametrize(
    "arms, tag",
    [((1, 1, 1), "D4"), ((1, 1, 3), "D6"), ((1, 2, 2), "E6"), ((1, 2, 3), "E7"),
     ((1, 2, 4), "E8"), ((1, 2, 5), INFINITE), ((2, 2, 2), INFINITE), ((1, 3, 3), INFINITE)],
)
def test_branched_diagrams(arms, tag):
    assert classify_component(*_tree(arms)) == tag


def test_degree_four_infinite():
    assert classify_component(*_tree((1, 1, 1, 1))) == INFINITE


def test_classification_matches_oracle_on_named_types():
    cases = [_path(4, [3, 4, 3]), _path(4, [3, 3, 5]), _tree((1, 2, 4)), _tree((1, 2, 5)),
             _tree((1, 1, 4)), _path(6, [3, 3, 3, 3, 4])]
    for verts, edges in cases:
        idx = {v: i for i, v in enumerate(verts)}
        labels = {(i, j): 2 for i, j in combinations(range(len(verts)), 2)}
        for a, b, m in edges:
            labels[tuple(sorted((idx[a], idx[b])))] = m
        finite = classify_component(verts, edges) != INFINITE
        assert positive_definite(cosine_from_labels(len(verts), labels)) is finite


def test_fc_examples(paw, paw_ra):
    assert is_fc_type(paw_ra).fc
    res = is_fc_type(paw)
    assert not res.fc and res.offending_cliques == (("a", "b", "c"),)
    assert is_fc_type(parse("vertices: s t; edge: s-t:6")).fc


labels_5 = st.sampled_from([2, 3, 4, 5, 6])


@st.composite
def labeled_cliques(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    return clique({p: draw(labels_5) for p in combinations(range(n), 2)}, n)


@settings(max_examples=300)
@given(labeled_cliques(), st.randoms(use_true_random=False))
def test_relabeling_invariance(g, rnd):
    perm = list(g.vertices)
    rnd.shuffle(perm)
    mapping = dict(zip(g.vertices, perm))
    h = g.relabel(mapping, order=sorted(perm))
    v1 = is_finite_type(g, g.vertices)
    v2 = is_finite_type(h, h.vertices)
    assert v1.finite == v2.finite
    tags1 = sorted(tag for _, tag in v1.irreducible_components)
    tags2 = sorted(tag for _, tag in v2.irreducible_components)
    assert tags1 == tags2


@settings(max_examples=200)
@given(labeled_cliques())
def test_subcliques_of_finite_are_finite(g):
    for c in enumerate_cliques(g):
        if is_finite_type(g, c).finite:
            for v in c:
                sub = [x for x in c if x != v]
                assert is_finite_type(g, sub).finite


@settings(max_examples=200)
@given(labeled_cliques())
def test_finite_iff_no_infinite_component(g):
    v = is_finite_type(g, g.vertices)
    assert v.finite == all(tag != INFINITE for _, tag in v.irreducible_components)
    covered = [x for comp, _ in v.irreducible_components for x in comp]
    assert sorted(covered) == sorted(g.vertices)


def test_all_label_two_is_finite():
    for n in range(1, 7):
        g = clique({p: 2 for p in combinations(range(n), 2)}, n)
        v = is_finite_type(g, g.vertices)
        assert v.finite and all(tag == "A1" for _, tag in v.irreducible_components)


def test_cosine_matches_oracle_construction():
    g = tri(2, 3, 5)
    b = cosine_from_labels(3, {(0, 1): 2, (1, 2): 3, (0, 2): 5})
    assert np.allclose(cosine_matrix(g, "abc"), b)
    assert math.isclose(b[0, 2], -math.cos(math.pi / 5))
