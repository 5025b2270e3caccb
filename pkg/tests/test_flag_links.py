import math
from itertools import combinations

import pytest
from hypothesis import given

from artin_cube.defining_graph import enumerate_cliques, parse
from artin_cube.flag_links import (
    LinkPartitionError,
    SimplicialComplex,
    SphericalMetricView,
    flag_complex,
    link_partition_at,
    quarter_turns_to_radians,
    simplex_separation_lower_bound,
    spherical_vertex_distance,
    to_dot,
)
from oracles import bfs_distance, graphs_up_to
from test_defining_graph import graphs


def test_flag_complex_examples(paw, single, c4):
    assert flag_complex(paw).f_vector() == (4, 4, 1)
    assert flag_complex(single).f_vector() == (1,)
    assert flag_complex(c4).f_vector() == (4, 4)
    assert flag_complex(paw).skeleton(2) == {frozenset("abc")}


def test_distance_examples(paw):
    fc = flag_complex(paw)
    assert spherical_vertex_distance(fc, "a", "b") == 1
    assert spherical_vertex_distance(fc, "a", "a") == 0
    assert spherical_vertex_distance(fc, "a", "d") == 2
    assert math.isclose(quarter_turns_to_radians(2), math.pi)
    view = SphericalMetricView(fc)
    assert math.isclose(view.distance_radians("a", "b"), math.pi / 2)


def test_separation_examples(paw):
    fc = flag_complex(paw)
    assert simplex_separation_lower_bound(fc, "ab", "bc") == 0
    assert simplex_separation_lower_bound(fc, "ab", "d") == 2
    two = flag_complex(parse("vertices: s t"))
    assert simplex_separation_lower_bound(two, "s", "t") == math.inf
    assert spherical_vertex_distance(two, "s", "t") == math.inf


def test_link_partition_examples(paw):
    g = parse("vertices: s u; edge: s-u:2")
    part = link_partition_at(g, ["s", "u"])
    assert [f.generator for f in part.families] == ["s", "u"]
    assert part.families[0].coset_clique == ("u",)
    assert len(link_partition_at(g, ["s"]).families) == 1
    part = link_partition_at(paw, "abc")
    assert len(part.families) == 3
    assert all(f.infinite and f.independent for f in part.families)
    with pytest.raises(LinkPartitionError):
        link_partition_at(paw, [])
    with pytest.raises(LinkPartitionError):
        link_partition_at(paw, "ad")


def test_downward_closure_enforced():
    with pytest.raises(ValueError):
        SimplicialComplex(("a", "b"), frozenset({frozenset("ab")}))


def test_flag_check():
    hollow = SimplicialComplex.from_facets("abc", ["ab", "bc", "ac"])
    assert not hollow.is_flag()
    assert SimplicialComplex.from_facets("abc", ["abc"]).is_flag()


def test_skeleton_matches_graph_and_cliques():
    for g in graphs_up_to(5):
        fc = flag_complex(g)
        assert fc.skeleton(1) == set(g.edges)
        assert fc.is_flag()
        by_size = {}
        for c in enumerate_cliques(g):
            by_size[len(c)] = by_size.get(len(c), 0) + 1
        for k in range(fc.dimension + 1):
            assert len(fc.skeleton(k)) == by_size[k + 1]


def test_metric_axioms_exhaustive():
    for g in graphs_up_to(5):
        fc = flag_complex(g)
        d = {(v, w): spherical_vertex_distance(fc, v, w) for v in g.vertices for w in g.vertices}
        for (v, w), x in d.items():
            assert x == d[w, v]
            assert x == bfs_distance(g, v, w)
            assert (x == 0) == (v == w)
        for u in g.vertices:
            for v in g.vertices:
                for w in g.vertices:
                    assert d[u, w] <= d[u, v] + d[v, w]


@given(graphs())
def test_metric_axioms_random_six(g):
    fc = flag_complex(g)
    for v, w in combinations(g.vertices, 2):
        assert spherical_vertex_distance(fc, v, w) == spherical_vertex_distance(fc, w, v)
        assert spherical_vertex_distance(fc, v, w) == bfs_distance(g, v, w)


def test_dot_output(paw):
    dot = to_dot(flag_complex(paw))
    assert dot.startswith("graph flag_complex {")
    assert '"c" -- "d";' in dot
    assert '"a" -- "b" [color="steelblue", penwidth=2];' in dot
    assert "tri_a_b_c" in dot
