import dataclasses
import json

import pytest

from rtangle.complex_explorer import explore, export_dot, is_tree
from rtangle.errors import NotNormal
from rtangle.oracle_harness import bfs_class
from rtangle.surface_model import INFINITY, DehnCoordinate

D = DehnCoordinate.from_tuple
SEED = D((2, 3, 2, 1, 2, 2))

DOT_RADIUS_1 = """\
graph N {
  node [shape=box];
  "2,-1,2,1,0,0" [label="(2,-1,2,1,0,0)\\nw1=2"];
  "2,0,2,0,0,0" [label="(2,0,2,0,0,0)\\nw1=2", peripheries=2];
  "2,1,2,-1,0,0" [label="(2,1,2,-1,0,0)\\nw1=2"];
  "2,-1,2,1,0,0" -- "2,0,2,0,0,0" [label="k2"];
  "2,0,2,0,0,0" -- "2,1,2,-1,0,0" [label="k1"];
}
"""


def test_radius_zero_is_the_seed():
    g = explore(SEED, 0)
    assert g.vertices == (SEED,) and g.edges == ()
    assert is_tree(g)


def test_infinity_is_isolated():
    g = explore(INFINITY, 3)
    assert g.vertices == (INFINITY,) and is_tree(g)


def test_non_normal_seed_rejected():
    with pytest.raises(NotNormal):
        explore(D((0, 0, 2, 0, 0, 0)), 1)


@pytest.mark.parametrize("radius, n", [(1, 7), (2, 19), (3, 43), (4, 91)])
def test_ball_sizes(radius, n):
    g = explore(SEED, radius)
    assert len(g.vertices) == n and len(g.edges) == n - 1
    assert is_tree(g)


def test_ball_matches_oracle():
    assert set(explore(SEED, 3).vertices) == bfs_class(SEED, 3)


def test_extra_edge_breaks_the_tree():
    g = explore(SEED, 2)
    a, b = g.vertices[0], g.vertices[-1]
    assert (a, b) not in g.edges
    h = dataclasses.replace(g, edges=g.edges + ((a, b),))
    assert not is_tree(h)


def test_dot_golden():
    assert export_dot(explore(D((2, 0, 2, 0, 0, 0)), 1)) == DOT_RADIUS_1


def test_dot_parses():
    pydot = pytest.importorskip("pydot")
    g = explore(SEED, 2)
    (graph,) = pydot.graph_from_dot_data(export_dot(g))
    assert len(graph.get_nodes()) - 1 == len(g.vertices)  # minus the default node entry
    assert len(graph.get_edges()) == len(g.edges)


def test_json_export():
    g = explore(SEED, 1)
    obj = json.loads(g.dumps())
    assert obj["seed"] == [2, 3, 2, 1, 2, 2]
    assert len(obj["vertices"]) == 7 and len(obj["edges"]) == 6
    assert all(e[2] in (1, 2, 3) for e in obj["edges"])
