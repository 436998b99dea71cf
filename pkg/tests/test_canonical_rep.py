import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rtangle.canonical_rep import (
    BRANCHES,
    INFINITY_BRANCH,
    ONE_EQUALITY,
    STRICT_ALL,
    TWO_EQUALITY_DISJOINT,
    TWO_EQUALITY_MEETING,
    empty_window,
    equivalent,
    representative,
)
from rtangle.jump_moves import neighbors
from rtangle.oracle_harness import enumerate_normal
from rtangle.surface_model import INFINITY, DehnCoordinate, realize

D = DehnCoordinate.from_tuple
CORPUS = enumerate_normal(8, 3)


def rep(*t):
    return representative(realize(D(t)))


def test_infinity():
    r = representative(realize(INFINITY))
    assert r.representative == INFINITY
    assert r.branch == INFINITY_BRANCH and r.unique_by_rule


def test_empty_window_splits_the_twist_sum():
    # q_b + q_c = 5 -> q_b = 3, q_c = 2, from either end of the line
    for start in [(2, 1, 0, 0, 2, 4), (2, 4, 0, 0, 2, 1), (2, 3, 0, 0, 2, 2)]:
        r = rep(*start)
        assert r.representative == D((2, 3, 0, 0, 2, 2))
        assert r.branch == empty_window(2)
        assert r.q_sum == 5


@pytest.mark.parametrize(
    "coord, branch, out",
    [
        ((10, 6, 6, 5, 2, -7), STRICT_ALL, (10, 6, 6, 5, 2, -7)),
        ((12, 5, 6, 7, 4, 8), ONE_EQUALITY, (12, 5, 6, 7, 4, 8)),
        ((8, -1, 2, 3, 2, -2), TWO_EQUALITY_MEETING, (8, -1, 2, 3, 2, -2)),
        ((12, 6, 2, 2, 8, 5), TWO_EQUALITY_MEETING, (12, 8, 6, 1, 2, 2)),
        ((4, 1, 2, 0, 2, 0), TWO_EQUALITY_DISJOINT, (2, 0, 2, 0, 4, -2)),
        ((0, 0, 2, 1, 2, 0), empty_window(1), (0, 0, 2, 1, 2, 0)),
    ],
)
def test_golden_representatives(coord, branch, out):
    r = rep(*coord)
    assert r.branch == branch and r.branch in BRANCHES
    assert r.representative == D(out)
    assert r.unique_by_rule


@settings(max_examples=12, deadline=None)
@given(st.sampled_from(CORPUS))
def test_representative_is_idempotent(c):
    r = representative(realize(c)).representative
    assert representative(realize(r)).representative == r


@settings(max_examples=8, deadline=None)
@given(st.sampled_from(CORPUS))
def test_neighbours_share_the_representative(c):
    s = realize(c)
    r = representative(s).representative
    for nb in neighbors(s):
        assert representative(nb.result).representative == r


def test_equivalent():
    a = D((2, 0, 2, -2, 2, -1))
    assert equivalent(a, a)
    assert equivalent(a, neighbors(realize(a))[0].result.dehn)
    assert not equivalent(INFINITY, a)


def test_report_json_round_trip():
    j = rep(2, 1, 0, 0, 2, 4).to_json()
    assert j["representative"] == [2, 3, 0, 0, 2, 2]
    assert set(j) == {
        "representative",
        "branch",
        "plateau_size",
        "plateau_complete",
        "unique_by_rule",
        "q_sum",
        "frame",
    }
