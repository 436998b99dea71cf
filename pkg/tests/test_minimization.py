import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rtangle.errors import NotMinimal
from rtangle.minimization import (
    census,
    decreasing_moves,
    descend_E1,
    equality_profile,
    is_minimal_E1,
    plateau,
    regime,
)
from rtangle.normal_form import normalize
from rtangle.oracle_harness import enumerate_normal
from rtangle.surface_model import INFINITY, DehnCoordinate, realize, weight


def sys_(*t):
    return realize(DehnCoordinate.from_tuple(t))


def test_census_single_dot():
    c = census((3, 2, 3), 3)
    assert c.n_XYX == {1: 0, 2: 1}
    assert c.n_XY_YX == {1: 0, 2: 0}


def test_census_long_type():
    c = census((3, 2, 1, 2, 3), 3)
    assert c.n_XY_YX[2] == 1 and c.min_gap[2] == 3
    assert not any(c.n_XYX.values())


def test_census_even_gap_counts_nothing():
    c = census((3, 2, 1, 3), 3)
    assert not any(c.n_XYX.values()) and not any(c.n_XY_YX.values())


def test_cyclic_census_reads_the_wrap():
    w = (3, 2, 3, 1)
    assert census(w, 3).n_XYX == {1: 0, 2: 1}
    assert census(w, 3, cyclic=True).n_XYX == {1: 1, 2: 1}


def test_infinity_is_minimal():
    s = realize(INFINITY)
    assert descend_E1(s) == s
    assert equality_profile(s).exists == (False, False, False)
    assert regime(s).regime == "INFINITY"


def test_regime_refuses_non_minimal():
    s = sys_(4, -3, 2, -3, 2, -3)
    assert not is_minimal_E1(s)
    with pytest.raises(NotMinimal):
        regime(s)
    with pytest.raises(NotMinimal):
        plateau(s)


def test_descent_is_unique_and_monotone():
    for c in enumerate_normal(8, 3)[::4]:
        s = realize(c)
        assert len(decreasing_moves(s)) <= 1
        path = []
        m = descend_E1(s, path)
        ws = [weight(x, 1) for x in [s] + path]
        assert ws == sorted(ws, reverse=True) and len(set(ws)) == len(ws)
        assert is_minimal_E1(m)


@pytest.mark.parametrize(
    "coord, name, size",
    [
        ((10, 6, 6, 5, 2, -7), "C2", 1),
        ((12, 5, 6, 7, 4, 8), "T4", 2),
        ((8, -1, 2, 3, 2, -2), "T5", 3),
        ((12, -2, 4, -6, 4, 0), "T5", 5),
        ((10, 4, 4, 2, 2, -3), "T5", 4),
        ((12, 6, 2, 2, 8, 5), "T5-1", 5),
        ((10, 7, 4, 2, 8, -1), "T5-1", 4),
        ((8, -6, 4, -4, 8, -6), "T5-1", 3),
    ],
)
def test_regime_sizes(coord, name, size):
    s = sys_(*coord)
    r = regime(s)
    assert r.regime == name
    assert r.expected == size
    pl = plateau(s, limit=64)
    assert pl.complete and pl.size == size


def test_t5_twist_line_is_infinite():
    # census predicts 2, the plateau is a twist line
    s = sys_(6, 7, 6, -5, 6, -5)
    r = regime(s)
    assert r.regime == "T5" and r.expected == 2
    assert not plateau(s, limit=32).complete


def test_empty_window_chain():
    s = sys_(2, 4, 0, 0, 2, 0)
    assert regime(s).regime == "EMPTY"
    coords = set(plateau(s, limit=12).coordinates())
    for k in range(2, 7):
        assert DehnCoordinate.from_tuple((2, k, 0, 0, 2, 4 - k)) in coords


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(enumerate_normal(8, 3)))
def test_descent_lands_on_a_plateau_member(c):
    m = descend_E1(normalize(realize(c)))
    pl = plateau(m, limit=16)
    assert m in pl.members
    assert all(weight(x, 1) == weight(m, 1) for x in pl.members)
