import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rtangle.errors import NotAViolation
from rtangle.normal_form import (
    NormalityViolation,
    bridge_replace,
    find_violation,
    is_normal,
    normalize,
)
from rtangle.oracle_harness import enumerate_valid, sample_valid
from rtangle.surface_model import INFINITY, DehnCoordinate, realize, weight


def test_infinity_is_normal():
    assert is_normal(realize(INFINITY))
    assert normalize(realize(INFINITY)).dehn == INFINITY


@pytest.mark.parametrize("q", [-2, -1, 0, 1])
def test_loop_around_one_disk_collapses_to_infinity(q):
    s = realize(DehnCoordinate((0, 0, 2), (0, 0, q)))
    assert find_violation(s) == NormalityViolation(3, 0)
    assert normalize(s).dehn == INFINITY


def test_violation_is_leftmost_in_lowest_window():
    for c in enumerate_valid(6, 2).items:
        s = realize(c)
        v = find_violation(s)
        if v is None:
            continue
        for d in range(1, v.disk):
            w = s.words[d - 1]
            assert all(a != b for a, b in zip(w, w[1:]))
        w = s.words[v.disk - 1]
        assert w[v.position] == w[v.position + 1]
        assert all(a != b for a, b in zip(w[: v.position + 1], w[1 : v.position + 1]))


def test_replace_rejects_non_violation():
    s = realize(DehnCoordinate.from_tuple((2, 0, 2, -2, 2, -1)))
    with pytest.raises(NotAViolation):
        bridge_replace(s, NormalityViolation(1, 0))
    with pytest.raises(NotAViolation):
        bridge_replace(s, NormalityViolation(4, 0))


def test_replacement_keeps_other_arcs_and_lowers_weight():
    for c in enumerate_valid(6, 2).items:
        s = realize(c)
        v = find_violation(s)
        if v is None:
            continue
        label = s.words[v.disk - 1][v.position]
        t = bridge_replace(s, v)
        assert weight(t) < weight(s)
        for other in (1, 2, 3):
            if other != label:
                assert t.arc(other).key == s.arc(other).key


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_normalize_terminates_in_a_normal_system(seed):
    (c,) = sample_valid(10, 3, 1, seed)
    out = normalize(realize(c))
    assert is_normal(out)
    assert normalize(out) == out
