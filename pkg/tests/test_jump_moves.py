import pytest

from rtangle.errors import NoWindowIntersection, NotNormal
from rtangle.jump_moves import (
    Variant,
    completions,
    cyclic_form,
    has_second_move,
    moves_at,
    neighbors,
    predict_window_words,
    rewrite_window,
    standard_move,
)
from rtangle.oracle_harness import brute_completions, enumerate_normal
from rtangle.surface_model import INFINITY, DehnCoordinate, realize, weight

SMALL = enumerate_normal(4, 2)


def test_infinity_has_no_moves():
    s = realize(INFINITY)
    assert neighbors(s) == []
    assert not any(has_second_move(s, i) for i in (1, 2, 3))
    with pytest.raises(NoWindowIntersection):
        predict_window_words(s, 1)


def test_completions_need_a_normal_source():
    with pytest.raises(NotNormal):
        completions(realize(DehnCoordinate((0, 0, 2), (0, 0, 0))), 1)


@pytest.mark.parametrize(
    "word, i, out",
    [
        ((3, 1, 2), 1, [3, 2, 1]),  # 1-dot between different colours goes
        ((3, 1, 3), 1, [3, 1, 3, 1]),  # kept, plus one across the wrap
        ((2, 3), 1, [2, 1, 3, 1]),
    ],
)
def test_rewrite_rules(word, i, out):
    assert rewrite_window(word, i) == out


@pytest.mark.parametrize("c", SMALL, ids=str)
def test_completions_agree_with_brute_force(c):
    s = realize(c)
    for i in (1, 2, 3):
        fast = completions(s, i)
        assert s in fast
        assert len(fast) <= 3
        assert [t.dehn for t in fast] == [t.dehn for t in brute_completions(s, i)]


def test_exact_and_guided_search_agree():
    for c in SMALL:
        s = realize(c)
        for i in (1, 2, 3):
            assert completions(s, i, exact=True) == completions(s, i, exact=False)


def test_standard_move_is_an_involution():
    for c in enumerate_normal(6, 3):
        s = realize(c)
        for i in (1, 2, 3):
            t = standard_move(s, i)
            if t is not None:
                assert standard_move(t, i) == s


def test_triples_form_a_path_through_the_lightest_member():
    seen = 0
    for c in enumerate_normal(6, 3):
        s = realize(c)
        for i in (1, 2, 3):
            members = completions(s, i)
            if len(members) < 3:
                continue
            seen += 1
            light = min(members, key=lambda t: weight(t))
            moves = moves_at(s, i)
            if s == light:
                assert sorted(m.variant for m in moves) == [Variant.SECOND, Variant.STANDARD]
            else:
                assert [m.result for m in moves] == [light]
    assert seen


def test_pattern_changing_moves_follow_the_rules():
    for c in enumerate_normal(6, 3):
        s = realize(c)
        pattern = tuple(map(cyclic_form, s.words))
        for nb in neighbors(s):
            got = tuple(map(cyclic_form, nb.result.words))
            if got != pattern:
                assert got == predict_window_words(s, nb.arc)


def test_neighbors_are_ordered_and_bounded():
    for c in enumerate_normal(6, 3):
        nbs = neighbors(realize(c))
        assert len(nbs) <= 6
        order = [(nb.arc, nb.result.dehn.as_tuple()) for nb in nbs]
        assert order == sorted(order)
