from hypothesis import given, settings
from hypothesis import strategies as st

from rtangle.words import (
    DOWN,
    UP,
    arc_key,
    canonical_cyclic,
    cyclic_reduce,
    inverse,
    least_rotation,
    reduce,
)

letters = st.sampled_from([1, 2, 3, 4, 5, -1, -2, -3, -4, -5])
words = st.lists(letters, max_size=14).map(tuple)


@given(st.lists(st.integers(0, 3), max_size=20))
def test_least_rotation_matches_brute_force(w):
    if not w:
        return
    k = least_rotation(w)
    rotations = [tuple(w[i:] + w[:i]) for i in range(len(w))]
    assert tuple(w[k:] + w[:k]) == min(rotations)


@given(words)
def test_reduce_is_idempotent_and_inverse_cancels(w):
    r = reduce(w)
    assert reduce(r) == r
    assert reduce(w + inverse(w)) == ()


@given(words, st.integers(0, 13))
def test_canonical_cyclic_ignores_conjugation(w, k):
    w = cyclic_reduce(w)
    if not w:
        return
    k %= len(w)
    assert canonical_cyclic(w[k:] + w[:k]) == canonical_cyclic(w)
    assert canonical_cyclic(inverse(w)) == canonical_cyclic(w)


def test_arc_key_is_symmetric_in_direction():
    fwd = arc_key(1, UP, (2, -3), 4, DOWN)
    back = arc_key(4, DOWN, inverse((2, -3)), 1, UP)
    assert fwd == back
    assert fwd[:2] == (1, 4)
