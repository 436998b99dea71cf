"""Free-group words for isotopy classes of arcs on the 6-punctured sphere.

Punctures 1..6 sit on a horizontal line.  The segment from puncture ``v`` to
``v + 1`` is the generator ``v`` (1..5); crossing it upwards is ``+v`` and
downwards ``-v``.  The five segments form a tree whose complement is a disk,
so crossing sequences are words in the free group F5.

An arc joining punctures ``a`` and ``b`` is recorded by its crossing word and
the side (``UP`` or ``DOWN``) from which it leaves ``a`` and reaches ``b``.
The boundary of a regular neighbourhood of the arc is a simple closed curve
whose free homotopy class determines the arc; its cyclically reduced,
rotation-minimal word is used as the isotopy key.
"""

from __future__ import annotations

from typing import Iterable, Sequence

UP = 1
DOWN = -1

Word = tuple[int, ...]


def reduce(word: Iterable[int]) -> Word:
    out: list[int] = []
    for g in word:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def inverse(word: Sequence[int]) -> Word:
    return tuple(-g for g in reversed(word))


def cyclic_reduce(word: Iterable[int]) -> Word:
    w = list(reduce(word))
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return tuple(w[i : j + 1])


def least_rotation(word: Sequence) -> int:
    """Start index of the lexicographically least rotation (Booth)."""
    s = list(word) * 2
    n = len(s)
    f = [-1] * n
    k = 0
    for j in range(1, n):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def _min_rotation(word: Word) -> Word:
    if not word:
        return word
    k = least_rotation(word)
    return tuple(word[k:]) + tuple(word[:k])


def canonical_cyclic(word: Iterable[int]) -> Word:
    """Canonical representative of the conjugacy class of ``word`` or its inverse."""
    w = cyclic_reduce(word)
    return min(_min_rotation(w), _min_rotation(inverse(w)))


def loop_around(v: int, side: int) -> Word:
    """Counter-clockwise loop around puncture ``v`` starting on ``side``."""
    right = (v,) if v <= 5 else ()
    left = (-(v - 1),) if v >= 2 else ()
    return left + right if side == UP else right + left


def arc_key(a: int, side_a: int, crossings: Sequence[int], b: int, side_b: int) -> tuple:
    """Isotopy key of the arc from ``a`` to ``b`` with the given crossing word."""
    w = tuple(crossings)
    curve = loop_around(a, side_a) + w + loop_around(b, side_b) + inverse(w)
    return (min(a, b), max(a, b), canonical_cyclic(curve))
