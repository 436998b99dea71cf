"""Normal jump moves: completions of two fixed arcs and their labelling."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .errors import NoWindowIntersection, NotNormal
from .search import systems_sharing
from .surface_model import ALL, ArcSystem, realize, weight
from .words import least_rotation

STANDARD = "STANDARD"
SECOND = "SECOND"


class Variant(str, Enum):
    STANDARD = STANDARD
    SECOND = SECOND


@dataclass(frozen=True)
class JumpNeighbor:
    arc: int
    result: ArcSystem
    variant: Variant

    def to_json(self) -> dict:
        return {
            "arc": self.arc,
            "variant": self.variant.value,
            "result": list(self.result.dehn.as_tuple()),
        }


def _require_normal(s: ArcSystem):
    from .normal_form import is_normal

    if not is_normal(s):
        raise NotNormal(f"{s.dehn} is not normal")


def completion_bounds(s: ArcSystem, i: int) -> tuple[int, int, int]:
    """Window sizes a normal completion can reach.

    In a normal word the ``i``-dots are isolated among the ``c`` fixed dots,
    so there are at most ``c + 1`` of them.
    """
    return tuple(2 * sum(1 for x in w if x != i) + 1 for w in s.words)


# Above this total weight the search only tries window words allowed by the
# window-word rules; below it the search is exhaustive.  Both agree wherever
# the exhaustive search has been run.
EXACT_LIMIT = 16


@lru_cache(maxsize=1 << 16)
def _completions(s: ArcSystem, i: int, exact: bool) -> tuple[ArcSystem, ...]:
    bounds = completion_bounds(s, i)
    return tuple(systems_sharing(s, i, bounds, normal_only=True, guided=not exact))


def completions(s: ArcSystem, i: int, exact: bool | None = None) -> list[ArcSystem]:
    """All normal systems sharing the two arcs other than ``i`` with ``s``.

    ``exact`` forces the exhaustive (``True``) or guided (``False``) search;
    by default the exhaustive one runs up to :data:`EXACT_LIMIT`.
    """
    _require_normal(s)
    if exact is None:
        exact = weight(s, ALL) <= EXACT_LIMIT
    out = list(_completions(s, i, exact))
    if s not in out:
        # the search is exact; losing the source means the model is broken
        from .errors import TripwireError

        raise TripwireError(f"completion search lost the source {s.dehn}")
    return out


def _moves(s: ArcSystem, members: list[ArcSystem]) -> dict:
    """Jump moves out of ``s`` inside one completion set, with their labels.

    The completions of two fixed arcs line up by twisting the third one
    around them; consecutive ones have disjoint interiors and are joined by a
    jump move.  A pair is one STANDARD move.  In a triple the lightest
    member sits in the middle: its move to the smaller heavy coordinate is
    STANDARD, the other one SECOND, and each heavy member moves back to it
    with the same label.
    """
    others = [t for t in members if t != s]
    if not others:
        return {}
    if len(others) == 1:
        return {others[0]: Variant.STANDARD}
    light = min(members, key=lambda t: (weight(t, ALL), t.dehn))
    heavy = sorted((t for t in members if t != light), key=lambda t: t.dehn)
    if weight(heavy[0], ALL) <= weight(light, ALL):
        from .errors import TripwireError

        raise TripwireError(f"no lightest member among {[str(t.dehn) for t in members]}")
    labels = {heavy[0]: Variant.STANDARD, heavy[1]: Variant.SECOND}
    if s == light:
        return labels
    return {light: labels[s]}


def cyclic_pattern(s: ArcSystem) -> tuple:
    return tuple(cyclic_form(w) for w in s.words)


def moves_at(s: ArcSystem, i: int) -> list[JumpNeighbor]:
    labels = _moves(s, completions(s, i))
    return [JumpNeighbor(i, t, labels[t]) for t in sorted(labels, key=lambda t: t.dehn)]


def neighbors(s: ArcSystem) -> list[JumpNeighbor]:
    """Every normal jump move out of ``s``, ordered by arc then coordinate."""
    out = []
    for i in (1, 2, 3):
        out.extend(moves_at(s, i))
    return out


def standard_move(s: ArcSystem, i: int) -> ArcSystem | None:
    for nb in moves_at(s, i):
        if nb.variant is Variant.STANDARD:
            return nb.result
    return None


def has_second_move(s: ArcSystem, i: int) -> bool:
    return any(nb.variant is Variant.SECOND for nb in moves_at(s, i))


def rewrite_window(word: tuple[int, ...], i: int) -> list[int]:
    """Rules (1)-(3) on a cyclic boundary word, reading adjacency in ``word``.

    An ``i``-dot survives when its two neighbours agree, otherwise it goes;
    a new ``i``-dot goes between every two neighbouring non-``i`` dots.
    """
    n = len(word)
    out: list[int] = []
    for k, x in enumerate(word):
        left, right = word[k - 1], word[(k + 1) % n]
        if x == i:
            if left == right:
                out.append(x)
            continue
        out.append(x)
        if right != i:
            out.append(i)
    return out


def predict_window_words(s: ArcSystem, i: int) -> tuple[tuple[int, ...], ...]:
    """Window words after the pattern-changing replacement of arc ``i``.

    The rules act on each boundary circle read cyclically, using the adjacency
    of the source word.  The result is returned in its least rotation; compare
    with :func:`cyclic_form` of actual words.
    """
    _require_normal(s)
    if not any(i in w for w in s.words):
        raise NoWindowIntersection(f"arc {i} misses every window of {s.dehn}")
    return tuple(cyclic_form(tuple(rewrite_window(w, i))) for w in s.words)


def cyclic_form(word: tuple[int, ...]) -> tuple[int, ...]:
    word = tuple(word)
    if not word:
        return word
    k = least_rotation(word)
    return word[k:] + word[:k]


def neighbors_of(coordinate) -> list[JumpNeighbor]:
    return neighbors(realize(coordinate))
