"""Descent to minimal normal coordinates with respect to the first window."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import NotMinimal, TripwireError
from .jump_moves import JumpNeighbor, neighbors
from .surface_model import ArcSystem, weight

NONE = None


def _w1(s: ArcSystem) -> int:
    return weight(s, 1)


def decreasing_moves(s: ArcSystem) -> list[JumpNeighbor]:
    w = _w1(s)
    return [nb for nb in neighbors(s) if _w1(nb.result) < w]


def is_minimal_E1(s: ArcSystem) -> bool:
    return not decreasing_moves(s)


def descend_E1(s: ArcSystem, path: list | None = None) -> ArcSystem:
    """Follow the strictly decreasing move until none is left.

    At most one decreasing move exists at each step; more is a tripwire.
    """
    while True:
        down = decreasing_moves(s)
        if not down:
            return s
        if len(down) > 1:
            raise TripwireError(
                f"{len(down)} decreasing moves at {s.dehn}: "
                + ", ".join(str(nb.result.dehn) for nb in down)
            )
        s = down[0].result
        if path is not None:
            path.append(s)


@dataclass
class Plateau:
    members: list[ArcSystem]
    weight: int
    complete: bool = True

    @property
    def size(self) -> int:
        return len(self.members)

    def coordinates(self) -> list:
        return [m.dehn for m in self.members]


@lru_cache(maxsize=1 << 14)
def _plateau_moves(s: ArcSystem) -> tuple[JumpNeighbor, ...]:
    w = _w1(s)
    return tuple(nb for nb in neighbors(s) if _w1(nb.result) == w and is_minimal_E1(nb.result))


def plateau_moves(s: ArcSystem) -> list[JumpNeighbor]:
    """Moves to other minimal systems with the same ``weight(., 1)``."""
    return list(_plateau_moves(s))


def plateau(s: ArcSystem, limit: int = 256) -> Plateau:
    """Minimal coordinates reachable from ``s`` without changing ``weight(., 1)``.

    Exploration stops after ``limit`` members; ``complete`` reports whether
    the closure was exhausted.
    """
    if not is_minimal_E1(s):
        raise NotMinimal(f"{s.dehn} has a decreasing move")
    seen = {s.dehn: s}
    queue = deque([s])
    complete = True
    while queue:
        x = queue.popleft()
        for nb in plateau_moves(x):
            t = nb.result
            if t.dehn in seen:
                continue
            if len(seen) >= limit:
                complete = False
                continue
            seen[t.dehn] = t
            queue.append(t)
    members = [seen[c] for c in sorted(seen)]
    return Plateau(members, _w1(s), complete)


# ------------------------------------------------------------------ census


@dataclass(frozen=True)
class PatternCensus:
    """Counts of the frame patterns in a window word.

    ``n_XYX[y]`` counts consecutive frame dots with exactly one dot, of label
    ``y``, between them.  ``n_XY_YX[y]`` counts consecutive frame dots with an
    odd number (at least 3) of dots between them, both ends labelled ``y``;
    ``min_gap[y]`` is the smallest such count or ``None``.
    """

    frame: int
    n_XYX: dict = field(default_factory=dict)
    n_XY_YX: dict = field(default_factory=dict)
    min_gap: dict = field(default_factory=dict)
    types: tuple = ()

    def to_json(self) -> dict:
        return {
            "frame": self.frame,
            "n_XYX": {str(k): v for k, v in self.n_XYX.items()},
            "n_XY_YX": {str(k): v for k, v in self.n_XY_YX.items()},
            "min_gap": {str(k): v for k, v in self.min_gap.items()},
        }


def census(w: tuple[int, ...], frame: int, cyclic: bool = False) -> PatternCensus:
    """Frame patterns of ``w`` read left to right.

    With ``cyclic`` the stretch from the last frame dot round to the first
    one counts as a gap too.
    """
    inner = [y for y in (1, 2, 3) if y != frame]
    n_xyx = {y: 0 for y in inner}
    n_long = {y: 0 for y in inner}
    gaps: dict = {y: None for y in inner}
    # (start index, kind, inner label, gap) for each counted pattern, left to right
    types = []
    frames = [k for k, x in enumerate(w) if x == frame]
    pairs = list(zip(frames, frames[1:]))
    if cyclic and frames:
        pairs.append((frames[-1], frames[0] + len(w)))
    for a, b in pairs:
        gap = b - a - 1
        first, last = w[(a + 1) % len(w)], w[(b - 1) % len(w)]
        if gap == 1:
            n_xyx[first] += 1
            types.append((a, "XYX", first, 1))
        elif gap >= 3 and gap % 2 and first == last:
            n_long[first] += 1
            gaps[first] = gap if gaps[first] is None else min(gaps[first], gap)
            types.append((a, "XY-YX", first, gap))
    return PatternCensus(frame, n_xyx, n_long, gaps, tuple(types))


# --------------------------------------------------------- equality profile


@dataclass(frozen=True)
class EqualityProfile:
    exists: tuple[bool, bool, bool]
    equal: tuple[bool, bool, bool]

    def to_json(self) -> dict:
        return {"exists": list(self.exists), "equal": list(self.equal)}


def equality_profile(s: ArcSystem) -> EqualityProfile:
    w = _w1(s)
    exists = [False, False, False]
    equal = [False, False, False]
    for nb in neighbors(s):
        exists[nb.arc - 1] = True
        if _w1(nb.result) == w:
            equal[nb.arc - 1] = True
    return EqualityProfile(tuple(exists), tuple(equal))


# ----------------------------------------------------------------- regimes


@dataclass(frozen=True)
class RegimeCheck:
    """Which plateau-size statement applies at a minimal system.

    ``expected`` is the predicted plateau size, or ``None`` where the plateau
    is an infinite twist family (or nothing is predicted).  ``preconditions``
    records whether the census hypotheses of the statement hold.
    """

    regime: str
    expected: int | None
    frame: int | None = None
    census: PatternCensus | None = None
    preconditions: bool = True

    def to_json(self) -> dict:
        return {
            "regime": self.regime,
            "expected": self.expected,
            "frame": self.frame,
            "census": self.census.to_json() if self.census else None,
            "preconditions": self.preconditions,
        }


def _composite_strict(s: ArcSystem, e: int) -> bool:
    w = _w1(s)
    for nb in neighbors(s):
        if nb.arc != e:
            continue
        if any(_w1(t.result) <= w for t in neighbors(nb.result) if t.arc != e):
            return False
    return True


def regime(s: ArcSystem) -> RegimeCheck:
    if not is_minimal_E1(s):
        raise NotMinimal(f"{s.dehn} has a decreasing move")
    p = s.dehn.p
    if not any(p):
        return RegimeCheck("INFINITY", 1)
    if p[0] == 0:
        return RegimeCheck("T6-1", None)
    if 0 in p:
        return RegimeCheck("EMPTY", None)
    w = s.words[0]
    profile = equality_profile(s)
    equal = [k for k in (1, 2, 3) if profile.equal[k - 1]]
    strict = [k for k in (1, 2, 3) if not profile.equal[k - 1]]
    if not equal:
        return RegimeCheck("C2", 1)
    if len(equal) == 2:
        k = strict[0]
        if k not in w:
            return RegimeCheck("T6", None)
        c = census(w, k, cyclic=True)
        inner = sorted(c.n_XY_YX)
        pre = not any(c.n_XYX.values()) and c.n_XY_YX[inner[0]] == c.n_XY_YX[inner[1]]
        if pre and c.n_XY_YX[inner[0]]:
            expected = (c.min_gap[inner[0]] + c.min_gap[inner[1]]) // 2
        else:
            expected = 2
        return RegimeCheck("T5", expected, k, c, pre)
    if len(equal) == 3 or not all(k in w for k in (1, 2, 3)):
        return RegimeCheck("UNCLASSIFIED", None)
    e = equal[0]
    if _composite_strict(s, e):
        return RegimeCheck("T4", 2)
    for f in strict:
        other = next(k for k in strict if k != f)
        c = census(w, f, cyclic=True)
        if c.n_XYX[other] and c.min_gap[e] is not None:
            return RegimeCheck("T5-1", (c.min_gap[e] + 1) // 2, f, c)
    return RegimeCheck("T5-1", None, None, None, False)
