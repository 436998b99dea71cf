"""Planar model of the 6-punctured sphere and Dehn coordinates of arc systems.

Layout
------
Punctures 1..6 lie left to right on a horizontal line.  Disk ``E_d`` holds
punctures ``2d-1`` (left) and ``2d`` (right).  The window of ``E_d`` is the
lower half of its boundary circle; window positions are numbered 0.. from
left to right.  The complement of the three disks is a pair of pants, in which
arcs run as nested chords below the line.  Arcs with both ends on one window go
up through the gap between two disks and come back around the outside.

Inside ``E_d`` a smaller concentric disk holds ``n = (p - 2) / 2`` vertical
strands crossing the equator, one strand from below the left puncture and one
from above the right puncture.  Its ``p`` boundary slots are numbered
counter-clockwise from the bottom left.  Window position ``j`` is joined
through the collar annulus to slot ``(j + q) mod p``.  The wind
``(j + q) // p`` counts full turns, so ``q`` ranges over all integers and
encodes twist and offset at once.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property, lru_cache, total_ordering
from typing import Iterable, Sequence

from .errors import (
    ClosedComponentError,
    ComponentCountError,
    InvalidCoordinate,
    InvariantError,
    ParityError,
)
from .words import DOWN, UP, arc_key, inverse

ALL = "all"


@total_ordering
@dataclass(frozen=True)
class DehnCoordinate:
    """``(p1, q1, p2, q2, p3, q3)`` stored as the triples ``p`` and ``q``."""

    p: tuple[int, int, int]
    q: tuple[int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(int(x) for x in self.p))
        object.__setattr__(self, "q", tuple(int(x) for x in self.q))
        if len(self.p) != 3 or len(self.q) != 3:
            raise InvariantError("p and q must each have three entries")
        if any(x < 0 for x in self.p):
            raise InvariantError("intersection counts p must be non-negative")
        if sum(self.p) % 2:
            raise ParityError(f"p1+p2+p3 must be even, got {sum(self.p)}")
        for pi, qi in zip(self.p, self.q):
            if pi == 0 and qi != 0:
                raise InvariantError("q must be 0 on a window with p = 0")

    @classmethod
    def from_tuple(cls, t: Sequence[int]) -> "DehnCoordinate":
        if len(t) != 6:
            raise InvariantError("a Dehn coordinate has six integers")
        return cls((t[0], t[2], t[4]), (t[1], t[3], t[5]))

    def as_tuple(self) -> tuple[int, ...]:
        p, q = self.p, self.q
        return (p[0], q[0], p[1], q[1], p[2], q[2])

    def to_json(self) -> dict:
        return {"p": list(self.p), "q": list(self.q)}

    @classmethod
    def from_json(cls, obj: dict) -> "DehnCoordinate":
        return cls(tuple(obj["p"]), tuple(obj["q"]))

    def __lt__(self, other):
        if not isinstance(other, DehnCoordinate):
            return NotImplemented
        return self.as_tuple() < other.as_tuple()

    def __str__(self):
        return ",".join(str(x) for x in self.as_tuple())


INFINITY = DehnCoordinate((0, 0, 0), (0, 0, 0))


@dataclass(frozen=True)
class PantsRouting:
    m12: int
    m13: int
    m23: int
    s1: int = 0
    s2: int = 0
    s3: int = 0

    @property
    def loops(self) -> tuple[int, int, int]:
        return (self.s1, self.s2, self.s3)


def route_pants(p: Sequence[int]) -> PantsRouting:
    """Unique non-negative solution of ``p_i = m_ij + m_ik + 2 s_i``."""
    p1, p2, p3 = (int(x) for x in p)
    if min(p1, p2, p3) < 0:
        raise InvalidCoordinate("intersection counts p must be non-negative")
    if (p1 + p2 + p3) % 2:
        raise ParityError(f"p1+p2+p3 must be even, got {p1 + p2 + p3}")
    if p1 > p2 + p3:
        return PantsRouting(m12=p2, m13=p3, m23=0, s1=(p1 - p2 - p3) // 2)
    if p2 > p1 + p3:
        return PantsRouting(m12=p1, m13=0, m23=p3, s2=(p2 - p1 - p3) // 2)
    if p3 > p1 + p2:
        return PantsRouting(m12=0, m13=p1, m23=p2, s3=(p3 - p1 - p2) // 2)
    return PantsRouting(
        m12=(p1 + p2 - p3) // 2, m13=(p1 + p3 - p2) // 2, m23=(p2 + p3 - p1) // 2
    )


# generator crossed by each loop when traversed from its outgoing end
_LOOP_GATE = {1: 4, 2: 4, 3: 2}


@lru_cache(maxsize=4096)
def pants_links(p: tuple[int, int, int]) -> dict:
    """Map each window point ``(d, j)`` to ``((d2, j2), crossings)`` in the pants.

    ``crossings`` is the crossing word of the chord traversed from ``(d, j)``.
    Block order along each window (left to right):

    * no loops:  w1 = [m13][m12],  w2 = [m12][m23],  w3 = [m23][m13]
    * s1 > 0:    w1 = [back][m13][out][m12]
    * s2 > 0:    w2 = [m12][back][m23][out]
    * s3 > 0:    w3 = [m23][out][m13][back]

    Chords between two windows pair their blocks in reverse order.
    """
    r = route_pants(p)
    links: dict = {}

    def join(a, b, word=()):
        links[a] = (b, tuple(word))
        links[b] = (a, inverse(word))

    def pair_blocks(d1, start1, d2, start2, size):
        for u in range(size):
            join((d1, start1 + u), (d2, start2 + size - 1 - u))

    s = r.s1 or r.s2 or r.s3
    if r.s1:
        pair_blocks(1, s + r.m13 + s, 2, 0, r.m12)
        pair_blocks(1, s, 3, 0, r.m13)
        for t in range(1, s + 1):
            join((1, s + r.m13 + t - 1), (1, s - t), (_LOOP_GATE[1],))
    elif r.s2:
        pair_blocks(1, 0, 2, 0, r.m12)
        pair_blocks(2, r.m12 + s, 3, 0, r.m23)
        for t in range(1, s + 1):
            join((2, r.m12 + s + r.m23 + t - 1), (2, r.m12 + s - t), (_LOOP_GATE[2],))
    elif r.s3:
        pair_blocks(1, 0, 3, r.m23 + s, r.m13)
        pair_blocks(2, 0, 3, 0, r.m23)
        for t in range(1, s + 1):
            join((3, r.m23 + s - t), (3, r.m23 + s + r.m13 + t - 1), (_LOOP_GATE[3],))
    else:
        pair_blocks(1, r.m13, 2, 0, r.m12)
        pair_blocks(1, 0, 3, r.m23, r.m13)
        pair_blocks(2, r.m12, 3, 0, r.m23)
    return links


def slot(p: int, q: int, j: int) -> tuple[int, int, int]:
    """``(wind, slot, t)`` of window position ``j``.

    ``t`` is the signed number of times the collar strand crosses the line
    (positive: counter-clockwise).  It equals ``2 * wind`` plus one when the
    slot is on the upper half of the inner disk.
    """
    m, k = divmod(j + q, p)
    n = (p - 2) // 2
    return m, k, 2 * m + (1 if k > n else 0)


def collar_word(t: int, left: object, right: object) -> tuple:
    """Crossings of a collar strand with signed crossing count ``t``."""
    out = []
    if t > 0:
        for idx in range(t):
            out.append((right, 1) if idx % 2 == 0 else (left, -1))
    else:
        for idx in range(-t):
            out.append((left, 1) if idx % 2 == 0 else (right, -1))
    return tuple(out)


def _global(symbols: Iterable[tuple], names: dict) -> tuple[int, ...]:
    out = []
    for sym, sign in symbols:
        g = names[sym]
        if g is not None:
            out.append(sign * g)
    return tuple(out)


@lru_cache(maxsize=1 << 16)
def disk_piece(d: int, p: int, q: int, j: int) -> tuple[tuple, tuple[int, ...]]:
    """Follow window point ``j`` of disk ``d`` inwards.

    Returns ``(end, crossings)`` where ``end`` is ``("w", j2)`` for another
    window point or ``("p", puncture)``.
    """
    names = {"L": 2 * d - 2 if d > 1 else None, "e": 2 * d - 1, "R": 2 * d if d < 3 else None}
    n = (p - 2) // 2
    _, k, t = slot(p, q, j)
    word = _global(collar_word(t, "L", "R"), names)
    if k == 0:
        return ("p", 2 * d - 1), word
    if k == n + 1:
        return ("p", 2 * d), word
    word += ((2 * d - 1) if k <= n else -(2 * d - 1),)
    j2 = (p - k - q) % p
    _, _, t2 = slot(p, q, j2)
    word += inverse(_global(collar_word(t2, "L", "R"), names))
    return ("w", j2), word


@dataclass(frozen=True)
class DiskPattern:
    disk: int
    window_size: int
    shift: int

    @property
    def twist(self) -> int:
        return self.shift // self.window_size if self.window_size else 0

    @property
    def offset(self) -> int:
        return self.shift % self.window_size if self.window_size else 0

    @property
    def matching(self) -> tuple:
        """Inside partner of every window position, then of the two punctures."""
        d, p, q = self.disk, self.window_size, self.shift
        if p == 0:
            return (("p", 2 * d),)
        return tuple(disk_piece(d, p, q, j)[0] for j in range(p))


@dataclass(frozen=True)
class TracedArc:
    label: int
    ends: tuple[int, int]
    hits: tuple[tuple[int, int], ...]
    crossings: tuple[int, ...]
    sides: tuple[int, int]

    @cached_property
    def key(self) -> tuple:
        return arc_key(self.ends[0], self.sides[0], self.crossings, self.ends[1], self.sides[1])


@dataclass(frozen=True, eq=False)
class ArcSystem:
    dehn: DehnCoordinate
    routing: PantsRouting
    disks: tuple[DiskPattern, DiskPattern, DiskPattern]
    arcs: tuple[TracedArc, TracedArc, TracedArc]
    words: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    labels: dict = field(repr=False, default_factory=dict)

    def __eq__(self, other):
        return isinstance(other, ArcSystem) and self.dehn == other.dehn

    def __hash__(self):
        return hash(self.dehn)

    def arc(self, label: int) -> TracedArc:
        return self.arcs[label - 1]

    @cached_property
    def keys(self) -> tuple:
        return tuple(a.key for a in self.arcs)

    def to_json(self) -> dict:
        r = self.routing
        return {
            "dehn": self.dehn.to_json(),
            "routing": {"m12": r.m12, "m13": r.m13, "m23": r.m23, "s": list(r.loops)},
            "disks": [
                {
                    "disk": dp.disk,
                    "window_size": dp.window_size,
                    "twist": dp.twist,
                    "offset": dp.offset,
                    "matching": [list(x) for x in dp.matching],
                }
                for dp in self.disks
            ],
            "arcs": [{"label": a.label, "ends": list(a.ends)} for a in self.arcs],
            "words": [list(w) for w in self.words],
        }

    def dump(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def label_arcs(ends: Iterable[tuple[int, int]]) -> dict[tuple[int, int], int]:
    """Label 1 contains puncture 1; label 2 contains puncture 2, or 3 if 1-2 is an arc."""
    ends = [tuple(sorted(e)) for e in ends]
    first = next(e for e in ends if 1 in e)
    second_puncture = 3 if first == (1, 2) else 2
    second = next(e for e in ends if second_puncture in e)
    third = next(e for e in ends if e not in (first, second))
    return {first: 1, second: 2, third: 3}


def realize(c: DehnCoordinate) -> ArcSystem:
    """Build and trace the arc system with Dehn coordinate ``c``."""
    if not isinstance(c, DehnCoordinate):
        c = DehnCoordinate.from_tuple(tuple(c))
    return _realize(c)


@lru_cache(maxsize=1 << 15)
def _realize(c: DehnCoordinate) -> ArcSystem:
    p, q = c.p, c.q
    for d in range(3):
        if p[d] % 2:
            raise ComponentCountError(
                f"p{d + 1}={p[d]} is odd: a puncture of E{d + 1} would not end an arc"
            )
    routing = route_pants(p)
    links = pants_links(p)
    puncture_window = {}
    for d in (1, 2, 3):
        pd, qd = p[d - 1], q[d - 1]
        if pd:
            n = (pd - 2) // 2
            puncture_window[2 * d - 1] = (d, (0 - qd) % pd)
            puncture_window[2 * d] = (d, (n + 1 - qd) % pd)

    raw = []
    seen_punctures: set[int] = set()
    visited: set[tuple[int, int]] = set()
    for start in range(1, 7):
        if start in seen_punctures:
            continue
        d = (start + 1) // 2
        if p[d - 1] == 0:
            other = start + 1 if start % 2 else start - 1
            raw.append(((start, other), (), (), (DOWN, DOWN)))
            seen_punctures.update((start, other))
            continue
        side_a = DOWN if start % 2 else UP
        d, j = puncture_window[start]
        _, w = disk_piece(d, p[d - 1], q[d - 1], j)
        crossings = list(inverse(w))
        hits = [(d, j)]
        visited.add((d, j))
        while True:
            (d, j), pw = links[(d, j)]
            crossings.extend(pw)
            if (d, j) in visited:
                raise ComponentCountError("tracing revisited a window point")
            hits.append((d, j))
            visited.add((d, j))
            end, w = disk_piece(d, p[d - 1], q[d - 1], j)
            crossings.extend(w)
            if end[0] == "p":
                finish = end[1]
                side_b = DOWN if finish % 2 else UP
                break
            j = end[1]
            if (d, j) in visited:
                raise ComponentCountError("tracing revisited a window point")
            hits.append((d, j))
            visited.add((d, j))
        if finish == start:
            raise ComponentCountError("an arc returned to its starting puncture")
        seen_punctures.update((start, finish))
        raw.append(((start, finish), tuple(hits), tuple(crossings), (side_a, side_b)))

    if len(visited) != sum(p):
        raise ClosedComponentError(
            f"{sum(p) - len(visited)} window points lie on closed curves"
        )
    if len(raw) != 3:
        raise ComponentCountError(f"traced {len(raw)} arcs, expected 3")

    labels = label_arcs(e for e, *_ in raw)
    arcs = [None, None, None]
    for ends, hits, crossings, sides in raw:
        lab = labels[tuple(sorted(ends))]
        arcs[lab - 1] = TracedArc(lab, ends, hits, crossings, sides)
    words = [[0] * p[d] for d in range(3)]
    for a in arcs:
        for d, j in a.hits:
            words[d - 1][j] = a.label
    disks = tuple(DiskPattern(d, p[d - 1], q[d - 1]) for d in (1, 2, 3))
    return ArcSystem(
        dehn=c,
        routing=routing,
        disks=disks,
        arcs=tuple(arcs),
        words=tuple(tuple(w) for w in words),
        labels={a.ends: a.label for a in arcs},
    )


def is_valid(c: DehnCoordinate | Sequence[int]) -> bool:
    try:
        realize(c)
    except InvalidCoordinate:
        return False
    return True


def dehn_of(s: ArcSystem) -> DehnCoordinate:
    return s.dehn


def weight(s: ArcSystem, disk: int | str = ALL) -> int:
    if disk == ALL or disk is None:
        return sum(s.dehn.p)
    return s.dehn.p[disk - 1]
