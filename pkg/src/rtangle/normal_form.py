"""Normality of arc systems and reduction to a normal form.

A violation is a pair of adjacent dots of one arc on a window.  Bridge arc
replacement removes it: the run of dots of that arc through the pair is
cut out, and the two end pieces of the arc are joined along the window.
The window runs below the line of punctures, so travelling along it adds no
crossings and the new arc's crossing word is the old one with the stretch
between the first and last crossing of the run deleted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAViolation, TripwireError
from .search import systems_sharing
from .surface_model import ALL, ArcSystem, disk_piece, pants_links, weight
from .words import arc_key, inverse


@dataclass(frozen=True)
class NormalityViolation:
    disk: int
    position: int

    def to_json(self) -> dict:
        return {"disk": self.disk, "position": self.position}


def find_violation(s: ArcSystem) -> NormalityViolation | None:
    """Leftmost adjacent equal pair in the lowest-index window, if any."""
    for d, w in enumerate(s.words, start=1):
        for k in range(len(w) - 1):
            if w[k] == w[k + 1]:
                return NormalityViolation(d, k)
    return None


def is_normal(s: ArcSystem) -> bool:
    return find_violation(s) is None


def _segments(s: ArcSystem, label: int) -> list[tuple[int, ...]]:
    """Crossing words between consecutive window hits of an arc.

    Segment ``k`` ends at hit ``k``; the last segment ends at the far puncture.
    """
    arc = s.arc(label)
    p, q = s.dehn.p, s.dehn.q
    links = pants_links(p)
    hits = arc.hits
    segs = []
    d, j = hits[0]
    segs.append(inverse(disk_piece(d, p[d - 1], q[d - 1], j)[1]))
    k = 0
    while k < len(hits) - 1:
        # a pants chord, then possibly a disk chord
        (d, j), w = links[hits[k]]
        segs.append(w)
        k += 1
        end, w = disk_piece(d, p[d - 1], q[d - 1], j)
        if end[0] == "p":
            segs.append(w)
            break
        segs.append(w)
        k += 1
    else:
        d, j = hits[-1]
        segs.append(disk_piece(d, p[d - 1], q[d - 1], j)[1])
    return segs


def _run(word: tuple[int, ...], position: int) -> range:
    lab = word[position]
    lo = position
    while lo > 0 and word[lo - 1] == lab:
        lo -= 1
    hi = position + 1
    while hi + 1 < len(word) and word[hi + 1] == lab:
        hi += 1
    return range(lo, hi + 1)


def surgered_key(s: ArcSystem, v: NormalityViolation) -> tuple:
    """Isotopy key of the arc produced by bridge arc replacement at ``v``."""
    w = s.words[v.disk - 1]
    label = w[v.position]
    arc = s.arc(label)
    run = _run(w, v.position)
    order = {h: k for k, h in enumerate(arc.hits)}
    idx = [order[(v.disk, x)] for x in run]
    a, b = min(idx), max(idx)
    segs = _segments(s, label)
    crossings = sum(segs[: a + 1], ()) + sum(segs[b + 1 :], ())
    return arc_key(arc.ends[0], arc.sides[0], crossings, arc.ends[1], arc.sides[1])


def bridge_replace(s: ArcSystem, v: NormalityViolation) -> ArcSystem:
    """Replace the arc through the violating pair by the surgered arc."""
    w = s.words[v.disk - 1] if 1 <= v.disk <= 3 else ()
    if not (0 <= v.position < len(w) - 1 and w[v.position] == w[v.position + 1]):
        raise NotAViolation(f"no adjacent equal pair at disk {v.disk}, position {v.position}")
    label = w[v.position]
    target = surgered_key(s, v)
    t_free = sum(len(x) for x in _segments(s, label))
    for t in systems_sharing(s, label, s.dehn.p, normal_only=False, t_free=t_free):
        if t.arc(label).key == target:
            if weight(t, ALL) >= weight(s, ALL):
                raise TripwireError(f"replacement at {v} did not lower the weight of {s.dehn}")
            return t
    raise TripwireError(f"no system carries the surgered arc at {v} of {s.dehn}")


def normalize(s: ArcSystem) -> ArcSystem:
    """Apply bridge arc replacements until the system is normal."""
    while True:
        v = find_violation(s)
        if v is None:
            return s
        s = bridge_replace(s, v)
