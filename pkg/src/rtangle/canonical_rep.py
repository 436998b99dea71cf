"""Canonical representative of a tangle and the equivalence test built on it.

The representative is picked from the plateau of minimal coordinates of the
tangle.  Plateaus come in two shapes:

* twist lines: every move keeps ``p`` and shifts ``q`` by ``+v`` or ``-v``.
  These are infinite, so the member is reached by walking along the line to
  a target twist.
* everything else: the plateau is explored from its lightest members
  outwards, up to a total weight cap, and the member with the smallest rule
  key wins.

The key depends on the branch (see :data:`BRANCHES`); total weight and then
the coordinate break ties.  ``unique_by_rule`` is false when the coordinate
had to decide.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Callable

from .errors import TripwireError
from .minimization import EqualityProfile, census, descend_E1, equality_profile, plateau_moves
from .normal_form import normalize
from .surface_model import ALL, INFINITY, ArcSystem, DehnCoordinate, realize, weight

INFINITY_BRANCH = "INFINITY"
STRICT_ALL = "STRICT_ALL"
ONE_EQUALITY = "ONE_EQUALITY"
TWO_EQUALITY_DISJOINT = "TWO_EQUALITY_DISJOINT"
TWO_EQUALITY_MEETING = "TWO_EQUALITY_MEETING"
BRANCHES = (
    INFINITY_BRANCH,
    "EMPTY_WINDOW(1)",
    "EMPTY_WINDOW(2)",
    "EMPTY_WINDOW(3)",
    STRICT_ALL,
    ONE_EQUALITY,
    TWO_EQUALITY_DISJOINT,
    TWO_EQUALITY_MEETING,
)

# members popped while looking for the lightest part of a plateau
CORE_BUDGET = 256
# hard cap on the explored part of a plateau
REGION_LIMIT = 4096
# steps along a twist line
WALK_LIMIT = 100_000


def empty_window(a: int) -> str:
    return f"EMPTY_WINDOW({a})"


@dataclass(frozen=True)
class RepresentativeReport:
    """Outcome of :func:`representative`.

    ``plateau_size`` counts the plateau members examined; it is the full
    plateau when ``plateau_complete`` holds.  ``q_sum`` is the invariant
    ``q_b + q_c`` of a twist line, ``frame`` the arc used for the census.
    """

    representative: DehnCoordinate
    branch: str
    plateau_size: int
    unique_by_rule: bool
    plateau_complete: bool = True
    q_sum: int | None = None
    frame: int | None = None

    def to_json(self) -> dict:
        return {
            "representative": list(self.representative.as_tuple()),
            "branch": self.branch,
            "plateau_size": self.plateau_size,
            "plateau_complete": self.plateau_complete,
            "unique_by_rule": self.unique_by_rule,
            "q_sum": self.q_sum,
            "frame": self.frame,
        }


def _total(s: ArcSystem) -> int:
    return weight(s, ALL)


def _delta(a: ArcSystem, b: ArcSystem) -> tuple[tuple[int, ...], tuple[int, ...]]:
    dp = tuple(x - y for x, y in zip(b.dehn.p, a.dehn.p))
    dq = tuple(x - y for x, y in zip(b.dehn.q, a.dehn.q))
    return dp, dq


def _twist_direction(s: ArcSystem) -> tuple[int, ...] | None:
    """``v`` if every plateau move out of ``s`` keeps ``p`` and shifts ``q`` by ``±v``."""
    moves = plateau_moves(s)
    if not moves:
        return None
    vs = set()
    for nb in moves:
        dp, dq = _delta(s, nb.result)
        if any(dp):
            return None
        vs.add(dq)
    v = max(vs)
    if not vs <= {v, tuple(-x for x in v)}:
        return None
    return v


# --------------------------------------------------------------- twist lines


def _line_target(m: ArcSystem, v: tuple[int, ...], branch: str):
    """``(index, target, q_sum)`` for the coordinate the walk fixes."""
    q = m.dehn.q
    if branch == TWO_EQUALITY_DISJOINT and v[0]:
        return 0, 0, None
    pair = [d for d in range(3) if v[d]]
    if len(pair) == 2 and v[pair[0]] == -v[pair[1]]:
        b, c = pair
        total = q[b] + q[c]
        return b, (total + 1) // 2, total
    if len(pair) == 1:
        return pair[0], 0, None
    raise TripwireError(f"no target for the twist line through {m.dehn} along {v}")


def _walk(m: ArcSystem, v: tuple[int, ...], index: int, target: int) -> tuple[ArcSystem, int]:
    x, steps = m, 0
    while x.dehn.q[index] != target:
        if steps > WALK_LIMIT:
            raise TripwireError(f"twist walk from {m.dehn} did not reach q{index + 1}={target}")
        gap = abs(x.dehn.q[index] - target)
        ahead = [
            nb.result
            for nb in plateau_moves(x)
            if abs(nb.result.dehn.q[index] - target) < gap
        ]
        if len(ahead) != 1 or _twist_direction(ahead[0]) not in (v, tuple(-y for y in v)):
            raise TripwireError(f"twist line through {m.dehn} breaks at {x.dehn}")
        x = ahead[0]
        steps += 1
    return x, steps


# ---------------------------------------------------------------- branches


def _branch(s: ArcSystem, profile: EqualityProfile, members) -> str:
    for a in (1, 2, 3):
        if s.dehn.p[a - 1] == 0:
            return empty_window(a)
    n_eq = sum(profile.equal)
    if n_eq == 0:
        return STRICT_ALL
    if n_eq == 1:
        return ONE_EQUALITY
    strict = [k for k in (1, 2, 3) if not profile.equal[k - 1]]
    if strict and all(strict[0] not in x.words[0] for x in members):
        return TWO_EQUALITY_DISJOINT
    return TWO_EQUALITY_MEETING


def _one_equality_key(frame: int) -> Callable:
    def key(x: ArcSystem):
        types = census(x.words[0], frame).types
        if not types:
            return (2, 0)
        start, kind, _, gap = types[0]
        if kind == "XYX":
            return (0, 0)
        return (1, gap)

    return key


def _meeting_key(frame: int) -> Callable:
    def key(x: ArcSystem):
        long = [t for t in census(x.words[0], frame).types if t[1] == "XY-YX"]
        return (0, long[0][3]) if long else (1, 0)

    return key


def _frame(branch: str, profile: EqualityProfile, members) -> int | None:
    strict = [k for k in (1, 2, 3) if not profile.equal[k - 1]]
    if branch == TWO_EQUALITY_MEETING:
        return strict[0] if strict else 1
    if branch != ONE_EQUALITY:
        return None
    for f in strict:
        if any(t[1] == "XYX" for x in members for t in census(x.words[0], f).types):
            return f
    return strict[0]


def _rule(branch: str, frame: int | None) -> Callable:
    if branch == ONE_EQUALITY:
        return _one_equality_key(frame)
    if branch == TWO_EQUALITY_MEETING:
        return _meeting_key(frame)
    if branch == TWO_EQUALITY_DISJOINT:
        return lambda x: (abs(x.dehn.q[0]),)
    return lambda x: ()


# ------------------------------------------------------------------- core


def _core(m: ArcSystem) -> tuple[list[ArcSystem], bool]:
    """Lightest region of the plateau of ``m`` and whether it is the whole plateau.

    A best-first pass by total weight finds the lightest members, stopping
    once everything queued is above the cap; the region is then everything
    reachable from them below twice that weight (plus a margin), which does
    not depend on where the pass started.
    """
    seen = {m.dehn: m}
    heap = [(_total(m), m.dehn, m)]
    popped = 0
    w0 = _total(m)
    while heap and popped < CORE_BUDGET:
        if heap[0][0] > 2 * w0 + 8:
            # everything left is above the region cap
            break
        w, _, x = heapq.heappop(heap)
        w0 = min(w0, w)
        popped += 1
        for nb in plateau_moves(x):
            t = nb.result
            if t.dehn not in seen:
                seen[t.dehn] = t
                heapq.heappush(heap, (_total(t), t.dehn, t))
    if not heap:
        return [seen[c] for c in sorted(seen)], True
    w0 = min(_total(x) for x in seen.values())
    cap = 2 * w0 + 8
    region = {c: x for c, x in seen.items() if _total(x) == w0}
    queue = deque(region.values())
    complete = True
    while queue:
        x = queue.popleft()
        for nb in plateau_moves(x):
            t = nb.result
            if t.dehn in region:
                continue
            if _total(t) > cap or len(region) >= REGION_LIMIT:
                complete = False
                continue
            region[t.dehn] = t
            queue.append(t)
    return [region[c] for c in sorted(region)], complete


# ------------------------------------------------------------------ public


def minimal_of(s: ArcSystem) -> ArcSystem:
    """Normal form of ``s`` descended to minimal ``weight(., 1)``."""
    return descend_E1(normalize(s))


def representative(s: ArcSystem) -> RepresentativeReport:
    m = minimal_of(s)
    if m.dehn == INFINITY:
        return RepresentativeReport(INFINITY, INFINITY_BRANCH, 1, True)
    profile = equality_profile(m)
    v = _twist_direction(m)
    if v is not None:
        branch = _branch(m, profile, [m])
        index, target, q_sum = _line_target(m, v, branch)
        x, steps = _walk(m, v, index, target)
        return RepresentativeReport(
            x.dehn, branch, steps + 1, True, plateau_complete=False, q_sum=q_sum
        )
    members, complete = _core(m)
    lightest = min(members, key=lambda x: (_total(x), x.dehn))
    profile = equality_profile(lightest)
    branch = _branch(lightest, profile, members)
    frame = _frame(branch, profile, members)
    rule = _rule(branch, frame)

    def key(x):
        return (rule(x), _total(x))

    best = min(key(x) for x in members)
    winners = [x for x in members if key(x) == best]
    return RepresentativeReport(
        winners[0].dehn, branch, len(members), len(winners) == 1, complete, frame=frame
    )


def equivalent(a: DehnCoordinate, b: DehnCoordinate) -> bool:
    """Whether two coordinates describe isotopic tangles."""
    ra = representative(realize(a)).representative
    rb = representative(realize(b)).representative
    return ra == rb
