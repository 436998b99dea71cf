"""Brute-force reference implementations used to check the fast paths.

Nothing here shares search logic with :mod:`rtangle.search` or
:mod:`rtangle.jump_moves`.  Completions are found by listing every window
size and shift residue whose realization is normal, keeping those whose
window words agree with the source once the replaced arc is erased, and
then trying every lift of the residues inside a box of twists.
"""

from __future__ import annotations

import itertools
import random
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidCoordinate, NotNormal
from .surface_model import ArcSystem, DehnCoordinate, pants_links, realize


def _p_vectors(bound: int):
    for p in itertools.product(range(bound + 1), repeat=3):
        if sum(p) <= bound and sum(p) % 2 == 0:
            yield p


def _try(c: DehnCoordinate) -> ArcSystem | None:
    try:
        return realize(c)
    except InvalidCoordinate:
        return None


def _normal_words(words) -> bool:
    return all(w[k] != w[k + 1] for w in words for k in range(len(w) - 1))


@dataclass(frozen=True)
class CoordinateEnumeration:
    bound: int
    q_bound: int
    items: tuple[DehnCoordinate, ...]


def enumerate_valid(bound: int, q_bound: int) -> CoordinateEnumeration:
    items = []
    for p in _p_vectors(bound):
        ranges = [range(-q_bound, q_bound + 1) if x else (0,) for x in p]
        for q in itertools.product(*ranges):
            c = DehnCoordinate(p, q)
            if _try(c) is not None:
                items.append(c)
    return CoordinateEnumeration(bound, q_bound, tuple(sorted(items)))


@lru_cache(maxsize=64)
def enumerate_normal(bound: int, q_bound: int) -> tuple[DehnCoordinate, ...]:
    """Valid coordinates inside the box whose realization is normal."""
    return tuple(
        c for c in enumerate_valid(bound, q_bound).items if _normal_words(realize(c).words)
    )


def sample_valid(bound: int, q_bound: int, count: int, rng_seed: int) -> list[DehnCoordinate]:
    """Rejection sample of valid coordinates, reproducible from ``rng_seed``."""
    rng = random.Random(rng_seed)
    ps = list(_p_vectors(bound))
    out = []
    while len(out) < count:
        p = rng.choice(ps)
        q = tuple(rng.randint(-q_bound, q_bound) if x else 0 for x in p)
        c = DehnCoordinate(p, q)
        if _try(c) is not None:
            out.append(c)
    return out


# ---------------------------------------------------------------- diagrams


def disk_matchings(p: int) -> list[tuple[int, dict]]:
    """Every disjoint filling of a twice-punctured disk with ``p`` window points.

    Returns ``(x_a, partner)`` where ``x_a`` is the window point joined to the
    left puncture, ``partner`` maps window points to window points or to the
    punctures ``"a"``/``"b"``.  Essential chords must separate the punctures,
    which forces them to nest around the two puncture strands.
    """
    if p == 0:
        return [(None, {})]
    if p % 2:
        # both punctures take one strand each; the rest pair up
        return []
    n = (p - 2) // 2
    out = []
    for xa in range(p):
        partner = {xa: "a", (xa + n + 1) % p: "b"}
        for u in range(1, n + 1):
            x, y = (xa + u) % p, (xa - u) % p
            partner[x], partner[y] = y, x
        out.append((xa, partner))
    return out


def _label(ends: list[tuple[int, int]]) -> dict:
    ends = [tuple(sorted(e)) for e in ends]
    by_puncture = {v: e for e in ends for v in e}
    first = by_puncture[1]
    second = by_puncture[3] if first == (1, 2) else by_puncture[2]
    third = next(e for e in ends if e not in (first, second))
    return {first: 1, second: 2, third: 3}


def diagram(p: tuple[int, int, int], xa: tuple) -> tuple[int, ...] | None:
    """Window words of the diagram, or ``None`` if it has closed components."""
    links = pants_links(tuple(p))
    inside = {}
    for d in (1, 2, 3):
        if p[d - 1]:
            _, partner = next(m for m in disk_matchings(p[d - 1]) if m[0] == xa[d - 1])
            inside[d] = partner
    # graph on window points and punctures
    adj = defaultdict(list)
    for a, (b, _) in links.items():
        adj[("w",) + a].append(("w",) + b)
    for d, partner in inside.items():
        for x, y in partner.items():
            node = ("w", d, x)
            if y == "a":
                other = ("p", 2 * d - 1)
            elif y == "b":
                other = ("p", 2 * d)
            else:
                other = ("w", d, y)
            adj[node].append(other)
            if other[0] == "p":
                adj[other].append(node)
    for d in (1, 2, 3):
        if not p[d - 1]:
            adj[("p", 2 * d - 1)].append(("p", 2 * d))
            adj[("p", 2 * d)].append(("p", 2 * d - 1))
    seen = set()
    comps = []
    for start in sorted(adj):
        if start in seen:
            continue
        stack, comp = [start], []
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(comp)
    ends = []
    for comp in comps:
        punctures = sorted(v[1] for v in comp if v[0] == "p")
        if len(punctures) != 2:
            return None
        ends.append(tuple(punctures))
    labels = _label(ends)
    words = [[0] * x for x in p]
    for comp, e in zip(comps, ends):
        for v in comp:
            if v[0] == "w":
                words[v[1] - 1][v[2]] = labels[e]
    return tuple(tuple(w) for w in words)


def diagram_table(p: tuple[int, int, int]) -> dict:
    """``xa -> words or None`` for every filling with window sizes ``p``."""
    choices = [[m[0] for m in disk_matchings(x)] for x in p]
    return {xa: diagram(p, xa) for xa in itertools.product(*choices)}


# ------------------------------------------------------------- completions


_INDEX: dict = {"bound": -1, "index": {}}


def _residue_index(bound: int) -> dict:
    """``(i, words without i) -> [(p, residues)]`` for normal residue classes.

    Built once for the largest bound requested so far.
    """
    if bound > _INDEX["bound"]:
        _INDEX["index"] = _build_index(bound)
        _INDEX["bound"] = bound
    return _INDEX["index"]


def _build_index(bound: int) -> dict:
    index = defaultdict(list)
    for p in _p_vectors(bound):
        choices = [range(x) if x else (0,) for x in p]
        for r in itertools.product(*choices):
            s = _try(DehnCoordinate(p, r))
            if s is None or not _normal_words(s.words):
                continue
            for i in (1, 2, 3):
                key = (i, tuple(tuple(x for x in w if x != i) for w in s.words))
                index[key].append((p, r))
    return index


def _lifts(r: int, pn: int, centre: float, turns: int) -> list[int]:
    if pn == 0:
        return [0]
    lo = int((centre - turns) * pn) - pn
    hi = int((centre + turns) * pn) + pn
    start = lo + (r - lo) % pn
    return list(range(start, hi + 1, pn))


def brute_completions(
    s: ArcSystem, i: int, bound: int | None = None, turns: int = 2
) -> list[ArcSystem]:
    """Normal systems sharing the arcs other than ``i`` with ``s``, by enumeration.

    ``bound`` caps ``p1 + p2 + p3`` (default ``2 * sum(p) + 4``); ``turns`` is
    the half-width of the twist box around the source twist in each disk.
    """
    if not _normal_words(s.words):
        raise NotNormal(f"{s.dehn} is not normal")
    if bound is None:
        bound = 2 * sum(s.dehn.p) + 4
    key = (i, tuple(tuple(x for x in w if x != i) for w in s.words))
    keep = [lab for lab in (1, 2, 3) if lab != i]
    want = [s.arc(lab).key for lab in keep]
    centre = [q / p if p else 0.0 for p, q in zip(s.dehn.p, s.dehn.q)]
    found = {}
    for p, r in _residue_index(bound).get(key, ()):
        if sum(p) > bound:
            continue
        lifts = [_lifts(r[d], p[d], centre[d], turns) for d in range(3)]
        for q in itertools.product(*lifts):
            t = _try(DehnCoordinate(p, q))
            if t is None:
                continue
            if all(t.arc(lab).key == k for lab, k in zip(keep, want)):
                found[t.dehn] = t
    return [found[c] for c in sorted(found)]


def _steps(s: ArcSystem, members: list[ArcSystem]) -> list[ArcSystem]:
    # completions differ by twisting the free arc; the lightest one is the
    # middle of a triple and the two heavy ones are not adjacent
    if len(members) < 3:
        return [t for t in members if t.dehn != s.dehn]
    middle = min(members, key=lambda t: (sum(t.dehn.p), t.dehn.as_tuple()))
    if s.dehn == middle.dehn:
        return [t for t in members if t.dehn != s.dehn]
    return [middle]


def bfs_class(seed: DehnCoordinate, radius: int, bound: int | None = None) -> set[DehnCoordinate]:
    """Ball of the jump-move relation around ``seed``, through brute completions."""
    s = realize(seed)
    if not _normal_words(s.words):
        raise NotNormal(f"{seed} is not normal")
    seen = {s.dehn}
    frontier = [s]
    for _ in range(radius):
        nxt = []
        for x in frontier:
            for i in (1, 2, 3):
                for t in _steps(x, brute_completions(x, i, bound)):
                    if t.dehn not in seen:
                        seen.add(t.dehn)
                        nxt.append(t)
        frontier = nxt
    return seen


# ------------------------------------------------------------------- suite


@dataclass
class CorpusReport:
    """Pass/fail counts per checked property over a corpus."""

    bound: int
    q_bound: int
    items: int = 0
    checks: dict = None
    failures: dict = None

    def __post_init__(self):
        self.checks = self.checks or defaultdict(lambda: [0, 0])
        self.failures = self.failures or defaultdict(list)

    def record(self, name: str, ok: bool, witness=None):
        self.checks[name][0 if ok else 1] += 1
        if not ok and witness is not None and len(self.failures[name]) < 10:
            self.failures[name].append(str(witness))

    @property
    def ok(self) -> bool:
        return all(fail == 0 for k, (_, fail) in self.checks.items() if not k.startswith("info:"))

    def to_json(self) -> dict:
        return {
            "bound": self.bound,
            "q_bound": self.q_bound,
            "items": self.items,
            "checks": {k: {"pass": v[0], "fail": v[1]} for k, v in sorted(self.checks.items())},
            "failures": {k: v for k, v in sorted(self.failures.items())},
        }


def check_lemmas(s: ArcSystem, report: CorpusReport) -> None:
    """Record the weight lemmas at ``s``.

    The gated checks run only where every arc meets the first window; the
    ``info:`` entries repeat them without that gate and do not count towards
    :attr:`CorpusReport.ok`.
    """
    from .jump_moves import Variant, has_second_move, neighbors
    from .minimization import is_minimal_E1
    from .surface_model import weight

    c = s.dehn
    nbs = neighbors(s)
    allmeet = all(k in s.words[0] for k in (1, 2, 3))
    for i in (1, 2, 3):
        mv = [nb for nb in nbs if nb.arc == i]
        if {nb.variant for nb in mv} != {Variant.STANDARD, Variant.SECOND}:
            continue
        report.record("L1_total_weight", all(weight(nb.result) > weight(s) for nb in mv), (c, i))
        up1 = all(weight(nb.result, 1) > weight(s, 1) for nb in mv)
        report.record("info:L1_E1_ungated", up1, (c, i))
        if allmeet:
            report.record("L1_E1", up1, (c, i))
        for nb in mv:
            if nb.variant is Variant.SECOND:
                clean = not any(has_second_move(nb.result, j) for j in (1, 2, 3) if j != i)
                report.record("L0", clean, (c, i))
    if is_minimal_E1(s):
        flat = any(
            nb.variant is Variant.SECOND and weight(nb.result, 1) == weight(s, 1) for nb in nbs
        )
        report.record("info:no_second_at_minimal_ungated", not flat, c)
        if allmeet:
            report.record("no_second_at_minimal", not flat, c)


def lemma_report(coords) -> CorpusReport:
    """:func:`check_lemmas` at the normal form of every coordinate in ``coords``."""
    from .normal_form import normalize

    report = CorpusReport(0, 0)
    for c in coords:
        report.items += 1
        check_lemmas(normalize(realize(c)), report)
    return report


def run_corpus(
    bound: int, q_bound: int, oracle: bool = True, representatives: bool = True
) -> CorpusReport:
    """Run the property suite on every normal coordinate inside the box.

    ``oracle`` also compares completions against :func:`brute_completions`.
    ``representatives`` adds the representative checks, which dominate the
    running time.
    """
    from .canonical_rep import representative
    from .jump_moves import completions, cyclic_form, neighbors, predict_window_words
    from .jump_moves import standard_move
    from .minimization import decreasing_moves
    from .surface_model import dehn_of

    report = CorpusReport(bound, q_bound)
    valid = enumerate_valid(bound, q_bound).items
    keys = set()
    for c in valid:
        s = realize(c)
        report.record("roundtrip", dehn_of(s) == c, c)
        keys.add(s.keys)
    report.record("keys_distinct", len(keys) == len(valid))
    for c in enumerate_normal(bound, q_bound):
        report.items += 1
        s = realize(c)
        nbs = neighbors(s)
        check_lemmas(s, report)
        report.record("descent_unique", len(decreasing_moves(s)) <= 1, c)
        for i in (1, 2, 3):
            found = completions(s, i)
            report.record("completion_bound", len(found) <= 3, (c, i))
            if oracle:
                brute = [t.dehn for t in brute_completions(s, i)]
                report.record("completions_oracle", brute == [t.dehn for t in found], (c, i))
            t = standard_move(s, i)
            if t is not None:
                report.record("involution", standard_move(t, i) == s, (c, i))
            mv = [nb for nb in nbs if nb.arc == i]
            for nb in mv:
                if tuple(map(cyclic_form, nb.result.words)) != tuple(map(cyclic_form, s.words)):
                    ok = predict_window_words(s, i) == tuple(map(cyclic_form, nb.result.words))
                    report.record("window_rules", ok, (c, i, nb.result.dehn))
        if not representatives:
            continue
        rep = representative(s)
        report.record("unique_by_rule", rep.unique_by_rule, c)
        for nb in nbs:
            same = representative(nb.result).representative == rep.representative
            report.record("class_invariance", same, (c, nb.result.dehn))
    return report
