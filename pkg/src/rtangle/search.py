"""Search for arc systems that keep two arcs of a given system fixed.

Inside one disk, a strand of a fixed arc must keep its homotopy class relative
to its endpoints.  Endpoints may slide along the window, which never crosses
the line through the punctures.  Classes are compared through reduced
crossing words with the local tree ``L - e - R``, where ``L`` and ``R`` run
from the boundary circle to the punctures and ``e`` joins the two punctures.
Each disk is searched on its own: window size, shift and an order-preserving
placement of the fixed strands.  Surviving combinations are realized and
checked globally with the free-group arc keys.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

from .errors import InvalidCoordinate
from .surface_model import ArcSystem, DehnCoordinate, collar_word, pants_links, realize, slot
from .words import reduce

_L, _E, _R = 1, 2, 3
_INCIDENT = {"a": (_L, _E), "b": (_E, _R)}


def _strip(word: tuple, puncture: str) -> tuple:
    w = list(word)
    while w and abs(w[-1]) in _INCIDENT[puncture]:
        w.pop()
    return tuple(w)


@lru_cache(maxsize=None)
def _collar(t: int) -> tuple:
    return tuple(sym * sign for sym, sign in collar_word(t, _L, _R))


@lru_cache(maxsize=1 << 20)
def local_piece(p: int, q: int, j: int) -> tuple:
    """``(end, word, t)`` of window position ``j`` in the pattern ``(p, q)``.

    ``end`` is ``("w", j2)`` or ``("p", "a" | "b")``; ``word`` is the reduced
    local crossing word; ``t`` the raw collar crossing count.
    """
    n = (p - 2) // 2
    _, k, t = slot(p, q, j)
    if k == 0:
        return ("p", "a"), _end_word(t, "a"), t
    if k == n + 1:
        return ("p", "b"), _end_word(t, "b"), t
    j2 = (p - k - q) % p
    _, _, t2 = slot(p, q, j2)
    return ("w", j2), _vertical_word(t, k <= n, t2), t


@lru_cache(maxsize=None)
def _end_word(t: int, puncture: str) -> tuple:
    return _strip(reduce(_collar(t)), puncture)


@lru_cache(maxsize=1 << 16)
def _vertical_word(t: int, from_bottom: bool, t2: int) -> tuple:
    back = tuple(-g for g in reversed(_collar(t2)))
    return reduce(_collar(t) + ((_E if from_bottom else -_E),) + back)


@lru_cache(maxsize=1 << 16)
def local_pieces(p: int, q: int) -> tuple:
    return tuple(local_piece(p, q, j) for j in range(p))


def guided_words(word: tuple[int, ...], i: int) -> list[tuple[int, ...]]:
    """Normal words keeping the fixed dots whose ``i``-dots are the old ones or toggled.

    Between two fixed dots of different labels an ``i``-dot is either kept or
    toggled; between equal labels it is forced.  Each end of the window may
    or may not carry an ``i``-dot.
    """
    fixed = [x for x in word if x != i]
    c = len(fixed)
    if c == 0:
        return [()]
    gaps = [False] * (c + 1)
    k = 0
    for x in word:
        if x == i:
            gaps[k] = True
        else:
            k += 1
    inner_old = gaps[1:c]
    inner_new = [not g if fixed[u] != fixed[u + 1] else True for u, g in enumerate(inner_old)]
    out = set()
    for inner in (inner_old, inner_new):
        for left in (False, True):
            for right in (False, True):
                w = [i] if left else []
                for u, x in enumerate(fixed):
                    w.append(x)
                    if u < c - 1 and inner[u]:
                        w.append(i)
                if right:
                    w.append(i)
                out.add(tuple(w))
    return sorted(out, key=lambda w: (len(w), w))


def _disk_options(
    s: ArcSystem,
    d: int,
    i: int,
    max_p: int,
    normal_only: bool,
    t_free: int,
    guided: bool = False,
):
    """All ``(p', q', word')`` for disk ``d`` compatible with the fixed strands."""
    p, q = s.dehn.p[d - 1], s.dehn.q[d - 1]
    word = s.words[d - 1]
    fixed = [j for j in range(p) if word[j] != i]
    index = {j: u for u, j in enumerate(fixed)}
    c = len(fixed)
    owner = {}
    for lab in (1, 2, 3):
        for e in s.arc(lab).ends:
            if (e + 1) // 2 == d:
                owner["a" if e % 2 else "b"] = lab
    free_punctures = {side for side, lab in owner.items() if lab == i}

    old = []
    if p:
        pieces = local_pieces(p, q)
        for j in fixed:
            end, w, t = pieces[j]
            if end[0] == "w":
                end = ("w", index[end[1]])
            old.append((end, w, t))

    options = []
    if c == 0:
        options.append((0, 0, ()))
    if c == 0 and len(free_punctures) < 2:
        return options

    if guided and c:
        for labels in guided_words(word, i):
            pn = len(labels)
            if pn % 2 or pn > max_p:
                continue
            for qn in _q_candidates(old, labels, pn, i):
                if _forced(pn, qn, old, labels, free_punctures, i):
                    options.append((pn, qn, labels))
        return options

    lo_p = max(c, 2)
    lo_p += lo_p % 2
    for pn in range(lo_p, max_p + 1, 2):
        if normal_only and pn > 2 * c + 1:
            break
        if c:
            qs = _q_range(old, pn)
        else:
            qs = range(-(t_free // 2 + 2) * pn, (t_free // 2 + 2) * pn + 1)
        for qn in qs:
            for labels in _placements(pn, qn, old, word, fixed, free_punctures, i, normal_only):
                options.append((pn, qn, labels))
    return options


def _q_range(old, pn: int) -> range:
    # a slid endpoint changes the collar crossing count by at most one
    qlo, qhi = -math.inf, math.inf
    for _, _, t in old:
        mlo = math.ceil((t - 2) / 2)
        mhi = math.floor((t + 1) / 2)
        qlo = max(qlo, mlo * pn - pn + 1)
        qhi = min(qhi, mhi * pn + pn - 1)
    return range(int(qlo), int(qhi) + 1)


def _q_candidates(old, labels, pn: int, i: int) -> list[int]:
    """Shifts placing the first fixed strand on the right kind of slot."""
    phi = [x for x, lab in enumerate(labels) if lab != i]
    end = old[0][0]
    x0 = phi[0]
    n = (pn - 2) // 2
    if end[0] == "p":
        residues = [((0 if end[1] == "a" else n + 1) - x0) % pn]
    else:
        # partner j2 of j satisfies j + j2 + 2q = 0 mod p
        rhs = -x0 - phi[end[1]]
        if rhs % 2:
            return []
        half = pn // 2
        r = (rhs // 2) % half
        residues = [r, r + half]
    qs = _q_range(old, pn)
    out = []
    for r in residues:
        start = qs.start + (r - qs.start) % pn
        out.extend(range(start, qs.stop, pn))
    return sorted(out)


def _forced(pn, qn, old, labels, free_punctures, i) -> bool:
    phi = [x for x, lab in enumerate(labels) if lab != i]
    for u, x in enumerate(phi):
        target_end, target_word, target_t = old[u]
        _, _, t = slot(pn, qn, x)
        if abs(t - target_t) > 1:
            return False
        end, w, _ = local_piece(pn, qn, x)
        if w != target_word or end[0] != target_end[0]:
            return False
        if end[0] == "p" and end[1] != target_end[1]:
            return False
    return _consistent(local_pieces(pn, qn), old, phi, labels, free_punctures, i)


def _placements(pn, qn, old, word, fixed, free_punctures, i, normal_only):
    new = local_pieces(pn, qn)
    c = len(old)
    results = []
    phi = [0] * c

    def dfs(u, pos, prev_label):
        # positions before ``pos`` are decided; ``prev_label`` is label at pos-1
        if u == c:
            if normal_only:
                run = pn - pos
                if run > 1 or (run == 1 and prev_label == i):
                    return
            labels = [i] * pn
            for v in range(c):
                labels[phi[v]] = word[fixed[v]]
            if _consistent(new, old, phi, labels, free_punctures, i):
                results.append(tuple(labels))
            return
        target_end, target_word, _ = old[u]
        lab = word[fixed[u]]
        max_skip = pn - pos - (c - u)
        for skip in range(0, max_skip + 1):
            if normal_only and skip > 1:
                break
            if normal_only and skip == 1 and prev_label == i:
                break
            x = pos + skip
            last = i if skip else prev_label
            if normal_only and last == lab:
                continue
            end, w, _ = new[x]
            if w != target_word or end[0] != target_end[0]:
                continue
            if end[0] == "p" and end[1] != target_end[1]:
                continue
            phi[u] = x
            dfs(u + 1, x + 1, lab)

    dfs(0, 0, None)
    return results


def _consistent(new, old, phi, labels, free_punctures, i) -> bool:
    for v, (end, _, _) in enumerate(old):
        if end[0] == "w" and new[phi[v]][0] != ("w", phi[end[1]]):
            return False
    for x, (end, _, _) in enumerate(new):
        if labels[x] == i:
            if end[0] == "w" and labels[end[1]] != i:
                return False
            if end[0] == "p" and end[1] not in free_punctures:
                return False
    return True


def _labels_match(pv, combo) -> bool:
    # chords of the pants join dots of the same arc
    for (d, j), ((d2, j2), _) in pants_links(pv).items():
        if combo[d - 1][2][j] != combo[d2 - 1][2][j2]:
            return False
    return True


def systems_sharing(
    s: ArcSystem,
    i: int,
    max_p: tuple[int, int, int],
    normal_only: bool,
    t_free: int = 0,
    guided: bool = False,
) -> list[ArcSystem]:
    """Valid systems whose arcs other than ``i`` are isotopic to those of ``s``.

    ``max_p`` bounds the new window sizes per disk; ``t_free`` bounds collar
    windings in disks that only the replaced arc enters.  ``guided`` restricts
    each window word to :func:`guided_words`, which is fast but only exact
    where the window-word rules hold.
    """
    per_disk = [
        _disk_options(s, d, i, max_p[d - 1], normal_only, t_free, guided) for d in (1, 2, 3)
    ]
    keep = [lab for lab in (1, 2, 3) if lab != i]
    want = {lab: s.arc(lab).key for lab in keep}
    found = {}
    for combo in itertools.product(*per_disk):
        pv = tuple(o[0] for o in combo)
        if sum(pv) % 2:
            continue
        if not _labels_match(pv, combo):
            continue
        qv = tuple(o[1] if o[0] else 0 for o in combo)
        try:
            c = DehnCoordinate(pv, qv)
            t = realize(c)
        except InvalidCoordinate:
            continue
        if any(t.words[d] != combo[d][2] for d in range(3)):
            continue
        if all(t.arc(lab).key == want[lab] for lab in keep):
            found[c] = t
    return [found[c] for c in sorted(found)]
