"""Classification checks on balls of the jump-move graph.

Two coordinates in one ball are equivalent.  Two coordinates whose arcs
join the punctures in different pairs are not: jump moves keep every
endpoint, so the pairing is an invariant.  Pairs with the same pairing in
different balls are left undecided.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from .canonical_rep import representative
from .complex_explorer import explore
from .config import ClassConfig
from .oracle_harness import enumerate_normal
from .surface_model import ArcSystem, DehnCoordinate, realize


def endpoint_pairing(s: ArcSystem) -> tuple:
    return tuple(sorted(tuple(sorted(a.ends)) for a in s.arcs))


@dataclass
class SoundnessReport:
    balls: int = 0
    vertices: int = 0
    ball_constant: list = field(default_factory=lambda: [0, 0])
    pairs: Counter = field(default_factory=Counter)
    failures: list = field(default_factory=list)

    @property
    def decided(self) -> int:
        return self.pairs["same_ball"] + self.pairs["separated"]

    @property
    def ok(self) -> bool:
        return self.ball_constant[1] == 0 and not self.failures

    def to_json(self) -> dict:
        return {
            "balls": self.balls,
            "vertices": self.vertices,
            "ball_constant": {"pass": self.ball_constant[0], "fail": self.ball_constant[1]},
            "pairs": dict(sorted(self.pairs.items())),
            "decided": self.decided,
            "failures": self.failures[:10],
        }


def check_classes(cfg: ClassConfig = ClassConfig()) -> SoundnessReport:
    rng = random.Random(cfg.rng_seed)
    seeds = rng.sample(list(enumerate_normal(cfg.bound, cfg.q_bound)), cfg.seeds)
    report = SoundnessReport()
    reps: dict[DehnCoordinate, DehnCoordinate] = {}
    pairing: dict[DehnCoordinate, tuple] = {}
    balls = []
    for seed in seeds:
        g = explore(seed, cfg.radius)
        for v in g.vertices:
            if v not in reps:
                s = realize(v)
                reps[v] = representative(s).representative
                pairing[v] = endpoint_pairing(s)
        distinct = {reps[v] for v in g.vertices}
        report.ball_constant[0 if len(distinct) == 1 else 1] += 1
        if len(distinct) > 1:
            report.failures.append(("ball", str(seed)))
        balls.append(g.vertices)
    report.balls = len(balls)
    report.vertices = len(reps)
    for k in range(cfg.pairs):
        # every other pair is drawn inside one ball
        i = rng.randrange(len(balls))
        j = i if k % 2 else rng.randrange(len(balls))
        a, b = rng.choice(balls[i]), rng.choice(balls[j])
        same_rep = reps[a] == reps[b]
        if i == j or a in balls[j] or b in balls[i]:
            kind, ok = "same_ball", same_rep
        elif pairing[a] != pairing[b]:
            kind, ok = "separated", not same_rep
        else:
            kind, ok = "undecided", True
            report.pairs["undecided_equal" if same_rep else "undecided_distinct"] += 1
        report.pairs[kind] += 1
        if not ok:
            report.failures.append((kind, str(a), str(b)))
    return report
