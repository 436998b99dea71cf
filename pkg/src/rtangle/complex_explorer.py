"""Finite balls of the normal complex and the tree check."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .errors import NotNormal
from .jump_moves import neighbors
from .normal_form import is_normal
from .surface_model import ALL, DehnCoordinate, realize, weight


@dataclass(frozen=True)
class NormalComplexGraph:
    """Ball of radius ``radius`` around ``seed``.

    ``edges`` holds sorted coordinate pairs; ``arcs`` maps each edge to the
    replaced arc.  ``w1`` and ``w`` are ``weight(., 1)`` and the total weight.
    """

    seed: DehnCoordinate
    radius: int
    vertices: tuple[DehnCoordinate, ...]
    edges: tuple[tuple[DehnCoordinate, DehnCoordinate], ...]
    arcs: dict = field(default_factory=dict, compare=False)
    w1: dict = field(default_factory=dict, compare=False)
    w: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        return {
            "seed": list(self.seed.as_tuple()),
            "radius": self.radius,
            "vertices": [
                {"coordinate": list(v.as_tuple()), "weight_E1": self.w1[v], "weight": self.w[v]}
                for v in self.vertices
            ],
            "edges": [
                [list(a.as_tuple()), list(b.as_tuple()), self.arcs[(a, b)]] for a, b in self.edges
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)


def explore(seed: DehnCoordinate, radius: int) -> NormalComplexGraph:
    """Breadth-first ball, including every edge between discovered vertices."""
    start = realize(seed)
    if not is_normal(start):
        raise NotNormal(f"{seed} is not normal")
    dist = {start.dehn: 0}
    systems = {start.dehn: start}
    edges = {}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for nb in neighbors(s):
            t = nb.result
            if t.dehn not in dist:
                if dist[s.dehn] == radius:
                    continue
                dist[t.dehn] = dist[s.dehn] + 1
                systems[t.dehn] = t
                queue.append(t)
            edges[tuple(sorted((s.dehn, t.dehn)))] = nb.arc
    vertices = tuple(sorted(dist))
    return NormalComplexGraph(
        seed=start.dehn,
        radius=radius,
        vertices=vertices,
        edges=tuple(sorted(edges)),
        arcs=edges,
        w1={v: weight(systems[v], 1) for v in vertices},
        w={v: weight(systems[v], ALL) for v in vertices},
    )


def is_tree(g: NormalComplexGraph) -> bool:
    if len(g.edges) != len(g.vertices) - 1:
        return False
    adj = {v: [] for v in g.vertices}
    for a, b in g.edges:
        if a not in adj or b not in adj:
            return False
        adj[a].append(b)
        adj[b].append(a)
    seen = {g.vertices[0]}
    stack = [g.vertices[0]]
    while stack:
        for u in adj[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(g.vertices)


def _name(c: DehnCoordinate) -> str:
    return '"' + str(c) + '"'


def export_dot(g: NormalComplexGraph) -> str:
    """DOT text: the seed is drawn doubled, lightest vertices carry ``w1``."""
    low = min(g.w1.values()) if g.w1 else None
    lines = ["graph N {", "  node [shape=box];"]
    for v in g.vertices:
        attrs = [f'label="({v})"']
        if g.w1.get(v) == low:
            attrs = [f'label="({v})\\nw1={low}"']
        if v == g.seed:
            attrs.append("peripheries=2")
        lines.append(f"  {_name(v)} [{', '.join(attrs)}];")
    for a, b in g.edges:
        lines.append(f'  {_name(a)} -- {_name(b)} [label="k{g.arcs.get((a, b), "")}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
