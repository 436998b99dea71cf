"""Explore balls around sampled corpus seeds and check each one is a tree.

    python3 scripts/explore_balls.py --seeds 100 --radius 6 --dot-dir balls/
"""

import argparse
import os
import random

from rtangle.complex_explorer import explore, export_dot, is_tree
from rtangle.config import BallConfig, CorpusConfig
from rtangle.oracle_harness import enumerate_normal


def main():
    cfg = BallConfig()
    ap = argparse.ArgumentParser()
    ap.add_argument("--seeds", type=int, default=100)
    ap.add_argument("--radius", type=int, default=6)
    ap.add_argument("--rng-seed", type=int, default=cfg.rng_seed)
    ap.add_argument("--dot-dir")
    args = ap.parse_args()

    corpus = CorpusConfig()
    rng = random.Random(args.rng_seed)
    seeds = rng.sample(list(enumerate_normal(corpus.bound, corpus.q_bound)), args.seeds)
    if args.dot_dir:
        os.makedirs(args.dot_dir, exist_ok=True)
    cycles = 0
    for seed in seeds:
        g = explore(seed, args.radius)
        tree = is_tree(g)
        cycles += not tree
        print(f"{str(seed):24s} V={len(g.vertices):5d} E={len(g.edges):5d} tree={tree}")
        if args.dot_dir:
            with open(os.path.join(args.dot_dir, f"{seed}.dot"), "w") as fh:
                fh.write(export_dot(g))
    print(f"{len(seeds)} balls, {cycles} with cycles")
    raise SystemExit(3 if cycles else 0)


if __name__ == "__main__":
    main()
