"""Run configurations shared by the scripts and the acceptance suite."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CorpusConfig:
    """The desk-scale corpus: a full box of normal coordinates plus a sample."""

    bound: int = 8
    q_bound: int = 3
    sample_bound: int = 12
    sample_q_bound: int = 4
    sample_count: int = 200
    sample_seed: int = 2024


@dataclass(frozen=True)
class CoverageConfig:
    """Larger sample used to reach the regimes with p1 >= 4.

    Minima of the small corpus only have p1 in {0, 2}.
    """

    bound: int = 22
    q_bound: int = 8
    count: int = 3000
    seed: int = 7
    plateau_limit: int = 64


@dataclass(frozen=True)
class BallConfig:
    seeds: int = 200
    radius: int = 10
    walk: int = 5
    rng_seed: int = 11


@dataclass(frozen=True)
class ClassConfig:
    """Balls and pair sample for the classification check."""

    bound: int = 8
    q_bound: int = 3
    seeds: int = 60
    radius: int = 2
    pairs: int = 16_000
    rng_seed: int = 5
