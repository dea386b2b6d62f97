"""Seeded random generators and small exhaustive universes of elements.

Desk-scale defaults match the test suites: gap sets inside [1, 30] with at
most 10 entries per side.
"""

from __future__ import annotations

from itertools import chain, combinations

from .core import CofMap


def random_gapset(rng, max_gap: int = 30, max_size: int = 10) -> tuple:
    k = rng.randint(0, min(max_size, max_gap))
    return tuple(sorted(rng.sample(range(1, max_gap + 1), k)))


def random_cofmap(rng, max_gap: int = 30, max_size: int = 10) -> CofMap:
    return CofMap(
        random_gapset(rng, max_gap, max_size),
        random_gapset(rng, max_gap, max_size),
    )


def random_idempotent(rng, max_gap: int = 30, max_size: int = 10) -> CofMap:
    gaps = random_gapset(rng, max_gap, max_size)
    return CofMap(gaps, gaps)


def all_gapsets(max_gap: int) -> list[tuple]:
    """Every gap set inside [1, max_gap], all 2**max_gap of them."""
    universe = range(1, max_gap + 1)
    return list(
        chain.from_iterable(combinations(universe, k) for k in range(max_gap + 1))
    )


def all_cofmaps(max_gap: int) -> list[CofMap]:
    """Every map whose gap sets fit inside [1, max_gap] (4**max_gap maps)."""
    subs = all_gapsets(max_gap)
    return [CofMap(d, r) for d in subs for r in subs]
