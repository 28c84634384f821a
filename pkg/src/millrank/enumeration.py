"""Exhaustive and sampled generation of coalitional rankings.

A coalitional ranking over n individuals is an ordered set partition of
the ``2**n - 1`` nonempty coalitions, so exhaustive streams contain
``fubini(2**n - 1)`` rankings. Exhaustive enumeration is guarded at
n <= 4; beyond that, use uniform sampling.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .core import CoalitionalRanking, Universe
from .errors import UniverseTooLargeError

MAX_EXHAUSTIVE_N = 4


@lru_cache(maxsize=None)
def fubini(m: int) -> int:
    """Number of weak orders on m labeled elements (exact big integer).

    fubini(0) = 1; fubini(m) sums over the size k of the top class:
    C(m, k) * fubini(m - k).
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return 1
    return sum(comb(m, k) * fubini(m - k) for k in range(1, m + 1))


def _ordered_partitions(elements: tuple[int, ...]):
    """Ordered set partitions, top class chosen lexicographically first.

    Subsets are ordered by their sorted tuples, so the stream is the
    depth-first walk taking the lexicographically smallest unused subset
    as the next class.
    """
    if not elements:
        yield ()
        return
    m = len(elements)

    def subsets(start, prefix):
        for i in range(start, m):
            chosen = prefix + (elements[i],)
            yield chosen
            yield from subsets(i + 1, chosen)

    for top in subsets(0, ()):
        if len(top) == m:
            yield (top,)
            continue
        chosen = set(top)
        rest = tuple(e for e in elements if e not in chosen)
        for tail in _ordered_partitions(rest):
            yield (top,) + tail


@dataclass(frozen=True, slots=True)
class Sample:
    """Sampling mode: ``count`` independent uniform draws from ``seed``."""

    count: int
    seed: int


EXHAUSTIVE = "exhaustive"


class RankingStream:
    """Iterable over rankings of one universe, exhaustive or sampled.

    Exhaustive mode yields each ranking exactly once in the documented
    canonical order; sample mode yields ``mode.count`` uniform draws,
    reproducible from ``mode.seed``.
    """

    def __init__(self, universe: Universe, mode=EXHAUSTIVE):
        if mode == EXHAUSTIVE and universe.n > MAX_EXHAUSTIVE_N:
            raise UniverseTooLargeError(
                f"exhaustive enumeration supports n <= {MAX_EXHAUSTIVE_N}; "
                f"got n={universe.n} - use sampling instead"
            )
        self.universe = universe
        self.mode = mode

    def __iter__(self):
        if self.mode == EXHAUSTIVE:
            universe = self.universe
            elements = tuple(range(1, universe.full_mask + 1))
            for classes in _ordered_partitions(elements):
                yield CoalitionalRanking._trusted(universe, classes)
        else:
            for i in range(self.mode.count):
                yield sample_ranking(self.universe.n, _derive_seed(self.mode.seed, i))

    def __len__(self):
        if self.mode == EXHAUSTIVE:
            return fubini(self.universe.full_mask)
        return self.mode.count


def enumerate_rankings(n: int, universe: Universe | None = None) -> RankingStream:
    """Every valid ranking over n individuals, exactly once.

    The total equals ``fubini(2**n - 1)``. Raises UniverseTooLargeError
    above n = 4.
    """
    return RankingStream(universe or Universe(n), EXHAUSTIVE)


def _derive_seed(seed: int, index: int) -> int:
    return (seed * 2654435761 + index) & (2**63 - 1)


def sample_ranking(n: int, rng_seed: int, universe: Universe | None = None) -> CoalitionalRanking:
    """One uniform draw over all rankings of n individuals.

    Walks the fubini recurrence top-down: the top-class size k is chosen
    with probability C(m, k) * fubini(m - k) / fubini(m), the k-subset
    uniformly, then the remainder recursively. Exactly uniform, and fully
    determined by the integer seed.
    """
    universe = universe or Universe(n)
    rng = random.Random(rng_seed)
    remaining = list(range(1, universe.full_mask + 1))
    classes = []
    while remaining:
        m = len(remaining)
        total = fubini(m)
        ticket = rng.randrange(total)
        acc = 0
        for k in range(1, m + 1):
            acc += comb(m, k) * fubini(m - k)
            if ticket < acc:
                break
        chosen = sorted(rng.sample(remaining, k))
        classes.append(tuple(chosen))
        chosen_set = set(chosen)
        remaining = [e for e in remaining if e not in chosen_set]
    return CoalitionalRanking._trusted(universe, tuple(classes))
