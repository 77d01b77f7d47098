"""Exhaustive generation of numerical semigroups.

The main path walks the semigroup tree: the root N has the single
child {0, 2, ->}, and the children of S are the sets S minus one
minimal generator larger than the Frobenius number.  Every semigroup
is reached exactly once this way, with the genus growing by one per
edge.  An independent subset-search oracle covers small genus.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Optional

from .core import NumericalSemigroup, from_gaps
from .errors import BoundTooLarge

__all__ = [
    "enumerate_by_genus",
    "enumerate_by_conductor",
    "children",
    "brute_force_by_genus",
]


def children(S: NumericalSemigroup) -> list[NumericalSemigroup]:
    """Tree children of S, ordered by the removed generator."""
    out = []
    c = S.conductor
    for g in S.min_generators:
        if g >= c:  # generator beyond the Frobenius number
            # bits over [0, g + 1) with position g left unset
            out.append(NumericalSemigroup._from_bits(g + 1, S.mask_through(g)))
    return out


def _walk(S, g_max: int, c_max: Optional[int]) -> Iterator[NumericalSemigroup]:
    yield S
    if S.genus < g_max:
        for child in children(S):
            if c_max is None or child.conductor <= c_max:
                yield from _walk(child, g_max, c_max)


def enumerate_by_genus(g_max: int) -> Iterator[NumericalSemigroup]:
    """All semigroups with 1 <= genus <= g_max, each exactly once.

    Depth-first, children in ascending removed-generator order, so the
    sequence is deterministic.  N itself is never yielded.
    """
    if g_max < 1:
        raise ValueError("g_max must be at least 1")
    root = NumericalSemigroup._from_bits(2, 1)  # {0, 2, ->}
    yield from _walk(root, g_max, None)


def enumerate_by_conductor(c_max: int) -> Iterator[NumericalSemigroup]:
    """All semigroups with conductor <= c_max, each exactly once.

    Same traversal as enumerate_by_genus(c_max - 1) restricted to the
    conductor bound (the genus of such a semigroup is at most
    c_max - 1); conductors never decrease toward the leaves, so whole
    subtrees are pruned.
    """
    if c_max < 2:
        raise ValueError("c_max must be at least 2")
    root = NumericalSemigroup._from_bits(2, 1)
    yield from _walk(root, c_max - 1, c_max)


def brute_force_by_genus(g: int) -> list[NumericalSemigroup]:
    """Independent oracle: test every candidate gap set of size g.

    All gaps of a genus-g semigroup lie in [1, 2g - 1], so size-g
    subsets of that interval are exhaustive.  Guarded at g <= 8.
    """
    if g > 8:
        raise BoundTooLarge("subset search is limited to genus 8")
    if g < 1:
        raise ValueError("g must be at least 1")
    found = []
    universe = range(1, 2 * g)
    for gaps in combinations(universe, g):
        gapset = set(gaps)
        ok = True
        for x in gaps:
            for a in range(1, x // 2 + 1):
                if a not in gapset and (x - a) not in gapset:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(from_gaps(gaps))
    return found
