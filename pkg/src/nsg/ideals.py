"""Relative ideals of a numerical semigroup and their duals.

A relative ideal is a set E of integers, bounded below, with E + S
contained in E.  Storage mirrors the semigroup representation: a least
element, a stabilization bound sigma past which every integer belongs,
and a bitmap over [least, sigma).  Construction normalizes so that two
descriptions of the same set compare equal.
"""

from __future__ import annotations

from typing import Iterator

from .core import NumericalSemigroup
from .errors import IndexOutOfRange, NotNested

__all__ = [
    "RelativeIdeal",
    "ideal_of_chain",
    "dual",
    "length_between",
    "colon_value_set_xR_m",
]


class RelativeIdeal:
    """Normalized relative ideal over a fixed base semigroup."""

    __slots__ = ("base", "least", "stabilization", "_bits")

    def __init__(self, base: NumericalSemigroup, least: int, stabilization: int, bits: int):
        width = stabilization - least
        if width < 0:
            raise ValueError("stabilization below least")
        bits &= (1 << width) - 1
        # absorb members adjacent to the tail, then drop leading non-members
        while stabilization > least and (bits >> (stabilization - least - 1)) & 1:
            stabilization -= 1
            bits &= (1 << (stabilization - least)) - 1
        if bits == 0:
            least = stabilization
        else:
            shift = (bits & -bits).bit_length() - 1
            least += shift
            bits >>= shift
        self.base = base
        self.least = least
        self.stabilization = stabilization
        self._bits = bits

    def __contains__(self, z: int) -> bool:
        if z >= self.stabilization:
            return True
        if z < self.least:
            return False
        return bool((self._bits >> (z - self.least)) & 1)

    def members_below(self, stop: int) -> Iterator[int]:
        """Members < stop, ascending (including tail members)."""
        m = self._bits
        while m:
            low = m & -m
            z = self.least + low.bit_length() - 1
            if z >= stop:
                return
            yield z
            m ^= low
        yield from range(self.stabilization, stop)

    def is_subset_of(self, other: "RelativeIdeal") -> bool:
        hi = max(self.stabilization, other.stabilization)
        return all(z in other for z in self.members_below(hi))

    def is_closed_under_base(self) -> bool:
        """E + S subset of E, checked below sigma + e."""
        e = self.base.multiplicity
        hi = self.stabilization + e
        for z in self.members_below(self.stabilization):
            for g in self.base.min_generators:
                if z + g < hi and z + g not in self:
                    return False
        return True

    @classmethod
    def from_semigroup(cls, S: NumericalSemigroup, shift: int = 0) -> "RelativeIdeal":
        """The ideal shift + S."""
        return cls(S, shift, S.conductor + shift, S.mask_through(S.conductor))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RelativeIdeal):
            return NotImplemented
        return (
            self.base == other.base
            and self.least == other.least
            and self.stabilization == other.stabilization
            and self._bits == other._bits
        )

    def __hash__(self) -> int:
        return hash((self.least, self.stabilization, self._bits))

    def __repr__(self) -> str:
        shown = list(self.members_below(self.stabilization))
        return f"RelativeIdeal({shown} + [{self.stabilization},->))"


def ideal_of_chain(S: NumericalSemigroup, i: int) -> RelativeIdeal:
    """S_i = members of S that are >= s_i; S_0 = S, S_n = the conductor ideal."""
    smalls = S.small_elements()
    n = len(smalls) - 1
    if not 0 <= i <= n:
        raise IndexOutOfRange(f"chain index {i} outside [0, {n}]")
    least = smalls[i]
    bits = S.mask_through(S.conductor) >> least
    return RelativeIdeal(S, least, S.conductor, bits)


def dual(F: RelativeIdeal, E: RelativeIdeal) -> RelativeIdeal:
    """F - E = integers z with z + E contained in F.

    Computed by direct scan of the candidate window
    [least(F) - least(E), sigma(F) - least(E)); everything at or beyond
    the upper end lands in the tail of F against all of E.
    """
    if F.base != E.base:
        raise ValueError("dual of ideals over different semigroups")
    lo = F.least - E.least
    hi = max(F.stabilization - E.least, lo)
    bits = 0
    for z in range(lo, hi):
        if all((z + x) in F for x in E.members_below(F.stabilization - z)):
            bits |= 1 << (z - lo)
    return RelativeIdeal(F.base, lo, hi, bits)


def length_between(E: RelativeIdeal, F: RelativeIdeal) -> int:
    """|E without F| for nested ideals F inside E."""
    lo = min(E.least, F.least)
    hi = max(E.stabilization, F.stabilization)
    count = 0
    for z in range(lo, hi):
        in_e = z in E
        if z in F:
            if not in_e:
                raise NotNested(f"{z} belongs to F but not to E")
        elif in_e:
            count += 1
    return count


def colon_value_set_xR_m(S: NumericalSemigroup) -> RelativeIdeal:
    """Integers z with z + m in e + S for every nonzero member m.

    This is the dual (e + S) - M, the value set of (xR : m) for the
    monomial ring of S with v(x) = e.  It always contains e + S and
    every integer >= c.
    """
    shifted = RelativeIdeal.from_semigroup(S, S.multiplicity)
    maximal = ideal_of_chain(S, 1)
    return dual(shifted, maximal)
