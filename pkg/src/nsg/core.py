"""Numerical semigroups as immutable, bitmap-backed values.

A numerical semigroup S is a cofinite submonoid of the nonnegative
integers.  The canonical representation is the conductor c (smallest c
with c + N contained in S) together with a bitmap of the members below
c; every integer >= c is implicitly a member.  S = N itself is rejected
everywhere, so the multiplicity e is always >= 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import GcdNotOne, NotClosed, RegularSemigroup

__all__ = [
    "NumericalSemigroup",
    "InvariantReport",
    "from_generators",
    "from_gaps",
    "invariant_report",
]


class NumericalSemigroup:
    """An immutable numerical semigroup (never N itself).

    Instances are created through :func:`from_generators` or
    :func:`from_gaps`; all derived data is computed lazily and cached.
    Values are hashable and safe to share between threads.
    """

    __slots__ = ("min_generators", "conductor", "multiplicity", "_bits", "_cache")

    min_generators: tuple[int, ...]
    conductor: int
    multiplicity: int

    def __init__(self, min_generators, conductor, multiplicity, bits):
        self.min_generators = min_generators
        self.conductor = conductor
        self.multiplicity = multiplicity
        self._bits = bits
        self._cache = {}

    # -- construction ------------------------------------------------

    @classmethod
    def _from_bits(cls, conductor: int, bits: int) -> "NumericalSemigroup":
        """Build from a membership bitmap over [0, conductor).

        The bitmap is normalized first: trailing members are absorbed
        into the implicit tail so the stored conductor is exact.
        """
        full = (1 << conductor) - 1
        bits &= full
        nonmembers = ~bits & full
        if nonmembers == 0:
            raise RegularSemigroup("membership below the conductor is all of N")
        conductor = nonmembers.bit_length()  # last gap + 1
        bits &= (1 << conductor) - 1
        if bits & 1 == 0:
            raise ValueError("0 must be a member")
        if bits == 1:
            mult = conductor
        else:
            mult = ((bits >> 1) & -(bits >> 1)).bit_length()
        gens = _minimal_generators(conductor, bits, mult)
        return cls(gens, conductor, mult, bits)

    def __reduce__(self):
        return (_rebuild, (self.conductor, self._bits))

    # -- membership and basic views ----------------------------------

    def __contains__(self, z: int) -> bool:
        if z >= self.conductor:
            return True
        if z < 0:
            return False
        return bool((self._bits >> z) & 1)

    def mask_through(self, stop: int) -> int:
        """Membership bitmap over [0, stop), tail bits included."""
        if stop <= self.conductor:
            return self._bits & ((1 << stop) - 1)
        return self._bits | (((1 << (stop - self.conductor)) - 1) << self.conductor)

    def members(self, stop: int) -> Iterator[int]:
        """Members of S below stop, ascending."""
        m = self.mask_through(stop)
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    @property
    def frobenius(self) -> int:
        return self.conductor - 1

    @property
    def genus(self) -> int:
        """Number of gaps."""
        return self.conductor - self._bits.bit_count()

    def gaps(self) -> tuple[int, ...]:
        c = self.conductor
        inv = ~self._bits & ((1 << c) - 1)
        return tuple(z for z in range(1, c) if (inv >> z) & 1)

    @property
    def embedding_dimension(self) -> int:
        return len(self.min_generators)

    def small_elements(self) -> tuple[int, ...]:
        """The members 0 = s_0 < s_1 < ... < s_n = c."""
        cached = self._cache.get("small")
        if cached is None:
            cached = tuple(self.members(self.conductor)) + (self.conductor,)
            self._cache["small"] = cached
        return cached

    def pseudo_frobenius(self) -> tuple[int, ...]:
        """Gaps z with z + m in S for every nonzero member m."""
        cached = self._cache.get("pf")
        if cached is None:
            c = self.conductor
            ext = self.mask_through(2 * c)
            ok = (1 << c) - 1
            for m in self.members(c):
                if m:
                    ok &= ext >> m
            pf = ok & ~self._bits & ((1 << c) - 1)
            cached = tuple(z for z in range(c) if (pf >> z) & 1)
            self._cache["pf"] = cached
        return cached

    @property
    def type(self) -> int:
        """The Cohen-Macaulay type r = number of pseudo-Frobenius elements."""
        return len(self.pseudo_frobenius())

    # -- value semantics ----------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.conductor == other.conductor and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self.conductor, self._bits))

    def sort_key(self) -> tuple:
        return (self.genus, self.conductor, self.min_generators)

    def __repr__(self) -> str:
        return f"NumericalSemigroup({', '.join(map(str, self.min_generators))})"

    def spec_string(self) -> str:
        """Generator-list text form, e.g. ``"10,11,26"``."""
        return ",".join(map(str, self.min_generators))


def _rebuild(conductor: int, bits: int) -> NumericalSemigroup:
    return NumericalSemigroup._from_bits(conductor, bits)


def _minimal_generators(conductor: int, bits: int, mult: int) -> tuple[int, ...]:
    # Minimal generators are the nonzero members not expressible as a sum
    # of two nonzero members; they all lie in [e, c + e).
    stop = conductor + mult
    full = (1 << stop) - 1
    ext = bits | (((1 << mult) - 1) << conductor)
    nonzero = ext & ~1
    sums = 0
    m = nonzero
    while m:
        low = m & -m
        a = low.bit_length() - 1
        if 2 * a >= stop:
            break
        sums |= nonzero << a
        m ^= low
    gen_bits = nonzero & ~sums & full
    gens = []
    while gen_bits:
        low = gen_bits & -gen_bits
        gens.append(low.bit_length() - 1)
        gen_bits ^= low
    return tuple(gens)


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Smallest numerical semigroup containing the given generators.

    Redundant generators are dropped; the stored generating set is the
    unique minimal one.  Raises RegularSemigroup if 1 is a generator and
    GcdNotOne if the gcd of the generators exceeds 1.
    """
    gens = sorted({int(g) for g in gens})
    if not gens:
        raise ValueError("at least one generator is required")
    if gens[0] < 1:
        raise ValueError("generators must be positive integers")
    if gens[0] == 1:
        raise RegularSemigroup("1 generates all of N")
    if math.gcd(*gens) != 1:
        raise GcdNotOne(f"gcd({', '.join(map(str, gens))}) != 1")

    e = gens[0]
    limit = 2 * gens[-1] + 1
    while True:
        bits = 1
        for z in range(1, limit):
            for g in gens:
                if g > z:
                    break
                if (bits >> (z - g)) & 1:
                    bits |= 1 << z
                    break
        tail = ((1 << e) - 1) << (limit - e)
        if bits & tail == tail:
            break
        limit *= 2  # no run of e consecutive members seen yet
    conductor = (~bits & ((1 << limit) - 1)).bit_length()
    return NumericalSemigroup._from_bits(conductor, bits)


def from_gaps(gaps: Iterable[int]) -> NumericalSemigroup:
    """Semigroup whose gap set is exactly the given finite set.

    Raises NotClosed when two non-gaps sum to a gap, RegularSemigroup
    when the gap set is empty.
    """
    gaps = sorted({int(g) for g in gaps})
    if not gaps:
        raise RegularSemigroup("the empty gap set describes N")
    if gaps[0] < 1:
        raise ValueError("gaps must be positive integers")
    conductor = gaps[-1] + 1
    bits = (1 << conductor) - 1
    for g in gaps:
        bits &= ~(1 << g)
    for g in gaps:
        for a in range(1, g // 2 + 1):
            if (bits >> a) & 1 and (bits >> (g - a)) & 1:
                raise NotClosed(f"{a} + {g - a} = {g} but {g} is listed as a gap")
    return NumericalSemigroup._from_bits(conductor, bits)


@dataclass(frozen=True)
class InvariantReport:
    """First-order invariants of one semigroup.

    ``s`` counts the type-sequence entries equal to 1 and ``edim`` is
    the number of minimal generators.
    """

    e: int
    c: int
    delta: int
    n: int
    r: int
    b: int
    k: int
    s: int
    edim: int


def invariant_report(S: NumericalSemigroup) -> InvariantReport:
    """Full invariant report, with the b and k cross-checks applied."""
    # Imported here: typeseq depends on this module.
    from .typeseq import b_invariant, k_invariant, type_sequence

    ts = type_sequence(S)
    b = b_invariant(S)
    k = k_invariant(S)
    delta = S.genus
    n = S.conductor - delta
    r = S.type
    if not 1 <= r <= S.multiplicity - 1:
        raise AssertionError(f"type out of range for {S!r}")
    return InvariantReport(
        e=S.multiplicity,
        c=S.conductor,
        delta=delta,
        n=n,
        r=r,
        b=b,
        k=k,
        s=sum(1 for ri in ts.entries if ri == 1),
        edim=S.embedding_dimension,
    )
