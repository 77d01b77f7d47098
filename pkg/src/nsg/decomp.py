"""Decomposition of a semigroup into an arithmetic skeleton plus towers.

Below the conductor, S splits disjointly into the multiples
{0, e, ..., pe}, the tail [c, ->), and k - 1 towers
H_i = {y_i, y_i + e, ..., y_i + l_i e} headed by the members whose
predecessor by e falls outside S.  For k = 1 the tower lists are empty
and the same formulas still apply.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import NumericalSemigroup
from .errors import NotASemigroup
from .ideals import colon_value_set_xR_m
from .typeseq import Check, ab_partition, b_invariant, k_invariant, _require

__all__ = [
    "Decomposition",
    "XyzSplit",
    "decompose",
    "xyz_split",
    "conductor_identity",
    "reconstruct",
    "case_formulas",
]


@dataclass(frozen=True)
class Decomposition:
    e: int
    c: int
    p: int
    h: int
    k: int
    ys: tuple[int, ...]
    ls: tuple[int, ...]

    def __post_init__(self):
        if self.e < 2 or self.p < 0:
            raise ValueError("need e >= 2 and p >= 0")
        if self.h != (self.p + 1) * self.e - self.c or not 0 <= self.h <= self.e - 2:
            raise ValueError("h must equal (p+1)e - c and lie in [0, e-2]")
        if len(self.ys) != len(self.ls) or self.k != len(self.ys) + 1:
            raise ValueError("tower lists out of step with k")

    @property
    def sum_l(self) -> int:
        return sum(self.ls)

    def skeleton(self) -> tuple[int, ...]:
        return tuple(i * self.e for i in range(self.p + 1))

    def towers(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(y + j * self.e for j in range(l + 1))
            for y, l in zip(self.ys, self.ls)
        )

    def display(self) -> str:
        """Brace form: skeleton, tail arrow, then each tower."""
        parts = [", ".join(map(str, self.skeleton())) + f", {self.c} ->"]
        head = "{" + parts[0] + "}"
        tower_text = [
            f"H{i} = {{{', '.join(map(str, tower))}}}"
            for i, tower in enumerate(self.towers(), start=1)
        ]
        if tower_text:
            return head + "  with  " + "; ".join(tower_text)
        return head + "  (no towers)"


@dataclass(frozen=True)
class XyzSplit:
    X: int
    Y: int
    Z: int

    @property
    def total(self) -> int:
        return self.X + self.Y + self.Z


def decompose(S: NumericalSemigroup) -> Decomposition:
    """Skeleton/tower decomposition; exactness is re-checked bit for bit."""
    cached = S._cache.get("decomp")
    if cached is not None:
        return cached
    c = S.conductor
    e = S.multiplicity
    p = (c - 1) // e
    h = (p + 1) * e - c

    bits = S.mask_through(c)
    bottoms = bits & ~(bits << e) & ((1 << c) - 1) & ~1
    ys = []
    while bottoms:
        low = bottoms & -bottoms
        ys.append(low.bit_length() - 1)
        bottoms ^= low
    ls = tuple((c - 1 - y) // e for y in ys)
    ys = tuple(ys)
    d = Decomposition(e=e, c=c, p=p, h=h, k=len(ys) + 1, ys=ys, ls=ls)

    _require(d.k == k_invariant(S), "tower count must be k - 1")
    _require(all(y % e for y in ys), "tower heads cannot be multiples of e")
    _require(len({y % e for y in ys}) == len(ys), "tower heads share a residue")
    _require(all(y > e for y in ys), "tower heads must exceed the multiplicity")
    _require(
        all(ls[i] >= ls[i + 1] for i in range(len(ls) - 1)),
        "tower lengths must be non-increasing",
    )
    if ls:
        _require(0 <= ls[-1] and ls[0] <= p - 1, "tower lengths outside [0, p-1]")
    rebuilt = 0
    for m in d.skeleton():
        rebuilt |= 1 << m
    for tower in d.towers():
        for m in tower:
            _require(not (rebuilt >> m) & 1, "decomposition pieces overlap")
            rebuilt |= 1 << m
    _require(rebuilt == bits, "decomposition does not cover S below c")
    delta = S.genus
    n = c - delta
    _require(n == p + d.k + d.sum_l, "member count identity failed")
    _require(
        delta == (p + 1) * (e - 1) - h - sum(l + 1 for l in ls),
        "gap count identity failed",
    )
    S._cache["decomp"] = d
    return d


def reconstruct(d: Decomposition) -> NumericalSemigroup:
    """Inverse of decompose.

    Raises NotASemigroup when the described member set is not closed
    under addition; malformed tower data that survives the closure test
    raises ValueError.
    """
    c = d.c
    bits = 0
    for m in d.skeleton():
        bits |= 1 << m
    for y, l in zip(d.ys, d.ls):
        for j in range(l + 1):
            m = y + j * d.e
            if m >= c:
                raise ValueError(f"tower element {m} not below the conductor {c}")
            bits |= 1 << m

    members = [z for z in range(c) if (bits >> z) & 1]
    reach = 0
    for a in members[1:]:
        reach |= bits << a
    missing = reach & ~bits & ((1 << c) - 1)
    if missing:
        z = (missing & -missing).bit_length() - 1
        raise NotASemigroup(f"sum {z} of two members is absent below {c}")

    for y, l in zip(d.ys, d.ls):
        if y % d.e == 0 or y <= d.e:
            raise ValueError(f"invalid tower head {y}")
        if not y + l * d.e < c <= y + (l + 1) * d.e:
            raise ValueError(f"tower ({y}, {l}) does not stop at the conductor")
    if len({y % d.e for y in d.ys}) != len(d.ys):
        raise ValueError("tower heads share a residue class")
    return NumericalSemigroup._from_bits(c, bits)


def xyz_split(S: NumericalSemigroup) -> XyzSplit:
    """The split b = X + Y + Z; each part is re-checked nonnegative."""
    d = decompose(S)
    r = S.type
    b = b_invariant(S)
    k = d.k
    x = (k - 1) * (r - 1)
    y = k - (S.multiplicity - r)
    z = (r + 1) * (d.p + d.sum_l) + k + d.h - d.p * d.e - 1
    split = XyzSplit(x, y, z)
    sum_a = ab_partition(S).sum_a
    _require(x >= 0 and y >= 0, "X and Y must be nonnegative")
    _require(z >= sum_a >= 0, "Z must dominate the A-side slack")
    _require(split.total == b, "X + Y + Z must equal b")
    return split


def conductor_identity(S: NumericalSemigroup) -> bool:
    """c == (p + 1 + sum(l_i + 1)) * (r + 1) - b; False is a counterexample."""
    d = decompose(S)
    r = S.type
    b = b_invariant(S)
    blocks = d.p + 1 + sum(l + 1 for l in d.ls)
    return S.conductor == blocks * (r + 1) - b


def _odd_multiple_q(twice_y: int, e: int) -> int:
    """q >= 1 when 2y = (2q+1)e, else 0."""
    if twice_y % e:
        return 0
    ratio = twice_y // e
    if ratio % 2 == 0 or ratio < 3:
        return 0
    return (ratio - 1) // 2


def case_formulas(S: NumericalSemigroup) -> list[Check]:
    """The low-k formula suites, emitted for the applicable (k, e - r).

    Covers the tower-head inequalities for general k >= 2, the k = 2
    dichotomy through the colon value set, and the closed forms for b
    when k is 2 or 3.
    """
    d = decompose(S)
    r = S.type
    b = b_invariant(S)
    e, c, p, h, k = d.e, d.c, d.p, d.h, d.k
    ys, ls = d.ys, d.ls
    checks = [Check("struct/e2-implies-k1", e != 2 or k == 1)]
    if k == 1:
        return checks

    colon = colon_value_set_xR_m(S)
    outside = tuple(z for z in S.members(c) if z not in colon)

    # general k >= 2
    checks.append(
        Check("prop1.11/1", (r == e - k) == (outside == (0,) + ys))
    )
    if r < e - 1:
        ok2 = 2 * ys[0] < c + e and p <= 2 * ls[0] + 2
        if ok2 and p == 2 * ls[0] + 2:
            ok2 = h > 0
        checks.append(Check("prop1.11/2", ok2))
    if r == e - k:
        ok3 = all(ys[0] + yj < c + e for yj in ys) and p <= ls[0] + ls[-1] + 2
        if ok3 and p == ls[0] + ls[-1] + 2:
            ok3 = h > 0
        checks.append(Check("prop1.11/3", ok3))
    checks.append(
        Check(
            "prop1.11/4",
            all(
                2 * y > c + e
                for y, l in zip(ys, ls)
                if p >= 3 and l == 0
            ),
        )
    )

    if k == 2:
        y, l = ys[0], ls[0]
        q = _odd_multiple_q(2 * y, e)
        cond_a = 2 * y >= c + e
        cond_b = q >= 1 and 2 * y < c + e and p >= 2 and y in colon
        checks.append(Check("prop1.12/1", (r == e - 1) == (cond_a or cond_b)))
        cond2 = 2 * y < c + e and (q == 0 or y not in colon)
        checks.append(Check("prop1.12/2", (r == e - 2) == cond2))

        if r == e - 1:
            ok = b == (l + 1) * e + h <= (l + 2) * e - 2
            if ok:
                ok = (b == (l + 2) * e - 2) == (h == e - 2)
            checks.append(Check("lem2.3/1", ok))
        if r == e - 2:
            ok = b == (l + 1) * (e - 1) + h - p - 1
            ok = ok and c == (p + l + 2) * (e - 1) - b
            checks.append(Check("lem2.3/2", ok))
            ok_a = l + 1 <= p <= 2 * l + 2 and (p != 2 * l + 2 or h > 0)
            checks.append(Check("lem2.3/2a", ok_a))
            lo = (l + 1) * (e - 3)
            hi = (l + 1) * (e - 2) + e - 3
            ok_b = lo <= b <= hi
            if ok_b:
                at_lo = (p == 2 * l + 2 and h == 1) or (p == 2 * l + 1 and h == 0)
                ok_b = (b == lo) == at_lo
            if ok_b and b == hi:
                ok_b = p == l + 1 and p > 1 and h == e - 2 and y == e + 1
            checks.append(Check("lem2.3/2b", ok_b))

    if k == 3:
        l1, l2 = ls
        blocks = l1 + l2 + 2
        if r == e - 3:
            ok = b == blocks * (e - 2) + h - 2 * (p + 1)
            if ok and p < blocks:
                ok = b >= blocks * (e - 4) + h and h >= 0
            if ok and p == blocks:
                ok = b == blocks * (e - 4) + h - 2 and h > 0
            checks.append(Check("lem2.4/1", ok))
        if r == e - 2:
            ok = b == blocks * (e - 1) + h - p - 1 and p <= 2 * l1 + 2
            if ok and p == 2 * l1 + 2:
                ok = h > 0
            checks.append(Check("lem2.4/2", ok))
        if r == e - 1:
            checks.append(Check("lem2.4/3", b == blocks * e + h))
    return checks
