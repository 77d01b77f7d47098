"""Type sequences and the invariants b and k.

The type sequence [r_1, ..., r_n] measures the dual chain
S = (S - S_0) < (S - S_1) < ... < (S - S_n) = N through the sizes of
its steps below the conductor; r_1 is the type r.  Internal cross
checks are unconditional: a failed identity is an internal error, not
a recoverable condition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import NumericalSemigroup

__all__ = [
    "TypeSequence",
    "AbPartition",
    "Check",
    "type_sequence",
    "b_invariant",
    "k_invariant",
    "ab_partition",
    "inequality_suite",
]


@dataclass(frozen=True)
class TypeSequence:
    entries: tuple[int, ...]

    @property
    def r(self) -> int:
        return self.entries[0]

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def delta(self) -> int:
        return sum(self.entries)

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class AbPartition:
    """Index split [1, n] = A + B with B = [i0, n] the tail near the conductor."""

    i0: int
    n: int
    sum_a: int  # sum over A of (r - r_i)
    sum_b: int  # sum over B of r_i

    @property
    def a_indices(self) -> range:
        return range(1, self.i0)

    @property
    def b_indices(self) -> range:
        return range(self.i0, self.n + 1)

    @property
    def size_b(self) -> int:
        return self.n - self.i0 + 1


@dataclass(frozen=True)
class Check:
    """One named boolean verdict from an inequality or case suite."""

    name: str
    passed: bool


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise AssertionError(message)


def type_sequence(S: NumericalSemigroup) -> TypeSequence:
    """The type sequence of S, with its defining identities re-checked."""
    cached = S._cache.get("ts")
    if cached is not None:
        return cached

    c = S.conductor
    smalls = S.small_elements()
    n = len(smalls) - 1
    ext = S.mask_through(2 * c)
    window = (1 << c) - 1

    # sizes[i] = |(S - S_i) restricted to [0, c)|; the duals shrink as
    # one more chain element is required, so peel from S_n = conductor
    # ideal (dual N) down to S_0 = S (dual S).
    sizes = [0] * (n + 1)
    dual_bits = window
    sizes[n] = c
    for i in range(n - 1, -1, -1):
        dual_bits &= (ext >> smalls[i]) & window
        sizes[i] = dual_bits.bit_count()
    _require(dual_bits == S.mask_through(c), "dual of the chain bottom must be S itself")

    entries = tuple(sizes[i] - sizes[i - 1] for i in range(1, n + 1))
    ts = TypeSequence(entries)

    r = S.type
    delta = S.genus
    _require(ts.entries[0] == r, "first type-sequence entry must equal the type")
    _require(all(1 <= ri <= r for ri in entries), "type-sequence entries outside [1, r]")
    _require(ts.delta == delta, "type-sequence total must equal the genus")
    _require(sum(ri - 1 for ri in entries) == 2 * delta - c, "2*delta - c identity failed")
    S._cache["ts"] = ts
    return ts


def b_invariant(S: NumericalSemigroup) -> int:
    """b = (c - delta)*r - delta, cross-checked against sum(r - r_i)."""
    ts = type_sequence(S)
    delta = S.genus
    n = S.conductor - delta
    r = S.type
    b = n * r - delta
    _require(b == sum(r - ri for ri in ts.entries), "two routes to b disagree")
    _require(0 <= b <= (n - 1) * (r - 1), "b outside [0, (n-1)(r-1)]")
    return b


def k_invariant(S: NumericalSemigroup) -> int:
    """Members of S in [c - e, c), cross-checked against |S \\ (e + S)| below c."""
    c = S.conductor
    e = S.multiplicity
    bits = S.mask_through(c)
    by_window = ((bits >> (c - e)) & ((1 << e) - 1)).bit_count()
    by_steps = (bits & ~(bits << e) & ((1 << c) - 1)).bit_count()
    _require(by_window == by_steps, "two routes to k disagree")
    r = S.type
    _require(e - r <= by_window <= e - 1, "k outside [e - r, e - 1]")
    return by_window


def ab_partition(S: NumericalSemigroup) -> AbPartition:
    """The split of [1, n] at the first member >= c - e."""
    c = S.conductor
    e = S.multiplicity
    smalls = S.small_elements()
    n = len(smalls) - 1
    ts = type_sequence(S)
    r = ts.r
    first = next(j for j in range(n + 1) if smalls[j] >= c - e)
    i0 = first + 1
    _require((i0 == 1) == (c == e), "i0 = 1 exactly when c = e")
    part = AbPartition(
        i0=i0,
        n=n,
        sum_a=sum(r - ts.entries[i - 1] for i in range(1, i0)),
        sum_b=sum(ts.entries[i - 1] for i in range(i0, n + 1)),
    )
    _require(part.size_b == k_invariant(S), "|B| must equal k")
    return part


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def inequality_suite(S: NumericalSemigroup) -> list[Check]:
    """Every numbered inequality relating b, k, r and the partition sums.

    The q-indexed checks are emitted only when r > 1 and b > 0, where q
    is the unique integer with (q-1)(r-1) < b <= q(r-1).
    """
    ts = type_sequence(S)
    b = b_invariant(S)
    k = k_invariant(S)
    part = ab_partition(S)
    e = S.multiplicity
    c = S.conductor
    r = ts.r
    n = ts.n
    sum_a = part.sum_a
    sum_b = part.sum_b
    smalls = S.small_elements()

    checks = [
        Check(
            "prop2.1/1",
            (e - r - 1) * (r - 1) <= r * k - e + 1 <= b - sum_a <= k * (r - 1),
        ),
        Check(
            "prop2.1/2",
            (b - sum_a == (k - 1) * (r - 1)) == (sum_b == e - 1 and k == e - r),
        ),
        Check(
            "prop2.1/3",
            (b - sum_a == k * (r - 1))
            == all(ts.entries[i - 1] == 1 for i in part.b_indices),
        ),
    ]
    cond_a = b == (e - r - 1) * (r - 1)
    cond_b = b == (k - 1) * (r - 1)
    cond_c = (
        e - r == k
        and sum_b == e - 1
        and all(ts.entries[i - 1] == r for i in part.a_indices)
    )
    ok4 = cond_a == cond_b == cond_c
    if ok4 and cond_a:
        ok4 = smalls[part.i0 - 1] == c - e
    checks.append(Check("prop2.1/4", ok4))
    s = sum(1 for ri in ts.entries if ri == 1)
    checks.append(Check("prop2.1/5", b >= (r - 1) * s))

    if r > 1 and b > 0:
        q = _ceil_div(b, r - 1)
        checks.append(Check("prop2.5/1", r >= e - q - 1))
        ok_1a = True
        if r == e - 1 - q:
            ok_1a = b == q * (r - 1) and q <= e - 3 and cond_a and cond_b and cond_c
        checks.append(Check("prop2.5/1a", ok_1a))
        ok_1b = True
        if r >= e - q:
            ok_1b = e - r <= k <= q
        checks.append(Check("prop2.5/1b", ok_1b))
        checks.append(Check("prop2.5/2c", k - 1 <= q <= n - 1))
        checks.append(
            Check(
                "prop2.5/2d",
                (q - k - 1) * (r - 1) < sum_a <= (q - k) * (r - 1) + e - 1 - k,
            )
        )
    return checks
