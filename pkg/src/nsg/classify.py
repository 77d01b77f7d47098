"""Classification of semigroups with b at most 2(r - 1).

Each family couples three things under one stable string id:

* a matcher that decides whether a given semigroup has the family's
  shape, re-validating every stated side invariant (type, k, the b
  range, type-sequence forms, colon-set conditions on the monomial
  model);
* a generator that sweeps the family's free parameters inside given
  bounds and emits every instance, discarding parameter tuples that
  fail additive closure;
* the tag used in reports.

Families are listed in classification order; the canonical label of a
semigroup is its first match.  Semigroups with b beyond 2(r - 1) get
the label "unclassified" together with the step q locating b between
consecutive multiples of r - 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .core import NumericalSemigroup
from .decomp import Decomposition, decompose, reconstruct
from .enumeration import enumerate_by_genus
from .errors import InvalidParameters, NotASemigroup, UnknownFamily
from .ideals import colon_value_set_xR_m
from .typeseq import b_invariant, k_invariant, type_sequence

__all__ = [
    "Match",
    "Classification",
    "classify",
    "classify_b1_b2",
    "generate_family",
    "example36_family",
    "family_ids",
]


@dataclass(frozen=True)
class Match:
    """One matched family, with the witnessing parameters."""

    label: str
    tag: str
    params: tuple[tuple[str, int], ...] = ()
    branch: Optional[str] = None

    def param(self, name: str) -> int:
        return dict(self.params)[name]


@dataclass(frozen=True)
class Classification:
    label: str  # canonical family id, or "unclassified"
    matches: tuple[Match, ...]
    b: int
    r: int
    in_range: bool  # b <= 2(r - 1)
    q: Optional[int] = None  # set when unclassified


class _Profile:
    """Shared per-semigroup data for the matchers."""

    def __init__(self, S: NumericalSemigroup):
        self.S = S
        self.e = S.multiplicity
        self.c = S.conductor
        self.delta = S.genus
        self.n = self.c - self.delta
        self.r = S.type
        self.b = b_invariant(S)
        self.k = k_invariant(S)
        self.ts = type_sequence(S).entries
        self.smalls = S.small_elements()
        d = decompose(S)
        self.p, self.h, self.ys, self.ls = d.p, d.h, d.ys, d.ls
        self._colon = None

    def in_colon(self, z: int) -> bool:
        if self._colon is None:
            self._colon = colon_value_set_xR_m(self.S)
        return z in self._colon


def _params(**kw: int) -> tuple[tuple[str, int], ...]:
    return tuple(sorted(kw.items()))


def _build(e: int, p: int, c: int, heads: tuple[int, ...]) -> Optional[NumericalSemigroup]:
    """Reconstruct an instance from skeleton and tower heads; None if invalid."""
    h = (p + 1) * e - c
    if not 0 <= h <= e - 2:
        return None
    ls = tuple((c - 1 - y) // e for y in heads)
    try:
        d = Decomposition(e=e, c=c, p=p, h=h, k=len(heads) + 1, ys=heads, ls=ls)
        S = reconstruct(d)
    except (NotASemigroup, ValueError):
        return None
    if S.conductor != c or S.multiplicity != e:
        return None
    return S


# ---------------------------------------------------------------------------
# matchers (thm families)
# ---------------------------------------------------------------------------


def _m_gorenstein(P: _Profile) -> Optional[Match]:
    if P.r == 1:
        return Match("thm3.1/gorenstein", "B0_Gorenstein", _params(e=P.e, c=P.c))
    return None


def _m_max_length(P: _Profile) -> Optional[Match]:
    if P.k == 1 and P.h == 0 and P.b == 0 and all(ri == P.r for ri in P.ts):
        return Match("thm3.1/max_length", "B0_MaxLength", _params(e=P.e, p=P.p, c=P.c))
    return None


def _m_thm32(P: _Profile) -> Optional[Match]:
    ok = (
        P.k == 1
        and 0 < P.h < P.e - 2
        and 0 < P.b < P.r - 1
        and P.r == P.e - 1
        and P.b == P.h
        and P.c == (P.p + 1) * P.e - P.b
        and P.ts[-1] == P.e - 1 - P.b
        and all(ri == P.e - 1 for ri in P.ts[:-1])
    )
    if ok:
        return Match("thm3.2", "B_LT_Rm1", _params(e=P.e, p=P.p, c=P.c))
    return None


def _m_thm33_1(P: _Profile) -> Optional[Match]:
    ok = (
        P.k == 1
        and P.b == P.r - 1 > 0
        and P.r == P.e - 1
        and P.e > 2
        and P.h == P.e - 2
        and P.c == P.p * P.e + 2
        and P.ts[-1] == 1
        and all(ri == P.e - 1 for ri in P.ts[:-1])
    )
    if ok:
        return Match("thm3.3/1", "B_EQ_Rm1_MaxType", _params(e=P.e, p=P.p, c=P.c))
    return None


def _m_thm33_2a(P: _Profile) -> Optional[Match]:
    e = P.e
    ok = (
        P.k == 2
        and P.b == P.r - 1 > 0
        and P.r == e - 2
        and e > 3
        and P.smalls == (0, e, 2 * e - 1, 2 * e, 3 * e - 1)
        and P.ts == (e - 2, e - 2, 1, e - 2)
    )
    if ok:
        return Match("thm3.3/2a", "B_EQ_Rm1_e2_Arith", _params(e=e, c=P.c, y=2 * e - 1))
    return None


def _m_thm33_2b(P: _Profile) -> Optional[Match]:
    e = P.e
    if not (P.k == 2 and P.b == P.r - 1 > 0 and P.r == e - 2 and e > 3):
        return None
    if P.c != 2 * e or P.n != 3:
        return None
    y = P.smalls[2]
    ok = (
        P.smalls == (0, e, y, 2 * e)
        and 2 * y < 3 * e
        and P.ts[0] == e - 2
        and P.ts[1] + P.ts[2] == e - 1
    )
    if ok:
        return Match("thm3.3/2b", "B_EQ_Rm1_e2_Y", _params(e=e, c=P.c, y=y))
    return None


def _mid_range(P: _Profile) -> bool:
    return P.r - 1 < P.b < 2 * (P.r - 1)


def _m_thm34_1(P: _Profile) -> Optional[Match]:
    e = P.e
    if not (_mid_range(P) and P.k == 2 and P.r == e - 1 and P.ls == (0,)):
        return None
    if P.b < P.r + 1:  # stated alongside the range; disagreement means no match
        return None
    y = P.ys[0]
    c, p = P.c, P.p
    if not (p * e + 5 <= c <= min(y + e, (p + 1) * e) and e >= 5):
        return None
    if 2 * y >= c + e:
        return Match(
            "thm3.4/1", "B_MID_1", _params(e=e, p=p, c=c, y=y), branch="2y>=c+e"
        )
    if (
        e % 2 == 0
        and y == 3 * e // 2
        and p == 2
        and 2 * e + 5 <= c <= 5 * e // 2
        and e >= 10
        and P.in_colon(y)
    ):
        return Match("thm3.4/1", "B_MID_1", _params(e=e, p=p, c=c, y=y), branch="2y=3e")
    return None


def _m_thm34_2(P: _Profile) -> Optional[Match]:
    e = P.e
    if not (_mid_range(P) and P.k == 2 and P.r == e - 2 and P.p == 2 and P.ls == (0,)):
        return None
    y = P.ys[0]
    c = P.c
    if not 2 * y < c + e:
        return None
    if 2 * y != 3 * e:
        if 2 * e + 3 <= c <= 3 * e - 2 and e >= 5:
            return Match(
                "thm3.4/2", "B_MID_2", _params(e=e, c=c, y=y), branch="2y!=3e"
            )
        return None
    half = e // 2
    if (
        e % 2 == 0
        and 4 * half + 3 <= c <= 5 * half
        and e >= 6
        and not P.in_colon(y)
    ):
        return Match("thm3.4/2", "B_MID_2", _params(e=e, c=c, y=y), branch="2y=3e")
    return None


def _m_thm34_3(P: _Profile) -> Optional[Match]:
    e = P.e
    if not (_mid_range(P) and P.k == 2 and P.r == e - 2 and P.p == 1 and P.ls == (0,)):
        return None
    y = P.ys[0]
    c = P.c
    ok = e >= 5 and 2 * y < c + e and e + 4 <= c <= 2 * e - 1
    if ok:
        return Match("thm3.4/3", "B_MID_3", _params(e=e, c=c, y=y))
    return None


def _top_range(P: _Profile) -> bool:
    return P.b == 2 * (P.r - 1) > 0


def _m_thm35_1a(P: _Profile) -> Optional[Match]:
    e = P.e
    if (
        _top_range(P)
        and P.k == 2
        and P.r == e - 1
        and e >= 4
        and P.smalls == (0, e, e + 2, e + 4)
    ):
        return Match("thm3.5/1a", "B_2Rm1_1a", _params(e=e, c=P.c, y=e + 2))
    return None


def _m_thm35_1b(P: _Profile) -> Optional[Match]:
    e = P.e
    if not (
        _top_range(P)
        and P.k == 2
        and P.r == e - 1
        and e >= 4
        and P.p == 2
        and P.c == 2 * e + 4
        and P.ls == (0,)
    ):
        return None
    y = P.ys[0]
    if P.in_colon(y):
        return Match("thm3.5/1b", "B_2Rm1_1b", _params(e=e, c=P.c, y=y))
    return None


def _m_thm35_1c(P: _Profile) -> Optional[Match]:
    e = P.e
    if not (
        _top_range(P)
        and P.k == 2
        and P.r == e - 1
        and e >= 4
        and P.p >= 3
        and P.c == P.p * e + 4
        and P.ls == (0,)
    ):
        return None
    y = P.ys[0]
    if y >= (P.p - 1) * e + 4:
        return Match("thm3.5/1c", "B_2Rm1_1c", _params(e=e, p=P.p, c=P.c, y=y))
    return None


def _m_thm35_2a(P: _Profile) -> Optional[Match]:
    e = P.e
    if (
        _top_range(P)
        and P.k == 2
        and P.r == e - 2
        and e >= 4
        and P.smalls == (0, e, e + 1, e + 3)
    ):
        return Match("thm3.5/2a", "B_2Rm1_2a", _params(e=e, c=P.c, y=e + 1))
    return None


def _m_thm35_2b(P: _Profile) -> Optional[Match]:
    e = P.e
    if not (
        _top_range(P)
        and P.k == 2
        and P.r == e - 2
        and e >= 5
        and P.p == 2
        and P.c == 2 * e + 2
        and P.ls == (0,)
    ):
        return None
    y = P.ys[0]
    if 2 * e + 4 <= 2 * y < 3 * e + 2 and 2 * y != 3 * e:
        return Match("thm3.5/2b", "B_2Rm1_2b", _params(e=e, c=P.c, y=y))
    return None


def _m_thm35_2c(P: _Profile) -> Optional[Match]:
    e = P.e
    if (
        _top_range(P)
        and P.k == 2
        and P.r == e - 2
        and e >= 4
        and P.p == 4
        and P.c == 5 * e - 1
        and P.ys == (3 * e - 1,)
        and P.ls == (1,)
    ):
        return Match("thm3.5/2c", "B_2Rm1_2c", _params(e=e, c=P.c, y=3 * e - 1))
    return None


def _m_thm35_2d(P: _Profile) -> Optional[Match]:
    e = P.e
    if not (
        _top_range(P)
        and P.k == 2
        and P.r == e - 2
        and e >= 4
        and P.p == 3
        and P.c == 4 * e
        and P.ls == (1,)
    ):
        return None
    y = P.ys[0]
    if 2 * y < 5 * e:
        return Match("thm3.5/2d", "B_2Rm1_2d", _params(e=e, c=P.c, y=y))
    return None


def _m_thm35_3a(P: _Profile) -> Optional[Match]:
    e = P.e
    if not (
        _top_range(P)
        and P.k == 3
        and P.r == e - 3
        and e >= 5
        and P.p == 1
        and P.c == 2 * e
        and P.ls == (0, 0)
    ):
        return None
    y1, y2 = P.ys
    if y1 + y2 < 3 * e:
        return Match("thm3.5/3a", "B_2Rm1_3a", _params(e=e, c=P.c, y1=y1, y2=y2))
    return None


def _m_thm35_3b(P: _Profile) -> Optional[Match]:
    e = P.e
    if (
        _top_range(P)
        and P.k == 3
        and P.r == e - 3
        and e >= 5
        and P.p == 2
        and P.c == 3 * e - 2
        and P.ys == (2 * e - 2, 2 * e - 1)
        and P.ls == (0, 0)
    ):
        return Match(
            "thm3.5/3b", "B_2Rm1_3b", _params(e=e, c=P.c, y1=2 * e - 2, y2=2 * e - 1)
        )
    return None


# ---------------------------------------------------------------------------
# generators (thm families)
# ---------------------------------------------------------------------------


def _g_gorenstein(e_max: int, c_max: int) -> Iterator[NumericalSemigroup]:
    # symmetric semigroups have conductor = 2 * genus, so a conductor
    # bound is a genus bound
    if c_max < 2:
        return
    for S in enumerate_by_genus(max(1, c_max // 2)):
        if S.conductor <= c_max and S.multiplicity <= e_max and S.type == 1:
            yield S


def _g_max_length(e_max: int, c_max: int) -> Iterator[NumericalSemigroup]:
    for e in range(2, e_max + 1):
        for p in range(0, c_max // e):
            c = (p + 1) * e
            if c <= c_max:
                S = _build(e, p, c, ())
                if S is not None:
                    yield S


def _g_thm32(e_max: int, c_max: int) -> Iterator[NumericalSemigroup]:
    for e in range(4, e_max + 1):
        p = 1
        while p * e + 3 <= c_max:
            for c in range(p * e + 3, min((p + 1) * e - 1, c_max) + 1):
                S = _build(e, p, c, ())
                if S is not None:
                    yield S
            p += 1


def _g_thm33_1(e_max: int, c_max: int) -> Iterator[NumericalSemigroup]:
    for e in range(3, e_max + 1):
        p = 1
        while p * e + 2 <= c_max:
            S = _build(e, p, p * e + 2, ())
            if S is not None:
                yield S
            p += 1


def _g_thm33_2a(e_max: int, c_max: int) -> Iterator[NumericalSemigroup]:
    for e in range(4, e_max + 1):
        if 3 * e - 1 <= c_max:
            S = _build(e, 2, 3 * e - 1, (2 * e - 1,))
            if S is not None:
                yield S


def _g_thm33_2b(e_max: int, c_max: int) -> Iterator[NumericalSemigroup]:
    for e in range(4, e_max + 1):
        if 2 * e > c_max:
            continue
        for y in range(e + 1, (3 * e - 1) // 2 + 1):
            S = _build(e, 1, 2 * e, (y,))
            if S is not None:
                yield S


def _g_thm34_1(e_max: int, c_max: int) -> Iterator[NumericalSemigroup]:
    for e in range(5, e_max + 1):
        p = 1
        while p * e + 5 <= c_max:
            for c in range(p * e + 5, min((p + 1) * e, c_max) + 1):
                for y in range(max(c - e, e + 1), c - 1):
                    if y % e == 0:
                        continue
                    if 2 * y >= c + e:
                        S = _build(e, p, c, (y,))
                        if S is not None:
                            yield S
                    elif (
                        2 * y == 3 * e
                        and p == 2
                        and e >= 10
                        and 2 * e + 5 <= c <= 5 * e // 2
                    ):
                        S = _build(e, p, c, (y,))
                        if S is not None and y in colon_value_set_xR_m(S):
                            yield S
            p += 1


def _g_thm34_2(e_max: int, c_max: int) -> Iterator[NumericalSemigroup]:
    for e in range(5, e_max + 1):
        for c in range(2 * e + 3, min(3 * e - 2, c_max) + 1):
            for y in range(max(c - e, e + 1), c - 1):
                if y % e == 0 or 2 * y >= c + e:
                    continue
                if 2 * y != 3 * e:
                    S = _build(e, 2, c, (y,))
                    if S is not None:
                        yield S
                else:
                    half = e // 2
                    if e % 2 == 0 and e >= 6 and 4 * half + 3 <= c <= 5 * half:
                        S = _build(e, 2, c, (y,))
                        if S is not None and y not in colon_value_set_xR_m(S):
                            yield S


def _g_thm34_3(e_max: int, c_max: int) -> Iterator[NumericalSemigroup]:
    for e in range(5, e_max + 1):
        for c in range(e + 4, min(2 * e - 1, c_max) + 1):
            for y in range(max(c - e, e + 1), c - 1):
                if y % e and 2 * y < c + e:
                    S = _build(e, 1, c, (y,))
                    if S is not None:
                        yield S


def _g_thm35_1a(e_max: int, c_max: int) -> Iterator[NumericalSemigroup]:
    for e in range(4, e_max + 1):
        if e + 4 <= c_max:
            S = _build(e, 1, e + 4, (e + 2,))
            if S is not None:
                yield S


def _g_thm35_1b(e_max: int, c_max: int) -> Iterator[NumericalSemigroup]:
    for e in range(4, e_max + 1):
        c = 2 * e + 4
        if c > c_max:
            continue
        for y in range(e + 4, 2 * e + 3):
            if y % e == 0:
                continue
            S = _build(e, 2, c, (y,))
            if S is not None and y in colon_value_set_xR_m(S):
                yield S


def _g_thm35_1c(e_max: int, c_max: int) -> Iterator[NumericalSemigroup]:
    for e in range(4, e_max + 1):
        p = 3
        while p * e + 4 <= c_max:
            c = p * e + 4
            for y in range((p - 1) * e + 4, c - 1):
                if y % e:
                    S = _build(e, p, c, (y,))
                    if S is not None:
                        yield S
            p += 1


def _g_thm35_2a(e_max: int, c_max: int) -> Iterator[NumericalSemigroup]:
    for e in range(4, e_max + 1):
        if e + 3 <= c_max:
            S = _build(e, 1, e + 3, (e + 1,))
            if S is not None:
                yield S


def _g_thm35_2b(e_max: int, c_max: int) -> Iterator[NumericalSemigroup]:
    for e in range(5, e_max + 1):
        c = 2 * e + 2
        if c > c_max:
            continue
        for y in range(e + 2, (3 * e + 1) // 2 + 1):
            if 2 * y != 3 * e:
                S = _build(e, 2, c, (y,))
                if S is not None:
                    yield S


def _g_thm35_2c(e_max: int, c_max: int) -> Iterator[NumericalSemigroup]:
    for e in range(4, e_max + 1):
        if 5 * e - 1 <= c_max:
            S = _build(e, 4, 5 * e - 1, (3 * e - 1,))
            if S is not None:
                yield S


def _g_thm35_2d(e_max: int, c_max: int) -> Iterator[NumericalSemigroup]:
    for e in range(4, e_max + 1):
        c = 4 * e
        if c > c_max:
            continue
        for y in range(2 * e + 1, (5 * e - 1) // 2 + 1):
            S = _build(e, 3, c, (y,))
            if S is not None:
                yield S


def _g_thm35_3a(e_max: int, c_max: int) -> Iterator[NumericalSemigroup]:
    for e in range(5, e_max + 1):
        c = 2 * e
        if c > c_max:
            continue
        for y1 in range(e + 1, 2 * e - 1):
            for y2 in range(y1 + 1, min(3 * e - y1 - 1, 2 * e - 1) + 1):
                S = _build(e, 1, c, (y1, y2))
                if S is not None:
                    yield S


def _g_thm35_3b(e_max: int, c_max: int) -> Iterator[NumericalSemigroup]:
    for e in range(5, e_max + 1):
        if 3 * e - 2 <= c_max:
            S = _build(e, 2, 3 * e - 2, (2 * e - 2, 2 * e - 1))
            if S is not None:
                yield S


# ---------------------------------------------------------------------------
# b = 1 and b = 2 catalogs
# ---------------------------------------------------------------------------

# sporadic members listed as (e, p, c, tower heads, expected type sequence)
_SPORADIC_B1 = {
    "cor3.7/s1": (4, 2, 11, (7,), (2, 2, 1, 2)),
    "cor3.7/s2": (4, 1, 8, (5,), (2, 1, 2)),
}

_SPORADIC_B2 = {
    "cor3.8/s1": (4, 1, 7, (5,), (2, 1, 1)),
    "cor3.8/s2": (4, 4, 19, (11,), (2, 2, 2, 1, 2, 1, 2)),
    "cor3.8/s3": (4, 3, 16, (9,), (2, 2, 1, 2, 1, 2)),
    "cor3.8/s4": (5, 2, 14, (9,), (3, 3, 1, 3)),
    "cor3.8/s5": (5, 1, 10, (6,), (3, 1, 3)),
    "cor3.8/s6": (5, 1, 10, (7,), (3, 2, 2)),
    "cor3.8/s7": (5, 1, 10, (6, 7), (2, 1, 1, 2)),
    "cor3.8/s8": (5, 1, 10, (6, 8), (2, 2, 1, 1)),
    "cor3.8/s9": (5, 2, 13, (8, 9), (2, 2, 1, 1, 2)),
}


def _sporadic_semigroup(data) -> NumericalSemigroup:
    e, p, c, heads, _ = data
    S = _build(e, p, c, heads)
    if S is None:
        raise AssertionError("sporadic catalog entry failed to build")
    return S


def _m_sporadic(label: str, tag: str, data) -> Callable[[_Profile], Optional[Match]]:
    target_b = 1 if label.startswith("cor3.7") else 2

    def matcher(P: _Profile) -> Optional[Match]:
        e, p, c, heads, ts = data
        if P.b == target_b and P.e == e and P.c == c and P.S == _sporadic_semigroup(data):
            if P.ts != ts:
                return None
            return Match(label, tag, _params(e=e, c=c))
        return None

    return matcher


def _g_sporadic(data) -> Callable[[int, int], Iterator[NumericalSemigroup]]:
    def gen(e_max: int, c_max: int) -> Iterator[NumericalSemigroup]:
        e, p, c, heads, _ = data
        if e <= e_max and c <= c_max:
            yield _sporadic_semigroup(data)

    return gen


def _m_cor37_arith(P: _Profile) -> Optional[Match]:
    e = P.e
    ok = (
        P.b == 1
        and P.k == 1
        and e >= 3
        and P.h == 1
        and P.ts == tuple([e - 1] * P.p + [e - 2])
    )
    if ok:
        return Match("cor3.7/arith", "B1_Arith", _params(e=e, p=P.p, c=P.c))
    return None


def _g_cor37_arith(e_max: int, c_max: int) -> Iterator[NumericalSemigroup]:
    for e in range(3, e_max + 1):
        p = 1
        while (p + 1) * e - 1 <= c_max:
            S = _build(e, p, (p + 1) * e - 1, ())
            if S is not None:
                yield S
            p += 1


def _m_cor38_arith(P: _Profile) -> Optional[Match]:
    e = P.e
    ok = (
        P.b == 2
        and P.k == 1
        and e >= 4
        and P.h == 2
        and P.ts == tuple([e - 1] * P.p + [e - 3])
    )
    if ok:
        return Match("cor3.8/arith", "B2_Arith", _params(e=e, p=P.p, c=P.c))
    return None


def _g_cor38_arith(e_max: int, c_max: int) -> Iterator[NumericalSemigroup]:
    for e in range(4, e_max + 1):
        p = 1
        while (p + 1) * e - 2 <= c_max:
            S = _build(e, p, (p + 1) * e - 2, ())
            if S is not None:
                yield S
            p += 1


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Family:
    label: str
    tag: str
    theorem: str
    matcher: Callable[[_Profile], Optional[Match]]
    generator: Callable[[int, int], Iterator[NumericalSemigroup]]


FAMILIES: tuple[Family, ...] = (
    Family("thm3.1/gorenstein", "B0_Gorenstein", "thm3.1", _m_gorenstein, _g_gorenstein),
    Family("thm3.1/max_length", "B0_MaxLength", "thm3.1", _m_max_length, _g_max_length),
    Family("thm3.2", "B_LT_Rm1", "thm3.2", _m_thm32, _g_thm32),
    Family("thm3.3/1", "B_EQ_Rm1_MaxType", "thm3.3", _m_thm33_1, _g_thm33_1),
    Family("thm3.3/2a", "B_EQ_Rm1_e2_Arith", "thm3.3", _m_thm33_2a, _g_thm33_2a),
    Family("thm3.3/2b", "B_EQ_Rm1_e2_Y", "thm3.3", _m_thm33_2b, _g_thm33_2b),
    Family("thm3.4/1", "B_MID_1", "thm3.4", _m_thm34_1, _g_thm34_1),
    Family("thm3.4/2", "B_MID_2", "thm3.4", _m_thm34_2, _g_thm34_2),
    Family("thm3.4/3", "B_MID_3", "thm3.4", _m_thm34_3, _g_thm34_3),
    Family("thm3.5/1a", "B_2Rm1_1a", "thm3.5", _m_thm35_1a, _g_thm35_1a),
    Family("thm3.5/1b", "B_2Rm1_1b", "thm3.5", _m_thm35_1b, _g_thm35_1b),
    Family("thm3.5/1c", "B_2Rm1_1c", "thm3.5", _m_thm35_1c, _g_thm35_1c),
    Family("thm3.5/2a", "B_2Rm1_2a", "thm3.5", _m_thm35_2a, _g_thm35_2a),
    Family("thm3.5/2b", "B_2Rm1_2b", "thm3.5", _m_thm35_2b, _g_thm35_2b),
    Family("thm3.5/2c", "B_2Rm1_2c", "thm3.5", _m_thm35_2c, _g_thm35_2c),
    Family("thm3.5/2d", "B_2Rm1_2d", "thm3.5", _m_thm35_2d, _g_thm35_2d),
    Family("thm3.5/3a", "B_2Rm1_3a", "thm3.5", _m_thm35_3a, _g_thm35_3a),
    Family("thm3.5/3b", "B_2Rm1_3b", "thm3.5", _m_thm35_3b, _g_thm35_3b),
)

CATALOG_FAMILIES: tuple[Family, ...] = tuple(
    [
        Family(label, "B1_Sporadic", "cor3.7", _m_sporadic(label, "B1_Sporadic", data), _g_sporadic(data))
        for label, data in _SPORADIC_B1.items()
    ]
    + [Family("cor3.7/arith", "B1_Arith", "cor3.7", _m_cor37_arith, _g_cor37_arith)]
    + [
        Family(label, "B2_Sporadic", "cor3.8", _m_sporadic(label, "B2_Sporadic", data), _g_sporadic(data))
        for label, data in _SPORADIC_B2.items()
    ]
    + [Family("cor3.8/arith", "B2_Arith", "cor3.8", _m_cor38_arith, _g_cor38_arith)]
)

_ALL_FAMILIES = {f.label: f for f in FAMILIES + CATALOG_FAMILIES}


def family_ids() -> tuple[str, ...]:
    return tuple(_ALL_FAMILIES)


def _normalize_family_id(family_id: str) -> str:
    key = re.sub(r"[^a-z0-9]", "", family_id.lower())
    for label in _ALL_FAMILIES:
        if re.sub(r"[^a-z0-9]", "", label) == key:
            return label
    raise UnknownFamily(family_id)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def classify(S: NumericalSemigroup) -> Classification:
    """Match S against every classification family.

    The canonical label is the first match in family order; all matches
    are returned.  Outside the classified range the result carries the
    step q with (q-1)(r-1) < b <= q(r-1).
    """
    P = _Profile(S)
    matches = tuple(m for f in FAMILIES if (m := f.matcher(P)) is not None)
    in_range = P.b <= 2 * (P.r - 1)
    if matches:
        return Classification(matches[0].label, matches, P.b, P.r, in_range)
    q = _ceil_div(P.b, P.r - 1) if P.r > 1 and P.b > 0 else None
    return Classification("unclassified", (), P.b, P.r, in_range, q=q)


def classify_b1_b2(S: NumericalSemigroup) -> Optional[Match]:
    """The catalog entry for b = 1 or b = 2, with its type sequence re-checked."""
    P = _Profile(S)
    if P.b not in (1, 2):
        return None
    for f in CATALOG_FAMILIES:
        m = f.matcher(P)
        if m is not None:
            return m
    return None


def generate_family(family_id: str, e_max: int, c_max: int) -> list[NumericalSemigroup]:
    """Every instance of the family with multiplicity <= e_max, conductor <= c_max."""
    if e_max < 1 or c_max < 1:
        raise ValueError("bounds must be positive")
    fam = _ALL_FAMILIES[_normalize_family_id(family_id)]
    seen = set()
    out = []
    for S in fam.generator(e_max, c_max):
        if S not in seen:
            seen.add(S)
            out.append(S)
    out.sort(key=lambda S: S.sort_key())
    return out


def example36_family(q: int, e: int, y: int, c: int) -> NumericalSemigroup:
    """A type e - 1 instance with b landing at or just below q(r - 1).

    Fixes p = 2q and a tower of length q - 2 at y; the conductor choice
    c = pe + p pins b = q(r - 1) exactly, while pe + p < c <= (p+1)e
    lands b strictly between (q-1)(r-1) and q(r-1).  Both placements
    are re-derived from the type sequence of the built semigroup.
    """
    if q < 3:
        raise InvalidParameters("q must be at least 3")
    p = 2 * q
    l = q - 2
    if e <= p:
        raise InvalidParameters("need e > p = 2q")
    if not p * e + p <= c <= (p + 1) * e:
        raise InvalidParameters("conductor must lie in [pe + p, (p+1)e]")
    if y % e == 0:
        raise InvalidParameters("tower head cannot be a multiple of e")
    if not y + l * e < c <= y + (l + 1) * e:
        raise InvalidParameters("tower does not stop at the conductor")
    try:
        S = _build_checked(e, p, c, (y,))
    except (NotASemigroup, ValueError) as err:
        raise InvalidParameters(str(err))
    r = S.type
    b = b_invariant(S)
    if r != e - 1:
        raise AssertionError("constructed instance must have type e - 1")
    if c == p * e + p:
        if b != q * (r - 1):
            raise AssertionError("b must equal q(r - 1) for c = pe + p")
    elif not (q - 1) * (r - 1) < b < q * (r - 1):
        raise AssertionError("b must land strictly inside ((q-1)(r-1), q(r-1))")
    return S


def _build_checked(e: int, p: int, c: int, heads: tuple[int, ...]) -> NumericalSemigroup:
    h = (p + 1) * e - c
    ls = tuple((c - 1 - y) // e for y in heads)
    d = Decomposition(e=e, c=c, p=p, h=h, k=len(heads) + 1, ys=heads, ls=ls)
    S = reconstruct(d)
    if S.conductor != c or S.multiplicity != e:
        raise NotASemigroup("instance does not keep the requested conductor")
    return S
