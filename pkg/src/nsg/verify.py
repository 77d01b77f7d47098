"""Exhaustive verification suites over the semigroup tree.

Each suite id names a bundle of checks; running a suite walks every
semigroup up to a genus bound, applies the per-semigroup checks, and,
for the classification suites, additionally regenerates each family
inside matching bounds and demands set equality with what the walk
found.  Counterexamples are reported as data, never raised.
"""

from __future__ import annotations

import functools
import multiprocessing
import time
from dataclasses import dataclass
from typing import Callable, Iterable

from .classify import CATALOG_FAMILIES, FAMILIES, classify, classify_b1_b2, generate_family
from .core import NumericalSemigroup
from .decomp import case_formulas, conductor_identity, decompose, xyz_split
from .enumeration import enumerate_by_genus
from .errors import UnknownTheorem
from .ideals import colon_value_set_xR_m, dual, ideal_of_chain
from .typeseq import ab_partition, b_invariant, inequality_suite, k_invariant, type_sequence

__all__ = ["VerificationReport", "verify", "verify_many", "THEOREM_IDS"]


@dataclass(frozen=True)
class VerificationReport:
    theorem_id: str
    bound: str
    checked: int
    counterexamples: tuple[tuple[str, str], ...]
    elapsed: float

    @property
    def verified(self) -> bool:
        return not self.counterexamples


def _suite_prefix(S: NumericalSemigroup, checks, prefix: str) -> list[str]:
    return [c.name for c in checks if c.name.startswith(prefix) and not c.passed]


def _check_prop12(S: NumericalSemigroup) -> list[str]:
    failures = []
    ts = type_sequence(S)  # re-asserts the defining identities
    b = b_invariant(S)  # re-asserts both routes and the bounds
    delta, c, r, n = S.genus, S.conductor, S.type, len(ts.entries)
    if ts.delta != delta:
        failures.append("prop1.2/genus-total")
    if sum(ri - 1 for ri in ts.entries) != 2 * delta - c:
        failures.append("prop1.2/2delta-c")
    if not 0 <= b <= (n - 1) * (r - 1):
        failures.append("prop1.2/bounds")
    return failures


def _check_thm14(S: NumericalSemigroup) -> list[str]:
    failures = []
    part = ab_partition(S)
    k = k_invariant(S)
    e, c, r = S.multiplicity, S.conductor, S.type
    smalls = S.small_elements()
    if not (k == part.size_b and k >= e - r > 0):
        failures.append("thm1.4/1")
    if not k <= part.sum_b <= e - 1:
        failures.append("thm1.4/2")
    if part.sum_b == e - 1 and smalls[part.i0 - 1] != c - e:
        failures.append("thm1.4/2-tight")
    # the window argument: N minus the dual of the chain at i0 - 1
    # reflects into [c - e, c - 2] and has exactly sum_b elements
    D = dual(ideal_of_chain(S, 0), ideal_of_chain(S, part.i0 - 1))
    complement = [z for z in range(c) if z not in D]
    if len(complement) != part.sum_b:
        failures.append("thm1.4/window-size")
    if not all(c - e <= c - 1 - z <= c - 2 for z in complement):
        failures.append("thm1.4/window-range")
    return failures


def _check_prop15(S: NumericalSemigroup) -> list[str]:
    failures = []
    d = decompose(S)
    ts = type_sequence(S)
    e, c, r = S.multiplicity, S.conductor, S.type
    cond_k = d.k == 1
    cond_shape = not d.ys
    cond_ts = all(ri == e - 1 for ri in ts.entries[:-1])
    if not cond_k == cond_shape == cond_ts:
        failures.append("prop1.5/equiv")
    if cond_k:
        b = b_invariant(S)
        ok = (
            S.genus == c - d.p - 1
            and b == (d.p + 1) * e - c <= r - 1
            and r == e - 1
            and ts.entries[-1] == e - 1 - b
        )
        if not ok:
            failures.append("prop1.5/consequences")
    return failures


def _check_prop18(S: NumericalSemigroup) -> list[str]:
    failures = []
    d = decompose(S)  # re-asserts the counting identities and l-chain
    e, r = S.multiplicity, S.type
    if not e - d.k <= r <= e - 1:
        failures.append("prop1.8/1")
    if d.ls and not (all(a >= b for a, b in zip(d.ls, d.ls[1:])) and d.ls[0] <= d.p - 1):
        failures.append("prop1.8/2")
    n = S.conductor - S.genus
    if n != d.p + d.k + d.sum_l:
        failures.append("prop1.8/3-n")
    if S.genus != (d.p + 1) * (e - 1) - d.h - sum(l + 1 for l in d.ls):
        failures.append("prop1.8/3-delta")
    return failures


def _check_prop19(S: NumericalSemigroup) -> list[str]:
    failures = []
    d = decompose(S)
    e, c, r = S.multiplicity, S.conductor, S.type
    colon = colon_value_set_xR_m(S)
    outside = tuple(z for z in S.members(c) if z not in colon)
    if len(outside) != e - r:
        failures.append("prop1.9/colon-size")
    if not set(outside) <= {0, *d.ys}:
        failures.append("prop1.9/colon-window")
    max_type = r == e - 1
    if max_type != (outside == (0,)):
        failures.append("prop1.9/1-2")
    if max_type != all(y in colon for y in d.ys):
        failures.append("prop1.9/1-3")
    if max_type != (S.embedding_dimension == e):
        failures.append("prop1.9/1-6")
    return failures


def _check_thm22(S: NumericalSemigroup) -> list[str]:
    failures = []
    split = xyz_split(S)  # re-asserts nonnegativity and the total
    d = decompose(S)
    if d.k == 1:
        if not (split.X == 0 and split.Y == 0 and split.Z == d.h == b_invariant(S)):
            failures.append("thm2.2/k1-extension")
    if not conductor_identity(S):
        failures.append("thm2.2/2")
    return failures


def _check_case(prefix: str) -> Callable[[NumericalSemigroup], list[str]]:
    def run(S: NumericalSemigroup) -> list[str]:
        return _suite_prefix(S, case_formulas(S), prefix)

    return run


def _check_ineq(prefix: str) -> Callable[[NumericalSemigroup], list[str]]:
    def run(S: NumericalSemigroup) -> list[str]:
        return _suite_prefix(S, inequality_suite(S), prefix)

    return run


_RANGES = {
    "thm3.1": lambda b, r: b == 0,
    "thm3.2": lambda b, r: 0 < b < r - 1,
    "thm3.3": lambda b, r: b == r - 1 > 0,
    "thm3.4": lambda b, r: r - 1 < b < 2 * (r - 1),
    "thm3.5": lambda b, r: b == 2 * (r - 1) > 0,
}


def _check_thm31_extra(S: NumericalSemigroup) -> list[str]:
    ts = type_sequence(S)
    d = decompose(S)
    r = S.type
    b = b_invariant(S)
    cond_value = b == 0
    cond_shape = r == 1 or (d.k == 1 and d.h == 0)
    cond_ts = all(ri == r for ri in ts.entries)
    return [] if cond_value == cond_shape == cond_ts else ["thm3.1/equiv"]


def _check_thm32_extra(S: NumericalSemigroup) -> list[str]:
    failures = []
    ts = type_sequence(S)
    d = decompose(S)
    e, c, r = S.multiplicity, S.conductor, S.type
    b = b_invariant(S)
    cond_value = 0 < b < r - 1
    cond_shape = d.k == 1 and 0 < d.h < e - 2
    cond_ts = (
        all(ri == e - 1 for ri in ts.entries[:-1]) and 1 < ts.entries[-1] < e - 1
    )
    if not cond_value == cond_shape == cond_ts:
        failures.append("thm3.2/equiv")
    if cond_value:
        ok = (
            b < e - 2
            and r == e - 1
            and ts.entries[-1] == e - 1 - b
            and d.k == 1
            and c == (d.p + 1) * e - b
        )
        if not ok:
            failures.append("thm3.2/consequences")
    return failures


def _check_thm33_extra(S: NumericalSemigroup) -> list[str]:
    failures = []
    ts = type_sequence(S)
    d = decompose(S)
    e, c, r = S.multiplicity, S.conductor, S.type
    b = b_invariant(S)
    smalls = S.small_elements()
    in_case = b == r - 1 > 0
    if in_case and r not in (e - 1, e - 2):
        failures.append("thm3.3/type-window")
    # subcase r = e - 1
    cond_a = in_case and r == e - 1
    cond_b = d.k == 1 and d.h == e - 2 and e > 2
    cond_c = (
        e > 2
        and len(ts.entries) >= 2
        and all(ri == e - 1 for ri in ts.entries[:-1])
        and ts.entries[-1] == 1
    )
    cond_d = in_case and d.k == 1
    if not cond_a == cond_b == cond_c == cond_d:
        failures.append("thm3.3/1-equiv")
    # subcase r = e - 2
    cond_e = in_case and r == e - 2
    shape1 = smalls == (0, e, 2 * e - 1, 2 * e, 3 * e - 1) and e > 3
    shape2 = (
        len(smalls) == 4
        and c == 2 * e
        and smalls[1] == e
        and 2 * smalls[2] < 3 * e
        and e > 3
    )
    cond_f = shape1 or shape2
    ts1 = ts.entries == (e - 2, e - 2, 1, e - 2) and e > 3
    ts2 = (
        len(ts.entries) == 3
        and ts.entries[0] == e - 2
        and ts.entries[1] + ts.entries[2] == e - 1
        and e > 3
    )
    cond_g = ts1 or ts2
    cond_h = in_case and d.k == 2
    if not cond_e == cond_f == cond_g == cond_h:
        failures.append("thm3.3/2-equiv")
    return failures


def _classification_item(theorem_id: str):
    in_range = _RANGES[theorem_id]
    extra = {
        "thm3.1": _check_thm31_extra,
        "thm3.2": _check_thm32_extra,
        "thm3.3": _check_thm33_extra,
    }.get(theorem_id)

    def run(S: NumericalSemigroup) -> tuple[list[str], tuple[str, ...]]:
        failures = [] if extra is None else extra(S)
        cls = classify(S)
        labels = tuple(
            m.label for m in cls.matches if m.label.split("/")[0] == theorem_id
        )
        if in_range(cls.b, cls.r):
            if not labels:
                failures.append(f"{theorem_id}/no-family-matched")
        elif labels:
            failures.append(f"{theorem_id}/family-matched-out-of-range")
        return failures, labels

    return run


def _catalog_item(theorem_id: str):
    target_b = 1 if theorem_id == "cor3.7" else 2

    def run(S: NumericalSemigroup) -> tuple[list[str], tuple[str, ...]]:
        if b_invariant(S) != target_b:
            return [], ()
        m = classify_b1_b2(S)
        if m is None or not m.label.startswith(theorem_id):
            return [f"{theorem_id}/no-catalog-entry"], ()
        return [], (m.label,)

    return run


_PLAIN_SUITES: dict[str, Callable[[NumericalSemigroup], list[str]]] = {
    "prop1.2": _check_prop12,
    "thm1.4": _check_thm14,
    "prop1.5": _check_prop15,
    "prop1.8": _check_prop18,
    "prop1.9": _check_prop19,
    "prop1.11": _check_case("prop1.11"),
    "prop1.12": _check_case("prop1.12"),
    "prop2.1": _check_ineq("prop2.1"),
    "thm2.2": _check_thm22,
    "lem2.3": _check_case("lem2.3"),
    "lem2.4": _check_case("lem2.4"),
    "prop2.5": _check_ineq("prop2.5"),
}

_FAMILY_SUITES = ("thm3.1", "thm3.2", "thm3.3", "thm3.4", "thm3.5", "cor3.7", "cor3.8")

THEOREM_IDS: tuple[str, ...] = tuple(_PLAIN_SUITES) + _FAMILY_SUITES


def _item(ids: tuple[str, ...], S: NumericalSemigroup):
    """Per-semigroup results for every requested suite."""
    results = {}
    for theorem_id in ids:
        try:
            if theorem_id in _PLAIN_SUITES:
                results[theorem_id] = (_PLAIN_SUITES[theorem_id](S), ())
            elif theorem_id.startswith("cor"):
                results[theorem_id] = _catalog_item(theorem_id)(S)
            else:
                results[theorem_id] = _classification_item(theorem_id)(S)
        except AssertionError as err:
            results[theorem_id] = ([f"{theorem_id}/internal: {err}"], ())
    return S, results


def _finish_families(theorem_id: str, matched: dict[str, set], g_max: int):
    """Regenerate each family inside the walked bounds and compare sets."""
    failures = []
    pool = FAMILIES if theorem_id.startswith("thm") else CATALOG_FAMILIES
    bound = 2 * g_max  # conductor and multiplicity never exceed twice the genus
    for fam in pool:
        if fam.theorem != theorem_id:
            continue
        generated = {
            S for S in generate_family(fam.label, bound, bound) if S.genus <= g_max
        }
        found = matched.get(fam.label, set())
        for S in sorted(generated - found, key=lambda s: s.sort_key()):
            failures.append((S, f"{fam.label}/generated-instance-not-matched"))
        for S in sorted(found - generated, key=lambda s: s.sort_key()):
            failures.append((S, f"{fam.label}/matched-instance-not-generated"))
    return failures


def verify_many(
    theorem_ids: Iterable[str], g_max: int, workers: int = 1
) -> dict[str, VerificationReport]:
    """Run several suites in one pass over the tree."""
    ids = tuple(theorem_ids)
    for theorem_id in ids:
        if theorem_id not in THEOREM_IDS:
            raise UnknownTheorem(theorem_id)
    start = time.perf_counter()
    checked = 0
    failures: dict[str, list] = {theorem_id: [] for theorem_id in ids}
    matched: dict[str, dict[str, set]] = {theorem_id: {} for theorem_id in ids}

    stream = enumerate_by_genus(g_max)
    job = functools.partial(_item, ids)
    if workers > 1:
        with multiprocessing.Pool(workers) as pool:
            items = pool.imap(job, stream, chunksize=64)
            checked = _collect(items, ids, failures, matched)
    else:
        checked = _collect(map(job, stream), ids, failures, matched)

    reports = {}
    for theorem_id in ids:
        fails = failures[theorem_id]
        if theorem_id in _FAMILY_SUITES:
            fails.extend(_finish_families(theorem_id, matched[theorem_id], g_max))
        reports[theorem_id] = VerificationReport(
            theorem_id=theorem_id,
            bound=f"genus <= {g_max}",
            checked=checked,
            counterexamples=tuple(
                (S.spec_string(), name) for S, name in fails
            ),
            elapsed=time.perf_counter() - start,
        )
    return reports


def _collect(items, ids, failures, matched) -> int:
    checked = 0
    for S, results in items:
        checked += 1
        for theorem_id in ids:
            fails, labels = results[theorem_id]
            failures[theorem_id].extend((S, name) for name in fails)
            for label in labels:
                matched[theorem_id].setdefault(label, set()).add(S)
    return checked


def verify(theorem_id: str, g_max: int, workers: int = 1) -> VerificationReport:
    """Run one suite over every semigroup with genus <= g_max."""
    return verify_many([theorem_id], g_max, workers=workers)[theorem_id]
