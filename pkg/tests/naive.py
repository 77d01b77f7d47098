"""Set-based reference implementations used as independent oracles.

Everything here is written directly from the definitions with plain
Python sets and loops, deliberately sharing no code with the package's
bitmap arithmetic.
"""

from __future__ import annotations

from math import gcd


def naive_members(gens, limit):
    """Members of <gens> below limit, by dynamic programming."""
    reach = [False] * limit
    reach[0] = True
    for z in range(1, limit):
        reach[z] = any(z >= g and reach[z - g] for g in gens)
    return {z for z in range(limit) if reach[z]}


def naive_conductor(gens):
    assert gcd(*gens) == 1
    e = min(gens)
    limit = 2 * max(gens) + 1
    while True:
        members = naive_members(gens, limit)
        if all(z in members for z in range(limit - e, limit)):
            break
        limit *= 2
    frobenius = max(z for z in range(limit) if z not in members)
    return frobenius + 1, members


def naive_pseudo_frobenius(gens):
    c, members = naive_conductor(gens)
    nonzero = sorted(m for m in members if 0 < m < c + max(gens))

    def in_s(z):
        return z >= c or z in members

    out = []
    for z in range(c):
        if in_s(z):
            continue
        if all(in_s(z + m) for m in nonzero) and all(
            in_s(z + m) for m in range(c, c + 1)
        ):
            out.append(z)
    return out


def naive_dual_sets(f_set, f_stop, e_set, e_stop, lo, hi):
    """{z in [lo, hi) : z + E subset F} with E, F given as (set, tail start)."""

    def in_f(z):
        return z >= f_stop or z in f_set

    def e_members(stop):
        return [x for x in sorted(e_set) if x < stop] + list(range(e_stop, stop))

    out = set()
    for z in range(lo, hi):
        if all(in_f(z + x) for x in e_members(max(f_stop - z, e_stop))):
            out.add(z)
    return out


def naive_type_sequence(gens):
    """Type sequence straight from the dual-chain definition."""
    c, members = naive_conductor(gens)
    smalls = sorted(m for m in members if m < c) + [c]
    n = len(smalls) - 1

    def dual_below_c(i):
        chain = [s for s in smalls[i:] if s < c]
        out = set()
        for z in range(c):
            if all((z + s) in members or (z + s) >= c for s in chain):
                out.add(z)
        return out

    duals = [dual_below_c(i) for i in range(n + 1)]
    return [len(duals[i]) - len(duals[i - 1]) for i in range(1, n + 1)]
