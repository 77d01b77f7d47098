import pytest

from nsg import (
    RelativeIdeal,
    colon_value_set_xR_m,
    dual,
    enumerate_by_genus,
    from_generators,
    ideal_of_chain,
    length_between,
)
from nsg.errors import IndexOutOfRange, NotNested

from naive import naive_dual_sets


def members(E, stop):
    return list(E.members_below(stop))


def test_ideal_of_chain():
    S = from_generators([3, 5, 7])
    M = ideal_of_chain(S, 1)
    assert members(M, 10) == [3, 5, 6, 7, 8, 9]
    C = ideal_of_chain(S, 2)
    assert C.least == 5 and members(C, 9) == [5, 6, 7, 8]
    assert ideal_of_chain(S, 0) == RelativeIdeal.from_semigroup(S)

    T = from_generators([4, 7, 13])
    assert members(ideal_of_chain(T, 3), 14) == [8, 11, 12, 13]

    with pytest.raises(IndexOutOfRange):
        ideal_of_chain(S, 3)
    with pytest.raises(IndexOutOfRange):
        ideal_of_chain(S, -1)


def test_dual_examples():
    S = from_generators([3, 5, 7])
    M = ideal_of_chain(S, 1)
    D = dual(RelativeIdeal.from_semigroup(S), M)
    assert members(D, 5) == [0, 2, 3, 4]  # S plus the pseudo-Frobenius set
    full = dual(RelativeIdeal.from_semigroup(S), ideal_of_chain(S, 2))
    assert full.least == 0 and full.stabilization == 0  # all of N
    same = dual(RelativeIdeal.from_semigroup(S), ideal_of_chain(S, 0))
    assert same == RelativeIdeal.from_semigroup(S)


def test_dual_against_naive_oracle():
    for S in enumerate_by_genus(6):
        c = S.conductor
        f_set = set(S.members(c))
        smalls = S.small_elements()
        for i in range(len(smalls)):
            E = ideal_of_chain(S, i)
            D = dual(RelativeIdeal.from_semigroup(S), E)
            e_set = set(E.members_below(E.stabilization))
            expected = naive_dual_sets(f_set, c, e_set, E.stabilization, -c, c)
            got = {z for z in range(-c, c) if z in D}
            assert got == expected


def test_length_between():
    S = from_generators([3, 5, 7])
    naturals = RelativeIdeal(S, 0, 0, 0)
    assert length_between(naturals, RelativeIdeal.from_semigroup(S)) == 3
    E = ideal_of_chain(S, 1)
    assert length_between(E, E) == 0

    T = from_generators([4, 7, 13])
    D = dual(RelativeIdeal.from_semigroup(T), ideal_of_chain(T, 1))
    assert length_between(D, RelativeIdeal.from_semigroup(T)) == 2  # the type

    with pytest.raises(NotNested):
        length_between(RelativeIdeal.from_semigroup(S), naturals)


def test_colon_value_set():
    S = from_generators([3, 5, 7])
    colon = colon_value_set_xR_m(S)
    assert 5 in colon
    assert 0 not in colon

    T = from_generators([5, 12, 16, 18, 19])  # {0, 5, 10, 12, 15 ->}
    assert 12 in colon_value_set_xR_m(T)
    assert T.type == T.multiplicity - 1

    for U in enumerate_by_genus(5):
        assert U.multiplicity in colon_value_set_xR_m(U)


def test_normalized_equality():
    S = from_generators([3, 5, 7])
    # same set of integers, different declared stabilization bounds
    a = RelativeIdeal(S, 3, 5, 0b01)
    b = RelativeIdeal(S, 0, 8, 0b11101000)
    assert a == b
    assert b.least == 3 and b.stabilization == 5
    assert list(a.members_below(7)) == [3, 5, 6]


def test_ideal_properties_small_genus():
    for S in enumerate_by_genus(7):
        base = RelativeIdeal.from_semigroup(S)
        smalls = S.small_elements()
        duals = [dual(base, ideal_of_chain(S, i)) for i in range(len(smalls))]
        for E in duals:
            assert E.is_closed_under_base()
            assert E.least >= 0
        for earlier, later in zip(duals, duals[1:]):
            assert earlier.is_subset_of(later)
        pf = [z for z in range(S.conductor) if z in duals[1] and z not in S]
        assert tuple(pf) == S.pseudo_frobenius()
