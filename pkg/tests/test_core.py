import pickle

import pytest

from nsg import (
    NumericalSemigroup,
    enumerate_by_genus,
    from_gaps,
    from_generators,
    invariant_report,
)
from nsg.errors import GcdNotOne, NotClosed, RegularSemigroup

from naive import naive_conductor, naive_pseudo_frobenius


def test_from_generators_357():
    S = from_generators([3, 5, 7])
    assert S.conductor == 5
    assert [z for z in range(5) if z in S] == [0, 3]
    assert S.min_generators == (3, 5, 7)
    assert S.gaps() == (1, 2, 4)


def test_from_generators_example_fixture():
    S = from_generators([10, 11, 26])
    assert S.conductor == 50
    assert S.multiplicity == 10


def test_from_generators_45():
    S = from_generators([4, 5])
    assert S.conductor == 12
    assert S.gaps() == (1, 2, 3, 6, 7, 11)


def test_redundant_generators_removed():
    assert from_generators([3, 5, 7, 8, 10, 12]) == from_generators([3, 5, 7])
    assert from_generators([4, 5, 9, 13]).min_generators == (4, 5)


def test_construction_errors():
    with pytest.raises(RegularSemigroup):
        from_generators([1, 2])
    with pytest.raises(GcdNotOne):
        from_generators([4, 6])
    with pytest.raises(GcdNotOne):
        from_generators([5])
    with pytest.raises(ValueError):
        from_generators([])
    with pytest.raises(ValueError):
        from_generators([0, 3])


def test_from_gaps():
    assert from_gaps({1, 2, 4}) == from_generators([3, 5, 7])
    assert from_gaps({1, 2, 3, 6, 7, 11}) == from_generators([4, 5])


def test_from_gaps_errors():
    with pytest.raises(NotClosed):
        from_gaps({2})  # 1 would be a member, so 1 + 1 = 2 cannot be a gap
    with pytest.raises(RegularSemigroup):
        from_gaps(set())
    with pytest.raises(ValueError):
        from_gaps({0, 1})


def test_contains():
    S = from_generators([3, 5, 7])
    assert 4 not in S
    assert 1000 in S
    assert -1 not in S
    assert 37 in from_generators([10, 11, 26])


def test_small_elements():
    assert from_generators([3, 5, 7]).small_elements() == (0, 3, 5)
    assert from_generators([4, 5]).small_elements() == (0, 4, 5, 8, 9, 10, 12)
    assert from_generators([4, 7, 13]).small_elements() == (0, 4, 7, 8, 11)


def test_pseudo_frobenius():
    assert from_generators([3, 5, 7]).pseudo_frobenius() == (2, 4)
    assert from_generators([4, 5]).pseudo_frobenius() == (11,)
    assert from_generators([4, 7, 13]).pseudo_frobenius() == (9, 10)


def test_invariant_report_values():
    rep = invariant_report(from_generators([3, 5, 7]))
    assert (rep.e, rep.c, rep.delta, rep.n, rep.r, rep.b, rep.k) == (3, 5, 3, 2, 2, 1, 1)
    rep = invariant_report(from_generators([4, 7, 13]))
    assert (rep.e, rep.c, rep.delta, rep.n, rep.r, rep.b, rep.k) == (4, 11, 7, 4, 2, 1, 2)
    assert rep.edim == 3
    rep = invariant_report(from_generators([5, 12, 16, 18, 19]))
    assert (rep.e, rep.c, rep.r, rep.b) == (5, 15, 4, 5)
    assert rep.edim == 5


def test_report_against_naive_oracle():
    for gens in ([3, 5, 7], [4, 7, 13], [10, 11, 26], [5, 12, 16, 18, 19]):
        c, members = naive_conductor(gens)
        S = from_generators(gens)
        assert S.conductor == c
        assert all((z in S) == (z in members) for z in range(c))
        assert list(S.pseudo_frobenius()) == naive_pseudo_frobenius(gens)


def test_roundtrips_and_membership_closure_small_genus():
    from math import gcd

    for S in enumerate_by_genus(8):
        assert from_gaps(S.gaps()) == S
        assert from_generators(S.min_generators) == S
        assert len(S.min_generators) <= S.multiplicity
        assert S.multiplicity >= 2
        assert gcd(*S.min_generators) == 1
        assert (S.conductor - 1) not in S
        # membership closed: recompute reachability from the generators
        c, members = naive_conductor(list(S.min_generators))
        bound = S.conductor + 2 * S.multiplicity
        assert all((z in S) == (z in members or z >= c) for z in range(bound))
        smalls = S.small_elements()
        assert len(smalls) == S.conductor - S.genus + 1
        assert smalls[0] == 0 and smalls[-1] == S.conductor
        if len(smalls) > 1:
            assert smalls[1] == S.multiplicity
        assert S.pseudo_frobenius()[-1] == S.frobenius


def test_value_semantics():
    a = from_generators([4, 7, 13])
    b = from_gaps(a.gaps())
    assert a == b and hash(a) == hash(b)
    assert a != from_generators([4, 5])
    assert pickle.loads(pickle.dumps(a)) == a
    assert repr(a) == "NumericalSemigroup(4, 7, 13)"
    assert a.spec_string() == "4,7,13"


def test_internal_bits_constructor_rejects_regular():
    with pytest.raises(RegularSemigroup):
        NumericalSemigroup._from_bits(3, 0b111)
