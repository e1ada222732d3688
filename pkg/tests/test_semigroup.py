import pytest

import oracles
from nsdeg import (EmptyGenerators, NonCoprime, NotMember, NumericalSemigroup,
                   SieveCapExceeded, enumerate_by_genus, parse_generators)


def test_from_generators_579():
    # frozen from the dynamic-programming sieve oracle
    assert oracles.invariants([5, 7, 9]) == {
        "frobenius": 13, "conductor": 14, "genus": 8, "multiplicity": 5}
    H = NumericalSemigroup([5, 7, 9])
    assert H.gens == (5, 7, 9)
    assert H.frobenius == 13
    assert H.conductor == 14
    assert H.genus == 8
    assert H.multiplicity == 5
    assert H.gaps == (1, 2, 3, 4, 6, 8, 11, 13)


def test_from_generators_full_semigroup():
    H = NumericalSemigroup([1])
    assert H.gens == (1,)
    assert H.frobenius == -1
    assert H.conductor == 0
    assert H.genus == 0
    assert H.multiplicity == 1


def test_from_generators_non_coprime():
    with pytest.raises(NonCoprime):
        NumericalSemigroup([2, 4])


def test_from_generators_rejects_bad_lists():
    with pytest.raises(EmptyGenerators):
        NumericalSemigroup([])
    with pytest.raises(EmptyGenerators):
        NumericalSemigroup([0, 3])
    with pytest.raises(EmptyGenerators):
        NumericalSemigroup([-2, 3])


def test_generator_reduction():
    H = NumericalSemigroup([5, 7, 9, 12, 14, 23])
    assert H.gens == (5, 7, 9)
    assert H == NumericalSemigroup([5, 7, 9])


def test_contains():
    H = NumericalSemigroup([5, 7, 9])
    assert H.contains(18)       # 9 + 9
    assert not H.contains(13)   # the Frobenius number
    assert not H.contains(-3)
    assert 14 in H and 10 ** 9 in H


def test_apery():
    assert oracles.apery([5, 7, 9], 5) == [0, 16, 7, 18, 9]
    assert NumericalSemigroup([5, 7, 9]).apery(5) == [0, 16, 7, 18, 9]
    assert NumericalSemigroup([1]).apery(1) == [0]
    assert NumericalSemigroup([2, 3]).apery(2) == [0, 3]


def test_apery_rejects_non_members():
    H = NumericalSemigroup([5, 7, 9])
    with pytest.raises(NotMember):
        H.apery(6)
    with pytest.raises(NotMember):
        H.apery(0)


def test_pseudo_frobenius():
    assert oracles.pseudo_frobenius([5, 7, 9]) == {11, 13}
    H = NumericalSemigroup([5, 7, 9])
    assert set(H.pf) == {11, 13}
    assert H.type == 2

    H = NumericalSemigroup([2, 3])
    assert set(H.pf) == {1}
    assert H.type == 1

    H = NumericalSemigroup([5, 7, 9, 11, 13])
    assert set(H.pf) == {2, 4, 6, 8}
    assert H.type == 4


def test_pseudo_frobenius_of_full_semigroup():
    H = NumericalSemigroup([1])
    assert H.pf == ()
    assert H.type == 1


def test_is_symmetric():
    assert NumericalSemigroup([2, 3]).is_symmetric()
    assert not NumericalSemigroup([5, 7, 9]).is_symmetric()
    assert not NumericalSemigroup([3, 4, 5]).is_symmetric()


def test_serialization_keys():
    d = NumericalSemigroup([5, 7, 9]).to_dict()
    assert list(d) == ["gens", "frobenius", "conductor", "genus",
                       "multiplicity", "type", "pf", "symmetric"]
    assert d["gens"] == [5, 7, 9] and d["pf"] == [11, 13]


def test_parse_generators():
    assert parse_generators("5,7,9") == [5, 7, 9]
    assert parse_generators(" 2, 3 ") == [2, 3]
    with pytest.raises(EmptyGenerators):
        parse_generators(" , ")
    with pytest.raises(ValueError):
        parse_generators("5,x")


def test_sieve_cap():
    with pytest.raises(SieveCapExceeded):
        NumericalSemigroup([1009, 1013], cap=10_000)


def test_elementary_invariants_everywhere():
    for H in enumerate_by_genus(6):
        assert H.frobenius + 1 == H.conductor
        assert H.genus <= H.frobenius + 1
        assert H.multiplicity in H.gens or H.gens == (1,)
        assert H.multiplicity == min(H.gens)


def test_apery_genus_identity():
    # 2 * sum(apery(H, a)) == a * (2 g + a - 1), exactly, for every generator
    for H in enumerate_by_genus(6):
        for a in H.gens:
            ap = H.apery(a)
            assert len(ap) == a
            assert 2 * sum(ap) == a * (2 * H.genus + a - 1), (H, a)


def test_symmetric_iff_single_pseudo_frobenius():
    for H in enumerate_by_genus(7):
        if H.genus == 0:
            continue
        assert H.is_symmetric() == (len(H.pf) == 1), H


def test_rebuild_idempotent():
    for H in enumerate_by_genus(6):
        again = NumericalSemigroup(H.gens)
        assert again == H
        assert again.gens == H.gens
        assert again.bits == H.bits and again.conductor == H.conductor


def test_membership_matches_oracle():
    for gens in ([5, 7, 9], [3, 4, 5], [2, 3], [4, 9, 11], [6, 10, 15]):
        H = NumericalSemigroup(gens)
        member = oracles.sieve(gens, H.conductor + 20)
        for z in range(H.conductor + 20):
            assert H.contains(z) == member[z], (gens, z)
