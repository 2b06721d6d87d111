import pytest
from hypothesis import given, strategies as st

import oracles
from cyclic_census.conductor import (InadmissibleConductor, ambiguous_counts, decompose,
                                     discriminant, is_admissible, multiplicity)


@pytest.mark.parametrize("ell,c,ok", [(3, 7, True), (3, 21, False), (5, 275, True), (3, 1, False),
                                      (3, 9, True), (3, 27, False), (3, 49, False), (5, 25, True)])
def test_is_admissible_examples(ell, c, ok):
    assert is_admissible(ell, c) is ok


def test_admissible_matches_oracle_below_10k():
    for ell in (3, 5, 7):
        for c in range(1, 10_000):
            assert is_admissible(ell, c) == oracles.admissible(ell, c), (ell, c)


def test_count_below_100():
    got = [c for c in range(1, 100) if is_admissible(3, c)]
    assert got == [7, 9, 13, 19, 31, 37, 43, 61, 63, 67, 73, 79, 91, 97]


@pytest.mark.parametrize("c,e,primes", [(63, 2, (7, 9)), (4711, 0, (7, 673)),
                                        (819, 2, (7, 9, 13)), (8541, 2, (9, 13, 73))])
def test_decompose(c, e, primes):
    cond = decompose(3, c)
    assert (cond.e, cond.ramified_primes, cond.t) == (e, primes, len(primes))
    assert cond.tau == cond.t - (e == 2)


def test_decompose_rejects():
    with pytest.raises(InadmissibleConductor):
        decompose(3, 21)
    with pytest.raises(InadmissibleConductor):
        decompose(3, 1)
    with pytest.raises(ValueError):
        decompose(4, 13)


@pytest.mark.parametrize("ell,c,m", [(3, 7, 1), (3, 819, 4), (5, 8525, 16), (5, 275, 4)])
def test_multiplicity(ell, c, m):
    assert multiplicity(ell, c) == m


@pytest.mark.parametrize("ell,c,d", [(3, 7, 49), (3, 63, 3969), (5, 11, 14641)])
def test_discriminant(ell, c, d):
    assert discriminant(ell, c) == d


def test_discriminant_overflow():
    c = 7 * 13 * 19 * 31 * 37 * 43 * 61 * 67 * 73 * 79
    with pytest.raises(OverflowError):
        discriminant(3, c)


@pytest.mark.parametrize("t,out", [(1, (3, 3)), (2, (9, 3)), (3, (27, 3))])
def test_ambiguous_counts(t, out):
    assert ambiguous_counts(t) == out


@given(st.integers(1, 10**7), st.sampled_from([3, 5, 7]))
def test_multiplicity_formula(c, ell):
    if not is_admissible(ell, c):
        return
    cond = decompose(ell, c)
    assert multiplicity(ell, c) == (ell - 1) ** (cond.t - 1)
    prod = 1
    for q in cond.ramified_primes:
        prod *= q
    assert prod == c
    assert list(cond.ramified_primes) == sorted(cond.ramified_primes)
