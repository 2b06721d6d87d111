import math

import pytest
from hypothesis import assume, given, settings, strategies as st

import oracles
from cyclic_census.arith import (Factorization, character_table, cubic_exponent, factorize,
                                 factorize_with_spf, is_prime, primitive_roots,
                                 smallest_primitive_root, spf_sieve)


@pytest.mark.parametrize("n,expected", [(2, True), (7, True), (9, False), (0, False), (1, False),
                                        (2**61 - 1, True), (3215031751, False)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


def test_is_prime_matches_trial_division():
    assert [n for n in range(5000) if is_prime(n)] == [n for n in range(5000) if oracles.is_prime(n)]


def test_is_prime_rejects_out_of_range():
    with pytest.raises(ValueError):
        is_prime(1 << 63)


@pytest.mark.parametrize("n,factors", [(63, ((3, 2), (7, 1))), (1, ()),
                                       (819, ((3, 2), (7, 1), (13, 1)))])
def test_factorize_examples(n, factors):
    assert factorize(n).factors == factors


def test_factorize_large_semiprime():
    p, q = 1_000_000_007, 998_244_353
    assert factorize(p * q).factors == ((q, 1), (p, 1))


@given(st.integers(1, 10**12))
def test_factorize_product_roundtrip(n):
    fac = factorize(n)
    assert math.prod(p**e for p, e in fac.factors) == n
    assert all(is_prime(p) for p in fac.primes)
    assert Factorization(n, fac.factors) == fac


@given(st.lists(st.sampled_from([2, 3, 5, 7, 11, 13, 101, 65537]), max_size=6))
def test_factorize_of_product_is_identity(ps):
    n = math.prod(ps)
    assume(n < 1 << 63)
    counts = {p: ps.count(p) for p in set(ps)}
    assert factorize(n).factors == tuple(sorted(counts.items()))


def test_factorization_invariants_enforced():
    with pytest.raises(ValueError):
        Factorization(12, ((2, 2), (5, 1)))
    with pytest.raises(ValueError):
        Factorization(12, ((3, 1), (2, 2)))


def test_spf_sieve_agrees_with_factorize():
    spf = spf_sieve(20_000)
    for n in range(1, 20_000, 7):
        assert factorize_with_spf(n, spf) == factorize(n)


@pytest.mark.parametrize("m,g", [(7, 3), (9, 2), (13, 2), (31, 3), (73, 5)])
def test_smallest_primitive_root(m, g):
    assert smallest_primitive_root(m) == g == oracles.primitive_root(m)


@pytest.mark.parametrize("m", [2, 15, 27, 1])
def test_smallest_primitive_root_rejects(m):
    with pytest.raises(ValueError):
        smallest_primitive_root(m)


def test_primitive_roots_list():
    assert primitive_roots(7) == [3, 5]
    assert primitive_roots(9) == [2, 5]
    assert primitive_roots(13, 2) == [2, 6]


def test_cubic_exponent_examples():
    assert cubic_exponent(3, 7, 13).coarse == 1 and cubic_exponent(3, 7, 13).exponent == 0
    assert cubic_exponent(3, 7, 7).coarse == 0
    assert cubic_exponent(3, 7, 2).coarse == -1


def test_cubic_exponent_errors():
    with pytest.raises(ValueError):
        cubic_exponent(3, 11, 2)        # 3 does not divide 10
    with pytest.raises(ValueError):
        cubic_exponent(3, 12, 5)
    with pytest.raises(ValueError):
        cubic_exponent(4, 13, 2)


@pytest.mark.parametrize("m", [7, 9, 13, 19, 31, 37, 43, 97, 991])
def test_residue_count(m):
    tab = character_table(3, m)
    phi = 6 if m == 9 else m - 1
    assert int((tab == 0).sum()) == phi // 3
    if m == 9:
        assert set(map(int, (tab == 0).nonzero()[0])) == {1, 8}


def test_scalar_matches_index_search_below_2000():
    for m in [9] + [m for m in range(7, 2000, 6) if oracles.is_prime(m)]:
        idx = oracles.index_table(m)
        for r, e in idx.items():
            ch = cubic_exponent(3, m, r)
            assert ch.exponent == e % 3
            assert ch.coarse == (1 if e % 3 == 0 else -1)
            if m < 200:
                assert (ch.coarse == 1) == oracles.is_cube(m, r)


_PRIMES_1MOD3 = [m for m in range(7, 50_000, 6) if oracles.is_prime(m)]


@settings(max_examples=300)
@given(st.sampled_from(_PRIMES_1MOD3), st.integers(1, 10**9), st.integers(1, 10**9))
def test_scalar_character_multiplicative(m, r, s):
    if r % m == 0 or s % m == 0:
        return
    a = cubic_exponent(3, m, r).exponent
    b = cubic_exponent(3, m, s).exponent
    assert cubic_exponent(3, m, r * s).exponent == (a + b) % 3


@given(st.sampled_from(_PRIMES_1MOD3[:200]), st.integers(1, 10**6))
def test_scalar_equals_table(m, r):
    tab = character_table(3, m)
    got = cubic_exponent(3, m, r)
    assert (got.exponent if got.coarse else -1) == tab[r % m]


@given(st.sampled_from([11, 31, 41, 61, 71, 101]), st.integers(1, 10**6))
def test_quintic_character_is_euler(m, r):
    if r % m == 0:
        return
    ch = cubic_exponent(5, m, r)
    assert (pow(r, (m - 1) // 5, m) == 1) == (ch.exponent == 0)
