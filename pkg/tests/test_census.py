import json

import pytest

import oracles
from cyclic_census import census
from reference_values import CATEGORY_GRAPHS, CUBIC_MULTIPLETS_1E5, QUINTIC_MULTIPLETS_1E5


def test_small_bound_matches_oracle():
    res = census.multiplet_census(3, 100)
    assert res.conductors == {1: 12, 2: 2}
    assert [c for c, t in census.admissible_conductors(3, 100) if t == 2] == [63, 91]
    for ell in (3, 5):
        got = [c for c, _ in census.admissible_conductors(ell, 5000)]
        assert got == [c for c in range(1, 5000) if oracles.admissible(ell, c)]


def test_admissible_conductors_window():
    full = census.admissible_conductors(3, 3000)
    part = census.admissible_conductors(3, 3000, lo=1000)
    assert part == [x for x in full if x[0] >= 1000]


def test_multiplets(cubic_census):
    for t, (n, mn) in CUBIC_MULTIPLETS_1E5.items():
        assert cubic_census.conductors[t] == n and cubic_census.minima[t] == mn


def test_field_count_identity(cubic_census):
    for t, n in cubic_census.conductors.items():
        assert cubic_census.fields(t) == n * 2 ** (t - 1)
    q = census.multiplet_census(5, 100_000)
    for t, (n, mn) in QUINTIC_MULTIPLETS_1E5.items():
        assert q.fields(t) == n * 4 ** (t - 1) and q.minima[t] == mn


def test_segment_size_does_not_matter():
    a = census.multiplet_census(3, 50_000, segment=997)
    b = census.multiplet_census(3, 50_000)
    assert a.to_dict() == b.to_dict()


def test_quartet_examples(quartet_censuses):
    q = quartet_censuses[100_000]
    assert (q.count("III", 2), q.minimum("III", 2)) == (262, 819)
    assert (q.count("IV", 3), q.minimum("IV", 3)) == (5, 38311)
    q25 = quartet_censuses[25_000]
    assert (q25.count("III", 2), q25.count("I", 1), q25.subtotal("IV")) == (57, 7, 0)


def test_monotone_bounds(quartet_censuses):
    bounds = sorted(quartet_censuses)
    for key in CATEGORY_GRAPHS:
        counts = [quartet_censuses[b].count(*key) for b in bounds]
        assert counts == sorted(counts)


def test_doublets_small():
    assert sum(census.doublet_census(100)) == 2


def test_doublet_expectation():
    assert census.doublet_expectation() == pytest.approx((4 / 9, 4 / 9, 1 / 9))


def test_reports_are_deterministic_json(quartet_censuses):
    a = census.dumps(quartet_censuses[100_000].to_dict())
    b = census.dumps(census.quartet_census(100_000, jobs=2).to_dict())
    assert a == b
    assert census.dumps(json.loads(a)) == a


def test_bounds_guarded():
    with pytest.raises(ValueError):
        census.multiplet_census(3, 10**8)
    with pytest.raises(ValueError):
        census.quartet_census(10**7)
