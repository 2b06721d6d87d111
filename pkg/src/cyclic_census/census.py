"""Range censuses of admissible conductors, categories and doublet graphs.

Fixture rows and their verification live in ``fixtures`` and are re-exported here.
"""
from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .arith import factorize, is_prime
from .classify import GRAPHS, classify
from .conductor import Conductor, from_factorization
from .fixtures import FixtureReport, FixtureRow, load_all, verify_fixtures  # noqa: F401

DEFAULT_SEGMENT = 1 << 18
CATEGORY_ORDER = ("I", "II", "III", "IV", "V")


def _base_primes(limit: int) -> list[int]:
    return [p for p in range(2, limit + 1) if is_prime(p)]


def segment_invariants(ell: int, lo: int, hi: int) -> tuple[np.ndarray, np.ndarray]:
    """Admissibility mask and ramified-prime count t for every c in [lo, hi).

    A segmented factor sieve: each base prime p <= sqrt(hi) is divided out of
    its multiples, and whatever cofactor survives is a single large prime.
    """
    lo = max(lo, 1)
    n = max(hi - lo, 0)
    rem = np.arange(lo, lo + n, dtype=np.int64)
    ok = np.ones(n, dtype=bool)
    t = np.zeros(n, dtype=np.int64)
    for p in _base_primes(math.isqrt(max(hi - 1, 1))):
        start = (-lo) % p
        idx = np.arange(start, n, p)
        if idx.size == 0:
            continue
        rem[idx] //= p
        again = rem[idx] % p == 0
        if p == ell:
            sq = idx[again]
            rem[sq] //= p
            ok[idx[~again]] = False
            cube = sq[rem[sq] % p == 0]
            ok[cube] = False
            t[sq] += 1
        else:
            if p % ell != 1:
                ok[idx] = False
            ok[idx[again]] = False
            t[idx] += 1
    big = rem > 1
    ok[big & (rem % ell != 1)] = False
    t[big] += 1
    if lo == 1 and n:
        ok[0] = False
    return ok, t


def _segments(lo: int, hi: int, size: int) -> list[tuple[int, int]]:
    return [(a, min(a + size, hi)) for a in range(lo, hi, size)]


def _map(fn, tasks, jobs: int):
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(*task) for task in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, *zip(*tasks)))


def admissible_conductors(ell: int, bound: int, lo: int = 1) -> list[tuple[int, int]]:
    """Sorted (c, t) pairs for admissible lo <= c < bound."""
    out: list[tuple[int, int]] = []
    for a, b in _segments(lo, bound, DEFAULT_SEGMENT):
        ok, t = segment_invariants(ell, a, b)
        for off in np.flatnonzero(ok):
            out.append((a + int(off), int(t[off])))
    return out


# --- multiplets -------------------------------------------------------------

@dataclass
class MultipletCensus:
    ell: int
    bound: int
    conductors: dict[int, int] = field(default_factory=dict)  # t -> count
    minima: dict[int, int] = field(default_factory=dict)

    def fields(self, t: int) -> int:
        return self.conductors[t] * (self.ell - 1) ** (t - 1)

    @property
    def total_conductors(self) -> int:
        return sum(self.conductors.values())

    @property
    def total_fields(self) -> int:
        return sum(self.fields(t) for t in self.conductors)

    def to_dict(self) -> dict:
        rows = {str(t): {"conductors": self.conductors[t], "fields": self.fields(t),
                         "min": self.minima[t]} for t in sorted(self.conductors)}
        rows["total"] = {"conductors": self.total_conductors, "fields": self.total_fields}
        return {"ell": self.ell, "bound": self.bound, "multiplets": rows}


def _multiplet_chunk(ell: int, lo: int, hi: int) -> tuple[dict, dict]:
    ok, t = segment_invariants(ell, lo, hi)
    counts: dict[int, int] = {}
    minima: dict[int, int] = {}
    for off in np.flatnonzero(ok):
        k = int(t[off])
        counts[k] = counts.get(k, 0) + 1
        minima.setdefault(k, lo + int(off))
    return counts, minima


def multiplet_census(ell: int, bound: int, jobs: int = 1,
                     segment: int = DEFAULT_SEGMENT) -> MultipletCensus:
    """Admissible conductors c < bound bucketed by the number t of ramified primes."""
    if bound > 10**7:
        raise ValueError("bound above 10^7 is out of range")
    tasks = [(ell, a, b) for a, b in _segments(1, bound, segment)]
    res = MultipletCensus(ell, bound)
    for counts, minima in _map(_multiplet_chunk, tasks, jobs):
        for k, v in counts.items():
            res.conductors[k] = res.conductors.get(k, 0) + v
            res.minima[k] = min(res.minima.get(k, minima[k]), minima[k])
    res.conductors = dict(sorted(res.conductors.items()))
    res.minima = dict(sorted(res.minima.items()))
    return res


# --- categories and doublet graphs -----------------------------------------

def conductors_with_t(bound: int, t: int, jobs: int = 1, ell: int = 3) -> list[Conductor]:
    tasks = [(ell, a, b) for a, b in _segments(1, bound, DEFAULT_SEGMENT)]
    out = []
    for chunk in _map(_conductors_chunk, [task + (t,) for task in tasks], jobs):
        out.extend(chunk)
    return out


def _conductors_chunk(ell: int, lo: int, hi: int, t: int) -> list[Conductor]:
    ok, tt = segment_invariants(ell, lo, hi)
    return [from_factorization(ell, factorize(lo + int(off)))
            for off in np.flatnonzero(ok & (tt == t))]


def _label_chunk(ell: int, lo: int, hi: int, t: int) -> list[tuple[int, str, int]]:
    out = []
    for cond in _conductors_chunk(ell, lo, hi, t):
        cg = classify(cond)
        out.append((cond.c, cg.category, cg.graph))
    return out


def _labels(bound: int, t: int, jobs: int) -> list[tuple[int, str, int]]:
    tasks = [(3, a, b, t) for a, b in _segments(1, bound, DEFAULT_SEGMENT // 4)]
    out = []
    for chunk in _map(_label_chunk, tasks, jobs):
        out.extend(chunk)
    return out


@dataclass
class CategoryCensus:
    bound: int
    cells: dict[tuple[str, int], tuple[int, int | None]]  # label -> (conductors, min)

    def count(self, category: str, graph: int) -> int:
        return self.cells[(category, graph)][0]

    def minimum(self, category: str, graph: int) -> int | None:
        return self.cells[(category, graph)][1]

    def subtotal(self, category: str) -> int:
        return sum(n for (cat, _), (n, _) in self.cells.items() if cat == category)

    @property
    def total(self) -> int:
        return sum(n for n, _ in self.cells.values())

    def to_dict(self) -> dict:
        out: dict = {}
        for (cat, grp), (n, mn) in self.cells.items():
            out[f"{cat}/{grp}"] = {"conductors": n, "fields": 4 * n, "min": mn}
        for cat in CATEGORY_ORDER:
            n = self.subtotal(cat)
            out[cat] = {"conductors": n, "fields": 4 * n}
        out["total"] = {"conductors": self.total, "fields": 4 * self.total}
        return {"bound": self.bound, "categories": out}


def quartet_census(bound: int, jobs: int = 1) -> CategoryCensus:
    """Classify every three-prime conductor c < bound."""
    if bound > 10**6:
        raise ValueError("bound above 10^6 is out of range")
    cells: dict[tuple[str, int], tuple[int, int | None]] = {
        (cat, g): (0, None) for cat in CATEGORY_ORDER for g in GRAPHS[cat]}
    for c, cat, grp in _labels(bound, 3, jobs):
        n, mn = cells[(cat, grp)]
        cells[(cat, grp)] = (n + 1, c if mn is None else min(mn, c))
    return CategoryCensus(bound, cells)


def doublet_census(bound: int, jobs: int = 1) -> tuple[int, int, int]:
    """Counts of doublet graphs 1, 2, 3 (no edge, one edge, mutual) for c < bound."""
    if bound > 10**6:
        raise ValueError("bound above 10^6 is out of range")
    counts = [0, 0, 0]
    for _, _, grp in _labels(bound, 2, jobs):
        counts[grp - 1] += 1
    return tuple(counts)


def doublet_expectation() -> tuple[float, float, float]:
    """Edge probabilities 1/3 each way: no edge 4/9, one edge 2*2/9, mutual 1/9."""
    p = 1 / 3
    q = 1 - p
    return (q * q, 2 * p * q, p * p)


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
