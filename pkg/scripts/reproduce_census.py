"""Recompute the multiplet, category and doublet statistics and diff them against the tables."""
from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from cyclic_census import census  # noqa: E402
from reference_values import (BOUNDS, CATEGORY_GRAPHS, CUBIC_MULTIPLETS_1E5,  # noqa: E402
                              DOUBLET_GRAPHS_1E5, QUINTIC_MULTIPLETS_1E5)


@dataclass
class Config:
    jobs: int = 1
    bound: int = 100_000


def main(cfg: Config) -> int:
    bad = 0
    t0 = time.perf_counter()
    for ell, want in ((3, CUBIC_MULTIPLETS_1E5), (5, QUINTIC_MULTIPLETS_1E5)):
        res = census.multiplet_census(ell, cfg.bound, jobs=cfg.jobs)
        for t, (n, mn) in want.items():
            got = (res.conductors.get(t), res.minima.get(t))
            ok = got == (n, mn)
            bad += not ok
            print(f"ell={ell} t={t}: {got[0]:5d} min {got[1]:6d}  {'ok' if ok else f'want {n}, {mn}'}")
        print(f"ell={ell} total {res.total_conductors} conductors, {res.total_fields} fields")
    runs = {b: census.quartet_census(b, jobs=cfg.jobs) for b in BOUNDS}
    print(f"\n{'cell':8s}" + "".join(f"{b:>8d}" for b in BOUNDS) + "     min")
    for (cat, grp), (counts, mn) in CATEGORY_GRAPHS.items():
        got = tuple(runs[b].count(cat, grp) for b in BOUNDS)
        gmin = runs[BOUNDS[-1]].minimum(cat, grp)
        ok = got == counts and gmin == mn
        bad += not ok
        print(f"{cat + '/' + str(grp):8s}" + "".join(f"{n:8d}" for n in got)
              + f"{gmin:8d}" + ("" if ok else f"  want {counts} {mn}"))
    d = census.doublet_census(cfg.bound, jobs=cfg.jobs)
    bad += d != DOUBLET_GRAPHS_1E5
    print(f"\ndoublet graphs {d}, expectation {tuple(round(x * sum(d)) for x in census.doublet_expectation())}")
    print(f"{bad} mismatches in {time.perf_counter() - t0:.2f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--jobs", type=int, default=1)
    sys.exit(main(Config(**vars(ap.parse_args()))))
