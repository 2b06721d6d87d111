"""Sigma-automorphism counts for the small groups, plus matrix counts for (p,...,p)."""
from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from cyclic_census.galois_action import (automorphisms, elementary_sigma, frattini_admits,
                                         named_group, sigma_census)

GROUPS = ("<4,2>", "<8,3>", "<8,4>", "<8,5>", "<25,2>", "<125,3>", "<125,4>")


@dataclass
class Config:
    degree: int = 3
    max_rank: int = 4


def main(cfg: Config) -> int:
    print(f"{'group':10s} {'#Aut':>7s} {'order':>6s} {'weak':>6s} {'strong':>6s}  frattini")
    for name in GROUPS:
        t0 = time.perf_counter()
        G = named_group(name)
        auts = automorphisms(G)
        c, o, w, s = sigma_census(G, cfg.degree, auts=auts).as_tuple()
        fa = frattini_admits(G, cfg.degree, auts=auts)
        print(f"{name:10s} {c:7d} {o:6d} {w:6d} {s:6d}  {fa!s:8s} {time.perf_counter() - t0:.2f}s")
    print("\nelementary abelian (p,...,p) by matrices, closed form vs brute force")
    for p in (2, 5, 7):
        for rank in range(2, cfg.max_rank + 1):
            if p ** rank > 10 ** 4:
                continue
            closed = elementary_sigma(p, rank, cfg.degree, method="closed").as_tuple()
            brute = (elementary_sigma(p, rank, cfg.degree, method="brute").as_tuple()
                     if p ** (rank * rank) <= 2 ** 20 else None)
            tag = "" if brute is None else ("agree" if brute == closed else f"brute {brute}")
            print(f"({p})^{rank}: #GL {closed[0]}, order 3 {closed[1]}, trace zero {closed[2]}  {tag}")
    return 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--degree", type=int, default=3)
    ap.add_argument("--max-rank", type=int, default=4)
    sys.exit(main(Config(**vars(ap.parse_args()))))
