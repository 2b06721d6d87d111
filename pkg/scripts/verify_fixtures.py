"""Replay every transcribed table row and summarize the outcome per source file."""
from __future__ import annotations

import argparse
import sys
from collections import defaultdict
from dataclasses import dataclass

from cyclic_census.fixtures import load_all, verify_fixtures


@dataclass
class Config:
    directory: str | None = None
    show_notes: bool = False


def main(cfg: Config) -> int:
    report = verify_fixtures(load_all(cfg.directory))
    per = defaultdict(lambda: [0, 0, 0])
    for r in report.rows:
        s = per[r.source]
        s[0] += 1
        s[1] += r.passed
        s[2] += r.exception
    print(f"{'source':28s} rows  pass  exceptions")
    for src, (n, ok, exc) in sorted(per.items()):
        print(f"{src:28s} {n:4d}  {ok:4d}  {exc:10d}")
    for k, v in report.summary().items():
        print(f"{k}: {v}")
    if cfg.show_notes:
        for r in report.rows:
            for note in r.notes:
                print(f"{r.source}:{r.line} {r.conductor}: {note}")
    for r in report.failures:
        print(f"FAIL {r.source}:{r.line} {r.conductor} expected {r.expected}, got {r.classified}")
    return 1 if report.failures else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("directory", nargs="?")
    ap.add_argument("--show-notes", action="store_true")
    sys.exit(main(Config(**vars(ap.parse_args()))))
