"""Per-conductor reference rows and the regression check that replays them."""
from __future__ import annotations

import csv
import os
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .classify import classify, parse_symbol, shape_of
from .conductor import InadmissibleConductor, decompose
from .residue_graph import residue_graph
from .tower_rules import SINGULAR, genus_rule, quartet_rule

COLUMNS = ("conductor", "category", "graph", "symbol", "partial_conductor", "doublet_graph",
           "groups", "exception", "partial_groups", "ati", "v", "genus_class_group",
           "class_groups", "printed_conductor")
REQUIRED = COLUMNS[:4]
ENV_DIR = "CYCLIC_CENSUS_FIXTURES"


class FixtureError(ValueError):
    def __init__(self, path, line: int, msg: str):
        super().__init__(f"{path}:{line}: {msg}")
        self.path, self.line = path, line


@dataclass(frozen=True)
class FixtureRow:
    conductor: int
    category: str
    graph: int
    symbol: str
    partial_conductor: int | None = None
    doublet_graph: str = ""
    groups: str = ""
    exception: bool = False
    partial_groups: str = ""
    ati: str = ""
    v: int | None = None
    genus_class_group: str = ""
    class_groups: str = ""
    printed_conductor: int | None = None  # set when the source misprints the conductor
    source: str = ""
    line: int = 0


def _opt_int(s: str) -> int | None:
    return int(s) if s.strip() else None


def parse_rows(lines, source: str = "<string>") -> list[FixtureRow]:
    reader = csv.DictReader(lines)
    missing = [c for c in REQUIRED if c not in (reader.fieldnames or [])]
    if reader.fieldnames is None:
        return []
    if missing:
        raise FixtureError(source, 1, f"missing columns {', '.join(missing)}")
    rows = []
    for rec in reader:
        line = reader.line_num
        try:
            get = lambda k: (rec.get(k) or "").strip()  # noqa: E731
            row = FixtureRow(
                conductor=int(get("conductor")), category=get("category"),
                graph=int(get("graph")), symbol=get("symbol"),
                partial_conductor=_opt_int(get("partial_conductor")),
                doublet_graph=get("doublet_graph"), groups=get("groups"),
                exception=get("exception") in ("1", "true", "True", "yes"),
                partial_groups=get("partial_groups"), ati=get("ati"), v=_opt_int(get("v")),
                genus_class_group=get("genus_class_group"),
                class_groups=get("class_groups"),
                printed_conductor=_opt_int(get("printed_conductor")),
                source=str(source), line=line)
        except ValueError as exc:
            raise FixtureError(source, line, str(exc)) from None
        if not row.symbol.startswith("{"):
            raise FixtureError(source, line, f"bad symbol {row.symbol!r}")
        rows.append(row)
    return rows


def load(path) -> list[FixtureRow]:
    path = Path(path)
    with open(path, newline="", encoding="utf-8") as fh:
        return parse_rows(fh, source=path.name)


def fixture_dir() -> Path:
    env = os.environ.get(ENV_DIR)
    return Path(env) if env else Path(__file__).parent / "data" / "fixtures"


def load_all(directory=None) -> list[FixtureRow]:
    d = Path(directory) if directory else fixture_dir()
    rows: list[FixtureRow] = []
    for p in sorted(d.glob("*.csv")):
        rows.extend(load(p))
    return rows


@dataclass
class RowResult:
    source: str
    line: int
    conductor: int
    expected: str
    classified: str = ""
    category_ok: bool = False
    symbol_ok: bool = False
    primes_exact: bool = False
    partial_ok: bool | None = None
    tower_status: str = ""
    tower: str = ""
    tower_ok: bool | None = None
    exception: bool = False
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (self.category_ok and self.symbol_ok and self.partial_ok is not False
                and self.tower_ok is not False)


@dataclass
class FixtureReport:
    rows: list[RowResult]

    def count(self, attr: str) -> int:
        return sum(1 for r in self.rows if getattr(r, attr) is True)

    @property
    def failures(self) -> list[RowResult]:
        return [r for r in self.rows if not r.passed]

    def summary(self) -> dict:
        regular = [r for r in self.rows if not r.exception and r.tower_ok is not None]
        return {
            "rows": len(self.rows),
            "passed": sum(r.passed for r in self.rows),
            "category": self.count("category_ok"),
            "symbol": self.count("symbol_ok"),
            "primes_exact": self.count("primes_exact"),
            "tower_checked": sum(r.tower_ok is not None for r in self.rows),
            "exceptions_matching_rule": sum(bool(r.tower_ok) for r in self.rows if r.exception),
            "tower_regular_ok": sum(bool(r.tower_ok) for r in regular),
            "tower_regular": len(regular),
            "exceptions": sum(r.exception for r in self.rows),
            "ambiguous": sum(r.tower_status == "ambiguous" for r in self.rows),
        }

    def to_dict(self) -> dict:
        return {"summary": self.summary(), "rows": [asdict(r) for r in self.rows]}


def _check_partial(row: FixtureRow, res: RowResult) -> None:
    f = row.partial_conductor
    if f is None:
        return
    if row.conductor % f:
        # misprinted in the source; fall back to the mutual pair of the conductor
        res.notes.append(f"printed partial conductor {f} does not divide {row.conductor}")
        g = residue_graph(decompose(3, row.conductor))
        pair = [(a, b) for a, b in g.edges if (b, a) in g.edges]
        if not pair:
            res.partial_ok = False
            return
        f = g.primes[pair[0][0]] * g.primes[pair[0][1]]
    got = residue_graph(decompose(3, f))
    res.partial_ok = classify(decompose(3, f)).label == "Doublet/3"
    if row.doublet_graph:
        res.partial_ok = (res.partial_ok
                          and parse_symbol(row.doublet_graph).shape() == shape_of(got))


def _check_tower(row: FixtureRow, res: RowResult, cg, g) -> None:
    if cg.category == "Doublet":
        if row.v is None:
            return
        pred = genus_rule(row.v, row.genus_class_group or None)
    else:
        pred = quartet_rule(cg, v=row.v, ati=row.ati or None, primes=g.primes,
                            edges=g.edges, conductor=row.conductor)
    res.tower_status, res.tower = pred.status, pred.describe()
    if row.groups:
        res.tower_ok = pred.matches(row.groups)
    elif pred.status == SINGULAR:
        res.tower_ok = True
    if row.exception and not res.tower_ok:
        # printed group is an empirical exception to the rule: report, do not score
        res.tower_ok = None
        res.notes.append(f"exception to the rule ({pred.status}): printed {row.groups}")


def verify_row(row: FixtureRow) -> RowResult:
    res = RowResult(row.source, row.line, row.conductor, f"{row.category}/{row.graph}",
                    exception=row.exception)
    try:
        cond = decompose(3, row.conductor)
    except InadmissibleConductor as exc:
        res.notes.append(str(exc))
        return res
    cg = classify(cond)
    g = residue_graph(cond)
    res.classified = f"{cg.label} {cg.symbol}"
    res.category_ok = (cg.category, cg.graph) == (row.category, row.graph)
    printed = parse_symbol(row.symbol)
    res.symbol_ok = printed.shape() == shape_of(g)
    res.primes_exact = sorted(printed.primes) == sorted(cond.ramified_primes)
    if not res.primes_exact:
        res.notes.append(f"printed symbol {row.symbol} differs from {cg.symbol}")
    _check_partial(row, res)
    _check_tower(row, res, cg, g)
    return res


def verify_fixtures(rows: list[FixtureRow]) -> FixtureReport:
    return FixtureReport([verify_row(r) for r in rows])
