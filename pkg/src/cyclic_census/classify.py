"""Category and graph of a conductor, with the predicted 3-class rank vector."""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations

from .conductor import Conductor
from .residue_graph import ResidueGraph, canonical_shape, residue_graph

CATEGORIES = ("I", "II", "III", "IV", "V")
GRAPHS = {"I": (1, 2), "II": (1, 2), "III": tuple(range(1, 10)), "IV": (1, 2, 3), "V": (1,),
          "Doublet": (1, 2, 3), "Singlet": (1,)}

_RANKS = {"III": (2, 2, 2, 2), "I": (3, 2, 2, 2), "II": (3, 3, 2, 2),
          "IV": (3, 3, 3, 3), "V": (4, 4, 4, 4)}

# Symbol templates over roles i, j, k. "x->y" means x is a cube modulo y.
_TEMPLATES = {
    ("III", 2): "{i->j;k}",
    ("III", 3): "{i->j->k}",
    ("III", 4): "{i->j->k->i}",
    ("III", 5): "{i<->j;k}",
    ("III", 6): "{i<->j->k}",
    ("III", 7): "{i<->j<-k}",
    ("III", 8): "{k->i<->j<-k}",
    ("III", 9): "{k->i<->j->k}",
    ("II", 1): "{i->j<-k}",
    ("II", 2): "{i->j<-k->i}",
    ("I", 2): "{i<-j->k}",
    ("IV", 1): "{k<-i<->j->k}",
    ("IV", 2): "{i<->j<->k}",
    ("IV", 3): "{i<->j<->k->i}",
    ("V", 1): "{i<->j<->k<->i}",
    ("Doublet", 2): "{i->j}",
    ("Doublet", 3): "{i<->j}",
}


class UnsupportedConductor(ValueError):
    pass


@dataclass(frozen=True)
class CategoryGraph:
    category: str
    graph: int
    symbol: str = ""

    def __post_init__(self):
        if self.graph not in GRAPHS.get(self.category, ()):
            raise ValueError(f"no graph {self.graph} in category {self.category}")

    @property
    def label(self) -> str:
        return f"{self.category}/{self.graph}"


def decide(n_bid: int, n_edges: int, att: int, rep: int, delta_zero: bool) -> tuple[str, int]:
    """The decision tree over edge counts; delta settles the edgeless case."""
    if n_bid == 3:
        return "V", 1
    if n_bid == 2:
        return ("IV", 2) if n_edges == 4 else ("IV", 3)
    if n_bid == 1:
        if n_edges == 2:
            return "III", 5
        if n_edges == 3:
            if rep == 1:
                return "III", 6
            if att == 1:
                return "III", 7
        if n_edges == 4:
            if (att, rep) == (1, 1):
                return "III", 9
            if (att, rep) == (1, 2):
                return "IV", 1
            if (att, rep) == (2, 1):
                return "III", 8
    if n_bid == 0:
        if n_edges == 0:
            return ("I", 1) if delta_zero else ("III", 1)
        if n_edges == 1:
            return "III", 2
        if n_edges == 2:
            if rep == 1:
                return "I", 2
            if att == 1:
                return "II", 1
            return "III", 3
        if n_edges == 3:
            return ("II", 2) if (att, rep) == (1, 1) else ("III", 4)
    raise AssertionError(f"unreachable counts {(n_bid, n_edges, att, rep)}")


def _parse_template(tpl: str) -> set[tuple[str, str]]:
    edges = set()
    for part in tpl.strip("{}").split(";"):
        toks = re.split(r"(<->|->|<-)", part)
        for x, arrow, y in zip(toks[0::2], toks[1::2], toks[2::2]):
            if arrow in ("->", "<->"):
                edges.add((x, y))
            if arrow in ("<-", "<->"):
                edges.add((y, x))
    return edges


def role_assignment(category: str, graph: int, primes, edges) -> dict[str, int] | None:
    """Map template roles i, j, k to primes; ties broken by the smallest prime tuple.

    Returns None for edgeless graphs, which have no template.
    """
    tpl = _TEMPLATES.get((category, graph))
    if tpl is None:
        return None
    want = _parse_template(tpl)
    roles = "ijk"[:len(primes)]
    best = None
    for perm in permutations(range(len(primes))):
        assign = dict(zip(roles, perm))
        if {(assign[x], assign[y]) for x, y in want} == set(edges):
            key = tuple(primes[assign[r]] for r in roles)
            if best is None or key < best:
                best = key
    if best is None:
        raise AssertionError(f"graph does not match template {tpl}")
    return dict(zip(roles, best))


def render_symbol(category: str, graph: int, primes, edges, delta_zero=None) -> str:
    """Fill the role template with concrete primes."""
    t = len(primes)
    if t == 1:
        return "{%d}" % primes[0]
    roles = role_assignment(category, graph, primes, edges)
    if roles is None:
        body = ",".join(str(q) for q in primes)
        if t == 3:
            body += ";delta=0" if delta_zero else ";delta!=0"
        return "{%s}" % body
    out = _TEMPLATES[(category, graph)]
    for r, q in roles.items():
        out = out.replace(r, str(q))
    return out


def classify_graph(g: ResidueGraph) -> CategoryGraph:
    if g.t == 2:
        cat, grp = "Doublet", 1 + (g.n_edges > 0) + (g.n_bidirectional > 0)
    elif g.t == 3:
        cat, grp = decide(g.n_bidirectional, g.n_edges, g.n_attractive, g.n_repulsive,
                          bool(g.delta_zero))
    else:
        raise UnsupportedConductor(f"classification needs t in (1, 2, 3), got {g.t}")
    return CategoryGraph(cat, grp, render_symbol(cat, grp, g.primes, g.edges, g.delta_zero))


def classify(cond: Conductor) -> CategoryGraph:
    if cond.ell != 3:
        raise ValueError("categories are defined for ell = 3")
    if cond.t == 1:
        return CategoryGraph("Singlet", 1, "{%d}" % cond.ramified_primes[0])
    if cond.t > 3:
        raise UnsupportedConductor(f"t = {cond.t} is not classified")
    return classify_graph(residue_graph(cond))


def doublet_graph(cond: Conductor) -> CategoryGraph:
    if cond.t != 2:
        raise UnsupportedConductor("doublet graphs need t = 2")
    return classify(cond)


def rank_distribution(cg: CategoryGraph) -> tuple[int, ...]:
    if cg.category == "Singlet":
        return (0,)
    if cg.category == "Doublet":
        return (2, 2) if cg.graph == 3 else (1, 1)
    return _RANKS[cg.category]


# --- printed symbols --------------------------------------------------------

@dataclass(frozen=True)
class ParsedSymbol:
    primes: tuple[int, ...]
    edges: frozenset[tuple[int, int]]  # prime pairs
    delta_zero: bool | None

    def shape(self) -> tuple:
        idx = {q: n for n, q in enumerate(self.primes)}
        return canonical_shape(len(self.primes),
                               [(idx[a], idx[b]) for a, b in self.edges], self.delta_zero)


def parse_symbol(text: str) -> ParsedSymbol:
    """Parse an ASCII symbol such as '{13->7<->181->13}' or '{9,7,31;delta!=0}'."""
    body = text.strip().strip("{}").replace(" ", "")
    primes: list[int] = []
    edges: set[tuple[int, int]] = set()
    dz = None

    def vertex(tok: str) -> int:
        if not tok.isdigit():
            raise ValueError(f"bad vertex {tok!r} in symbol {text!r}")
        q = int(tok)
        if q not in primes:
            primes.append(q)
        return q

    for part in body.split(";"):
        if part.startswith("delta"):
            dz = part in ("delta=0", "delta==0")
            continue
        if "," in part and "-" not in part:
            for tok in part.split(","):
                vertex(tok)
            continue
        toks = re.split(r"(<->|->|<-)", part)
        verts = [vertex(tok) for tok in toks[0::2]]
        for x, arrow, y in zip(verts, toks[1::2], verts[1:]):
            if arrow in ("->", "<->"):
                edges.add((x, y))
            if arrow in ("<-", "<->"):
                edges.add((y, x))
    return ParsedSymbol(tuple(primes), frozenset(edges), dz)


def shape_of(g: ResidueGraph) -> tuple:
    dz = g.delta_zero if g.t == 3 else None
    return canonical_shape(g.t, g.edges, dz)
