"""Combined cubic residue symbol of a conductor as a directed graph."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .arith import cubic_exponent, smallest_primitive_root
from .conductor import Conductor


@dataclass(frozen=True)
class SymbolMatrix:
    primes: tuple[int, ...]
    a: tuple[tuple[int | None, ...], ...]  # a[i][j]: exponent of q_i modulo q_j
    roots: tuple[int, ...]  # primitive root used at each modulus

    @property
    def t(self) -> int:
        return len(self.primes)


@dataclass(frozen=True)
class ResidueGraph:
    primes: tuple[int, ...]
    edges: frozenset[tuple[int, int]]  # (i, j): q_i is a cube mod q_j
    n_bidirectional: int
    n_edges: int
    n_attractive: int
    n_repulsive: int
    delta_zero: bool | None = None

    @property
    def t(self) -> int:
        return len(self.primes)

    @property
    def isolated(self) -> frozenset[int]:
        touched = {v for e in self.edges for v in e}
        return frozenset(range(self.t)) - touched


def symbol_matrix(cond: Conductor, roots: dict[int, int] | None = None) -> SymbolMatrix:
    if cond.ell != 3:
        raise ValueError("residue graphs are defined for ell = 3")
    if cond.t > 4:
        raise ValueError("symbol matrices are supported for t <= 4")
    qs = cond.ramified_primes
    gs = tuple((roots or {}).get(q) or smallest_primitive_root(q) for q in qs)
    rows = []
    for i, qi in enumerate(qs):
        row = []
        for j, qj in enumerate(qs):
            row.append(None if i == j else cubic_exponent(3, qj, qi, g=gs[j]).exponent)
        rows.append(tuple(row))
    return SymbolMatrix(qs, tuple(rows), gs)


def delta(m: SymbolMatrix) -> int:
    """a12*a23*a31 - a13*a32*a21 mod 3 (zero-based indices below)."""
    if m.t != 3:
        raise ValueError("delta needs exactly three primes")
    a = m.a
    return (a[0][1] * a[1][2] * a[2][0] - a[0][2] * a[2][1] * a[1][0]) % 3


def graph_counts(t: int, edges: frozenset[tuple[int, int]]) -> tuple[int, int, int, int]:
    """(bidirectional pairs, edges, attractive vertices, repulsive vertices)."""
    bid = sum(1 for i, j in edges if i < j and (j, i) in edges)
    att = rep = 0
    if t == 3:
        for v in range(3):
            others = [u for u in range(3) if u != v]
            att += all((u, v) in edges for u in others)
            rep += all((v, u) in edges for u in others)
    return bid, len(edges), att, rep


def build_graph(m: SymbolMatrix) -> ResidueGraph:
    if m.t not in (2, 3):
        raise ValueError(f"graphs are classified for t in (2, 3), got t={m.t}")
    edges = frozenset((i, j) for i in range(m.t) for j in range(m.t)
                      if i != j and m.a[i][j] == 0)
    bid, knt, att, rep = graph_counts(m.t, edges)
    dz = (delta(m) == 0) if m.t == 3 else None
    return ResidueGraph(m.primes, edges, bid, knt, att, rep, dz)


def residue_graph(cond: Conductor) -> ResidueGraph:
    return build_graph(symbol_matrix(cond))


def canonical_shape(t: int, edges, delta_zero: bool | None = None) -> tuple:
    """Isomorphism invariant of a small digraph: its lexicographically least relabeling."""
    best = min(tuple(sorted((p[i], p[j]) for i, j in edges)) for p in permutations(range(t)))
    if not edges and t == 3:
        return (t, best, delta_zero)
    return (t, best, None)
