"""Lines, planes and bundles of the elementary abelian group of order 27.

Elements are vectors over GF(3); a monomial such as ``xy^2`` stands for (1,2,0).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product

F3Vector = tuple[int, int, int]

_LINE_GENERATORS = ("x", "y", "z", "xy", "xy^2", "yz", "yz^2", "zx", "zx^2",
                    "xyz", "xyz^2", "xy^2z", "x^2yz")

# (h, k, T) per plane; T lists the lines contained in the plane
_PLANES = (
    ("y", "z", (2, 3, 6, 7)),
    ("z", "x", (1, 3, 8, 9)),
    ("x", "y", (1, 2, 4, 5)),
    ("x", "yz", (1, 6, 10, 13)),
    ("xy", "zx", (4, 7, 8, 13)),
    ("y", "zx", (2, 8, 10, 12)),
    ("xy", "yz", (4, 6, 9, 12)),
    ("z", "xy", (3, 4, 10, 11)),
    ("zx", "yz", (5, 6, 8, 11)),
    ("z", "xy^2", (3, 5, 12, 13)),
    ("zx^2", "yz^2", (5, 7, 9, 10)),
    ("y", "zx^2", (2, 9, 11, 13)),
    ("x", "yz^2", (1, 7, 11, 12)),
)

_BUNDLES = (
    (2, 3, 4, 13), (1, 3, 6, 12), (1, 2, 8, 10), (3, 5, 7, 8), (3, 9, 10, 11),
    (1, 4, 7, 9), (1, 5, 11, 13), (2, 5, 6, 9), (2, 7, 11, 12), (4, 6, 8, 11),
    (8, 9, 12, 13), (6, 7, 10, 13), (4, 5, 10, 12),
)


def monomial(text: str) -> F3Vector:
    """'x^2yz' -> (2, 1, 1)."""
    v = [0, 0, 0]
    for var, exp in re.findall(r"([xyz])(?:\^(\d+))?", text):
        v["xyz".index(var)] += int(exp or 1)
    if not text or re.sub(r"[xyz](\^\d+)?", "", text):
        raise ValueError(f"bad monomial {text!r}")
    return (v[0] % 3, v[1] % 3, v[2] % 3)


def add(u: F3Vector, w: F3Vector) -> F3Vector:
    return tuple((a + b) % 3 for a, b in zip(u, w))


def scale(c: int, u: F3Vector) -> F3Vector:
    return tuple((c * a) % 3 for a in u)


def span(*gens: F3Vector) -> frozenset[F3Vector]:
    out = {(0, 0, 0)}
    for coeffs in product(range(3), repeat=len(gens)):
        v = (0, 0, 0)
        for c, g in zip(coeffs, gens):
            v = add(v, scale(c, g))
        out.add(v)
    return frozenset(out)


@dataclass(frozen=True)
class Line:
    index: int
    name: str
    generator: F3Vector

    @property
    def points(self) -> frozenset[F3Vector]:
        return span(self.generator)


@dataclass(frozen=True)
class Plane:
    index: int
    h: str
    k: str
    lines: tuple[int, ...]

    @property
    def points(self) -> frozenset[F3Vector]:
        return span(monomial(self.h), monomial(self.k))


@dataclass(frozen=True)
class Bundle:
    index: int
    planes: tuple[int, ...]


def lines() -> list[Line]:
    return [Line(i, g, monomial(g)) for i, g in enumerate(_LINE_GENERATORS, 1)]


def planes() -> list[Plane]:
    return [Plane(i, h, k, t) for i, (h, k, t) in enumerate(_PLANES, 1)]


def bundles() -> list[Bundle]:
    return [Bundle(i, b) for i, b in enumerate(_BUNDLES, 1)]


def incidence() -> list[list[bool]]:
    """inc[i][j]: line i+1 lies in plane j+1, computed from the generators."""
    ps = [p.points for p in planes()]
    return [[ln.points <= pts for pts in ps] for ln in lines()]


def line_index(v: F3Vector) -> int:
    """Index of the line through a nonzero vector."""
    for ln in lines():
        if v in ln.points and v != (0, 0, 0):
            return ln.index
    raise ValueError("the zero vector lies on every line")


def subgroup_order_pp(p: int) -> list[tuple[int, int]]:
    """Slots of the p+1 index-p subgroups of (p,p) with generators H, K.

    Slot 1 holds the subgroup containing H, slot 2 the one containing K and
    slot e+2 the one containing H+eK. Entries are coefficient pairs (a, b) of aH+bK.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    return [(1, 0), (0, 1)] + [(1, e) for e in range(1, p)]


def slot_ppp(p: int, a: int, b: int, c: int) -> int:
    """Slot of the order-p subgroup through a*u + b*v + c*w, normalized first."""
    vec = [a % p, b % p, c % p]
    if not any(vec):
        raise ValueError("zero vector")
    lead = next(x for x in vec if x)
    inv = pow(lead, -1, p)
    a, b, c = ((x * inv) % p for x in vec)
    if a and not b and not c:
        return 1
    if b and not a and not c:
        return 2
    if c and not a and not b:
        return 3
    if a and b and not c:
        return 3 + b
    if b and c and not a:
        return 2 + p + c
    if c and a and not b:
        # w + e*u normalized with leading u: u + e^{-1} w
        e = pow(c, -1, p)
        return 1 + 2 * p + e
    return 3 * p + (b - 1) * (p - 1) + c


def subgroup_order_ppp(p: int) -> list[tuple[int, int, int]]:
    """Representative vector (over u, v, w) for each of the p^2+p+1 slots."""
    if p < 2:
        raise ValueError("p must be at least 2")
    slots: dict[int, tuple[int, int, int]] = {}
    for vec in product(range(p), repeat=3):
        if any(vec):
            slots.setdefault(slot_ppp(p, *vec), vec)
    n = p * p + p + 1
    if sorted(slots) != list(range(1, n + 1)):
        raise AssertionError("slot map is not a bijection")
    return [slots[i] for i in range(1, n + 1)]
