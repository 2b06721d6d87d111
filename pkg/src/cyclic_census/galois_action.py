"""Automorphisms of small finite groups and the census of sigma-automorphisms.

A group is a multiplication table over 0..n-1. Automorphisms are integer arrays
``phi`` with ``phi[x]`` the image of element x.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .arith import is_prime

MAX_ORDER = 512
MAX_CANDIDATES = 2_000_000


class SearchCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class SigmaCensus:
    aut_order: int
    order3_count: int
    weak_count: int
    strong_count: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.aut_order, self.order3_count, self.weak_count, self.strong_count)


@dataclass(eq=False)
class FiniteGroup:
    table: np.ndarray
    generators: tuple[int, ...] = ()
    name: str = ""
    identity: int = field(init=False)

    def __post_init__(self):
        t = np.asarray(self.table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise ValueError("multiplication table must be square and nonempty")
        self.table = t
        n = t.shape[0]
        rng = np.arange(n)
        ids = [e for e in range(n) if (t[e] == rng).all() and (t[:, e] == rng).all()]
        if len(ids) != 1:
            raise ValueError("table has no two-sided identity")
        self.identity = ids[0]
        if not self.generators:
            self.generators = self._greedy_generators()
        if n <= 1000:
            self._validate()

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    @cached_property
    def inverse(self) -> np.ndarray:
        return np.argmax(self.table == self.identity, axis=1)

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        out = np.zeros(n, dtype=np.int64)
        rng = np.arange(n)
        cur = rng.copy()  # cur[x] = x^k
        for k in range(1, n + 1):
            out[(out == 0) & (cur == self.identity)] = k
            if out.all():
                break
            cur = self.table[cur, rng]
        return out

    def power(self, x: int, k: int) -> int:
        r = self.identity
        for _ in range(k):
            r = self.mul(r, x)
        return r

    def closure(self, elems) -> set[int]:
        """Subgroup generated by elems."""
        gens = list(dict.fromkeys(int(x) for x in elems))
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = int(self.table[x, g])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def _greedy_generators(self) -> tuple[int, ...]:
        order = np.argsort(-self.element_orders, kind="stable")
        gens: list[int] = []
        sub = {self.identity}
        for x in order:
            if len(sub) == self.order:
                break
            if int(x) not in sub:
                gens.append(int(x))
                sub = self.closure(gens)
        return tuple(gens)

    def _validate(self) -> None:
        t, n = self.table, self.order
        rng = np.arange(n)
        if not all((np.sort(t[i]) == rng).all() and (np.sort(t[:, i]) == rng).all()
                   for i in range(n)):
            raise ValueError("table is not a Latin square, so inverses fail")
        if len(self.closure(self.generators)) != n:
            raise ValueError("generators do not generate the group")
        # Light's test: associativity needs checking on generators only
        for g in self.generators:
            if not (t[t[:, g], :] == t[:, t[g, :]]).all():
                raise ValueError("table is not associative")


# --- constructors -----------------------------------------------------------

def _from_elements(elems, mul, gens, name) -> FiniteGroup:
    index = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    table = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            table[i, j] = index[mul(a, b)]
    return FiniteGroup(table, tuple(index[g] for g in gens), name)


def abelian(*orders: int, name: str = "") -> FiniteGroup:
    elems = list(itertools.product(*(range(m) for m in orders)))
    gens = [tuple(int(i == k) for i in range(len(orders))) for k in range(len(orders))]

    def mul(a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, orders))
    return _from_elements(elems, mul, gens, name or "x".join(f"C{m}" for m in orders))


def cyclic(n: int) -> FiniteGroup:
    return abelian(n, name=f"C{n}")


def elementary_abelian(p: int, rank: int) -> FiniteGroup:
    return abelian(*([p] * rank), name=f"({','.join([str(p)] * rank)})")


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n as pairs (k, s): r^k s^s."""
    elems = [(k, s) for s in range(2) for k in range(n)]

    def mul(a, b):
        k1, s1 = a
        k2, s2 = b
        return ((k1 + (-k2 if s1 else k2)) % n, (s1 + s2) % 2)
    return _from_elements(elems, mul, [(1, 0), (0, 1)], f"D{n}")


def quaternion() -> FiniteGroup:
    # (sign, unit) with unit in 1, i, j, k
    prod = {("1", u): (1, u) for u in "1ijk"}
    prod.update({(u, "1"): (1, u) for u in "1ijk"})
    prod.update({("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
                 ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                 ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})
    elems = [(s, u) for s in (1, -1) for u in "1ijk"]

    def mul(a, b):
        s, u = prod[(a[1], b[1])]
        return (a[0] * b[0] * s, u)
    return _from_elements(elems, mul, [(1, "i"), (1, "j")], "Q8")


def heisenberg(p: int) -> FiniteGroup:
    """Extraspecial group of order p^3 and exponent p (p odd)."""
    elems = list(itertools.product(range(p), repeat=3))

    def mul(a, b):
        return ((a[0] + b[0]) % p, (a[1] + b[1]) % p, (a[2] + b[2] + a[0] * b[1]) % p)
    return _from_elements(elems, mul, [(1, 0, 0), (0, 1, 0)], f"Heis({p})")


def modular(p: int) -> FiniteGroup:
    """Extraspecial group of order p^3 and exponent p^2: C_{p^2} semidirect C_p."""
    q = p * p
    elems = [(i, j) for i in range(q) for j in range(p)]

    def mul(a, b):
        return ((a[0] + b[0] * pow(1 + p, a[1], q)) % q, (a[1] + b[1]) % p)
    return _from_elements(elems, mul, [(1, 0), (0, 1)], f"M({p}^3)")


NAMED = {
    "<4,2>": lambda: elementary_abelian(2, 2),
    "<8,3>": lambda: dihedral(4),
    "<8,4>": quaternion,
    "<8,5>": lambda: elementary_abelian(2, 3),
    "<25,2>": lambda: elementary_abelian(5, 2),
    "<125,3>": lambda: heisenberg(5),
    "<125,4>": lambda: modular(5),
}
ALIASES = {"C2xC2": "<4,2>", "D4": "<8,3>", "Q8": "<8,4>", "C2xC2xC2": "<8,5>",
           "C5xC5": "<25,2>", "Heis5": "<125,3>", "Mod125": "<125,4>"}


def named_group(name: str) -> FiniteGroup:
    key = ALIASES.get(name, name).replace(" ", "")
    if key in NAMED:
        g = NAMED[key]()
        g.name = key
        return g
    if key.startswith("C") and key[1:].isdigit():
        return cyclic(int(key[1:]))
    raise ValueError(f"unknown group {name!r}; known: {', '.join(NAMED)}")


# --- automorphisms ----------------------------------------------------------

def _spanning_words(G: FiniteGroup) -> list[tuple[int, int, int]]:
    """BFS tree (element, parent, generator slot) reaching every element."""
    seen = {G.identity}
    order = []
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s, g in enumerate(G.generators):
                y = G.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    order.append((y, x, s))
                    nxt.append(y)
        frontier = nxt
    return order


def automorphisms(G: FiniteGroup, max_candidates: int = MAX_CANDIDATES) -> list[np.ndarray]:
    """All automorphisms, by trying every image tuple for the generators."""
    if G.order > MAX_ORDER:
        raise SearchCapExceeded(f"order {G.order} exceeds {MAX_ORDER}")
    if len(G.generators) > 3:
        raise SearchCapExceeded("more than three generators")
    ords = G.element_orders
    pools = [np.flatnonzero(ords == ords[g]) for g in G.generators]
    total = int(np.prod([len(p) for p in pools]))
    if total > max_candidates:
        raise SearchCapExceeded(f"{total} candidate image tuples")
    words = _spanning_words(G)
    t = G.table
    gens = np.array(G.generators)
    out = []
    for images in itertools.product(*pools):
        phi = np.empty(G.order, dtype=np.int64)
        phi[G.identity] = G.identity
        for y, x, s in words:
            phi[y] = t[phi[x], images[s]]
        img = phi[gens]
        # homomorphism on the generators suffices given phi is built along words
        if not all((phi[t[:, g]] == t[phi, img[s]]).all() for s, g in enumerate(gens)):
            continue
        if len(np.unique(phi)) != G.order:
            continue
        out.append(phi)
    out.sort(key=lambda a: tuple(a[gens]))
    return out


def derived_subgroup(G: FiniteGroup) -> set[int]:
    inv = G.inverse
    t = G.table
    comms = {int(t[t[inv[a], inv[b]], t[a, b]]) for a in range(G.order) for b in range(G.order)}
    return G.closure(comms)


def _perm_order(phi: np.ndarray, limit: int) -> int:
    cur = phi.copy()
    ident = np.arange(len(phi))
    for k in range(1, limit + 1):
        if (cur == ident).all():
            return k
        cur = phi[cur]
    return 0


def _trace(G: FiniteGroup, phi: np.ndarray, x: int, d: int) -> int:
    tr, y = G.identity, x
    for _ in range(d):
        tr = G.mul(tr, y)
        y = int(phi[y])
    return tr


def is_weak(G: FiniteGroup, phi, d: int, derived: set[int], elements=None) -> bool:
    xs = G.generators if elements is None else elements
    return all(_trace(G, phi, x, d) in derived for x in xs)


def is_strong(G: FiniteGroup, phi, d: int, elements=None) -> bool:
    xs = G.generators if elements is None else elements
    return all(_trace(G, phi, x, d) == G.identity for x in xs)


def sigma_census(G: FiniteGroup, d: int = 3, auts=None) -> SigmaCensus:
    """Counts (all automorphisms, order d, weak, strong); traces are taken on generators."""
    auts = automorphisms(G) if auts is None else auts
    derived = derived_subgroup(G)
    o = w = s = 0
    for phi in auts:
        if _perm_order(phi, d) != d:
            continue
        o += 1
        w += is_weak(G, phi, d, derived)
        s += is_strong(G, phi, d)
    return SigmaCensus(len(auts), o, w, s)


# --- elementary abelian groups as matrices ----------------------------------

def _gl_order(n: int, p: int) -> int:
    out = 1
    for i in range(n):
        out *= p ** n - p ** i
    return out


def _brute_matrices(p: int, n: int, d: int) -> tuple[int, int, int]:
    """(|GL|, #order d, #trace zero) by enumerating all n x n matrices mod p."""
    total = p ** (n * n)
    idx = np.arange(total, dtype=np.int64)
    digits = (idx[:, None] // p ** np.arange(n * n)) % p
    mats = digits.reshape(total, n, n)
    eye = np.eye(n, dtype=np.int64)
    powers = [np.broadcast_to(eye, mats.shape)]
    for _ in range(d):
        powers.append(np.einsum("kij,kjl->kil", powers[-1], mats) % p)
    is_unit = _det_nonzero(mats, p)
    order_d = is_unit & (powers[d] == eye).all(axis=(1, 2))
    for k in range(1, d):
        if d % k == 0:
            order_d &= ~(powers[k] == eye).all(axis=(1, 2))
    trace = sum(powers[:d]) % p
    trace_zero = order_d & (trace == 0).all(axis=(1, 2))
    return int(is_unit.sum()), int(order_d.sum()), int(trace_zero.sum())


def _det_nonzero(mats: np.ndarray, p: int) -> np.ndarray:
    """Row-reduce every matrix mod p at once; True where full rank."""
    a = mats.copy() % p
    k, n, _ = a.shape
    ok = np.ones(k, dtype=bool)
    rows = np.arange(k)
    for c in range(n):
        sub = a[:, c:, c]
        has = (sub != 0).any(axis=1)
        ok &= has
        piv = c + np.argmax(sub != 0, axis=1)
        tmp = a[rows, piv].copy()
        a[rows, piv] = a[rows, c]
        a[rows, c] = tmp
        inv = np.array([pow(int(v), -1, p) if v else 0 for v in range(p)])[a[rows, c, c]]
        a[:, c] = (a[:, c] * inv[:, None]) % p
        for r in range(c + 1, n):
            f = a[:, r, c][:, None]
            a[:, r] = (a[:, r] - f * a[:, c]) % p
    return ok


def _count_order3_closed(n: int, p: int) -> tuple[int, int]:
    """(#M of order 3, #M with I+M+M^2 = 0) in GL(n, p) for p != 3.

    Such M are semisimple. Over GF(p) the polynomial x^2+x+1 splits when p = 1
    mod 3 and is irreducible when p = 2 mod 3; each M is fixed by the dimensions
    of its eigen-blocks, counted as |GL(n)| over the centralizer order.
    """
    gl = _gl_order(n, p)

    def gl_ext(m, q):
        return _gl_order(m, q) if m else 1

    order3 = trace0 = 0
    if p % 3 == 1:
        for a in range(n + 1):
            for b in range(n + 1 - a):
                c = n - a - b
                cen = gl_ext(a, p) * gl_ext(b, p) * gl_ext(c, p)
                cnt = gl // cen
                if a < n:
                    order3 += cnt
                if a == 0:
                    trace0 += cnt
    else:
        for b in range(n // 2 + 1):  # b blocks over GF(p^2)
            a = n - 2 * b
            cen = gl_ext(a, p) * gl_ext(b, p * p)
            cnt = gl // cen
            if b:
                order3 += cnt
            if a == 0:
                trace0 += cnt
    return order3, trace0


def elementary_sigma(p: int, rank: int, d: int = 3, method: str = "auto") -> SigmaCensus:
    """Sigma census of (p,...,p) via matrices: weak = strong = #{M : I+M+...+M^{d-1} = 0}."""
    if not is_prime(p) or p == 3:
        raise ValueError("p must be a prime other than 3")
    if not 1 <= rank <= 4 or p ** rank > 10 ** 4:
        raise ValueError("need 1 <= rank <= 4 and p^rank <= 10^4")
    brute_ok = p ** (rank * rank) <= 2 ** 16
    if method == "brute" or (method == "auto" and brute_ok):
        c, o, w = _brute_matrices(p, rank, d)
        return SigmaCensus(c, o, w, w)
    if d != 3:
        raise ValueError("closed form covers degree 3 only")
    o, w = _count_order3_closed(rank, p)
    return SigmaCensus(_gl_order(rank, p), o, w, w)


# --- Frattini quotient ------------------------------------------------------

def frattini_subgroup(G: FiniteGroup, p: int) -> set[int]:
    pth = {G.power(x, p) for x in range(G.order)}
    return G.closure(derived_subgroup(G) | pth)


def frattini_admits(G: FiniteGroup, critical_order: int = 3, auts=None) -> bool:
    """Whether the image of Aut(G) in Aut(G/Phi(G)) has an element of the critical order."""
    n = G.order
    p = next(q for q in range(2, n + 1) if n % q == 0)
    if p ** round(np.log(n) / np.log(p)) != n:
        raise ValueError("G must be a p-group")
    phi_sub = frattini_subgroup(G, p)
    # coordinates of every element over a basis of G/Phi
    reps = sorted(phi_sub)
    coords: dict[int, tuple[int, ...]] = {}
    basis: list[int] = []
    span = set(phi_sub)
    for x in G.generators:
        if x not in span:
            basis.append(x)
            span = G.closure(list(phi_sub) + basis)
    r = len(basis)
    for exps in itertools.product(range(p), repeat=r):
        y = G.identity
        for e, b in zip(exps, basis):
            y = G.mul(y, G.power(b, e))
        for f in reps:
            coords[G.mul(y, f)] = exps
    auts = automorphisms(G) if auts is None else auts
    mats = {tuple(tuple(coords[int(a[b])]) for b in basis) for a in auts}
    for m in mats:
        M = np.array(m, dtype=np.int64).T % p
        if _matrix_order(M, p, critical_order) == critical_order:
            return True
    return False


def _matrix_order(M: np.ndarray, p: int, limit: int) -> int:
    eye = np.eye(len(M), dtype=np.int64)
    cur = M.copy()
    for k in range(1, limit + 1):
        if (cur == eye).all():
            return k
        cur = (cur @ M) % p
    return 0
