"""Integer and modular-arithmetic primitives."""
from __future__ import annotations

import math
from functools import lru_cache
from dataclasses import dataclass

import numpy as np

# Witness set that makes Miller-Rabin deterministic below 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)
_LIMIT = 1 << 63


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"malformed factorization of {self.value}: {self.factors}")
            last = p
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors of {self.value} multiply to {prod}")

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


@dataclass(frozen=True)
class CubicCharacter:
    """ell-th power residue character of `residue` modulo `modulus`.

    `coarse` is +1 for a residue, -1 for a non-residue and 0 when the
    modulus divides the residue; `exponent` is the index mod ell relative
    to the smallest primitive root (meaningless when coarse is 0).
    """

    modulus: int
    residue: int
    exponent: int
    coarse: int


def _check_range(n: int) -> None:
    if n < 0 or n >= _LIMIT:
        raise ValueError(f"{n} outside the supported range [0, 2^63)")


def is_prime(n: int) -> bool:
    _check_range(n)
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """Return a non-trivial factor of the odd composite n."""
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        f = lambda v: (v * v + c) % n  # noqa: E731
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = f(y)
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = f(y)
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = f(ys)
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"Pollard rho failed on {n}")


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _split(d, out)
    _split(n // d, out)


def factorize(n: int) -> Factorization:
    """Trial division by small primes, Pollard-Brent rho for what is left."""
    _check_range(n)
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out: dict[int, int] = {}
    m = n
    p = 2
    while p < 1000 and p * p <= m:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        _split(m, out)
    return Factorization(n, tuple(sorted(out.items())))


def spf_sieve(limit: int) -> np.ndarray:
    """Smallest-prime-factor table for 0..limit-1 (entries 0 and 1 are 0)."""
    spf = np.zeros(max(limit, 2), dtype=np.int64)
    for p in range(2, math.isqrt(max(limit - 1, 1)) + 1):
        if spf[p] == 0:
            seg = spf[p * p :: p]
            seg[seg == 0] = p
    idx = np.arange(len(spf))
    prime = (spf == 0) & (idx >= 2)
    spf[prime] = idx[prime]
    return spf[:limit]


def factorize_with_spf(n: int, spf: np.ndarray) -> Factorization:
    out: list[tuple[int, int]] = []
    m = n
    while m > 1:
        p = int(spf[m])
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        out.append((p, e))
    return Factorization(n, tuple(out))


def _phi_of_valid_modulus(m: int) -> int:
    if m == 9:
        return 6
    if m > 2 and is_prime(m):
        return m - 1
    raise ValueError(f"invalid modulus {m}: need an odd prime or 9")


def _order(g: int, m: int, phi: int) -> int:
    order = phi
    for q, _ in factorize(phi).factors:
        while order % q == 0 and pow(g, order // q, m) == 1:
            order //= q
    return order


@lru_cache(maxsize=4096)
def smallest_primitive_root(m: int) -> int:
    phi = _phi_of_valid_modulus(m)
    for g in range(2, m):
        if math.gcd(g, m) == 1 and _order(g, m, phi) == phi:
            return g
    raise ArithmeticError(f"no primitive root mod {m}")  # unreachable for valid m


def primitive_roots(m: int, count: int | None = None) -> list[int]:
    """Primitive roots of m in increasing order (all of them by default)."""
    phi = _phi_of_valid_modulus(m)
    roots = []
    for g in range(2, m):
        if math.gcd(g, m) == 1 and _order(g, m, phi) == phi:
            roots.append(g)
            if count is not None and len(roots) == count:
                break
    return roots


def cubic_exponent(ell: int, m: int, r: int, g: int | None = None) -> CubicCharacter:
    """ell-th power residue character of r modulo m via Euler's criterion.

    `g` overrides the primitive root used to normalize the exponent.
    """
    phi = _phi_of_valid_modulus(m)
    if ell < 3 or not is_prime(ell):
        raise ValueError(f"ell must be an odd prime, got {ell}")
    if phi % ell:
        raise ValueError(f"{ell} does not divide phi({m}) = {phi}")
    if r % m == 0:
        return CubicCharacter(m, r, 0, 0)
    if math.gcd(r, m) != 1:
        raise ValueError(f"residue {r} shares a factor with modulus {m}")
    if g is None:
        g = smallest_primitive_root(m)
    k = phi // ell
    omega = pow(g, k, m)
    target = pow(r, k, m)
    w = 1
    for e in range(ell):
        if w == target:
            return CubicCharacter(m, r, e, 1 if e == 0 else -1)
        w = w * omega % m
    raise ArithmeticError(f"{g} is not a primitive root mod {m}")


def character_table(ell: int, m: int, g: int | None = None) -> np.ndarray:
    """Exponents of the character for every residue 0..m-1 at once (-1 where undefined)."""
    phi = _phi_of_valid_modulus(m)
    if phi % ell:
        raise ValueError(f"{ell} does not divide phi({m}) = {phi}")
    g = smallest_primitive_root(m) if g is None else g
    k = phi // ell
    r = np.arange(m, dtype=np.int64)
    # vectorized square-and-multiply: r^k mod m (m < 2^31 keeps products in int64)
    if m >= 1 << 31:
        raise ValueError("modulus too large for the vectorized table")
    acc = np.ones(m, dtype=np.int64)
    base = r % m
    e = k
    while e:
        if e & 1:
            acc = acc * base % m
        base = base * base % m
        e >>= 1
    out = np.full(m, -1, dtype=np.int64)
    omega = pow(g, k, m)
    w = 1
    for j in range(ell):
        out[acc == w] = j
        w = w * omega % m
    out[np.gcd(r, m) != 1] = -1
    return out
