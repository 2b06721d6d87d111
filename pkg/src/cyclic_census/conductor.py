"""ell-admissible conductors and their elementary invariants."""
from __future__ import annotations

from dataclasses import dataclass

from .arith import Factorization, factorize, is_prime

_LIMIT = 1 << 63


class InadmissibleConductor(ValueError):
    pass


@dataclass(frozen=True)
class Conductor:
    ell: int
    c: int
    e: int
    ramified_primes: tuple[int, ...]  # ell is recorded as ell**2

    @property
    def t(self) -> int:
        return len(self.ramified_primes)

    @property
    def tau(self) -> int:
        return self.t - (1 if self.e else 0)

    @property
    def multiplicity(self) -> int:
        return (self.ell - 1) ** (self.t - 1)


def _check_ell(ell: int) -> None:
    if ell < 3 or not is_prime(ell):
        raise ValueError(f"ell must be an odd prime, got {ell}")


def admissible_factorization(ell: int, fac: Factorization) -> bool:
    if fac.value == 1:
        return False
    for q, n in fac.factors:
        if q == ell:
            if n != 2:
                return False
        elif n != 1 or q % ell != 1:
            return False
    return True


def is_admissible(ell: int, c: int) -> bool:
    _check_ell(ell)
    if c < 1:
        raise ValueError("conductor must be positive")
    return admissible_factorization(ell, factorize(c))


def from_factorization(ell: int, fac: Factorization) -> Conductor:
    if not admissible_factorization(ell, fac):
        raise InadmissibleConductor(f"{fac.value} is not {ell}-admissible ({fac})")
    primes = sorted(q * q if q == ell else q for q, _ in fac.factors)
    e = 2 if fac.value % ell == 0 else 0
    return Conductor(ell, fac.value, e, tuple(primes))


def decompose(ell: int, c: int) -> Conductor:
    _check_ell(ell)
    if c < 1:
        raise InadmissibleConductor("conductor must be positive")
    return from_factorization(ell, factorize(c))


def multiplicity(ell: int, c: int) -> int:
    return decompose(ell, c).multiplicity


def discriminant(ell: int, c: int) -> int:
    decompose(ell, c)
    d = c ** (ell - 1)
    if d >= _LIMIT:
        raise OverflowError(f"discriminant {c}^{ell - 1} exceeds 63 bits")
    return d


def ambiguous_counts(t: int) -> tuple[int, int]:
    """(primitive ambiguous ideals, ambiguous principal ideals) for t ramified primes."""
    if t < 1:
        raise ValueError("t must be >= 1")
    return 3**t, 3
