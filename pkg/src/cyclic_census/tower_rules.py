"""Deterministic rules from arithmetical data to second 3-class groups and tower lengths.

Rules live in tables keyed by canonical pattern strings (see ``patterns``), so a
fixture row and a rule are compared in one format.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache

from .classify import CategoryGraph, role_assignment
from .patterns import (GroupId, GroupList, canonical_ati, canonical_kappa,
                       format_group_list, groups_match, parse_group_list)

OK, AMBIGUOUS, SINGULAR, SUPER_SINGULAR, NO_RULE = (
    "ok", "ambiguous", "singular", "super-singular", "no rule")


class NoRule(ValueError):
    """Raised by the stage rules when a pattern is not covered."""


@dataclass(frozen=True)
class TowerPrediction:
    status: str
    groups: tuple[GroupList, ...] = ()   # alternatives; each is a full multiplet
    kappa: str = ""
    kappa_type: str = ""
    tau: str = ""
    length: int | None = None
    length_at_least: int | None = None
    principal_factors: tuple[int, ...] = ()
    candidates: tuple[GroupId, ...] = ()  # per-member pool when no multiplet is fixed
    note: str = ""
    exception: str = ""                   # printed groups of a known exceptional conductor

    @property
    def determined(self) -> bool:
        return self.status == OK

    def matches(self, printed: GroupList | str) -> bool:
        if isinstance(printed, str):
            printed = parse_group_list(printed)
        if any(groups_match(printed, alt) for alt in self.groups):
            return True
        if self.candidates and printed:
            pool = self.candidates
            return all(any(g.compatible(c) for c in pool) for part in printed for g in part)
        return False

    def describe(self) -> str:
        if self.groups:
            text = " or ".join(format_group_list(g) for g in self.groups)
        elif self.candidates:
            text = "one of " + ", ".join(map(str, self.candidates))
        else:
            text = self.status
        if self.status not in (OK, NO_RULE) and self.groups:
            text = f"{self.status}: {text}"
        return text


def _g(text: str) -> tuple[GroupList, ...]:
    return tuple(parse_group_list(alt) for alt in text.split(" or "))


# --- principal factors ------------------------------------------------------

def principal_factor(a: int, b: int) -> int:
    """Minimal norm min(a*b^2, a^2*b) of a primitive ambiguous principal ideal."""
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive")
    if math.gcd(a, b) != 1:
        raise ValueError(f"{a} and {b} are not coprime")
    return min(a * b * b, a * a * b)


# --- doublets ---------------------------------------------------------------

_TWO_PRIME = {
    2: TowerPrediction(OK, _g("<9,2>"), "(0000)", "a.1", "[1,1,1,1]", length=1),
    1: TowerPrediction(OK, _g("<27,4>"), "(1111)", "A.1", "[11,2,2,2]", length=2),
}


def two_prime_rule(n: int) -> TowerPrediction:
    """n is the number of prime divisors of the principal factor of a doublet field."""
    try:
        return _TWO_PRIME[n]
    except KeyError:
        raise ValueError(f"principal factor has 1 or 2 prime divisors, got {n}") from None


# Candidate pools observed per genus class group shape for v in 4..6.
SUPER_SINGULAR_CANDIDATES = {
    "(3,3,9)": "<243,14>,<729,17>,<243,15>,*",
    "(3,3,3,3)": "<243,13>,<729,12>",
    "(3,9,27)": "<243,14>,*,**",
    "(3,3,9,9)": "<243,14>,*,**",
    "(3,9,9)": "<243,14>,*,**",
}


def genus_rule(v: int, genus_shape: str | None = None) -> TowerPrediction:
    """Classify a doublet by the 3-valuation v of the genus field class number."""
    if v < 0:
        raise ValueError("v must be nonnegative")
    if v == 0:
        return TowerPrediction(NO_RULE, note="v = 0 does not occur for t = 2 doublets")
    if v in (1, 2):
        return _TWO_PRIME[3 - v]
    if v == 3:
        return TowerPrediction(SINGULAR, _g("<81,3>^2"), "(000;0)", "a.1", "[(21)^3;1^3]")
    pool = ()
    if genus_shape is not None:
        key = genus_shape.replace(" ", "")
        if key not in SUPER_SINGULAR_CANDIDATES:
            return TowerPrediction(SUPER_SINGULAR, note=f"no candidates recorded for {key}")
        pool = parse_group_list(SUPER_SINGULAR_CANDIDATES[key])[0]
    return TowerPrediction(SUPER_SINGULAR, candidates=pool)


def two_prime_genus_valuation(mutual: bool, v3: int, v4: int, vI: int) -> int:
    """v = vI - 5 + v3 + v4 for a doublet with partial valuations v3, v4 and I = 3^vI."""
    if vI not in (0, 1, 2, 3):
        raise ValueError("vI must lie in 0..3")
    v = vI - 5 + v3 + v4
    consistent = {
        0: not mutual and v3 == v4 == 1 and vI == 3,
        1: mutual and v3 == v4 == 2 and vI == 2,
        2: mutual and v3 == v4 == 2 and vI == 3,
    }.get(v, mutual and v3 >= 3 and v4 >= 3)
    if v < 0 or not consistent:
        raise ValueError(f"inconsistent genus data mutual={mutual} v3={v3} v4={v4} vI={vI}")
    return v


# --- capitulation -----------------------------------------------------------

_CAPITULATION = {1: (3, "line"), 3: (9, "plane"), 9: (27, "space")}


def capitulation_lookup(unit_norm_index: int) -> tuple[int, str]:
    """Capitulation kernel order and its geometry from the unit norm index."""
    try:
        return _CAPITULATION[unit_norm_index]
    except KeyError:
        raise ValueError(f"unit norm index must be 1, 3 or 9, got {unit_norm_index}") from None


# --- quartets ---------------------------------------------------------------

_CAT3_ABELIAN = TowerPrediction(OK, _g("<9,2>^4"), "(0000)", "a.1", "[1,1,1,1]", length=1,
                                note="genus ATI [(0)^3;(1)^10]")
_WREATH = TowerPrediction(OK, _g("<81,7>^4"), "(2000)", "a.3", "[111,(11)^3]", length=2,
                          note="genus ATI [(0)^2,1;(11)^8,(111)^2]")

# Graphs 5 and 8 of Category III, keyed by the genus ATI.
_CAT3_GRAPH58 = {
    "[(0)^2,11;(11)^8,(111)^2]": "<81,7>^4",
    "[(0)^2,1;(11)^7,(21)^3]": "<243,28|29|30>^4",
    "[(0)^2,1;(11)^7,(21)^2,22]": "<243,27>,<243,28|29|30>^3 or <243,25>^2,<243,28|29|30>^2",
    "[(0)^2,1;(11)^7,(22)^3]": "<243,25>^2,<243,27>^2",
}

_CAT2 = {
    "[(0)^3;(11)^8,(111)^2]": TowerPrediction(
        OK, _g("<81,13>^2;<81,7>^2"), "(O^9P^4);(2000)", "a.3", length=2),
}

# The middle line reads <243,46> in the theorem; four regular table rows print <243,47>.
_CAT1 = {
    "[(0)^3;(11)^7,(21)^3]": "<81,14>;<81,8>,<81,10>^2",
    "[(0)^3;(11)^6,(21)^2,22,111]": "<243,46|47>;<243,25>,<243,28|29|30>^2",
    "[(0)^3;(21)^9,211]": "<243,42>;<243,8>^3",
}


def _factors(cg: CategoryGraph, roles: dict[str, int] | None) -> tuple[int, ...]:
    if roles is None or cg.category != "III":
        return ()
    # the ambiguous prime ideal over 3 has norm 3, even though 9 divides the conductor
    i, j, k = (3 if roles[r] == 9 else roles[r] for r in "ijk")
    return {
        5: (i * j * k, i * i * j * k, i * j * j * k, i * j * k * k),
        6: (j,) * 4,
        7: (i * k, i * k, i * i * k, i * i * k),
        8: (k,) * 4,
        9: (j,) * 4,
    }.get(cg.graph, ())


def quartet_rule(cg: CategoryGraph, v: int | None = None, ati: str | None = None,
                 primes=None, edges=None, conductor: int | None = None) -> TowerPrediction:
    """Second 3-class groups of the four fields sharing a three-prime conductor.

    v is the genus valuation of the doublet with the mutual pair (Category III
    graphs 5 to 9); ati is the genus abelian type invariant list. Supplying the
    conductor's primes and edges resolves principal factors to integers, and a
    conductor listed as exceptional carries its printed groups.
    """
    pred = _quartet_rule(cg, v, ati)
    if primes is not None and edges is not None and pred.status != NO_RULE:
        pf = _factors(cg, role_assignment(cg.category, cg.graph, tuple(primes), edges))
        pred = replace(pred, principal_factors=pf)
    if conductor is not None:
        exc = known_exceptions().get(conductor)
        if exc:
            pred = replace(pred, exception=exc)
    return pred


def _quartet_rule(cg: CategoryGraph, v: int | None, ati: str | None) -> TowerPrediction:
    key = canonical_ati(ati) if ati else None
    cat, graph = cg.category, cg.graph
    if cat == "III" and graph <= 4:
        return _CAT3_ABELIAN
    if cat == "III" and graph in (6, 7, 9):
        if v is None:
            return TowerPrediction(NO_RULE, note="needs the genus valuation of the mutual pair")
        if v == 1 or (v == 2 and graph in (6, 9)):
            return _WREATH
        if v == 2:
            return replace(_WREATH, status=AMBIGUOUS, length=None,
                           note="graph 7 with v = 2 is not covered uniformly")
        return TowerPrediction(NO_RULE, note=f"partial conductor with v = {v} is not regular")
    if cat == "III" and graph in (5, 8):
        if v is not None and v > 2:
            return TowerPrediction(NO_RULE, note=f"partial conductor with v = {v} is not regular")
        if key in _CAT3_GRAPH58:
            return TowerPrediction(OK, _g(_CAT3_GRAPH58[key]), length=2)
        return TowerPrediction(NO_RULE, note=f"no rule for genus ATI {key}")
    if cat == "II":
        return _CAT2.get(key) or TowerPrediction(NO_RULE, note=f"no rule for genus ATI {key}")
    if cat == "I":
        if key in _CAT1:
            return TowerPrediction(OK, _g(_CAT1[key]), length=2)
        return TowerPrediction(NO_RULE, note=f"no rule for genus ATI {key}")
    return TowerPrediction(NO_RULE, note=f"no rule for {cg.label}")


@lru_cache(maxsize=None)
def known_exceptions() -> dict[int, str]:
    from .fixtures import load_all
    return {row.conductor: row.groups for row in load_all() if row.exception}


# --- Artin pattern laws -----------------------------------------------------

@dataclass(frozen=True)
class StageRule:
    tau: str
    kappa: str
    groups: str
    kappa_type: str = ""
    tau2: str | None = None
    length: int | None = 2
    note: str = ""
    metabelian_only: bool = False
    cover: str = ""  # tower group candidates when tau2 is missing


def _tau_key(tau: str) -> str:
    return canonical_ati(tau) if tau else ""


def _tau2_key(tau2: str | None) -> str | None:
    if tau2 is None:
        return None
    s = tau2.replace(" ", "")
    return canonical_ati(s) if s.startswith("[") else s


RULES_33 = (
    StageRule("[(1)^4]", "(0000)", "<9,2>", "a.1", length=1),
    StageRule("[11,(2)^3]", "(1111)", "<27,4>", "A.1"),
    StageRule("[111,(11)^3]", "(2000)", "<81,7>", "a.3"),
    StageRule("[21,(11)^3]", "(2000)", "<81,8>", "a.3"),
    StageRule("[21,(11)^3]", "(1000)", "<81,10>", "a.2"),
    StageRule("[22,(11)^3]", "(2000)", "<243,25>", "a.3"),
    StageRule("[22,(11)^3]", "(1000)", "<243,27>", "a.2"),
    StageRule("[21,(11)^3]", "(0000)", "<81,9>", "a.1", tau2="[11]"),
    StageRule("[21,(11)^3]", "(0000)", "<243,28..30>", "a.1", tau2="[21]"),
    StageRule("[(21)^2,(111)^2]", "(0043)", "<729,34..36>", "b.10", tau2="[1111]",
              length=None, metabelian_only=True),
    StageRule("[(21)^2,(111)^2]", "(0043)", "<729,37..39>", "b.10", tau2="[211]",
              length=None, metabelian_only=True),
    StageRule("[22,(21)^3]", "(0231)", "<2187,307|308>", "c.21",
              tau2="(11;[22;(211)^4],[21;211,(31)^3],[21;211,(21)^3]^2)", length=3,
              note="<2187,308> is twice as likely; metabelianization <729,54>",
              cover="<729,54> or <2187,307> or <2187,308>"),
    StageRule("[22,21,111,111]", "(4043)", "<2187,265>", "d.19",
              tau2="(11;[22;(211)^4],[21;211,(21)^3],[111;(211)^4,(11)^9],"
                   "[111;211,(111)^3,(11)^9])", length=3,
              note="metabelianization <729,41>",
              cover="<729,41> or <2187,263> or <2187,264> or <2187,265>"),
)

RULES_333 = (
    StageRule("[(11)^13]", "(O^13)", "<27,5>", length=1),
    StageRule("[(11)^9,(21)^3,111]", "(O^9P^4)", "<81,13>"),
    StageRule("[(11)^9,(21)^4]", "(O^9P^4)", "<81,14>"),
    StageRule("[111,(21)^11,22]", "((P_i^3)_{i=1}^4L)", "<243,46>"),
    StageRule("[(111)^4,(21)^8,22]", "((P_i^3)_{i=1}^4L)", "<243,47>"),
    StageRule("[111;1111,(111)^3,(21)^9]", "(O^3P^10)", "<6561,261262..261270>", length=3,
              note="metabelianization one of <2187,5577..5579>"),
)


def _lookup(rules, tau: str, kappa: str, tau2: str | None) -> TowerPrediction:
    tk, kk = _tau_key(tau), canonical_kappa(kappa)
    hits = [r for r in rules if (_tau_key(r.tau), canonical_kappa(r.kappa)) == (tk, kk)]
    if not hits:
        raise NoRule(f"no law for tau={tau} kappa={kappa}")
    if all(r.tau2 is None for r in hits):
        r = hits[0]
    elif tau2 is None:
        alts = hits[0].cover if hits[0].cover else " or ".join(r.groups for r in hits)
        return TowerPrediction(AMBIGUOUS, _g(alts), kappa, hits[0].kappa_type, tau,
                               note="second order invariants are needed")
    else:
        r = next((r for r in hits if _tau2_key(r.tau2) == _tau2_key(tau2)), None)
        if r is None:
            raise NoRule(f"no law for tau={tau} kappa={kappa} tau2={tau2}")
    prefix = "second 3-class group only; " if r.metabelian_only else ""
    return TowerPrediction(OK, (parse_group_list(r.groups),), kappa, r.kappa_type, tau,
                           length=r.length, length_at_least=2 if r.length is None else None,
                           note=(prefix + r.note).strip("; "))


def stage_rule_33(tau: str, kappa: str, tau2: str | None = None) -> TowerPrediction:
    """Tower group from the Artin pattern of a field with 3-class group (3,3)."""
    return _lookup(RULES_33, tau, kappa, tau2)


def stage_rule_333(tau: str, kappa: str) -> TowerPrediction:
    """Tower group from the Artin pattern of a field with 3-class group (3,3,3)."""
    return _lookup(RULES_333, tau, kappa, None)
