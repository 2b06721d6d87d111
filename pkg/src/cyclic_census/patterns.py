"""Parsing and canonical forms for group identifiers and abelian type invariant lists."""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations


# --- group identifiers ------------------------------------------------------

@dataclass(frozen=True)
class GroupId:
    """SmallGroups-style identifier <order,id>; ids=None means unknown ("*")."""

    order: int | None
    ids: tuple[int, ...] | None

    def __str__(self) -> str:
        if self.ids is None:
            return "*"
        return "<%d,%s>" % (self.order, "|".join(map(str, self.ids)))

    def compatible(self, other: "GroupId") -> bool:
        if self.ids is None or other.ids is None:
            return True
        return self.order == other.order and bool(set(self.ids) & set(other.ids))


_GID = re.compile(r"<(\d+)(?:\^(\d+))?,([\d|.]+)>")


def parse_group_id(text: str) -> GroupId:
    s = text.strip()
    if s.strip("*") == "":
        return GroupId(None, None)
    m = _GID.fullmatch(s)
    if not m:
        raise ValueError(f"bad group identifier {text!r}")
    order = int(m.group(1)) ** int(m.group(2) or 1)
    ids: list[int] = []
    for piece in m.group(3).split("|"):
        if ".." in piece:
            a, b = piece.split("..")
            ids.extend(range(int(a), int(b) + 1))
        else:
            ids.append(int(piece))
    return GroupId(order, tuple(ids))


# Groups of a multiplet: parts separated by ';' (rank-3 members first), each part
# a flat tuple of members.
GroupList = tuple[tuple[GroupId, ...], ...]


def _split_top(text: str, sep: str) -> list[str]:
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch in "<([":
            depth += 1
        elif ch in ">)]":
            depth -= 1
        if ch == sep and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return out


def parse_group_list(text: str) -> GroupList:
    text = text.replace(" ", "")
    if not text:
        return ()
    parts = []
    for part in text.split(";"):
        members: list[GroupId] = []
        for tok in _split_top(part, ","):
            if not tok:
                continue
            m = re.fullmatch(r"(.*?)(?:\^(\d+))?", tok)
            body, mult = m.group(1), int(m.group(2) or 1)
            if body.endswith(">") or body.strip("*") == "":
                members.extend([parse_group_id(body)] * mult)
            else:
                raise ValueError(f"bad group list {text!r}")
        parts.append(tuple(members))
    return tuple(parts)


def format_group_list(groups: GroupList) -> str:
    parts = []
    for part in groups:
        runs: list[list] = []
        for g in part:
            if runs and runs[-1][0] == g:
                runs[-1][1] += 1
            else:
                runs.append([g, 1])
        parts.append(",".join(f"{g}^{n}" if n > 1 else str(g) for g, n in runs))
    return ";".join(parts)


def groups_match(printed: GroupList, predicted: GroupList) -> bool:
    """Multiset match per part; unknown members and shared ids count as agreement."""
    if len(printed) != len(predicted):
        return False
    for a, b in zip(printed, predicted):
        if len(a) != len(b):
            return False
        if not any(all(x.compatible(y) for x, y in zip(a, perm)) for perm in set(permutations(b))):
            return False
    return True


def flatten(groups: GroupList) -> GroupList:
    return (tuple(g for part in groups for g in part),)


# --- abelian type invariants ------------------------------------------------

def _expand_entry(tok: str) -> str:
    digits = ""
    for d, e in re.findall(r"(\d)(?:\^(\d))?", tok):
        digits += d * int(e or 1)
    if not digits:
        raise ValueError(f"bad invariant entry {tok!r}")
    return "".join(sorted(digits, reverse=True))


def parse_ati(text: str) -> tuple[tuple[str, ...], ...]:
    """'[(0)^2,1;(1^2)^8,(1^3)^2]' -> (('0','0','1'), ('11',)*8 + ('111',)*2)."""
    body = text.replace(" ", "").strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"bad invariant list {text!r}")
    parts = []
    for part in _split_top(body[1:-1], ";"):
        entries: list[str] = []
        for tok in _split_top(part, ","):
            m = re.fullmatch(r"\((.*)\)\^(\d+)", tok)
            if m:
                entries.extend([_expand_entry(m.group(1))] * int(m.group(2)))
            else:
                entries.append(_expand_entry(tok.strip("()")))
        parts.append(tuple(sorted(entries, key=lambda e: (len(e), e))))
    return tuple(parts)


def format_ati(parts) -> str:
    out = []
    for part in parts:
        runs: list[list] = []
        for e in part:
            if runs and runs[-1][0] == e:
                runs[-1][1] += 1
            else:
                runs.append([e, 1])
        out.append(",".join(f"({e})^{n}" if n > 1 else e for e, n in runs))
    return "[" + ";".join(out) + "]"


def canonical_ati(text: str) -> str:
    return format_ati(parse_ati(text))


def ati_valuation(text: str) -> int:
    """Sum of the logarithmic exponents in the first part (the sub genus fields)."""
    return sum(int(d) for e in parse_ati(text)[0] for d in e)


# --- capitulation types -----------------------------------------------------

def canonical_kappa(text: str) -> str:
    """Least relabeling of a numeric transfer kernel type such as '(2000)'.

    Entry i names the subgroup into which the i-th class capitulates (0 = total);
    equivalence renumbers the subgroups simultaneously on both sides.
    Symbolic types such as '(O^9P^4)' are only stripped of spaces.
    """
    s = text.replace(" ", "")
    body = s.strip("()")
    if not body.isdigit():
        return s if s.startswith("(") else f"({s})"
    k = [int(ch) for ch in body]
    n = len(k)
    best = None
    for perm in permutations(range(1, n + 1)):
        relabel = {0: 0, **{i + 1: perm[i] for i in range(n)}}
        new = [0] * n
        for i, v in enumerate(k):
            new[relabel[i + 1] - 1] = relabel[v]
        cand = "".join(map(str, new))
        if best is None or cand > best:
            best = cand
    return f"({best})"
