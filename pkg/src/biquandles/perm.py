"""Permutations of ``range(n)`` stored as tuples or numpy rows.

Internally everything is 0-based; the text forms (cycle notation, JSON) are
1-based to match the printed tables.
"""
from __future__ import annotations

import re
from functools import lru_cache
from itertools import permutations

import numpy as np

from .errors import DomainError, ParseError

IOTA = "ι"
_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@lru_cache(maxsize=None)
def all_perms(n: int) -> np.ndarray:
    """All permutations of ``range(n)`` in lexicographic order, shape (n!, n)."""
    arr = np.array(list(permutations(range(n))), dtype=np.int64).reshape(-1, n)
    arr.setflags(write=False)
    return arr


def is_perm(row, n: int) -> bool:
    return len(row) == n and sorted(int(x) for x in row) == list(range(n))


def inverse(p) -> tuple:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[int(x)] = i
    return tuple(inv)


def compose(p, q) -> tuple:
    """Apply ``p`` first, then ``q``."""
    return tuple(int(q[int(x)]) for x in p)


def is_identity(p) -> bool:
    return all(int(x) == i for i, x in enumerate(p))


def cycles(p) -> list[list[int]]:
    """Non-trivial cycles, each starting at its smallest point, sorted."""
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or int(p[i]) == i:
            continue
        cyc = [i]
        seen.add(i)
        j = int(p[i])
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = int(p[j])
        out.append(cyc)
    return out


def format_cycles(p, identity: str = IOTA) -> str:
    cs = cycles(p)
    if not cs:
        return identity
    return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cs)


def parse_cycles(text: str, n: int) -> tuple:
    """Parse ``"(1 3 2)(4 5)"``, ``"(132)"`` or an identity symbol.

    Compact cycles without spaces are read digit by digit, so they only make
    sense for ``n <= 9``.
    """
    s = text.strip()
    if s in ("", "i", "I", IOTA, "id", "\\iota"):
        return tuple(range(n))
    p = list(range(n))
    pos = 0
    for m in _CYCLE_RE.finditer(s):
        if s[pos:m.start()].strip():
            raise ParseError(f"unexpected text {s[pos:m.start()]!r} in cycle notation", offset=pos + 1)
        pos = m.end()
        body = m.group(1).strip()
        if not body:
            continue
        tokens = body.replace(",", " ").split()
        if len(tokens) == 1 and len(tokens[0]) > 1:
            tokens = list(tokens[0])
        try:
            pts = [int(t) - 1 for t in tokens]
        except ValueError:
            raise ParseError(f"bad cycle {m.group(0)!r}", offset=m.start() + 1) from None
        if len(set(pts)) != len(pts) or any(not 0 <= x < n for x in pts):
            raise DomainError(f"cycle {m.group(0)} is not a cycle on 1..{n}")
        for k, x in enumerate(pts):
            if p[x] != x:
                raise DomainError(f"cycles in {s!r} are not disjoint")
            p[x] = pts[(k + 1) % len(pts)]
    if s[pos:].strip():
        raise ParseError(f"unexpected text {s[pos:]!r} in cycle notation", offset=pos + 1)
    return tuple(p)


def perm_order(p) -> int:
    from math import lcm

    k = 1
    for c in cycles(p):
        k = lcm(k, len(c))
    return k


def as_perm(sigma, n: int) -> tuple:
    """Accept cycle notation or a sequence of 1-based images; return 0-based."""
    if isinstance(sigma, str):
        return parse_cycles(sigma, n)
    p = tuple(int(x) - 1 for x in sigma)
    if not is_perm(p, n):
        raise DomainError(f"{list(sigma)} is not a permutation of 1..{n}")
    return p
