"""Finite biracks: switch evaluation, axioms, classification, isomorphism.

A birack on ``X = {1..n}`` is stored as two ``n x n`` action tables.  Row
``b`` of ``up`` is the permutation ``a -> a^b`` and row ``b`` of ``down`` is
``a -> a_b``.  The switch is ``S(a, b) = (b^a, a_b)``.  Arrays are 0-based;
the public element-level functions take and return 1-based labels.

Operators are composed diagrammatically: in a word such as ``T1 S2 S1`` the
leftmost factor acts first.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np

from . import perm as _perm
from .errors import CapacityError, DomainError, StructuralError

CANONICAL_BOUND = 8

QUANDLE = "quandle"
RACK = "rack"
BIQUANDLE = "biquandle"
BIRACK = "birack"
INVALID = "invalid"
CLASSES = (QUANDLE, RACK, BIQUANDLE, BIRACK, INVALID)


def _as_table(rows, name: str) -> np.ndarray:
    t = np.array(rows, dtype=np.int64)
    if t.ndim != 2 or t.shape[0] != t.shape[1]:
        raise DomainError(f"{name} table must be square, got shape {t.shape}")
    n = t.shape[0]
    for b in range(n):
        if not _perm.is_perm(t[b], n):
            raise DomainError(f"{name} row {b + 1} is not a permutation: {list(t[b] + 1)}")
    t.setflags(write=False)
    return t


class FiniteBirack:
    """Up/down action tables on ``{1..n}`` (0-based internally).

    Construction only checks that every row is a permutation; the axioms are
    checked by :func:`check_B2`, :func:`check_B3` and :func:`classify`.
    """

    __slots__ = ("n", "up", "down", "_key")

    def __init__(self, up, down):
        self.up = _as_table(up, "up")
        self.down = _as_table(down, "down")
        if self.up.shape != self.down.shape:
            raise DomainError("up and down tables differ in size")
        self.n = self.up.shape[0]
        self._key = None

    @classmethod
    def from_rows(cls, up_rows, down_rows) -> "FiniteBirack":
        """Build from 1-based rows: ``up_rows[b-1][a-1] = a^b``."""
        return cls(np.asarray(up_rows) - 1, np.asarray(down_rows) - 1)

    @classmethod
    def from_cycles(cls, n: int, up, down) -> "FiniteBirack":
        """Build from cycle notation, one string per row.

        A single string stands for a table whose rows are all equal.
        """
        def rows(spec):
            if isinstance(spec, str):
                spec = [spec] * n
            if len(spec) != n:
                raise DomainError(f"expected {n} rows, got {len(spec)}")
            return [_perm.parse_cycles(s, n) for s in spec]

        return cls(rows(up), rows(down))

    def encoding(self) -> tuple:
        """Flat encoding: up rows then down rows, 0-based."""
        if self._key is None:
            self._key = tuple(self.up.ravel().tolist()) + tuple(self.down.ravel().tolist())
        return self._key

    def up_rows(self) -> list[list[int]]:
        return (self.up + 1).tolist()

    def down_rows(self) -> list[list[int]]:
        return (self.down + 1).tolist()

    def __eq__(self, other):
        if not isinstance(other, FiniteBirack):
            return NotImplemented
        return self.encoding() == other.encoding()

    def __hash__(self):
        return hash(self.encoding())

    def __repr__(self):
        up = ", ".join(_perm.format_cycles(r) for r in self.up)
        down = ", ".join(_perm.format_cycles(r) for r in self.down)
        return f"FiniteBirack(n={self.n}, U=({up}), D=({down}))"

    # array views of the switch used by the vectorised evaluators
    def switch_table(self) -> tuple[np.ndarray, np.ndarray]:
        """``(first, second)`` with ``S(a, b) = (first[a, b], second[a, b])``."""
        return self.up, self.down.T

    def inverse_switch_table(self) -> tuple[np.ndarray, np.ndarray]:
        first, second = self.switch_table()
        code = first * self.n + second
        if len(np.unique(code)) != self.n * self.n:
            raise StructuralError("switch is not invertible (B2 fails)")
        a, b = np.indices((self.n, self.n))
        inv1 = np.empty_like(first)
        inv2 = np.empty_like(second)
        inv1[first, second] = a
        inv2[first, second] = b
        return inv1, inv2


def _check_element(B: FiniteBirack, *xs: int) -> None:
    for x in xs:
        if not (isinstance(x, (int, np.integer)) and 1 <= x <= B.n):
            raise DomainError(f"element {x!r} is not in 1..{B.n}")


def _inv_rows(t: np.ndarray) -> np.ndarray:
    inv = np.empty_like(t)
    n = t.shape[0]
    rows = np.arange(n)[:, None]
    inv[rows, t] = np.arange(n)[None, :]
    return inv


def switch_apply(B: FiniteBirack, a: int, b: int) -> tuple[int, int]:
    _check_element(B, a, b)
    return int(B.up[a - 1, b - 1]) + 1, int(B.down[b - 1, a - 1]) + 1


def switch_inverse_apply(B: FiniteBirack, c: int, d: int) -> tuple[int, int]:
    _check_element(B, c, d)
    inv1, inv2 = B.inverse_switch_table()
    return int(inv1[c - 1, d - 1]) + 1, int(inv2[c - 1, d - 1]) + 1


def sideways_tables(B: FiniteBirack) -> dict[str, tuple[np.ndarray, np.ndarray]]:
    """Tables for P, Q and their inverses as maps on pairs (0-based).

    ``P(a, b) = (x, x^...)`` with ``x = b_{a^-1}`` and second coordinate
    ``a^x``; ``Q(a, b) = (b_d, d)`` with ``d = a^{b^-1}``.
    """
    n = B.n
    U, D = B.up, B.down
    Ui, Di = _inv_rows(U), _inv_rows(D)
    a, b = np.indices((n, n))
    x = Di[a, b]                 # delta_a^{-1}(b)
    p1, p2 = x, U[x, a]
    d = Ui[b, a]                 # upsilon_b^{-1}(a)
    q1, q2 = D[d, b], d
    out = {"P": (p1, p2), "Q": (q1, q2)}
    for name, (f1, f2) in list(out.items()):
        i1 = np.empty_like(f1)
        i2 = np.empty_like(f2)
        i1[f1, f2] = a
        i2[f1, f2] = b
        out[name + "_inv"] = (i1, i2)
    return out


def sideways_P(B: FiniteBirack, a: int, b: int) -> tuple[int, int]:
    _check_element(B, a, b)
    x = int(np.flatnonzero(B.down[a - 1] == b - 1)[0])
    return x + 1, int(B.up[x, a - 1]) + 1


def sideways_Q(B: FiniteBirack, a: int, b: int) -> tuple[int, int]:
    _check_element(B, a, b)
    d = int(np.flatnonzero(B.up[b - 1] == a - 1)[0])
    return int(B.down[d, b - 1]) + 1, d + 1


# --- axioms -----------------------------------------------------------------

def check_B1(B: FiniteBirack) -> bool:
    """Both halves of the fixed-point axiom, with uniqueness."""
    n = B.n
    U, D = B.up, B.down
    xs = np.arange(n)
    for a in range(n):
        # x with a^x = x and x_a = a
        sol_x = xs[(U[xs, a] == xs) & (D[a, xs] == a)]
        # y with a_y = y and y^a = a
        sol_y = xs[(D[xs, a] == xs) & (U[a, xs] == a)]
        if len(sol_x) != 1 or len(sol_y) != 1:
            return False
    return True


def check_B2(B: FiniteBirack) -> bool:
    first, second = B.switch_table()
    return len(np.unique(first * B.n + second)) == B.n * B.n


def _triples(n: int) -> np.ndarray:
    return np.indices((n, n, n)).reshape(3, -1).T


def _apply(X: np.ndarray, tables, pos: int) -> None:
    f1, f2 = tables
    a = X[:, pos].copy()
    b = X[:, pos + 1]
    X[:, pos] = f1[a, b]
    X[:, pos + 1] = f2[a, b]


def compose_on_triples(n: int, ops) -> np.ndarray:
    """Image of every triple under ``ops`` = [(tables, pos), ...], leftmost first."""
    X = _triples(n)
    for tables, pos in ops:
        _apply(X, tables, pos)
    return X


def check_B3(B: FiniteBirack) -> bool:
    S = B.switch_table()
    lhs = compose_on_triples(B.n, [(S, 0), (S, 1), (S, 0)])
    rhs = compose_on_triples(B.n, [(S, 1), (S, 0), (S, 1)])
    return bool((lhs == rhs).all())


def check_derived_relations(B: FiniteBirack) -> bool:
    """The three elementwise consequences of B3, evaluated on all triples."""
    U, D = B.up, B.down
    a, b, c = _triples(B.n).T
    r1 = U[U[a, b], U[D[b, a], c]] == U[a, U[b, c]]
    r2 = D[U[D[b, a], c], U[a, b]] == U[D[U[b, c], a], D[c, b]]
    r3 = D[D[c, b], D[U[b, c], a]] == D[c, D[b, a]]
    return bool(r1.all() and r2.all() and r3.all())


def switch_order(B: FiniteBirack) -> int:
    """Order of S as a permutation of X^2, from its cycle decomposition."""
    first, second = B.switch_table()
    flat = (first * B.n + second).ravel()
    if len(np.unique(flat)) != flat.size:
        raise StructuralError("switch is not invertible (B2 fails)")
    return _perm.perm_order(flat.tolist())


# --- classification ----------------------------------------------------------

def _trivial(t: np.ndarray) -> bool:
    return bool((t == np.arange(t.shape[0])[None, :]).all())


def _rows_equal(t: np.ndarray) -> bool:
    return bool((t == t[0]).all())


def constant_points(t: np.ndarray) -> int:
    """Number of x whose map y -> (x acted on by y) is constant."""
    return int((t == t[0][None, :]).all(axis=0).sum())


@dataclass(frozen=True)
class Classification:
    cls: str
    flags: tuple = ()
    order: int = 0
    u: int = 0
    d: int = 0

    @property
    def c1(self) -> int:
        return self.u + self.d

    @property
    def c2(self) -> int:
        return abs(self.u - self.d)

    def line(self) -> str:
        """``order k  FLAGS, c1 = .., c2 = ..`` as in the printed catalogs."""
        parts = list(self.flags) + [f"c1 = {self.c1}", f"c2 = {self.c2}"]
        return f"order {self.order} " + ", ".join(parts)


def rack_normalized(B: FiniteBirack) -> FiniteBirack:
    """Store a rack with trivial down action (swap U and D if needed)."""
    if _trivial(B.up) and not _trivial(B.down):
        return FiniteBirack(B.down, B.up)
    return B


def classify(B: FiniteBirack) -> Classification:
    if not (check_B2(B) and check_B3(B)):
        return Classification(INVALID)
    N = rack_normalized(B)
    b1 = check_B1(N)
    if _trivial(N.down):
        cls = QUANDLE if b1 else RACK
    else:
        cls = BIQUANDLE if b1 else BIRACK
    flags = []
    if np.array_equal(N.up, N.down):
        flags.append("S")
    if cls == BIQUANDLE:
        pu, pd = _rows_equal(N.up), _rows_equal(N.down)
        if pu and pd:
            flags.append("DPQ")
        elif pu or pd:
            flags.append("PQ")
    return Classification(cls, tuple(flags), switch_order(N),
                          constant_points(N.up), constant_points(N.down))


# --- isomorphism -------------------------------------------------------------

def _relabel_table(t: np.ndarray, s: np.ndarray) -> np.ndarray:
    si = np.empty_like(s)
    si[s] = np.arange(len(s))
    return s[t[si[:, None], si[None, :]]]


def relabel(B: FiniteBirack, sigma) -> FiniteBirack:
    """Transport the structure along ``sigma`` (cycle string or 1-based images)."""
    s = np.array(_perm.as_perm(sigma, B.n), dtype=np.int64)
    return FiniteBirack(_relabel_table(B.up, s), _relabel_table(B.down, s))


def relabel_all(table: np.ndarray, perms: np.ndarray) -> np.ndarray:
    """``table`` relabelled by every row of ``perms``; shape (len(perms), n, n)."""
    g, n = perms.shape
    inv = np.empty_like(perms)
    inv[np.arange(g)[:, None], perms] = np.arange(n)[None, :]
    inner = table[inv[:, :, None], inv[:, None, :]]
    return np.take_along_axis(perms[:, None, :], inner.reshape(g, 1, n * n), axis=2).reshape(g, n, n)


def lex_argmin(rows: np.ndarray) -> int:
    """Index of the lexicographically smallest row of a 2-D integer array."""
    cand = np.arange(rows.shape[0])
    for col in range(rows.shape[1]):
        vals = rows[cand, col]
        cand = cand[vals == vals.min()]
        if len(cand) == 1:
            break
    return int(cand[0])


def _encodings(B: FiniteBirack, perms: np.ndarray) -> np.ndarray:
    g = len(perms)
    return np.concatenate([relabel_all(B.up, perms).reshape(g, -1),
                           relabel_all(B.down, perms).reshape(g, -1)], axis=1)


def canonical_form(B: FiniteBirack, bound: int = CANONICAL_BOUND) -> tuple:
    """Lexicographically least (up rows, down rows) encoding over all relabelings."""
    if B.n > bound:
        raise CapacityError(f"canonical form needs n! relabelings; n={B.n} exceeds bound {bound}")
    enc = _encodings(B, _perm.all_perms(B.n))
    return tuple(enc[lex_argmin(enc)].tolist())


def from_encoding(n: int, enc: Sequence[int]) -> FiniteBirack:
    arr = np.asarray(enc, dtype=np.int64)
    return FiniteBirack(arr[: n * n].reshape(n, n), arr[n * n:].reshape(n, n))


def orientation_swap(B: FiniteBirack) -> FiniteBirack:
    return FiniteBirack(B.down, B.up)


def class_key(B: FiniteBirack, bound: int = CANONICAL_BOUND) -> tuple:
    """Isomorphism-class key: relabelings combined with the U/D exchange and
    the passage to the inverse switch.

    Catalog counts and names are taken up to this equivalence.
    """
    if B.n > bound:
        raise CapacityError(f"class key needs n! relabelings; n={B.n} exceeds bound {bound}")
    Us, Ds = class_members(B)
    flat = np.concatenate([Us.reshape(len(Us), -1), Ds.reshape(len(Ds), -1)], axis=1)
    return tuple(flat[lex_argmin(flat)].tolist())


def automorphisms(B: FiniteBirack) -> np.ndarray:
    perms = _perm.all_perms(B.n)
    enc = _encodings(B, perms)
    keep = (enc == np.array(B.encoding())[None, :]).all(axis=1)
    return perms[keep]


def _switch_codes(U: np.ndarray, D: np.ndarray) -> np.ndarray:
    """Switch of each table pair as a sequence of pair indices, shape (g, n*n)."""
    n = U.shape[-1]
    return (U * n + np.swapaxes(D, -1, -2)).reshape(U.shape[0], n * n)


def class_members(B: FiniteBirack) -> tuple[np.ndarray, np.ndarray]:
    """Every relabeling of B, of its U/D exchange, of its inverse switch and of
    the exchanged inverse, as stacked (up, down) arrays of shape (4 n!, n, n).
    """
    perms = _perm.all_perms(B.n)
    Us, Ds = [], []
    for X in (B, switch_inverse(B)):
        ru, rd = relabel_all(X.up, perms), relabel_all(X.down, perms)
        Us += [ru, rd]
        Ds += [rd, ru]
    return np.concatenate(Us), np.concatenate(Ds)


def summarize_class(Us: np.ndarray, Ds: np.ndarray) -> tuple[tuple, tuple, FiniteBirack]:
    """``(class key, list-order key, representative)`` for a class given by its members.

    The representative is the member a lexicographic scan of switches meets
    first.  A class containing a representation with trivial up or down action
    is a rack; it is represented by the *last* such member met, stored with
    trivial down action.  Sorting by the order key gives the order in which
    a lexicographic scan of candidate switches first meets each class.
    """
    g, n = Us.shape[0], Us.shape[1]
    flat = np.concatenate([Us.reshape(g, -1), Ds.reshape(g, -1)], axis=1)
    ckey = tuple(flat[lex_argmin(flat)].tolist())
    codes = _switch_codes(Us, Ds)
    ident = np.arange(n)
    triv = (Us == ident).all(axis=(1, 2)) | (Ds == ident).all(axis=(1, 2))
    if triv.any():
        idx = np.flatnonzero(triv)
        best = idx[lex_argmin(-codes[idx])]
        rep = rack_normalized(FiniteBirack(Us[best], Ds[best]))
    else:
        best = lex_argmin(codes)
        rep = FiniteBirack(Us[best], Ds[best])
    return ckey, tuple(codes[best].tolist()), rep


def search_representative(B: FiniteBirack) -> tuple[tuple, FiniteBirack]:
    """Order key and representative of B's class (see :func:`summarize_class`)."""
    _, okey, rep = summarize_class(*class_members(B))
    return okey, rep


def switch_inverse(B: FiniteBirack) -> FiniteBirack:
    """The birack whose switch is the inverse switch."""
    inv1, inv2 = B.inverse_switch_table()
    return FiniteBirack(inv1, inv2.T)


def symmetry(B: FiniteBirack, kind: str) -> FiniteBirack:
    """Crossing-sign change, orientation reversal, or both."""
    if not check_B2(B):
        raise StructuralError("symmetry needs an invertible switch")
    if kind == "crossing_sign":
        return switch_inverse(B)
    if kind == "orientation":
        return orientation_swap(B)
    if kind == "both":
        return orientation_swap(switch_inverse(B))
    raise DomainError(f"unknown symmetry {kind!r}")


# --- constructors ------------------------------------------------------------

def twist(n: int) -> FiniteBirack:
    if n < 1:
        raise DomainError("n must be positive")
    ident = np.tile(np.arange(n), (n, 1))
    return FiniteBirack(ident, ident)


@dataclass(frozen=True)
class AlexanderParams:
    m: int
    lam: int
    mu: int

    def __post_init__(self):
        if self.m < 2:
            raise DomainError("modulus must be at least 2")
        for name, v in (("lambda", self.lam), ("mu", self.mu)):
            if gcd(v % self.m, self.m) != 1:
                raise DomainError(f"{name}={v} is not a unit mod {self.m}")


def alexander(m: int, lam: int, mu: int) -> FiniteBirack:
    """``a^b = lam*a + (1 - lam*mu)*b``, ``a_b = mu*a`` over Z/m; residue r is label r+1."""
    p = AlexanderParams(m, lam, mu)
    b, a = np.indices((m, m))
    up = (p.lam * a + (1 - p.lam * p.mu) * b) % m
    down = (p.mu * a) % m
    return FiniteBirack(up, down)


def burau(m: int, lam: int) -> FiniteBirack:
    return alexander(m, lam, 1)


class GroupTable:
    """Finite group given by a 0-based multiplication table."""

    def __init__(self, mul):
        t = np.array(mul, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1]:
            raise DomainError("group table must be square")
        n = t.shape[0]
        if t.min() < 0 or t.max() >= n:
            raise DomainError("group table entries out of range")
        a, b, c = _triples(n).T
        if not (t[t[a, b], c] == t[a, t[b, c]]).all():
            raise DomainError("group table is not associative")
        ident = [e for e in range(n) if (t[e] == np.arange(n)).all() and (t[:, e] == np.arange(n)).all()]
        if not ident:
            raise DomainError("group table has no identity")
        e = ident[0]
        inv = np.full(n, -1)
        for x in range(n):
            ys = np.flatnonzero((t[x] == e) & (t[:, x] == e))
            if len(ys) == 0:
                raise DomainError(f"element {x} has no inverse")
            inv[x] = ys[0]
        self.n = n
        self.mul = t
        self.identity = e
        self.inverse = inv


def cyclic_group(m: int) -> GroupTable:
    a, b = np.indices((m, m))
    return GroupTable((a + b) % m)


def wada(G: GroupTable) -> FiniteBirack:
    """``S(a, b) = (a^2 b, b^-1 a^-1 b)``."""
    if not isinstance(G, GroupTable):
        raise DomainError("wada needs a GroupTable")
    mul, inv = G.mul, G.inverse
    a, b = np.indices((G.n, G.n))
    first = mul[mul[a, a], b]                  # b^a, indexed [a, b]
    second = mul[mul[inv[b], inv[a]], b]       # a_b, indexed [a, b]
    return FiniteBirack(first, second.T)


def identity_table(n: int) -> np.ndarray:
    return np.tile(np.arange(n), (n, 1))


def is_trivial_table(t: np.ndarray) -> bool:
    return _trivial(np.asarray(t))


def order_by_repeated_composition(B: FiniteBirack, limit: int | None = None) -> int:
    """Smallest k with S^k = id, by composing S with itself (test oracle)."""
    first, second = B.switch_table()
    a0, b0 = np.indices((B.n, B.n))
    a, b = a0.copy(), b0.copy()
    k = 0
    while True:
        a, b = first[a, b], second[a, b]
        k += 1
        if (a == a0).all() and (b == b0).all():
            return k
        if limit is not None and k >= limit:
            raise CapacityError("order exceeds limit")


def lcm_all(xs: Iterable[int]) -> int:
    k = 1
    for x in xs:
        k = lcm(k, x)
    return k
